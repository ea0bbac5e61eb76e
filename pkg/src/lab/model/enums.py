from enum import Enum


class DensityKindEnum(str, Enum):
    """
    Enum representing the probability densities the lab can sample from.

    Attributes:
        PIECEWISE_EXAMPLE2: Piecewise constant density on [1, 2], value s on [4/3, 5/3).
        GAUSSIAN_MIXTURE: Mixture of Gaussians truncated to a compact support.
    """

    PIECEWISE_EXAMPLE2 = "example2"
    GAUSSIAN_MIXTURE = "mixture"


class KernelKindEnum(str, Enum):
    """
    Enum representing the similarity functions k(x, y).

    Attributes:
        GAUSSIAN: exp(-(x - y)^2 / sigma^2).
        PRODUCT: x * y.
        CONSTANT: a positive constant c.
    """

    GAUSSIAN = "gaussian"
    PRODUCT = "product"
    CONSTANT = "constant"
