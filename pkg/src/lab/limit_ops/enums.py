from enum import Enum


class DegreeVariantEnum(str, Enum):
    """
    Enum representing how the degree function d(x) = int k(x, y) dP(y) is evaluated.

    Attributes:
        ANALYTIC_EXAMPLE2: d(x) = 1.5 x, exact for the product kernel on the Example 2 density.
        QUADRATURE: d(x) = sum_i k(x, node_i) weight_i on a quadrature grid.
    """

    ANALYTIC_EXAMPLE2 = "analytic"
    QUADRATURE = "quadrature"


class LimitKindEnum(str, Enum):
    """
    Enum representing the discretized population operators.

    Attributes:
        NORMALIZED_T: The integral operator T with kernel h(x, y) = k(x, y) / sqrt(d(x) d(y)).
        UNNORMALIZED_U: U = M_d - S, multiplication by d minus the integral operator S with kernel k.
    """

    NORMALIZED_T = "normalized"
    UNNORMALIZED_U = "unnormalized"


class ExtensionKindEnum(str, Enum):
    NORMALIZED = "normalized"
    UNNORMALIZED = "unnormalized"
