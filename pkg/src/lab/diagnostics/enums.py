from enum import Enum


class EigenvalueStatusEnum(str, Enum):
    """
    Enum representing where an eigenvalue of a sample Laplacian sits relative to its critical region.

    Attributes:
        SAFE: Clearly outside the region (or the trivial eigenvalue 0).
        MARGINAL: Outside, but within margin * width of the region.
        INSIDE: In [lo, hi]; its eigenvector carries no reliable cluster information.
    """

    SAFE = "safe"
    MARGINAL = "marginal"
    INSIDE = "inside"
