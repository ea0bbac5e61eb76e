from enum import Enum


class LaplacianKindEnum(str, Enum):
    """
    Enum representing the graph Laplacians built from a similarity matrix K with degrees D.

    Attributes:
        UNNORM_SCALED: (D - K) / n, the unnormalized Laplacian scaled to match U_n on the sample.
        SYM_NORM: I - D^{-1/2} K D^{-1/2}.
        RW_NORM: I - D^{-1} K (never eigendecomposed directly).
    """

    UNNORM_SCALED = "unnormalized"
    SYM_NORM = "symmetric"
    RW_NORM = "random_walk"


class ClusteringKindEnum(str, Enum):
    """
    Enum representing the two flavours of spectral clustering.
    """

    UNNORMALIZED = "unnormalized"
    NORMALIZED = "normalized"

    @property
    def laplacian(self) -> LaplacianKindEnum:
        """
        The symmetric Laplacian whose spectrum drives this flavour.
        """
        if self is ClusteringKindEnum.UNNORMALIZED:
            return LaplacianKindEnum.UNNORM_SCALED
        return LaplacianKindEnum.SYM_NORM
