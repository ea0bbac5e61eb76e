from enum import Enum


class CommandEnum(str, Enum):
    """
    Enum representing the sub-commands of the ``speclab`` CLI.

    Attributes:
        CLUSTER: Bi-partition one sample and write its spectrum.
        LIMIT: Discretize the limit operator and report its eigenpairs and the range of d.
        CONVERGE: Convergence study of lambda_2 and its eigenvector over n_list x reps.
        DIAGNOSE: Classify the sample spectrum against the critical region.
        FIGURES: Spectra of the four-component mixture for kernel widths 1, 2, 5 and 50.
        SUPDEV: Empirical sup deviation of the degree function over n_list x reps.
    """

    CLUSTER = "cluster"
    LIMIT = "limit"
    CONVERGE = "converge"
    DIAGNOSE = "diagnose"
    FIGURES = "figures"
    SUPDEV = "supdev"


class SvgKindEnum(str, Enum):
    EIGENVALUES = "eigenvalues"
    EIGENVECTORS = "eigenvectors"
