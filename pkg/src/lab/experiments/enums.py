from enum import Enum


class RateFieldEnum(str, Enum):
    """
    Enum representing the per-repetition error a rate fit is computed on.

    Attributes:
        LAMBDA_ERROR: |lambda_2 of the sample - lambda_2 of the limit|.
        VEC_SUP_ERR: sup_i |a_n sqrt(n) v_{n,i} - f(X_i)| after sign alignment.
        SUP_DEV: sup_x |d_n(x) - d(x)| over the probe grid.
    """

    LAMBDA_ERROR = "lambda_error"
    VEC_SUP_ERR = "vec_sup_err"
    SUP_DEV = "sup_dev"


class RegimeEnum(str, Enum):
    """
    Enum tagging a convergence row: ``inconsistent`` when the sample lambda_2 of an unnormalized
    scenario falls inside its critical region.
    """

    CONSISTENT = "consistent"
    INCONSISTENT = "inconsistent"
