SOMETHING_WENT_WRONG = "Something went wrong!"

ERROR = "ERROR"

INVALID_ARGUMENT = "Invalid argument."

INVALID_USAGE = "Invalid configuration value."

OUTSIDE_SUPPORT = "Point {x!r} lies outside the support [{lo}, {hi}] of the density."

TOO_FEW_POINTS = "At least {minimum} points are required, got {n}."

TOO_FEW_NODES = "A quadrature grid needs at least {minimum} nodes, got {n}."

TOO_FEW_PROBES = "At least {minimum} probe points are required, got {n}."

LENGTH_MISMATCH = "Vector of length {got} does not match a matrix of size {expected}."

NOT_SYMMETRIC = "Matrix is not symmetric (max asymmetry {asym:.3e})."

EIGEN_COUNT = "Requested {r} eigenpairs from a matrix of size {n}."

EIGEN_NOT_CONVERGED = "The symmetric eigensolver did not converge: {detail}"

EIGEN_RESIDUAL = "Eigenpair {index} violates the residual contract ({residual:.3e} > {bound:.3e})."

ZERO_DEGREE = "Degree vector contains a non-positive entry (min {minimum:.3e})."

DEGREE_BELOW_BOUND = "Degree {minimum:.6g} falls below the kernel lower bound {bound:.6g}."

QUADRATIC_FORM_MISMATCH = "Quadratic form identity violated: {lhs:.12g} != {rhs:.12g}."

NOT_UNIT_VECTOR = "Expected a unit vector, got norm {norm:.12g}."

ESSENTIAL_SPECTRUM = "Eigenvalue {value:.12g} lies in the essential spectrum {detail}."

ANALYTIC_DEGREE_KERNEL = "The analytic degree function requires the product kernel on the Example 2 density."

CONTINUOUS_SPECTRUM = "lambda = {value:.12g} lies in the continuous spectrum [1.5, 3.0]."

DEGENERATE_LIMIT = "Limit eigenvalue {index} ({value:.12g}) is degenerate; eigenvectors are not comparable."

NOT_ENOUGH_RATE_POINTS = "A rate fit needs at least {minimum} distinct n values with positive error, got {got}."

N_LIST_INVALID = "n_list must contain at least {minimum} ascending sample sizes."

MISSING_FIGURE_DATA = "Missing data for the figure: {detail}"

EMPTY_EIGENVECTOR_SELECTION = "Empty eigenvector selection; no SVG written."

INVALID_CONFIG = "Invalid configuration: {detail}"

CONFIG_FILE_UNREADABLE = "Cannot read the config file {path}: {detail}"
