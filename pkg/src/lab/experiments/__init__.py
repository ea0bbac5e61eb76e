from src.lab.experiments.enums import RateFieldEnum, RegimeEnum
from src.lab.experiments.exceptions import DegenerateEigenvalueError, InvalidNListError, NotEnoughRatePointsError
from src.lab.experiments.schemas import (
    ClassDeviationRatios,
    ConvergenceRecord,
    ConvergenceSeries,
    FigureData,
    FigurePanel,
    LimitReference,
    RateFit,
    Scenario,
)
from src.lab.experiments.services import (
    FIGURE_SIGMAS,
    build_reference,
    class_deviation_ratios,
    constant_scenario,
    empirical_sup_deviation,
    example2_scenario,
    figure_mixture,
    fit_rate,
    function_class_deviation,
    mixture_scenario,
    run_convergence,
    run_figures,
    true_degree,
)

__all__ = [
    "RateFieldEnum",
    "RegimeEnum",
    "DegenerateEigenvalueError",
    "InvalidNListError",
    "NotEnoughRatePointsError",
    "ConvergenceRecord",
    "ConvergenceSeries",
    "FigureData",
    "FigurePanel",
    "LimitReference",
    "RateFit",
    "Scenario",
    "ClassDeviationRatios",
    "FIGURE_SIGMAS",
    "build_reference",
    "constant_scenario",
    "empirical_sup_deviation",
    "example2_scenario",
    "figure_mixture",
    "fit_rate",
    "function_class_deviation",
    "mixture_scenario",
    "run_convergence",
    "run_figures",
    "class_deviation_ratios",
    "true_degree",
]
