from goisac.metrics.distances import empirical_pmf, total_variation  # noqa: F401
from goisac.metrics.statistics import optimality_gap, standard_error  # noqa: F401
