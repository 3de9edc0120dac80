import numpy as np


def standard_error(x: np.ndarray) -> float:
    """Standard error of the mean, NaN with fewer than two finite values"""
    x = np.asarray(x, dtype=float)
    x = x[np.isfinite(x)]
    if x.size < 2:
        return float("nan")
    return float(np.std(x, ddof=1) / np.sqrt(x.size))


def optimality_gap(value: float, optimum: float) -> float:
    """Relative gap (optimum - value) / optimum, zero for a zero optimum"""
    if optimum == 0.0:
        return 0.0
    return (optimum - value) / optimum
