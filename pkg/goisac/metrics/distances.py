import numpy as np


def total_variation(p: np.ndarray, q: np.ndarray) -> float:
    """Total variation distance between two pmfs on 0, 1, 2, ...

    The shorter pmf is padded with zeros.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    size = max(p.size, q.size)
    p = np.pad(p, (0, size - p.size))
    q = np.pad(q, (0, size - q.size))
    return 0.5 * float(np.abs(p - q).sum())


def empirical_pmf(samples: np.ndarray, size: int = 0) -> np.ndarray:
    """Relative frequencies of non-negative integer samples"""
    samples = np.asarray(samples, dtype=int)
    counts = np.bincount(samples, minlength=size)
    return counts / max(samples.size, 1)
