import numpy as np

from goisac.allocation import UeDemand


def make_demands(vois, sizes):
    return [UeDemand(ue, float(v), 1, int(q), 0) for ue, (v, q) in enumerate(zip(vois, sizes))]


def random_demands(rng, num_ues, max_q=40):
    return make_demands(rng.uniform(0.0, 1.0, num_ues), rng.integers(1, max_q + 1, num_ues))
