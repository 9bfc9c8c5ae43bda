import math
import numpy as np

def make_rng(seed=None):
    """
    Return a seeded random generator (or pass an existing one through)
    """

    if isinstance(seed, np.random.Generator):
        return seed

    return np.random.default_rng(seed)

def format_real(value):
    """
    Print a real distance: integral values without a trailing '.0', all others
    with the shortest round-tripping representation
    """

    value = float(value)
    if math.isfinite(value) and value.is_integer():
        return str(int(value))

    return repr(value)
