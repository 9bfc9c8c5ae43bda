"""
Distance functions that are NOT metrics, kept as counterexamples for the
axiom verifier
"""

def squared_difference(x, y):
    """
    (x - y)^2 on the real line: fails the triangle inequality, e.g.
    d(0, 2) = 4 > d(0, 1) + d(1, 2) = 2
    """

    return (x - y) ** 2

def asymmetric_difference(x, y):
    """
    max(x - y, 0) + 2 max(y - x, 0): nonnegative, vanishes only on the
    diagonal, but not symmetric
    """

    return max(x - y, 0) + 2 * max(y - x, 0)

def signed_difference(x, y):
    """
    x - y: takes negative values
    """

    return x - y

# name -> distance function, as selected by `verify --metric NAME`
COUNTEREXAMPLES = {
    'squared-euclid-fixture'  : squared_difference,
    'asymmetric-fixture'      : asymmetric_difference,
    'signed-difference-fixture' : signed_difference,
}
