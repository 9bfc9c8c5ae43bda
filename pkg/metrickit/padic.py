"""
Exact p-adic valuation, absolute value and metric on the rationals

Nothing in this module touches floating point.
"""

import re
import functools
from fractions import Fraction
from dataclasses import dataclass
from typing import Optional

from .config import SETTINGS
from .errors import InputError, ParameterError
from .utilities import make_rng

Rational = Fraction

_RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')

def parse_rational(text):
    """
    Parse "a/b" or "a" into an exact rational
    """

    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)

    match = _RATIONAL_PATTERN.match(str(text))
    if match is None:
        raise InputError(f'{text!r} is not a rational of the form a/b or a')
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise InputError(f'{text!r} has a zero denominator')

    return Fraction(int(numerator), int(denominator) if denominator is not None else 1)

def format_rational(value):
    """
    Print a rational as "a/b", or "a" when the denominator is 1
    """

    return str(Fraction(value))

def as_rational(value):
    """
    Coerce an int or Fraction; floats are rejected to keep arithmetic exact
    """

    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)

    raise InputError(f'{value!r} is not an exact rational')

def is_prime(n):
    """
    Deterministic trial division
    """

    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    divisor = 3
    while divisor * divisor <= n:
        if n % divisor == 0:
            return False
        divisor += 2

    return True

@dataclass(frozen=True)
class PAdicContext():
    """
    A fixed prime p
    """

    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise ParameterError(f'The prime must be an integer, got {self.p!r}')
        if not is_prime(self.p):
            raise ParameterError(f'{self.p} is not a prime')

@functools.total_ordering
@dataclass(frozen=True)
class Valuation():
    """
    An integer exponent, or INFINITY (value None) for the valuation of 0
    """

    value: Optional[int]

    @property
    def is_infinite(self):
        return self.value is None

    def __lt__(self, other):
        if not isinstance(other, Valuation):
            return NotImplemented
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self.value < other.value

    def __int__(self):
        if self.is_infinite:
            raise ParameterError('The valuation of 0 is infinite')
        return self.value

    def __str__(self):
        return 'inf' if self.is_infinite else str(self.value)

INFINITY = Valuation(None)

def _integer_valuation(n, p):
    """
    Exponent of p in a nonzero integer, by repeated exact division
    """

    count = 0
    quotient, remainder = divmod(n, p)
    while remainder == 0:
        count += 1
        n = quotient
        quotient, remainder = divmod(n, p)

    return count

def p_adic_valuation(x, ctx):
    """
    Return the j with x = (a/b) p^j and p dividing neither a nor b
    """

    x = as_rational(x)
    if x == 0:
        return INFINITY

    return Valuation(_integer_valuation(abs(x.numerator), ctx.p) - _integer_valuation(x.denominator, ctx.p))

def p_adic_abs(x, ctx):
    """
    |x|_p = p^(-j), and |0|_p = 0
    """

    valuation = p_adic_valuation(x, ctx)
    if valuation.is_infinite:
        return Fraction(0)
    j = valuation.value
    if j >= 0:
        return Fraction(1, ctx.p ** j)

    return Fraction(ctx.p ** -j)

def p_adic_distance(x, y, ctx):
    """
    d_p(x, y) = |x - y|_p
    """

    return p_adic_abs(as_rational(x) - as_rational(y), ctx)

@dataclass(frozen=True)
class UltrametricDefect():
    lhs: Fraction
    strong_rhs: Fraction
    holds: bool
    weak_rhs: Fraction

    @property
    def triangle_holds(self):
        return self.lhs <= self.weak_rhs

def ultrametric_defect(x, y, z, ctx):
    """
    Compare d_p(x, z) with max(d_p(x, y), d_p(y, z)), exactly
    """

    lhs = p_adic_distance(x, z, ctx)
    xy = p_adic_distance(x, y, ctx)
    yz = p_adic_distance(y, z, ctx)
    strong_rhs = max(xy, yz)

    return UltrametricDefect(lhs, strong_rhs, lhs <= strong_rhs, xy + yz)

def abs_multiplicativity_check(x, y, ctx):
    """
    Whether |x y|_p == |x|_p |y|_p
    """

    x, y = as_rational(x), as_rational(y)

    return p_adic_abs(x * y, ctx) == p_adic_abs(x, ctx) * p_adic_abs(y, ctx)

def abs_ultrametric_check(x, y, ctx):
    """
    Whether |x + y|_p <= max(|x|_p, |y|_p) <= |x|_p + |y|_p
    """

    x, y = as_rational(x), as_rational(y)
    ax, ay = p_adic_abs(x, ctx), p_adic_abs(y, ctx)

    return p_adic_abs(x + y, ctx) <= max(ax, ay) <= ax + ay

def random_rational(rng=None, bound=None):
    """
    Numerator uniform in [-bound, bound], denominator uniform in [1, bound]
    """

    rng = make_rng(rng)
    if bound is None:
        bound = SETTINGS['padic']['random_bound']
    numerator = int(rng.integers(-bound, bound, endpoint=True))
    denominator = int(rng.integers(1, bound, endpoint=True))

    return Fraction(numerator, denominator)
