"""Exact rational helpers and sign evaluation of the two boundary polynomials.

Rationals are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.

The two boundary polynomials are::

    QUADRATIC:  1 - X - X^2                (positive root alpha ~ 0.618034)
    QUARTIC:    1 - X - X^2 + X^3 - X^4    (positive root beta  ~ 0.660993)

Both are positive at 0, negative at 1, and have a single root in (0, 1),
which is irrational. Their sign at a rational point is therefore exact and
never zero on (0, 1).
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Tuple, Union

RationalLike = Union[Fraction, int, str]

MAX_EXPONENT = 2**63 - 1


class Sign(enum.IntEnum):
    NEG = -1
    ZERO = 0
    POS = 1

    @classmethod
    def of(cls, value) -> "Sign":
        return cls((value > 0) - (value < 0))


class BoundaryPolynomial(enum.Enum):
    QUADRATIC = "quadratic"
    QUARTIC = "quartic"

    @property
    def coefficients(self) -> Tuple[int, ...]:
        """Coefficients in increasing degree."""
        if self is BoundaryPolynomial.QUADRATIC:
            return (1, -1, -1)
        return (1, -1, -1, 1, -1)


def to_rational(value: RationalLike) -> Fraction:
    """Parse ``"a/b"``, ``"a"`` or a finite decimal such as ``"0.64"`` exactly.

    Floats are refused: a binary float is almost never the value the caller
    meant, and an irrational input has no exact representation anyway.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"expected an exact rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(x: Fraction) -> str:
    """Render as ``"a/b"`` (or ``"a"`` for integers); reparses to ``x``."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def sign_of_boundary(poly: BoundaryPolynomial, x: RationalLike) -> Sign:
    """Exact sign of ``poly`` at the rational ``x >= 0``.

    With ``x = a/b`` the value is ``F(a, b) / b**d`` where ``F`` is the
    homogenized integer form, so only the sign of ``F`` is needed.
    """
    x = to_rational(x)
    if x < 0:
        raise ValueError("sign_of_boundary requires x >= 0")
    return boundary_sign_scaled(poly, x.numerator, x.denominator)


def boundary_sign_scaled(poly: BoundaryPolynomial, num: int, den: int) -> Sign:
    """Sign of ``poly`` at ``num/den`` for ``den > 0``, in integer arithmetic."""
    coeffs = poly.coefficients
    degree = len(coeffs) - 1
    value = sum(c * num**i * den ** (degree - i) for i, c in enumerate(coeffs))
    return Sign.of(value)


def pow_by_squaring(x: RationalLike, e: int) -> Fraction:
    """Return ``x**e`` exactly; ``0**0 == 1``."""
    x = to_rational(x)
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if e > MAX_EXPONENT:
        raise OverflowError(f"exponent {e} exceeds 2**63 - 1")
    result = Fraction(1)
    base = x
    while e:
        if e & 1:
            result *= base
        e >>= 1
        if e:
            base *= base
    return result


def approx_boundary(poly: BoundaryPolynomial, bits: int) -> Tuple[Fraction, Fraction]:
    """Bracket the root of ``poly`` in (0, 1) to width ``2**-bits`` by bisection.

    Starts from [0, 1] and always halves, so the result for ``bits + 1`` is
    contained in the result for ``bits``. The returned ``(lo, hi)`` satisfy
    ``sign(lo) == +1`` and ``sign(hi) == -1``.
    """
    if bits < 1:
        raise ValueError("bits must be >= 1")
    lo, hi = Fraction(0), Fraction(1)
    width = Fraction(1, 2**bits)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = sign_of_boundary(poly, mid)
        if s is Sign.POS:
            lo = mid
        elif s is Sign.NEG:
            hi = mid
        else:
            raise ArithmeticError(f"{poly.value} polynomial vanishes at {mid}")
    return lo, hi
