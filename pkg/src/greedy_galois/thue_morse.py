"""The +/-1 Thue-Morse sequence and its weighted partial sums.

``t(n) = (-1) ** popcount(n)``, so ``t(2n) == t(n)`` and ``t(2n+1) == -t(n)``.

``S_n(q) = sum(t(j) * q**j for j < n)``. Writing ``n = m * 2**r`` with ``m``
odd, the sum factors as ``S_{2^r}(q) * S_m(q**(2**r))`` and the first factor
is the product ``(1 - q)(1 - q^2)(1 - q^4)...(1 - q^(2^(r-1)))``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, NamedTuple

from .numerics import RationalLike, Sign, pow_by_squaring, to_rational


class DyadicDecomposition(NamedTuple):
    m: int  # odd part
    r: int  # 2-adic valuation

    @property
    def value(self) -> int:
        return self.m << self.r


def digit_sum_base2(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return n.bit_count()


def tm(n: int) -> Sign:
    return Sign.NEG if digit_sum_base2(n) & 1 else Sign.POS


def tm_prefix(length: int) -> List[Sign]:
    return [tm(i) for i in range(length)]


def decompose_dyadic(n: int) -> DyadicDecomposition:
    if n < 1:
        raise ValueError("decompose_dyadic requires n >= 1")
    r = (n & -n).bit_length() - 1
    return DyadicDecomposition(n >> r, r)


def scaled_partial_sum(n: int, num: int, den: int) -> int:
    """``S_n(num/den) * den**n`` as an integer."""
    total = 0
    num_pow = 1
    for j in range(n):
        total = (total + tm(j) * num_pow) * den
        num_pow *= num
    return total


def partial_sum_direct(n: int, q: RationalLike) -> Fraction:
    """Term-by-term ``S_n(q)``, accumulated over the common denominator."""
    q = to_rational(q)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Fraction(scaled_partial_sum(n, q.numerator, q.denominator), q.denominator**n)


def partial_sum_sign(n: int, q: RationalLike) -> Sign:
    q = to_rational(q)
    return Sign.of(scaled_partial_sum(n, q.numerator, q.denominator))


def power_of_two_sum(r: int, q: RationalLike) -> Fraction:
    """``S_{2^r}(q)`` via the product over ``1 - q**(2**j)``, ``j < r``."""
    q = to_rational(q)
    result = Fraction(1)
    square = q
    for _ in range(r):
        result *= 1 - square
        square *= square
    return result


def partial_sum_factored(n: int, q: RationalLike) -> Fraction:
    """``S_n(q)`` as ``S_{2^r}(q) * S_m(q**(2**r))`` with ``n = m * 2**r``."""
    q = to_rational(q)
    m, r = decompose_dyadic(n)
    return power_of_two_sum(r, q) * partial_sum_direct(m, pow_by_squaring(q, 1 << r))
