"""Agreement length between the greedy shot sequence and Thue-Morse.

Two independent routes:

* :func:`agreement_length_simulated` plays the game and compares it with
  Thue-Morse shot by shot.
* :func:`agreement_length_closed_form` classifies ``q`` against the intervals
  cut out by ``alpha**(2**-n)`` and ``beta**(2**-n)``:

  ========================================  ==============
  interval                                  length
  ========================================  ==============
  ``q < alpha``                             3
  ``alpha**(2**-n) < q < beta**(2**-n)``    ``5 * 2**n``
  ``beta**(2**-n) < q < alpha**(2**-n-1)``  ``3 * 2**(n+1)``
  ========================================  ==============

  Membership is decided by exact polynomial signs at ``q**(2**n)``; the
  irrational endpoints are never formed.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .game import GameParameter, GreedyGame
from .numerics import BoundaryPolynomial, RationalLike, Sign, boundary_sign_scaled, to_rational
from .thue_morse import tm

DEFAULT_CAP = 2**14
DEFAULT_N_CAP = 64


class CapExceeded(RuntimeError):
    def __init__(self, q: Fraction, cap: int):
        super().__init__(f"no disagreement with Thue-Morse within {cap} shots for q={q}")
        self.q = q
        self.cap = cap


class NCapExceeded(RuntimeError):
    def __init__(self, q: Fraction, n_cap: int):
        super().__init__(f"classification of q={q} needs more than {n_cap} squarings")
        self.q = q
        self.n_cap = n_cap


class ZeroSign(ArithmeticError):
    """A boundary polynomial vanished at a rational point (cannot happen)."""


class Kind(enum.Enum):
    SMALL = "small"
    FIVE = "five"
    THREE = "three"


@dataclass(frozen=True)
class IntervalClass:
    kind: Kind
    n: int = 0

    @property
    def length(self) -> int:
        if self.kind is Kind.SMALL:
            return 3
        if self.kind is Kind.FIVE:
            return 5 << self.n
        return 3 << (self.n + 1)

    def render(self) -> str:
        if self.kind is Kind.SMALL:
            return "small"
        return f"{self.kind.value}:{self.n}"

    @classmethod
    def parse(cls, text: str) -> "IntervalClass":
        if text == "small":
            return cls(Kind.SMALL)
        kind, _, n = text.partition(":")
        return cls(Kind(kind), int(n))


class Method(enum.Enum):
    SIMULATED = "sim"
    CLOSED_FORM = "closed"


@dataclass(frozen=True)
class AgreementResult:
    length: int
    method: Method
    witness_index: Optional[int] = None
    tie_flag: bool = False


def _as_param(q) -> GameParameter:
    return q if isinstance(q, GameParameter) else GameParameter(to_rational(q))


def agreement_length_simulated(param, cap: int = DEFAULT_CAP) -> AgreementResult:
    """Play at most ``cap`` greedy shots and return the first index differing from Thue-Morse."""
    param = _as_param(param)
    if cap < 1:
        raise ValueError("cap must be >= 1")
    game = GreedyGame(param)
    for i in range(cap):
        if game.step() != tm(i):
            return AgreementResult(i, Method.SIMULATED, witness_index=i,
                                   tie_flag=game.tie_encountered)
    raise CapExceeded(param.q, cap)


def _strict_sign(poly: BoundaryPolynomial, num: int, den: int) -> Sign:
    s = boundary_sign_scaled(poly, num, den)
    if s is Sign.ZERO:
        raise ZeroSign(f"{poly.value} polynomial vanishes at {num}/{den}")
    return s


def classify(q: RationalLike, n_cap: int = DEFAULT_N_CAP) -> IntervalClass:
    q = to_rational(q)
    if not 0 < q < 1:
        raise ValueError(f"q must lie in (0, 1), got {q}")
    num, den = q.numerator, q.denominator
    if _strict_sign(BoundaryPolynomial.QUADRATIC, num, den) is Sign.POS:
        return IntervalClass(Kind.SMALL)
    # square until alpha < q**(2**n) < sqrt(alpha); x > sqrt(alpha) iff x**2 > alpha.
    # Squares of a reduced fraction stay reduced, so plain ints suffice.
    n = 0
    while True:
        num2, den2 = num * num, den * den
        if _strict_sign(BoundaryPolynomial.QUADRATIC, num2, den2) is Sign.POS:
            break
        num, den, n = num2, den2, n + 1
        if n > n_cap:
            raise NCapExceeded(q, n_cap)
    if _strict_sign(BoundaryPolynomial.QUARTIC, num, den) is Sign.POS:
        return IntervalClass(Kind.FIVE, n)
    return IntervalClass(Kind.THREE, n)


def agreement_length_closed_form(q: RationalLike, n_cap: int = DEFAULT_N_CAP) -> AgreementResult:
    if isinstance(q, GameParameter):
        q = q.q
    return AgreementResult(classify(q, n_cap).length, Method.CLOSED_FORM)


def corollary_check(k: int, cap: int = DEFAULT_CAP, n_cap: int = DEFAULT_N_CAP,
                    simulate: bool = True) -> bool:
    """Check that ``p = 2**-k`` gives agreement length ``3 * 2**(k-1)``.

    The simulation leg raises :class:`CapExceeded` if ``cap`` is too small
    for this ``k``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    q = 1 - Fraction(1, 2**k)
    expected = 3 << (k - 1)
    if agreement_length_closed_form(q, n_cap).length != expected:
        return False
    if simulate and agreement_length_simulated(q, cap).length != expected:
        return False
    return True


def admissible_values(count: int) -> List[int]:
    """First ``count`` numbers of the form ``3 * 2**i`` or ``5 * 2**i``, ascending."""
    if count < 1:
        raise ValueError("count must be >= 1")
    heap = [3, 5]
    out: List[int] = []
    while len(out) < count:
        v = heapq.heappop(heap)
        out.append(v)
        heapq.heappush(heap, 2 * v)
    return out


def is_admissible(length: int) -> bool:
    if length < 3:
        return False
    odd = length >> ((length & -length).bit_length() - 1)
    return odd in (3, 5)
