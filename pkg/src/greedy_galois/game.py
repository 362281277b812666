"""Deterministic greedy Galois game.

Shots are encoded ``+1`` for Alice and ``-1`` for Bob. After shots
``b_0..b_{N-1}`` the difference between Alice's and Bob's probability of
having won is ``p * sum(b_j * q**j)``; the next shot goes to Bob when that sum
is positive and to Alice when it is negative. A zero sum (the empty prefix, or
a genuine tie later on) gives the shot to Alice, and a later tie is flagged.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .numerics import RationalLike, Sign, pow_by_squaring, to_rational
from .thue_morse import decompose_dyadic, partial_sum_sign, tm


class SignTestTie(ArithmeticError):
    """``S_N(q)`` is exactly zero, so the sign test has no outcome."""

    def __init__(self, q: Fraction, n: int):
        super().__init__(f"S_{n}({q}) == 0")
        self.q = q
        self.n = n


@dataclass(frozen=True)
class GameParameter:
    q: Fraction

    def __post_init__(self):
        q = to_rational(self.q)
        if not 0 < q < 1:
            raise ValueError(f"miss probability must lie in (0, 1), got {q}")
        object.__setattr__(self, "q", q)

    @property
    def p(self) -> Fraction:
        return 1 - self.q

    @classmethod
    def from_p(cls, p: RationalLike) -> "GameParameter":
        return cls(1 - to_rational(p))


@dataclass
class ShotSequence:
    shots: List[Sign] = field(default_factory=list)
    diff_sum: Fraction = Fraction(0)
    tie_encountered: bool = False

    def __len__(self) -> int:
        return len(self.shots)

    def names(self) -> str:
        return " ".join("A" if s is Sign.POS else "B" for s in self.shots)


@dataclass(frozen=True)
class WinProbabilities:
    alice: Fraction
    bob: Fraction
    horizon: int


def next_shot(diff_sum: RationalLike) -> Tuple[Sign, bool]:
    """Shooter for the next turn given the current ``sum(b_j q^j)``."""
    s = Sign.of(to_rational(diff_sum))
    if s is Sign.POS:
        return Sign.NEG, False
    if s is Sign.NEG:
        return Sign.POS, False
    return Sign.POS, True


class GreedyGame:
    """Incremental greedy shooter.

    Keeps ``diff_sum * den**N`` as an integer, where ``q = num/den`` and ``N``
    is the number of shots so far, so each step costs a couple of
    big-by-small multiplies and no gcd.
    """

    def __init__(self, param: GameParameter):
        self.param = param
        self._num = param.q.numerator
        self._den = param.q.denominator
        self._scaled_sum = 0
        self._num_pow = 1  # num**N
        self._den_pow = 1  # den**N
        self.shots: List[Sign] = []
        self.tie_encountered = False

    def __len__(self) -> int:
        return len(self.shots)

    def step(self) -> Sign:
        s = Sign.of(self._scaled_sum)
        if s is Sign.POS:
            shot = Sign.NEG
        else:
            shot = Sign.POS
            if s is Sign.ZERO and self.shots:
                self.tie_encountered = True
        self._scaled_sum = (self._scaled_sum + shot * self._num_pow) * self._den
        self._num_pow *= self._num
        self._den_pow *= self._den
        self.shots.append(shot)
        return shot

    @property
    def diff_sum(self) -> Fraction:
        return Fraction(self._scaled_sum, self._den_pow)

    def snapshot(self) -> ShotSequence:
        return ShotSequence(list(self.shots), self.diff_sum, self.tie_encountered)


def greedy_sequence(param: GameParameter, length: int) -> ShotSequence:
    """First ``length`` greedy shots for miss probability ``param.q``."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    game = GreedyGame(param)
    for _ in range(length):
        game.step()
    return game.snapshot()


def win_probabilities(param: GameParameter, shots: ShotSequence) -> WinProbabilities:
    q, p = param.q, param.p
    alice = Fraction(0)
    bob = Fraction(0)
    power = Fraction(1)
    for shot in shots.shots:
        if shot is Sign.POS:
            alice += power
        elif shot is Sign.NEG:
            bob += power
        else:
            raise ValueError("shots must be +1 or -1")
        power *= q
    return WinProbabilities(p * alice, p * bob, len(shots.shots))


def sign_test(param: GameParameter, n: int) -> bool:
    """True iff ``t(n) * S_n(q) < 0``.

    Given agreement with Thue-Morse on indices below ``n``, this predicts
    whether the greedy shot at ``n`` matches ``t(n)``.
    """
    if n < 1:
        raise ValueError("sign_test requires n >= 1")
    s = partial_sum_sign(n, param.q)
    if s is Sign.ZERO:
        raise SignTestTie(param.q, n)
    return tm(n) * s < 0


def sign_test_transferred(param: GameParameter, n: int) -> bool:
    """The sign test for ``(q, m * 2**r)`` evaluated as the one for ``(q**(2**r), m)``."""
    if n < 1:
        raise ValueError("sign_test_transferred requires n >= 1")
    m, r = decompose_dyadic(n)
    lifted = pow_by_squaring(param.q, 1 << r)
    s = partial_sum_sign(m, lifted)
    if s is Sign.ZERO:
        raise SignTestTie(lifted, m)
    return tm(m) * s < 0
