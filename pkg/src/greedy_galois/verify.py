"""Seeded self-check suites driven by ``greedy-galois verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .convergence import (
    DEFAULT_CAP,
    agreement_length_closed_form,
    agreement_length_simulated,
    corollary_check,
    is_admissible,
)
from .game import GameParameter, GreedyGame, sign_test, sign_test_transferred
from .numerics import format_rational
from .sweep import SweepSpec
from .thue_morse import partial_sum_direct, partial_sum_factored, power_of_two_sum, tm

SUITES = ("identities", "oracle", "corollary")


@dataclass
class Counterexample:
    check: str
    q: Optional[Fraction]
    n: Optional[int]
    expected: object
    got: object

    def __str__(self) -> str:
        q = "-" if self.q is None else format_rational(self.q)
        n = "-" if self.n is None else self.n
        return f"{self.check}: q={q} N={n} expected={self.expected} got={self.got}"


@dataclass
class SuiteReport:
    name: str
    passed: int = 0
    total: int = 0
    failure: Optional[Counterexample] = None

    @property
    def ok(self) -> bool:
        return self.failure is None and self.passed == self.total

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {self.passed}/{self.total} {status}"


# each check yields (name, q, n, expected, got)
Check = Tuple[str, Optional[Fraction], Optional[int], object, object]


def random_rationals(rng: random.Random, count: int, max_den: int = 1000,
                     upper: Fraction = Fraction(1)) -> List[Fraction]:
    out = []
    while len(out) < count:
        den = rng.randint(2, max_den)
        q = Fraction(rng.randint(1, den - 1), den)
        if q < upper:
            out.append(q)
    return out


def identity_checks(seed: int) -> Iterator[Check]:
    rng = random.Random(seed)
    for n in range(1 << 12):
        yield "tm(2n) = tm(n)", None, n, int(tm(n)), int(tm(2 * n))
        yield "tm(2n+1) = -tm(n)", None, n, -tm(n), int(tm(2 * n + 1))
    for r in range(7):
        for a in range(64):
            for b in range(1 << r):
                yield "tm(a*2^r+b) = tm(a)tm(b)", None, (a << r) + b, tm(a) * tm(b), int(tm((a << r) + b))
    qs = random_rationals(rng, 8)
    for q in qs:
        for r in range(11):
            yield "S_{2^r}(q) > 0", q, 1 << r, True, power_of_two_sum(r, q) > 0
        for m in range(1, 64, 2):
            for r in range(7):
                n = m << r
                yield "S_n direct = factored", q, n, partial_sum_direct(n, q), partial_sum_factored(n, q)
    for q in qs:
        param = GameParameter(q)
        for n in range(1, 257):
            yield "sign test transfer", q, n, sign_test(param, n), sign_test_transferred(param, n)


def oracle_grid(seed: int) -> List[Fraction]:
    grid = SweepSpec(Fraction(1, 100), Fraction(199, 200), 120).points()
    grid += SweepSpec.from_inverse_p(Fraction(100, 99), 200, 120).points()
    grid += random_rationals(random.Random(seed), 60, upper=Fraction(199, 200))
    return sorted(set(grid))


def oracle_checks(seed: int, cap: int = DEFAULT_CAP) -> Iterator[Check]:
    previous = 0
    for q in oracle_grid(seed):
        closed = agreement_length_closed_form(q).length
        sim = agreement_length_simulated(q, cap)
        yield "simulated = closed form", q, None, closed, sim.length
        yield "no tie", q, None, False, sim.tie_flag
        yield "admissible length", q, None, True, is_admissible(closed)
        yield "non-decreasing in q", q, None, True, closed >= previous
        previous = closed
        # conservation over every prefix up to the first disagreement
        param = GameParameter(q)
        game = GreedyGame(param)
        alice = bob = Fraction(0)
        power = Fraction(1)
        for _ in range(sim.length + 1):
            shot = game.step()
            if shot > 0:
                alice += param.p * power
            else:
                bob += param.p * power
            power *= q
        yield "alice + bob + q^N = 1", q, len(game), Fraction(1), alice + bob + power
        yield "alice - bob = p * diff_sum", q, len(game), param.p * game.diff_sum, alice - bob


def corollary_checks(seed: int, cap: int = DEFAULT_CAP) -> Iterator[Check]:
    del seed  # fully deterministic
    for k in range(1, 13):
        yield "corollary", 1 - Fraction(1, 2**k), 3 << (k - 1), True, corollary_check(k, cap)


CHECKS: Dict[str, Callable[..., Iterator[Check]]] = {
    "identities": identity_checks,
    "oracle": oracle_checks,
    "corollary": corollary_checks,
}


def run_suite(name: str, seed: int = 0, **kwargs) -> SuiteReport:
    report = SuiteReport(name)
    for check, q, n, expected, got in CHECKS[name](seed, **kwargs):
        report.total += 1
        if expected == got:
            report.passed += 1
        elif report.failure is None:
            report.failure = Counterexample(check, q, n, expected, got)
    return report


def run_suites(suite: str, seed: int = 0, **kwargs) -> List[SuiteReport]:
    names = SUITES if suite == "all" else (suite,)
    return [run_suite(name, seed, **(kwargs if name != "identities" else {})) for name in names]
