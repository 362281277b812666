from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greedy_galois.game import (
    GameParameter,
    GreedyGame,
    ShotSequence,
    SignTestTie,
    greedy_sequence,
    next_shot,
    sign_test,
    sign_test_transferred,
    win_probabilities,
)
from greedy_galois.numerics import Sign
from greedy_galois.thue_morse import partial_sum_direct, tm

from conftest import naive_greedy, naive_shots, unit_fractions

A, B = 1, -1


def test_parameter_validation():
    assert GameParameter(Fraction(2, 3)).p == Fraction(1, 3)
    assert GameParameter.from_p("1/3").q == Fraction(2, 3)
    assert GameParameter("0.64").q == Fraction(16, 25)
    for bad in (Fraction(0), Fraction(1), Fraction(3, 2), Fraction(-1, 2)):
        with pytest.raises(ValueError):
            GameParameter(bad)


@pytest.mark.parametrize(
    "diff, expected",
    [(Fraction(0), (Sign.POS, True)), (Fraction(1, 2), (Sign.NEG, False)),
     (Fraction(-1, 9), (Sign.POS, False))],
)
def test_next_shot(diff, expected):
    assert next_shot(diff) == expected


@pytest.mark.parametrize(
    "q, length, expected",
    [
        (Fraction(1, 3), 7, [A, B, B, B, B, B, B]),
        (Fraction(2, 3), 7, [A, B, B, A, B, A, B]),
        (Fraction(1, 2), 5, [A, B, B, B, B]),
    ],
)
def test_greedy_sequence_examples(q, length, expected):
    seq = greedy_sequence(GameParameter(q), length)
    assert seq.shots == expected
    assert not seq.tie_encountered


def test_names():
    assert greedy_sequence(GameParameter(Fraction(2, 3)), 7).names() == "A B B A B A B"


def test_empty_sequence():
    seq = greedy_sequence(GameParameter(Fraction(1, 2)), 0)
    assert seq.shots == [] and seq.diff_sum == 0


@given(unit_fractions, st.integers(1, 60))
def test_matches_naive_greedy(q, length):
    seq = greedy_sequence(GameParameter(q), length)
    assert seq.shots == naive_greedy(q, length)
    assert seq.shots[0] == A


@given(unit_fractions, st.integers(0, 60))
def test_diff_sum_and_greedy_consistency(q, length):
    seq = greedy_sequence(GameParameter(q), length)
    running = Fraction(0)
    for n, shot in enumerate(seq.shots):
        assert shot == next_shot(running)[0]
        running += shot * q**n
    assert seq.diff_sum == running


@given(unit_fractions, st.integers(0, 60))
def test_probability_conservation(q, length):
    param = GameParameter(q)
    seq = greedy_sequence(param, length)
    wp = win_probabilities(param, seq)
    assert wp.horizon == length
    assert wp.alice + wp.bob + q**length == 1
    assert wp.alice - wp.bob == param.p * seq.diff_sum


@given(unit_fractions, st.integers(0, 60))
def test_decision_ignores_scale(q, length):
    # only the sign of the difference matters; scaling by p changes nothing
    param = GameParameter(q)
    seq = greedy_sequence(param, length)
    assert next_shot(seq.diff_sum) == next_shot(param.p * seq.diff_sum)


def test_win_probabilities_examples():
    half = GameParameter(Fraction(1, 2))
    wp = win_probabilities(half, ShotSequence([Sign.POS]))
    assert (wp.alice, wp.bob) == (Fraction(1, 2), 0)
    wp = win_probabilities(half, ShotSequence([Sign.POS, Sign.NEG, Sign.NEG]))
    assert (wp.alice, wp.bob) == (Fraction(1, 2), Fraction(3, 8))
    for n in (1, 5, 20, 64):
        wp = win_probabilities(half, greedy_sequence(half, n))
        assert wp.alice == Fraction(1, 2)
        assert wp.bob == Fraction(1, 2) - Fraction(1, 2**n)


@pytest.mark.parametrize(
    "q, n, expected",
    [(Fraction(2, 3), 6, False), (Fraction(2, 3), 3, True), (Fraction(1, 3), 3, False),
     (Fraction(1, 2), 4, True)],
)
def test_sign_test_examples(q, n, expected):
    param = GameParameter(q)
    assert sign_test(param, n) is expected
    assert sign_test_transferred(param, n) is expected


@given(unit_fractions)
def test_sign_test_at_one_always_true(q):
    assert sign_test(GameParameter(q), 1)
    assert sign_test_transferred(GameParameter(q), 1)


@pytest.mark.parametrize("q", [Fraction(1, 3), Fraction(2, 3), Fraction(16, 25), Fraction(9, 10),
                               Fraction(97, 100), Fraction(199, 200)])
def test_transfer_equivalence_grid(q):
    param = GameParameter(q)
    for n in range(1, 257):
        assert sign_test(param, n) == sign_test_transferred(param, n)


@settings(deadline=None)
@given(st.fractions(min_value=Fraction(1, 100), max_value=Fraction(19, 20), max_denominator=100))
def test_sign_test_predicts_next_shot_on_agreeing_prefix(q):
    param = GameParameter(q)
    shots = naive_shots(q)
    assert next(shots) == tm(0)
    n = 0
    while True:
        n += 1
        agrees = next(shots) == tm(n)
        assert sign_test(param, n) == agrees
        if not agrees:
            break
    assert n >= 3


def test_sign_test_rejects_zero_index():
    with pytest.raises(ValueError):
        sign_test(GameParameter(Fraction(1, 2)), 0)
    with pytest.raises(ValueError):
        sign_test_transferred(GameParameter(Fraction(1, 2)), 0)


def test_tie_reporting(monkeypatch):
    # S_N(q) never vanishes on a rational in (0, 1) in practice; force it
    import greedy_galois.game as game

    monkeypatch.setattr(game, "partial_sum_sign", lambda n, q: Sign.ZERO)
    with pytest.raises(SignTestTie):
        sign_test(GameParameter(Fraction(1, 2)), 3)
    with pytest.raises(SignTestTie):
        sign_test_transferred(GameParameter(Fraction(1, 2)), 6)


def test_tie_flag_set_on_later_zero():
    game = GreedyGame(GameParameter(Fraction(1, 2)))
    game.step()
    game._scaled_sum = 0  # contrive an exact tie after the first shot
    assert game.step() is Sign.POS
    assert game.tie_encountered


def test_partial_sum_sign_consistency():
    q = Fraction(2, 3)
    assert partial_sum_direct(6, q) > 0 and tm(6) == 1
