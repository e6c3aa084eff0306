"""Tests for forward/backward jeu de taquin, MJ, J^i, J_i, FJ and BJ."""

from itertools import permutations

import pytest
from hypothesis import given, settings

from conftest import EXAMPLE_SHAPE, SUITE_SHAPES, tabloid_and_order
from jdt_engine import (
    PairedState, Transcript, backward_jdt, bj, eq1_composition, fj, forward_jdt, iter_bj, iter_fj,
    iter_modified_jdt, modified_jdt, step_down, step_up, switch,
)
from shape_core import Mask, full_mask, make_shape
from tableaux import Filling, apply_permutation, canonical_order, enumerate_standard, is_standard
from utils import JdtError


def rows(*grid):
    return [list(r) for r in grid]


def ex(*grid):
    return Filling.from_rows(EXAMPLE_SHAPE, rows(*grid))


# Intermediate tabloids of MJ_P(R), after labels 5, 4, 3 and 2
MJ_STATES = [
    ex([8], [3, 4], [9, 5, 1, 6], [2, 7]),
    ex([8], [3, 4], [9, 1, 5, 6], [2, 7]),
    ex([8], [3, 4], [1, 2, 5, 6], [7, 9]),
    ex([4], [3, 6], [1, 2, 5, 8], [7, 9]),
]

# P as carried along by FJ(R, P), after labels 5, 4, 3 and 2
FJ_COMPANIONS = [
    ex([2], [1, 8], [3, 4, 6, 5], [7, 9]),
    ex([2], [1, 8], [3, 6, 4, 5], [7, 9]),
    ex([2], [1, 8], [6, 7, 4, 5], [9, 3]),
    ex([8], [1, 5], [6, 7, 4, 2], [9, 3]),
]

# Pairs of BJ(Q_pi^-1, Q) after J_2, J_3, J_4 and J_5
BJ_PAIRS = [
    PairedState(ex([2], [1, 8], [6, 7, 4, 5], [9, 3]), ex([8], [3, 4], [1, 2, 5, 6], [7, 9])),
    PairedState(ex([2], [1, 8], [3, 6, 4, 5], [7, 9]), ex([8], [3, 4], [9, 1, 5, 6], [2, 7])),
    PairedState(ex([2], [1, 8], [3, 4, 6, 5], [7, 9]), ex([8], [3, 4], [9, 5, 1, 6], [2, 7])),
    PairedState(ex([2], [1, 5], [3, 4, 6, 8], [7, 9]), ex([8], [3, 6], [9, 5, 1, 4], [2, 7])),
]


def test_forward_jdt_with_8():
    shape = make_shape((3, 3, 2))
    t = Filling.from_rows(shape, [[8, 1, 4], [2, 3, 5], [6, 7]])
    result, transcript = forward_jdt(t, (1, 1))
    assert result.to_rows() == [[1, 3, 4], [2, 5, 8], [6, 7]]
    assert list(transcript) == [((1, 1), (1, 2)), ((1, 2), (2, 2)), ((2, 2), (2, 3))]


def test_forward_jdt_stable_entry():
    shape = make_shape((3, 3, 2))
    t = Filling.from_rows(shape, [[1, 3, 4], [2, 5, 8], [6, 7]])
    result, transcript = forward_jdt(t, (2, 2))
    assert result == t
    assert len(transcript) == 0


def test_forward_jdt_on_example(R):
    result, transcript = forward_jdt(R, (2, 6))
    assert list(transcript) == [((2, 6), (3, 6))]
    assert result == MJ_STATES[0]


def test_forward_jdt_outside_cell(R):
    with pytest.raises(JdtError) as info:
        forward_jdt(R, (1, 1))
    assert info.value.code == "ERR_CELL_OUTSIDE"


def test_backward_jdt_undoes_forward_with_8():
    shape = make_shape((3, 3, 2))
    t = Filling.from_rows(shape, [[1, 3, 4], [2, 5, 8], [6, 7]])
    result, transcript = backward_jdt(t, (2, 3), full_mask(shape))
    assert result.to_rows() == [[8, 1, 4], [2, 3, 5], [6, 7]]
    assert set(transcript.directions()) <= {"left", "above"}


def test_backward_jdt_without_neighbors():
    shape = make_shape((2, 2))
    t = Filling(shape, (4, 3, 2, 1))
    result, transcript = backward_jdt(t, (1, 1), full_mask(shape))
    assert result == t
    assert len(transcript) == 0


def test_backward_jdt_mask_errors():
    shape = make_shape((2, 2))
    t = Filling(shape, (1, 2, 3, 4))
    mask = Mask(shape, frozenset({(2, 2)}))
    with pytest.raises(JdtError) as info:
        backward_jdt(t, (1, 1), mask)
    assert info.value.code == "ERR_NOT_IN_MASK"
    with pytest.raises(JdtError) as info:
        backward_jdt(t, (3, 1), mask)
    assert info.value.code == "ERR_CELL_OUTSIDE"


@pytest.mark.parametrize("outer", [(2, 2), (2, 1)])
def test_backward_jdt_undoes_forward_from_the_corner(outer):
    shape = make_shape(outer)
    rest = [c for c in shape.cells if c != (1, 1)]
    for word in permutations(range(1, shape.n + 1)):
        t = Filling(shape, word)
        # slides run into a region whose entries already increase along rows and columns
        if not all(t.entry_at(c) < t.entry_at(d) for c in rest for d in rest
                   if (d[0] == c[0] and d[1] == c[1] + 1) or (d[1] == c[1] and d[0] == c[0] + 1)):
            continue
        result, transcript = forward_jdt(t, (1, 1))
        landing = transcript.moves[-1][1] if len(transcript) else (1, 1)
        back, _ = backward_jdt(result, landing, full_mask(shape))
        assert back == t


def test_modified_jdt_example(P, R, Q):
    assert modified_jdt(R, P) == Q
    changed = [(step.label, step.state) for step in iter_modified_jdt(R, P) if len(step.transcript)]
    assert [label for label, _ in changed] == [5, 4, 3, 2]
    assert [state for _, state in changed] == MJ_STATES


def test_modified_jdt_fixes_standard_fillings():
    for shape in SUITE_SHAPES:
        for s in enumerate_standard(shape):
            assert modified_jdt(s, s) == s


def test_modified_jdt_shape_mismatch(P):
    with pytest.raises(JdtError) as info:
        modified_jdt(Filling(make_shape((2, 1)), (1, 2, 3)), P)
    assert info.value.code == "ERR_SHAPE_MISMATCH"


def test_modified_jdt_requires_standard_order(R):
    with pytest.raises(JdtError) as info:
        modified_jdt(R, R)
    assert info.value.code == "ERR_NOT_STANDARD"
    with pytest.raises(JdtError) as info:
        list(iter_modified_jdt(R, R))
    assert info.value.code == "ERR_NOT_STANDARD"


def test_column_order_constancy_332():
    shape = make_shape((3, 3, 2))
    order = canonical_order(shape, "nps_column")
    tally = {}
    for word in permutations(range(1, 9)):
        q = modified_jdt(Filling(shape, word), order).entries
        tally[q] = tally.get(q, 0) + 1
    assert len(tally) == 42
    assert set(tally.values()) == {960}


def test_step_up_examples(R, P):
    state = PairedState(R, P)
    assert step_up(9, state) == state
    for label in (9, 8, 7, 6):
        state = step_up(label, state)
    assert state == PairedState(R, P)
    state = step_up(5, state)
    assert state == PairedState(MJ_STATES[0], FJ_COMPANIONS[0])


def test_step_up_on_standard_first_is_identity(P):
    state = PairedState(P, P)
    for label in range(9, 0, -1):
        assert step_up(label, state) == state


def test_step_down_examples(Q_pi_inverse, Q):
    state = PairedState(Q_pi_inverse, Q)
    # entry 1 of Q_pi^-1 sits at (2,5), which has no left or upper neighbor
    assert step_down(1, state) == state
    assert step_down(2, step_down(1, state)) == BJ_PAIRS[0]


def test_step_down_start_without_neighbors():
    shape = make_shape((2, 2))
    state = PairedState(Filling(shape, (1, 2, 3, 4)), Filling(shape, (4, 3, 2, 1)))
    assert step_down(1, state) == state


def test_fj_example(R, P, Q, Q_pi_inverse):
    assert fj(R, P) == PairedState(Q_pi_inverse, Q)
    changed = [step for step in iter_fj(R, P) if len(step.transcript)]
    assert [step.state.first for step in changed] == MJ_STATES
    assert [step.state.second for step in changed] == FJ_COMPANIONS


def test_bj_example(R, P, Q, Q_pi_inverse):
    changed = [step.state for step in iter_bj(Q_pi_inverse, Q) if len(step.transcript)]
    assert changed == BJ_PAIRS
    assert changed[-1] == PairedState(P, R)
    assert bj(Q_pi_inverse, Q) == PairedState(R, P)


def test_fj_bj_on_standard_pairs():
    for shape in SUITE_SHAPES:
        for s in enumerate_standard(shape):
            assert fj(s, s) == PairedState(s, s)
            assert bj(s, s) == PairedState(s, s)


def test_fj_requires_standard_order(R):
    with pytest.raises(JdtError) as info:
        fj(R, R)
    assert info.value.code == "ERR_NOT_STANDARD"


def test_fj_is_an_involution_on_22():
    shape = make_shape((2, 2))
    for s in enumerate_standard(shape):
        for word in permutations(range(1, 5)):
            t = Filling(shape, word)
            assert fj(*fj(t, s)) == PairedState(t, s)


@pytest.mark.parametrize("outer, shifted", [((2, 1), False), ((2, 2), False), ((2, 1), True)])
def test_bj_inverts_fj(outer, shifted):
    shape = make_shape(outer, shifted=shifted)
    for s in enumerate_standard(shape):
        for word in permutations(range(1, shape.n + 1)):
            t = Filling(shape, word)
            out = fj(t, s)
            assert bj(*out) == PairedState(t, s)
            assert fj(*bj(t, s)) == PairedState(t, s)


def test_eq1_on_example(R, P):
    assert P.entry_at(R.cell_of(1)) == 6
    assert eq1_composition(R, P) == fj(R, P)


def test_switch():
    shape = make_shape((2, 1))
    a, b = Filling(shape, (1, 2, 3)), Filling(shape, (1, 3, 2))
    assert switch(PairedState(a, b)) == PairedState(b, a)


def test_transcript_replay_stepwise(R):
    _, transcript = forward_jdt(R, (3, 3))
    states = list(transcript.replay_stepwise(R))
    assert len(states) == len(transcript)
    assert states[-1] == transcript.replay(R)
    assert transcript + Transcript() == transcript


@settings(max_examples=300, deadline=None)
@given(case=tabloid_and_order())
def test_paired_identities(case):
    t, s = case
    out = fj(t, s)
    assert out.second == modified_jdt(t, s)
    assert is_standard(out.second)
    assert fj(*out) == PairedState(t, s)
    assert bj(t, s) == out
    assert eq1_composition(t, s) == out


@settings(max_examples=300, deadline=None)
@given(case=tabloid_and_order())
def test_transcript_directions(case):
    t, s = case
    for step in iter_modified_jdt(t, s):
        assert set(step.transcript.directions()) <= {"right", "below"}
    out = fj(t, s)
    for step in iter_bj(*out):
        assert set(step.transcript.directions()) <= {"left", "above"}
        assert sorted(step.state.second.entries) == list(range(1, t.n + 1))


def test_empty_shape_operations():
    shape = make_shape(())
    empty = Filling(shape, ())
    assert modified_jdt(empty, empty) == empty
    assert fj(empty, empty) == PairedState(empty, empty)
    assert bj(empty, empty) == PairedState(empty, empty)
    assert eq1_composition(empty, empty) == PairedState(empty, empty)


def test_pi_tracking_on_example(P, pi):
    t = apply_permutation(P, pi)
    state = PairedState(t, P)
    for step in iter_fj(t, P):
        for x, y in zip(step.transcript.replay_stepwise(state.first), step.transcript.replay_stepwise(state.second)):
            assert x == apply_permutation(y, pi)
        state = step.state
