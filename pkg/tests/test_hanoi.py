"""Board model: moves, states, legality, and replay validation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hanoilang.hanoi import (
    DiscCountMismatch,
    EmptySource,
    HanoiNonterminal,
    HanoiState,
    InvalidDiscCount,
    LargerOnSmaller,
    MoveParseError,
    MoveSymbol,
    apply_move,
    initial_state,
    is_solved,
    validate_sequence,
)

ALL_MOVES = [MoveSymbol(i, j) for i in (1, 2, 3) for j in (1, 2, 3) if i != j]


def legal_moves(state):
    out = []
    for mv in ALL_MOVES:
        src = state.peg(mv.src)
        if not src:
            continue
        dst = state.peg(mv.dst)
        if dst and dst[-1] < src[-1]:
            continue
        out.append(mv)
    return out


class TestMoveSymbol:
    def test_code_round_trip(self):
        for mv in ALL_MOVES:
            assert MoveSymbol.parse(mv.code) == mv

    def test_str_matches_code(self):
        assert str(MoveSymbol(1, 3)) == "p13"

    def test_inverse(self):
        assert MoveSymbol(2, 3).inverse() == MoveSymbol(3, 2)

    @pytest.mark.parametrize("bad", ["", "p", "p1", "p11", "p14", "p03", "q13", "p131", "P13"])
    def test_parse_rejects_garbage(self, bad):
        with pytest.raises(MoveParseError):
            MoveSymbol.parse(bad)

    def test_same_peg_rejected(self):
        with pytest.raises(ValueError):
            MoveSymbol(2, 2)

    def test_peg_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            MoveSymbol(0, 3)
        with pytest.raises(ValueError):
            MoveSymbol(1, 4)

    def test_ordering_is_lexicographic(self):
        assert sorted(ALL_MOVES) == [
            MoveSymbol(1, 2), MoveSymbol(1, 3), MoveSymbol(2, 1),
            MoveSymbol(2, 3), MoveSymbol(3, 1), MoveSymbol(3, 2),
        ]

    def test_of_returns_the_shared_instance(self):
        # Million-move solutions rely on this to stay within memory.
        assert MoveSymbol.of(1, 3) is MoveSymbol.of(1, 3)
        assert MoveSymbol.parse("p13") is MoveSymbol.of(1, 3)
        assert MoveSymbol.of(3, 1).inverse() is MoveSymbol.of(1, 3)

    def test_of_equals_a_fresh_instance(self):
        assert MoveSymbol.of(2, 3) == MoveSymbol(2, 3)
        assert hash(MoveSymbol.of(2, 3)) == hash(MoveSymbol(2, 3))

    @pytest.mark.parametrize("src,dst", [(1, 1), (0, 3), (1, 4)])
    def test_of_rejects_bad_pegs(self, src, dst):
        with pytest.raises(ValueError):
            MoveSymbol.of(src, dst)

    def test_str_is_cached_per_instance(self):
        mv = MoveSymbol.of(1, 2)
        assert str(mv) is str(mv)


class TestHanoiNonterminal:
    def test_str(self):
        assert str(HanoiNonterminal(1, 2, 4)) == "h12(4)"

    def test_parse_round_trip(self):
        sym = HanoiNonterminal(2, 3, 7)
        assert HanoiNonterminal.parse(str(sym)) == sym

    def test_size_must_be_positive(self):
        with pytest.raises(ValueError):
            HanoiNonterminal(1, 2, 0)


class TestHanoiState:
    def test_initial_state(self):
        state = initial_state(3)
        assert state.pegs == ((3, 2, 1), (), ())
        assert state.n_discs == 3

    def test_initial_state_rejects_zero(self):
        with pytest.raises(InvalidDiscCount):
            initial_state(0)

    def test_duplicate_disc_rejected(self):
        with pytest.raises(ValueError):
            HanoiState(((2, 1), (1,), ()))

    def test_inverted_order_rejected(self):
        with pytest.raises(ValueError):
            HanoiState(((1, 2), (), ()))

    def test_wrong_peg_count_rejected(self):
        with pytest.raises(ValueError):
            HanoiState(((1,), ()))

    def test_peg_accessor_is_one_based(self):
        state = HanoiState(((2,), (1,), ()))
        assert state.peg(1) == (2,)
        assert state.peg(2) == (1,)
        assert state.peg(3) == ()


class TestApplyMove:
    def test_moves_top_disc(self):
        state = apply_move(initial_state(2), MoveSymbol(1, 2))
        assert state.pegs == ((2,), (1,), ())

    def test_is_pure(self):
        before = initial_state(2)
        apply_move(before, MoveSymbol(1, 2))
        assert before == initial_state(2)

    def test_empty_source_rejected(self):
        with pytest.raises(EmptySource):
            apply_move(initial_state(2), MoveSymbol(2, 3))

    def test_larger_on_smaller_rejected(self):
        state = apply_move(initial_state(2), MoveSymbol(1, 2))
        with pytest.raises(LargerOnSmaller):
            apply_move(state, MoveSymbol(1, 2))

    def test_illegal_moves_are_value_errors(self):
        # callers that just want "bad move" can catch the broad class
        with pytest.raises(ValueError):
            apply_move(initial_state(1), MoveSymbol(3, 1))


class TestIsSolved:
    def test_initial_is_not_solved(self):
        assert not is_solved(initial_state(4), 4)

    def test_all_on_target_is_solved(self):
        assert is_solved(HanoiState(((), (), (2, 1))), 2)

    def test_disc_count_mismatch_raises(self):
        with pytest.raises(DiscCountMismatch):
            is_solved(initial_state(3), 4)


class TestValidateSequence:
    def test_empty_sequence_is_legal_but_unsolved(self):
        report = validate_sequence(2, [])
        assert report.legal
        assert not report.final_solved
        assert report.moves_checked == 0

    def test_solving_sequence(self):
        moves = [MoveSymbol(1, 2), MoveSymbol(1, 3), MoveSymbol(2, 3)]
        report = validate_sequence(2, moves)
        assert report.legal and report.final_solved
        assert report.failing_index is None
        assert report.moves_checked == 3

    def test_illegal_move_reported_with_index(self):
        report = validate_sequence(2, [MoveSymbol(1, 3), MoveSymbol(1, 3)])
        assert not report.legal
        assert report.failing_index == 1
        assert report.failure_reason == "larger-on-smaller"
        assert not report.final_solved
        assert report.moves_checked == 2

    def test_empty_source_reason(self):
        report = validate_sequence(3, [MoveSymbol(2, 1)])
        assert report.failure_reason == "empty-source"
        assert report.failing_index == 0

    def test_truthiness_tracks_legality(self):
        assert validate_sequence(1, [MoveSymbol(1, 3)])
        assert not validate_sequence(1, [MoveSymbol(2, 3)])


# ---------------------------------------------------------------------------
# Property tests: the board invariants hold under any legal random walk, and
# illegal moves are always rejected.
# ---------------------------------------------------------------------------

@settings(max_examples=200)
@given(n_discs=st.integers(min_value=1, max_value=6), data=st.data())
def test_random_legal_walk_preserves_invariants(n_discs, data):
    state = initial_state(n_discs)
    for step in range(data.draw(st.integers(min_value=0, max_value=40))):
        options = legal_moves(state)
        assert options, "a Hanoi position always has a legal move"
        state = apply_move(state, data.draw(st.sampled_from(options), label=f"move {step}"))
        # HanoiState.__post_init__ re-checks the invariants on every
        # construction; getting here means they held.
        assert state.n_discs == n_discs


@settings(max_examples=200)
@given(n_discs=st.integers(min_value=1, max_value=6), data=st.data())
def test_illegal_moves_always_rejected(n_discs, data):
    state = initial_state(n_discs)
    # walk a few legal moves first so we test rejection from varied positions
    for _ in range(data.draw(st.integers(min_value=0, max_value=15))):
        state = apply_move(state, data.draw(st.sampled_from(legal_moves(state))))
    illegal = [mv for mv in ALL_MOVES if mv not in legal_moves(state)]
    if not illegal:
        return
    mv = data.draw(st.sampled_from(illegal))
    with pytest.raises((EmptySource, LargerOnSmaller)):
        apply_move(state, mv)


@settings(max_examples=200)
@given(n_discs=st.integers(min_value=1, max_value=6), data=st.data())
def test_reverse_move_restores_state(n_discs, data):
    state = initial_state(n_discs)
    for _ in range(data.draw(st.integers(min_value=0, max_value=20))):
        state = apply_move(state, data.draw(st.sampled_from(legal_moves(state))))
    mv = data.draw(st.sampled_from(legal_moves(state)))
    assert apply_move(apply_move(state, mv), mv.inverse()) == state


@given(n_discs=st.integers(min_value=1, max_value=5), data=st.data())
def test_validate_agrees_with_stepwise_replay(n_discs, data):
    """validate_sequence is just a replay; it must agree with doing the
    replay by hand, wherever the random walk we feed it stops."""
    state = initial_state(n_discs)
    moves = []
    for _ in range(data.draw(st.integers(min_value=0, max_value=25))):
        mv = data.draw(st.sampled_from(legal_moves(state)))
        state = apply_move(state, mv)
        moves.append(mv)
    report = validate_sequence(n_discs, moves)
    assert report.legal
    assert report.final_solved == is_solved(state, n_discs)
    assert report.moves_checked == len(moves)
