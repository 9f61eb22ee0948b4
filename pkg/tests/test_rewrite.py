import itertools
import json
from collections import Counter

import pytest

from circleact.core import SignedDatumClass, canonicalize
from circleact.generators import gen_cp3, gen_s6_pair
from circleact.rewrite import (
    ReductionFailure,
    RewriteTrace,
    StaleMoveError,
    applicable_moves,
    apply_move,
    collection_from_classes,
    collection_from_data,
    reduce_to_empty,
)


def cls(sign, *weights):
    return canonicalize(SignedDatumClass(sign, weights))


def coll(*specs):
    return collection_from_classes(cls(s, *w) for s, *w in [list(x) for x in specs])


class TestCollections:
    def test_from_data_canonical(self):
        got = collection_from_data(gen_cp3(1, 1, 1))
        assert got == coll(
            (1, 1, 2, 3), (-1, 1, 1, 2), (1, 1, 1, 2), (-1, 1, 2, 3)
        )

    def test_multiplicities(self):
        got = collection_from_classes([cls(1, 1, 2, 3), cls(1, 1, 2, 3)])
        assert got[cls(1, 1, 2, 3)] == 2


class TestApplicableMoves:
    def test_op1_cancelling_pair(self):
        moves = applicable_moves(coll((1, 2, 3, 5), (-1, 2, 3, 5)))
        op1 = [m for m in moves if m.op == 1]
        assert len(op1) == 1
        assert apply_move(coll((1, 2, 3, 5), (-1, 2, 3, 5)), op1[0]) == Counter()

    def test_op2_on_cp3(self):
        c = collection_from_data(gen_cp3(1, 2, 3))
        ops = {(m.op, m.orientation, m.params) for m in applicable_moves(c)}
        assert (2, 1, (1, 3, 6)) in ops

    def test_op2_side_condition(self):
        # [+,A,B,C] needs A < B < C strictly
        c = coll((1, 2, 2, 5), (-1, 3, 3, 5))
        assert all(m.op != 2 for m in applicable_moves(c))

    def test_op3_instance(self):
        # [s,A,B,C] and [s,A,C-B,C] with A=1, B=2, C=5
        c = coll((1, 1, 2, 5), (1, 1, 3, 5))
        moves = [m for m in applicable_moves(c) if m.op == 3]
        params = {m.params for m in moves}
        assert (1, 2, 5) in params
        m = next(m for m in moves if m.params == (1, 2, 5))
        after = apply_move(c, m)
        # the A-B = -1 entries canonicalize by flipping the class sign
        assert after == coll((1, 1, 3, 4), (1, 1, 2, 3), (-1, 1, 1, 3), (1, 1, 1, 4))

    def test_op4_instance(self):
        # [s,A,A,C] and [s,A,C-A,C] with A=1, C=3
        c = coll((1, 1, 1, 3), (1, 1, 2, 3))
        moves = [m for m in applicable_moves(c) if m.op == 4]
        assert any(m.params == (1, 3) for m in moves)
        m = next(m for m in moves if m.params == (1, 3))
        after = apply_move(c, m)
        assert after == coll((1, 2, 1, 1), (1, 2, 1, 1), (1, 2, 1, 1), (-1, 1, 1, 1))

    def test_op4_degenerate_rejected(self):
        # C = 2A would create a zero weight; no op-4 instance is offered
        c = coll((1, 1, 1, 2), (1, 1, 1, 2))
        assert all(m.op != 4 for m in applicable_moves(c))

    def test_op5_instance(self):
        c = coll((1, 3, 1, 1), (-1, 3, 2, 2))
        moves = [m for m in applicable_moves(c) if m.op == 5]
        assert any(m.params == (1, 3) for m in moves)

    def test_rejects_wrong_arity(self):
        with pytest.raises(ValueError):
            applicable_moves(collection_from_classes([SignedDatumClass(1, (1, 2))]))

    def test_deterministic_order(self):
        c = collection_from_data(gen_cp3(1, 2, 3))
        assert applicable_moves(c) == applicable_moves(Counter(c))


class TestApplyMove:
    def test_stale_move(self):
        c = coll((1, 2, 3, 5), (-1, 2, 3, 5))
        move = applicable_moves(c)[0]
        emptied = apply_move(c, move)
        with pytest.raises(StaleMoveError):
            apply_move(emptied, move)

    def test_does_not_mutate(self):
        c = coll((1, 2, 3, 5), (-1, 2, 3, 5))
        before = Counter(c)
        apply_move(c, applicable_moves(c)[0])
        assert c == before


class TestReduceToEmpty:
    def test_cp3_script(self):
        trace = reduce_to_empty(collection_from_data(gen_cp3(1, 2, 3)))
        assert isinstance(trace, RewriteTrace)
        ops = [(m.op, m.params) for m in trace.moves]
        assert ops[0] == (2, (1, 3, 6))
        assert [op for op, _ in ops[1:]] == [1, 1]
        trace.replay()

    def test_sphere_pair_script(self):
        trace = reduce_to_empty(collection_from_data(gen_s6_pair(1, 2, 3, 4, 5, 6)))
        assert [m.op for m in trace.moves] == [1, 1]

    def test_grid_short_traces(self):
        for a, b, c in itertools.product(range(1, 3), repeat=3):
            trace = reduce_to_empty(collection_from_data(gen_cp3(a, b, c)))
            assert isinstance(trace, RewriteTrace)
            assert len(trace.moves) <= 3
            trace.replay()

    def test_search_strategy_agrees(self):
        c = collection_from_data(gen_cp3(2, 1, 2))
        auto = reduce_to_empty(c)
        searched = reduce_to_empty(c, strategy="search")
        assert isinstance(searched, RewriteTrace)
        for t in (auto, searched):
            states = t.replay()
            assert states[-1] == Counter()

    def test_empty_collection(self):
        trace = reduce_to_empty(Counter())
        assert trace.moves == () and trace.final == ()

    def test_irreducible_reports_failure(self):
        res = reduce_to_empty(coll((1, 1, 1, 1)), max_depth=3)
        assert isinstance(res, ReductionFailure)
        assert res.depth == 3 and res.states_explored > 0

    def test_noncanonical_rejected(self):
        c = Counter({SignedDatumClass(1, (-1, 2, 3)): 1})
        with pytest.raises(ValueError):
            reduce_to_empty(c)

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            reduce_to_empty(Counter(), strategy="greedy")

    def test_eight_point_union(self):
        c = collection_from_data(gen_s6_pair(1, 2, 3, 1, 2, 3)) + collection_from_data(
            gen_s6_pair(2, 2, 4, 1, 1, 5)
        )
        trace = reduce_to_empty(c)
        assert isinstance(trace, RewriteTrace)
        assert all(m.op == 1 for m in trace.moves) and len(trace.moves) == 4


class TestTrace:
    def test_json_lines(self):
        trace = reduce_to_empty(collection_from_data(gen_cp3(1, 1, 1)))
        lines = trace.to_json_lines().strip().splitlines()
        assert len(lines) == len(trace.moves)
        for line in lines:
            rec = json.loads(line)
            assert set(rec) == {"op", "orientation", "params", "removed", "added"}

    def test_replay_detects_corruption(self):
        trace = reduce_to_empty(collection_from_data(gen_cp3(1, 1, 1)))
        bad = RewriteTrace(trace.initial, trace.moves[:-1], trace.final)
        with pytest.raises(AssertionError):
            bad.replay()
