"""Rewriting system on collections of signed equivalence classes.

Five operations remove and add arity-3 classes; a realizable collection can
always be converted to the empty collection.  This module enumerates
applicable operation instances, applies them with multiset semantics, and
searches for a reduction: deterministic short scripts for the two known
4-point shapes, bounded iterative-deepening search otherwise.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import (
    FixedPointData,
    SignedDatumClass,
    canonicalize,
    class_to_datum,
)
from .classify import classify_6d4fp, Case1Match, Case2Match


class StaleMoveError(ValueError):
    """The move's removed classes are not present in the collection."""


Collection = Counter  # Counter[SignedDatumClass], canonical representatives


def collection_from_data(d: FixedPointData) -> Collection:
    return Counter(
        canonicalize(SignedDatumClass(p.sign, p.weights)) for p in d.points
    )


def collection_from_classes(classes: Iterable[SignedDatumClass]) -> Collection:
    return Counter(canonicalize(c) for c in classes)


def _cls(sign: int, weights) -> SignedDatumClass:
    return canonicalize(SignedDatumClass(sign, tuple(weights)))


@dataclass(frozen=True)
class RewriteMove:
    op: int
    orientation: int  # +1 / -1, the sign chosen for the +- branch
    params: tuple[int, ...]  # (A, B, C) or (A, C) etc., op-specific
    removed: tuple[SignedDatumClass, ...]
    added: tuple[SignedDatumClass, ...]

    def to_dict(self) -> dict:
        return {
            "op": self.op,
            "orientation": self.orientation,
            "params": list(self.params),
            "removed": [str(c) for c in self.removed],
            "added": [str(c) for c in self.added],
        }

    def __str__(self) -> str:
        removed = ", ".join(str(c) for c in self.removed)
        added = ", ".join(str(c) for c in self.added) or "(nothing)"
        return f"op({self.op}) params={self.params}: remove {removed}; add {added}"


def _move(op, s, params, removed, added) -> RewriteMove:
    return RewriteMove(
        op,
        s,
        tuple(params),
        tuple(sorted(removed, key=lambda c: (c.sign, c.weights))),
        tuple(sorted(added, key=lambda c: (c.sign, c.weights))),
    )


def _instantiate(op: int, s: int, params: tuple[int, ...]) -> Optional[RewriteMove]:
    """Build the move for one operation instance, or None if a side
    condition fails or a zero weight would be produced."""
    if op == 1:
        A, B, C = params
        removed = [_cls(1, (A, B, C)), _cls(-1, (A, B, C))]
        return _move(1, 1, params, removed, [])
    if op == 2:
        A, B, C = params
        if not (0 < A < B < C):
            return None
        removed = [_cls(s, (A, B, C)), _cls(-s, (C - A, C - B, C))]
        added = [_cls(s, (A, B - A, C - A)), _cls(-s, (B, B - A, C - B))]
        return _move(2, s, params, removed, added)
    if op == 3:
        A, B, C = params
        if not (0 < A < C and 0 < B < C and A != B):
            return None
        removed = [_cls(s, (A, B, C)), _cls(s, (A, C - B, C))]
        added = [
            _cls(s, (C - B, C - A, A)),
            _cls(s, (C - B, B, A)),
            _cls(s, (C - B, A - B, A)),
            _cls(-s, (C - A, A - B, A)),
        ]
        return _move(3, s, params, removed, added)
    if op == 4:
        A, C = params
        if not (0 < A < C) or C == 2 * A:
            return None
        removed = [_cls(s, (A, A, C)), _cls(s, (A, C - A, C))]
        added = [
            _cls(s, (C - A, C - 2 * A, A)),
            _cls(s, (C - A, A, A)),
            _cls(s, (C - A, A, A)),
            _cls(-s, (C - 2 * A, A, A)),
        ]
        return _move(4, s, params, removed, added)
    if op == 5:
        A, C = params
        if not (0 < A < C) or C == 2 * A:
            return None
        removed = [_cls(s, (C, A, A)), _cls(-s, (C, C - A, C - A))]
        added = [
            _cls(s, (C - A, C - 2 * A, A)),
            _cls(s, (C - A, A, A)),
            _cls(s, (C - A, A, A)),
            _cls(-s, (C - 2 * A, A, A)),
            _cls(s, (A, C - 2 * A, C - A)),
            _cls(-s, (A, C - A, C - A)),
            _cls(-s, (A, C - A, C - A)),
            _cls(-s, (C - 2 * A, C - A, C - A)),
        ]
        return _move(5, s, params, removed, added)
    raise ValueError(f"unknown operation {op}")


def _present(coll: Collection, removed) -> bool:
    need = Counter(removed)
    return all(coll[c] >= k for c, k in need.items())


def applicable_moves(coll: Collection) -> list[RewriteMove]:
    """Every instantiation of operations (1)-(5) whose removed classes are
    present, matched at the level of canonical representatives."""
    for c in coll:
        if c.arity != 3:
            raise ValueError("rewriting is defined for arity-3 classes")
    moves = {}
    classes = sorted(coll, key=lambda c: (c.sign, c.weights))

    def consider(move: Optional[RewriteMove]):
        if move is None:
            return
        if not _present(coll, move.removed):
            return
        moves[(move.op, move.orientation, move.params)] = move

    for x in classes:
        w = x.weights
        # op 1: x as the positive half
        if x.sign == 1:
            consider(_instantiate(1, 1, w))
        s = x.sign
        # op 2: x = [s, A, B, C] with A < B < C
        if w[0] < w[1] < w[2]:
            consider(_instantiate(2, s, w))
        # ops 3-5: x plays the first removed pattern; try every role
        # assignment of its weights
        seen_perm = set()
        for perm in _distinct_permutations(w):
            if perm in seen_perm:
                continue
            seen_perm.add(perm)
            A, B, C = perm
            consider(_instantiate(3, s, (A, B, C)))
        # op 4 first pattern is [s, A, A, C]
        for A, C in _repeated_pairs(w):
            consider(_instantiate(4, s, (A, C)))
        # op 5 first pattern is [s, C, A, A]
        for A, C in _repeated_pairs(w):
            consider(_instantiate(5, s, (A, C)))
    ordered = sorted(
        moves.values(), key=lambda m: (m.op, m.orientation, m.params)
    )
    return ordered


def _distinct_permutations(w: tuple[int, int, int]):
    return set(itertools.permutations(w))


def _repeated_pairs(w: tuple[int, int, int]):
    """(A, C) assignments where the multiset is {A, A, C}."""
    out = set()
    if w[0] == w[1]:
        out.add((w[0], w[2]))
    if w[1] == w[2]:
        out.add((w[1], w[0]))
    return out


def apply_move(coll: Collection, move: RewriteMove) -> Collection:
    if not _present(coll, move.removed):
        raise StaleMoveError(f"move not applicable: {move}")
    out = Counter(coll)
    for c in move.removed:
        out[c] -= 1
        if not out[c]:
            del out[c]
    for c in move.added:
        out[c] += 1
    return out


@dataclass(frozen=True)
class RewriteTrace:
    initial: tuple[SignedDatumClass, ...]
    moves: tuple[RewriteMove, ...]
    final: tuple[SignedDatumClass, ...]

    def replay(self) -> list[Collection]:
        """Intermediate collections, starting at initial; raises on any
        inconsistency."""
        states = [Counter(self.initial)]
        for move in self.moves:
            states.append(apply_move(states[-1], move))
        if states[-1] != Counter(self.final):
            raise AssertionError("trace replay does not reach the final state")
        return states

    def to_json_lines(self) -> str:
        return "\n".join(json.dumps(m.to_dict()) for m in self.moves) + (
            "\n" if self.moves else ""
        )


@dataclass(frozen=True)
class ReductionFailure:
    reason: str
    depth: int
    states_explored: int

    def to_dict(self) -> dict:
        return {
            "reason": self.reason,
            "depth": self.depth,
            "states_explored": self.states_explored,
        }


def _sorted_classes(coll: Collection) -> tuple[SignedDatumClass, ...]:
    return tuple(sorted(coll.elements(), key=lambda c: (c.sign, c.weights)))


def _case_script(coll: Collection) -> Optional[list[RewriteMove]]:
    """Deterministic reduction for the two known 4-point shapes."""
    if sum(coll.values()) != 4 or any(c.arity != 3 for c in coll):
        return None
    try:
        d = FixedPointData(tuple(class_to_datum(c) for c in coll.elements()))
        verdict = classify_6d4fp(d)
    except ValueError:
        return None
    case2 = next((m for m in verdict.matches if isinstance(m, Case2Match)), None)
    case1 = next((m for m in verdict.matches if isinstance(m, Case1Match)), None)
    if case1 is not None:
        w1, w2 = case1.pairs
        return [_instantiate(1, 1, w1), _instantiate(1, 1, w2)]
    if case2 is not None:
        a, b, c = case2.a, case2.b, case2.c
        first = _instantiate(2, 1, (a, a + b, a + b + c))
        state = apply_move(coll, first)
        moves = [first]
        # the remainder is two opposite-sign pairs
        while state:
            for m in applicable_moves(state):
                if m.op == 1:
                    state = apply_move(state, m)
                    moves.append(m)
                    break
            else:
                return None
        return moves
    return None


def reduce_to_empty(
    coll: Collection, max_depth: int = 12, strategy: str = "auto"
):
    """Reduce the collection to empty, returning a verified RewriteTrace or
    a ReductionFailure.

    strategy "auto" tries the deterministic 4-point scripts first, then
    falls back to iterative-deepening search; "search" skips the scripts.
    """
    if strategy not in ("auto", "search"):
        raise ValueError(f"unknown strategy {strategy!r}")
    for c in coll:
        if c.arity != 3:
            raise ValueError("rewriting is defined for arity-3 classes")
        if canonicalize(c) != c:
            raise ValueError(f"collection must be canonical, got {c}")
    initial = _sorted_classes(coll)
    if not coll:
        return RewriteTrace(initial, (), ())

    if strategy == "auto":
        script = _case_script(coll)
        if script is not None:
            trace = RewriteTrace(initial, tuple(script), ())
            trace.replay()
            return trace

    explored = 0

    def dfs(state: Collection, depth: int, seen: dict) -> Optional[list[RewriteMove]]:
        nonlocal explored
        explored += 1
        if not state:
            return []
        if depth == 0:
            return None
        key = _sorted_classes(state)
        # transposition set: skip states already searched with at least as
        # much remaining depth
        if seen.get(key, -1) >= depth:
            return None
        seen[key] = depth
        for move in applicable_moves(state):
            sub = dfs(apply_move(state, move), depth - 1, seen)
            if sub is not None:
                return [move] + sub
        return None

    for depth in range(1, max_depth + 1):
        result = dfs(Counter(coll), depth, {})
        if result is not None:
            trace = RewriteTrace(initial, tuple(result), ())
            trace.replay()
            return trace
    return ReductionFailure(
        reason=f"no reduction within depth {max_depth}",
        depth=max_depth,
        states_explored=explored,
    )
