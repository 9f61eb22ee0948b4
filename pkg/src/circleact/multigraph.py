"""Signed labeled multigraphs describing fixed-point data.

Vertices are fixed points with their signs; each vertex's incident edge
labels reproduce its weight multiset.  Admissible graphs pair equal weight
values across points with no self-loops, and every edge labeled by one of
the two smallest positive-sign weights must join opposite-sign vertices.
For 4 vertices in dimension 6 the possible shapes reduce to five templates
(cases A-E), recognized up to swapping the two vertices of either sign.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .core import FixedPointData
from .constraints import check_weight_parity, signed_weight_lists


class NoMatchingError(ValueError):
    """The data cannot support any edge matching (weight parity fails)."""


Edge = tuple[int, int, int]  # (u, v, label) with u < v


@dataclass(frozen=True)
class LabeledMultigraph:
    """vertices: tuple of (id, sign); edges: sorted multiset of (u, v, label)."""

    vertices: tuple[tuple[int, int], ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        ids = {v for v, _ in self.vertices}
        for u, v, label in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge endpoints must be ordered: ({u},{v})")
            if u not in ids or v not in ids:
                raise ValueError(f"edge ({u},{v}) references unknown vertex")
            if label < 1:
                raise ValueError(f"edge label must be positive, got {label}")
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    def sign_of(self, vertex: int) -> int:
        for v, s in self.vertices:
            if v == vertex:
                return s
        raise KeyError(vertex)

    def weights_at(self, vertex: int) -> Counter:
        out: Counter = Counter()
        for u, v, label in self.edges:
            if u == vertex:
                out[label] += 1
            if v == vertex:
                out[label] += 1
        return out

    def degree(self, vertex: int) -> int:
        return sum(self.weights_at(vertex).values())

    def edge_count(self, u: int, v: int) -> int:
        a, b = min(u, v), max(u, v)
        return sum(1 for x, y, _ in self.edges if (x, y) == (a, b))

    def labels_between(self, u: int, v: int) -> list[int]:
        a, b = min(u, v), max(u, v)
        return sorted(label for x, y, label in self.edges if (x, y) == (a, b))


def describes(g: LabeledMultigraph, d: FixedPointData) -> bool:
    """True iff per-vertex edge labels and signs reproduce the data."""
    ids = sorted(v for v, _ in g.vertices)
    if ids != list(range(len(d.points))):
        raise ValueError(
            f"vertex ids {ids} do not match point identifiers 0..{len(d.points) - 1}"
        )
    for i, p in enumerate(d.points):
        if g.sign_of(i) != p.sign:
            return False
        if g.weights_at(i) != Counter(p.weights):
            return False
    return True


def _matchings(occurrences: list[int]):
    """Perfect matchings of a list of vertex ids (with repetition) into
    unordered pairs; no dedup here, caller canonicalizes."""
    if not occurrences:
        yield []
        return
    first, rest = occurrences[0], occurrences[1:]
    for i in range(len(rest)):
        pair = (min(first, rest[i]), max(first, rest[i]))
        for sub in _matchings(rest[:i] + rest[i + 1 :]):
            yield [pair] + sub


def small_label_values(d: FixedPointData) -> set[int]:
    """The values of the two smallest weights of the positive sign class
    (falling back to the negative class if needed); edges with these labels
    must join opposite-sign vertices."""
    plus, minus = signed_weight_lists(d)
    source = plus if len(plus) >= 2 else minus
    if len(source) < 2:
        return set()
    return {source[0], source[1]}


def enumerate_admissible(
    d: FixedPointData, cap: int = 10 ** 6
) -> list[LabeledMultigraph]:
    """All graphs obtained by perfectly matching each weight value's
    occurrences across points, without self-loops, with the opposite-sign
    constraint on the two smallest positive-class values.  Deduplicated and
    returned in lexicographic edge order."""
    parity = check_weight_parity(d)
    if parity.failed:
        raise NoMatchingError(parity.witness)
    vertices = tuple((i, p.sign) for i, p in enumerate(d.points))
    opposite_only = small_label_values(d)
    signs = {i: p.sign for i, p in enumerate(d.points)}

    per_value: list[tuple[int, list[tuple[tuple[int, int], ...]]]] = []
    occurrences_by_value: dict[int, list[int]] = {}
    for i, p in enumerate(d.points):
        for w in p.weights:
            occurrences_by_value.setdefault(w, []).append(i)
    for value in sorted(occurrences_by_value):
        occ = occurrences_by_value[value]
        options = set()
        for matching in _matchings(occ):
            if any(u == v for u, v in matching):
                continue  # self-loop
            if value in opposite_only and any(
                signs[u] == signs[v] for u, v in matching
            ):
                continue
            options.add(tuple(sorted(matching)))
        if not options:
            return []
        per_value.append((value, sorted(options)))

    graphs = []
    for combo in itertools.product(*(options for _, options in per_value)):
        edges = []
        for (value, _), matching in zip(per_value, combo):
            edges.extend((u, v, value) for u, v in matching)
        graphs.append(LabeledMultigraph(vertices, tuple(edges)))
        if len(graphs) > cap:
            raise NoMatchingError(f"admissible graph cap {cap} exceeded")
    unique = sorted(set(graphs), key=lambda g: g.edges)
    return unique


# --- Figure recognition for 4 vertices in dimension 6 ----------------------
#
# Templates give, for each case tag, the slot letters between ordered
# vertex roles (p1, p2 positive, p3, p4 negative).
_TEMPLATES: dict[str, list[tuple[int, int, str]]] = {
    "A": [(1, 3, "a"), (1, 3, "b"), (1, 3, "c"), (2, 4, "d"), (2, 4, "e"), (2, 4, "f")],
    "B": [(1, 2, "a"), (1, 3, "b"), (1, 3, "c"), (2, 4, "d"), (2, 4, "e"), (3, 4, "f")],
    "C": [(1, 3, "a"), (1, 3, "b"), (1, 4, "c"), (2, 3, "d"), (2, 4, "e"), (2, 4, "f")],
    "D": [(1, 2, "a"), (1, 2, "b"), (1, 3, "c"), (2, 4, "d"), (3, 4, "e"), (3, 4, "f")],
    "E": [(1, 2, "a"), (1, 3, "b"), (1, 4, "c"), (2, 3, "d"), (2, 4, "e"), (3, 4, "f")],
}

# (m2, m3, m4) = edge counts from p1 to p2, p3, p4 after normalization.
_PATTERNS = {
    (0, 3, 0): "A",
    (1, 2, 0): "B",
    (0, 2, 1): "C",
    (2, 1, 0): "D",
    (1, 1, 1): "E",
}


@dataclass(frozen=True)
class Figure1Case:
    tag: str
    vertex_map: tuple[int, int, int, int]  # roles p1..p4 -> vertex ids
    labels: dict

    def template_edges(self) -> list[Edge]:
        """Edges produced by substituting the labels into the template."""
        out = []
        for r1, r2, slot in _TEMPLATES[self.tag]:
            u = self.vertex_map[r1 - 1]
            v = self.vertex_map[r2 - 1]
            out.append((min(u, v), max(u, v), self.labels[slot]))
        return sorted(out)


def match_figure1(g: LabeledMultigraph) -> Optional[Figure1Case]:
    """Recognize which of the five 4-vertex shapes the graph realizes.

    Requires exactly 4 vertices, two of each sign, 3-regular, no
    self-loops.  Tries the four allowed normalizations (swap the positive
    pair, swap the negative pair) and returns the first matching case, or
    None when no normalization hits a template pattern."""
    if len(g.vertices) != 4:
        raise ValueError("need exactly 4 vertices")
    plus = sorted(v for v, s in g.vertices if s == 1)
    minus = sorted(v for v, s in g.vertices if s == -1)
    if len(plus) != 2 or len(minus) != 2:
        raise ValueError("need two vertices of each sign")
    for v, _ in g.vertices:
        if g.degree(v) != 3:
            raise ValueError(f"vertex {v} is not 3-regular")

    for p1, p2 in (plus, plus[::-1]):
        for p3, p4 in (minus, minus[::-1]):
            roles = (p1, p2, p3, p4)
            m2 = g.edge_count(p1, p2)
            m3 = g.edge_count(p1, p3)
            m4 = g.edge_count(p1, p4)
            if m3 < 1 or m3 < m4:
                continue
            tag = _PATTERNS.get((m2, m3, m4))
            if tag is None:
                continue
            template = _TEMPLATES[tag]
            wanted = Counter((r1, r2) for r1, r2, _ in template)
            actual = Counter()
            for r1 in range(1, 5):
                for r2 in range(r1 + 1, 5):
                    c = g.edge_count(roles[r1 - 1], roles[r2 - 1])
                    if c:
                        actual[(r1, r2)] = c
            if wanted != actual:
                continue
            labels = {}
            for (r1, r2), _count in sorted(wanted.items()):
                slots = sorted(s for a, b, s in template if (a, b) == (r1, r2))
                values = g.labels_between(roles[r1 - 1], roles[r2 - 1])
                labels.update(dict(zip(slots, values)))
            case = Figure1Case(tag, roles, labels)
            if case.template_edges() == list(g.edges):
                return case
    return None


# --- serialization ---------------------------------------------------------

def serialize_graph(g: LabeledMultigraph) -> str:
    lines = [f"vertex {v} {'+' if s == 1 else '-'}" for v, s in g.vertices]
    lines += [f"{u} {v} {label}" for u, v, label in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> LabeledMultigraph:
    vertices = []
    edges = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "vertex":
            vertices.append((int(tokens[1]), 1 if tokens[2] == "+" else -1))
        else:
            u, v, label = (int(t) for t in tokens)
            edges.append((min(u, v), max(u, v), label))
    return LabeledMultigraph(tuple(vertices), tuple(edges))
