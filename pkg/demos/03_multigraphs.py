# Multigraphs attached to fixed-point data
#
# Every weight value must occur an even number of times, so the weight
# occurrences can be paired off into the edges of a labeled multigraph on
# the fixed points: each edge joins two points sharing its label, no point
# is joined to itself, and edges carrying the two smallest labels must
# join points of opposite sign.  For four fixed points in dimension six
# only five shapes of graph can occur.

from circleact import (
    enumerate_admissible,
    match_figure1,
    serialize_graph,
    gen_cp3,
    gen_s6_pair,
)

# The projective-space data admits exactly one graph, and it has the
# one-path-plus-chords shape (case E).
cp3 = gen_cp3(1, 2, 3)
graphs = enumerate_admissible(cp3)
print("cp3(1,2,3) admits", len(graphs), "graph(s)")
for g in graphs:
    case = match_figure1(g)
    print(serialize_graph(g))
    print("shape:", case.tag, "with labels", case.labels)

# A union of two sphere rotations with disjoint weights admits exactly one
# graph as well: two disjoint triple edges (case A).
pair = gen_s6_pair(1, 2, 3, 4, 5, 6)
(g,) = enumerate_admissible(pair)
print("\nsphere pair shape:", match_figure1(g).tag)

# When the two spheres share weights there are several admissible graphs;
# each one matches some case of the five.
shared = gen_s6_pair(1, 2, 3, 1, 2, 3)
print("\nshared-weight pair admits", len(enumerate_admissible(shared)), "graphs:")
for g in enumerate_admissible(shared):
    case = match_figure1(g)
    print("  edges", g.edges, "->", case.tag if case else "unmatched")
