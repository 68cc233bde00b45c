"""Hand-built graphs with independent sets that exercise specific branches."""

from cubicbip.core import CubicGraph, parse_graph6

# n=20, |I|=8: the residuum is exactly two disjoint triangles, seven members
# of I are free and vertex 2 is not (releasing it closes the triangle 2-11-15).
TWO_TRIANGLES = parse_graph6("S?CC@?@?aCCA_ACG@?P?gD?Q@?aW?AH??")
TWO_TRIANGLES_I = frozenset({1, 2, 4, 5, 6, 8, 12, 17})


def necklace() -> CubicGraph:
    """Two diamonds 0,1,2,3 and 4,5,6,7 whose degree-2 vertices hang off a
    K(2,2) on 8..11; with I = {0,1,4,5} both pairs are pseudo-free of type 1."""
    edges = []
    for u, w, a, b in ((0, 1, 2, 3), (4, 5, 6, 7)):
        edges += [(u, a), (u, b), (w, a), (w, b), (a, b)]
    edges += [(0, 8), (1, 9), (4, 10), (5, 11), (8, 10), (8, 11), (9, 10), (9, 11)]
    return CubicGraph.from_edges(12, edges)


NECKLACE_I = frozenset({0, 1, 4, 5})


def type_two() -> CubicGraph:
    """Diamond u=0, w=1, a=2, b=3; outer neighbours c=4, d=5 are adjacent
    and share x=6.  A triangle-rich tail 7..11 keeps the graph cubic."""
    edges = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 5), (4, 5), (4, 6), (5, 6),
             (6, 7), (7, 8), (7, 9), (8, 10), (8, 11), (9, 10), (9, 11), (10, 11)]
    return CubicGraph.from_edges(12, edges)


TYPE_TWO_I = frozenset({0, 1, 6, 8})


def seven_cycle() -> CubicGraph:
    """A path 0..6 from the triangle 0,13,14 to the free vertex 6, with a
    7-cycle 3,4,5,7,8,9,10 hanging on it.  Exchanging along the path
    releases 3 and so closes that cycle through the edge 3-4."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (7, 8), (8, 9), (9, 10),
             (3, 10), (4, 11), (8, 11), (7, 12), (9, 12), (10, 12), (0, 13), (0, 14), (13, 14),
             (13, 15), (14, 15), (1, 16), (2, 16), (11, 17), (15, 17), (16, 17), (6, 18), (6, 19),
             (18, 20), (18, 21), (19, 20), (19, 21), (20, 21)]
    return CubicGraph.from_edges(22, edges)


SEVEN_CYCLE_I = frozenset({1, 3, 6, 11, 12, 15, 21})

# n=20, |I|=6: the path 0,1,2,3 is blocked at 2, whose neighbours all lie in I
BLOCKED = parse_graph6("ShGOGOAAG?AA?Q_?W?GAG?AO?AO@?WKO?")
BLOCKED_I = frozenset({1, 3, 4, 15, 16, 19})

# n=24, |I|=7: the triangle 0,13,14 touches the type-1 diamond 1,2,3,4 at 1
DIAMOND_END = parse_graph6("Wb[?@GC???__?a_?O?GD??g??@_?g?A_???D?AE??G@??OP")
DIAMOND_END_I = frozenset({1, 2, 15, 16, 17, 19, 22})

# n=20, |I|=8 (exactly 4n/10): the triangle 4,9,13 has a vertex with no
# neighbour in I
ABSORB = parse_graph6("SA?cK@CAPAC?A?ACGO??Wc?GOE??A_@CC")
ABSORB_I = frozenset({0, 3, 5, 10, 11, 12, 14, 18})
