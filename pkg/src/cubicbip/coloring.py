"""Equitable and semi-equitable colourings.

A semi-equitable 3-colouring puts an independent set ``I`` in class 0 and
splits the bipartite remainder into two classes whose sizes differ by at most
one.  Width (largest minus smallest class) is lowered one vertex at a time by
:func:`transfer`, which tries a plain move, then a two-colour Kempe swap,
then a detour through the third class, and finally an exhaustive recolouring
bounded by a node budget.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Bipartition, CubicGraph, components, is_bipartite
from .errors import BalanceInfeasible, NotBipartite, StepFailed
from .indset import check_independent

log = logging.getLogger(__name__)

EXHAUSTIVE_BUDGET = 2_000_000


@dataclass(frozen=True)
class TriColoring:
    assignment: tuple[int, ...]

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Iterable[int]]) -> "TriColoring":
        assignment = [-1] * n
        for c, members in enumerate(classes):
            for v in members:
                assignment[v] = c
        if -1 in assignment or len(classes) != 3:
            raise ValueError("classes must partition the vertex set into three parts")
        return cls(tuple(assignment))

    @property
    def sizes(self) -> tuple[int, int, int]:
        return tuple(self.assignment.count(c) for c in range(3))

    @property
    def width(self) -> int:
        return max(self.sizes) - min(self.sizes)

    def cls(self, c: int) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.assignment) if x == c)

    def conflicts(self, G: CubicGraph) -> list[tuple[int, int]]:
        return [(u, v) for u, v in G.edges() if self.assignment[u] == self.assignment[v]]

    def is_proper(self, G: CubicGraph) -> bool:
        return not self.conflicts(G)


@dataclass(frozen=True)
class DegreeProfile:
    s0: int
    s1: int
    s2: int
    s3: int

    @property
    def order(self) -> int:
        return self.s0 + self.s1 + self.s2 + self.s3

    @property
    def degree_sum(self) -> int:
        return self.s1 + 2 * self.s2 + 3 * self.s3


def degree_profile(G: CubicGraph, S: Iterable[int]) -> DegreeProfile:
    S = frozenset(S)
    counts = [0, 0, 0, 0]
    for v in S:
        counts[sum(u in S for u in G.adj[v])] += 1
    return DegreeProfile(*counts)


def _sides(G: CubicGraph, comp: tuple[int, ...]) -> tuple[list[int], list[int]]:
    S = frozenset(comp)
    color = {comp[0]: 0}
    queue = deque([comp[0]])
    while queue:
        v = queue.popleft()
        for u in G.adj[v]:
            if u in S and u not in color:
                color[u] = 1 - color[v]
                queue.append(u)
    x = sorted(v for v in comp if color[v] == 0)
    y = sorted(v for v in comp if color[v] == 1)
    return (x, y) if len(x) >= len(y) else (y, x)


def _balance_by_dp(parts: list[tuple[list[int], list[int]]]) -> list[bool] | None:
    """Orientation per part (True: big side to A) with |A|-|B| in {-1,0,1}."""
    diffs = [len(b) - len(s) for b, s in parts]
    reach = {0: []}
    for d in diffs:
        nxt = {}
        for total, picks in reach.items():
            for sign in (True, False):
                t = total + (d if sign else -d)
                if t not in nxt:
                    nxt[t] = picks + [sign]
        reach = nxt
    for target in (0, 1, -1):
        if target in reach:
            return reach[target]
    return None


def equitable_bipartition(G: CubicGraph, S: Iterable[int]) -> Bipartition:
    """2-colouring of G[S] with side sizes differing by at most one;
    ``side_a`` is the larger side."""
    S = frozenset(S)
    if not is_bipartite(G, S):
        raise NotBipartite("induced subgraph has an odd cycle")
    parts, isolated = [], []
    for comp in components(G, S):
        if len(comp) == 1:
            isolated.append(comp[0])
        else:
            parts.append(_sides(G, comp))
    parts.sort(key=lambda p: (-(len(p[0]) - len(p[1])), min(p[0] + p[1])))
    A: list[int] = []
    B: list[int] = []
    for big, small in parts:
        if len(A) <= len(B):
            A += big
            B += small
        else:
            A += small
            B += big
    for v in isolated:
        (A if len(A) <= len(B) else B).append(v)
    if abs(len(A) - len(B)) > 1:
        singles = [([v], []) for v in isolated]
        picks = _balance_by_dp(parts + singles)
        if picks is None:
            raise BalanceInfeasible(f"no 2-colouring of {len(S)} vertices is balanced")
        A, B = [], []
        for (big, small), to_a in zip(parts + singles, picks):
            A += big if to_a else small
            B += small if to_a else big
    if len(A) < len(B):
        A, B = B, A
    return Bipartition(frozenset(A), frozenset(B))


def semi_equitable(G: CubicGraph, I: Iterable[int]) -> TriColoring:
    I = check_independent(G, I)
    rest = frozenset(range(G.n)) - I
    split = equitable_bipartition(G, rest)
    coloring = TriColoring.from_classes(G.n, (I, split.side_a, split.side_b))
    assert coloring.is_proper(G)
    return coloring


# ---------------------------------------------------------------------------
# width reduction


def _recolor(c: TriColoring, moves: dict[int, int]) -> TriColoring:
    a = list(c.assignment)
    for v, col in moves.items():
        a[v] = col
    return TriColoring(tuple(a))


def _single_moves(G: CubicGraph, c: TriColoring, src: int, dst: int):
    for v in sorted(c.cls(src)):
        if all(c.assignment[u] != dst for u in G.adj[v]):
            yield _recolor(c, {v: dst})


def _kempe_moves(G: CubicGraph, c: TriColoring, src: int, dst: int):
    two = c.cls(src) | c.cls(dst)
    for comp in components(G, two):
        if sum(c.assignment[v] == src for v in comp) - sum(c.assignment[v] == dst for v in comp) == 1:
            yield _recolor(c, {v: dst if c.assignment[v] == src else src for v in comp})


def _net_moves(G, c, src, dst):
    yield from _single_moves(G, c, src, dst)
    yield from _kempe_moves(G, c, src, dst)


def _exhaustive(G: CubicGraph, c: TriColoring, target: tuple[int, int, int]) -> TriColoring | None:
    order = []
    seen = set()
    for s in range(G.n):
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in G.adj[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    assign = [-1] * G.n
    left = list(target)
    nodes = [0]

    def go(i: int) -> bool:
        nodes[0] += 1
        if nodes[0] > EXHAUSTIVE_BUDGET:
            return False
        if i == len(order):
            return True
        v = order[i]
        prefs = [c.assignment[v]] + [x for x in range(3) if x != c.assignment[v]]
        for col in prefs:
            if left[col] and all(assign[u] != col for u in G.adj[v]):
                assign[v] = col
                left[col] -= 1
                if go(i + 1):
                    return True
                left[col] += 1
                assign[v] = -1
        return False

    return TriColoring(tuple(assign)) if go(0) else None


def transfer(G: CubicGraph, c: TriColoring, src: int, dst: int) -> TriColoring:
    """Proper colouring with one vertex fewer in ``src`` and one more in
    ``dst``, the third class keeping its size."""
    mid = 3 - src - dst
    for nxt in _net_moves(G, c, src, dst):
        return nxt
    for step in _net_moves(G, c, src, mid):
        for nxt in _net_moves(G, step, mid, dst):
            return nxt
    target = list(c.sizes)
    target[src] -= 1
    target[dst] += 1
    found = _exhaustive(G, c, tuple(target))
    if found is not None:
        return found
    raise StepFailed(f"could not move a vertex from class {src} to class {dst} (sizes {c.sizes})")


def reduce_width(G: CubicGraph, c: TriColoring) -> TriColoring:
    if c.width < 2:
        raise ValueError(f"width {c.width} is already at most 1")
    sizes = c.sizes
    src = sizes.index(max(sizes))
    dst = sizes.index(min(sizes))
    out = transfer(G, c, src, dst)
    assert out.is_proper(G)
    return out


def equalize(G: CubicGraph, c: TriColoring) -> TriColoring:
    while c.width >= 2:
        c = reduce_width(G, c)
    return c


@dataclass(frozen=True)
class ColoringVerdict:
    proper: bool
    violations: tuple[tuple[int, int], ...]
    sizes: tuple[int, int, int]
    width: int
    type_matches: bool | None

    @property
    def ok(self) -> bool:
        return self.proper and self.type_matches is not False

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "proper": self.proper,
            "violations": [list(e) for e in self.violations],
            "sizes": list(self.sizes),
            "width": self.width,
            "type_matches": self.type_matches,
        }


def verify_coloring(
    G: CubicGraph, c: TriColoring, expected_type: Sequence[int] | None = None
) -> ColoringVerdict:
    bad = tuple(c.conflicts(G))
    matches = None
    if expected_type is not None:
        matches = sorted(c.sizes) == sorted(expected_type)
    return ColoringVerdict(not bad, bad, c.sizes, c.width, matches)
