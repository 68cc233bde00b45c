"""Odd cycles left after deleting an independent set, and the vertices of the
set that can be given up without creating new ones.

Terminology, for an independent set ``I`` of a cubic graph ``G``:

* residuum: the odd cycles of ``G - I``.
* free vertex: ``w`` in ``I`` such that no odd cycle of ``G - (I - w)``
  passes through ``w``.
* diamond: an induced ``K4 - e`` on ``{u, w, a, b}`` with the non-adjacent
  pair ``u, w`` in ``I``.
* pseudo-free pair of type 1: a diamond pair such that no odd cycle of length
  >= 5 inside ``(V - I) + {u, w}`` meets the diamond in exactly 3 vertices.
* pseudo-free pair of type 2: a diamond pair with such a 5-cycle whose two
  off-diamond vertices ``c, d`` share a neighbour ``x`` in ``I``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (
    CubicGraph,
    OddCycleWitness,
    canonical_cycle,
    components,
    is_bipartite,
    odd_cycle_vertices,
    shortest_odd_cycle,
)
from .errors import CapExceeded, NotMember
from .indset import check_independent


@dataclass(frozen=True)
class Diamond:
    u: int
    w: int
    a: int
    b: int

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        return (self.u, self.w, self.a, self.b)

    def partner(self, v: int) -> int:
        if v == self.u:
            return self.w
        if v == self.w:
            return self.u
        raise ValueError(f"{v} is not a degree-2 vertex of {self}")


@dataclass(frozen=True)
class TypeTwoWitness:
    diamond: Diamond
    c: int
    d: int
    x: int


@dataclass(frozen=True)
class FreeClassification:
    f0: tuple[int, ...]
    f1: tuple[Diamond, ...]
    f2: tuple[TypeTwoWitness, ...]

    @property
    def members(self) -> frozenset[int]:
        out = set(self.f0)
        for d in self.f1:
            out |= {d.u, d.w}
        for t in self.f2:
            out |= {t.diamond.u, t.diamond.w}
        return frozenset(out)

    def is_empty(self) -> bool:
        return not (self.f0 or self.f1 or self.f2)

    def diamond_of(self, v: int) -> Diamond | None:
        for d in self.f1:
            if v in (d.u, d.w):
                return d
        for t in self.f2:
            if v in (t.diamond.u, t.diamond.w):
                return t.diamond
        return None

    def to_json(self) -> dict:
        return {
            "f0": list(self.f0),
            "f1": [[d.u, d.w, d.a, d.b] for d in self.f1],
            "f2": [
                {"diamond": [t.diamond.u, t.diamond.w, t.diamond.a, t.diamond.b],
                 "c": t.c, "d": t.d, "x": t.x}
                for t in self.f2
            ],
        }


@dataclass(frozen=True)
class ResiduumWitness:
    odd_components: tuple[tuple[tuple[int, ...], OddCycleWitness], ...]

    @property
    def is_empty(self) -> bool:
        return not self.odd_components

    def shortest_cycle(self) -> OddCycleWitness | None:
        if not self.odd_components:
            return None
        return min((c for _, c in self.odd_components), key=lambda c: (len(c), c.vertices))


def complement(G: CubicGraph, I: Iterable[int]) -> frozenset[int]:
    return frozenset(range(G.n)) - frozenset(I)


def residuum(G: CubicGraph, I: Iterable[int]) -> ResiduumWitness:
    I = check_independent(G, I)
    rest = complement(G, I)
    found = []
    for comp in components(G, rest):
        if len(comp) >= 3 and not is_bipartite(G, comp):
            cycle = shortest_odd_cycle(G, comp)
            found.append((comp, cycle))
    return ResiduumWitness(tuple(found))


def enumerate_odd_cycles(G: CubicGraph, S: Iterable[int], cap: int = 100_000) -> list[OddCycleWitness]:
    """Every simple odd cycle of G[S], canonically rotated, sorted.

    Exponential; meant as the exact oracle for small graphs.
    """
    S = frozenset(S)
    found = []
    for s in sorted(S):
        path = [s]
        on_path = {s}

        def dfs(v: int) -> None:
            for u in G.adj[v]:
                if u not in S or u < s:
                    continue
                if u == s:
                    if len(path) >= 3 and len(path) % 2 == 1 and path[1] < path[-1]:
                        found.append(OddCycleWitness(tuple(path)))
                        if len(found) > cap:
                            raise CapExceeded(f"more than {cap} odd cycles")
                    continue
                if u in on_path:
                    continue
                path.append(u)
                on_path.add(u)
                dfs(u)
                path.pop()
                on_path.discard(u)

        dfs(s)
    assert all(c.vertices == canonical_cycle(c.vertices) for c in found)
    return sorted(found, key=lambda c: (len(c), c.vertices))


def is_free(G: CubicGraph, I: Iterable[int], w: int) -> bool:
    I = check_independent(G, I)
    if w not in I:
        raise NotMember(f"{w} is not in the independent set")
    return w not in odd_cycle_vertices(G, complement(G, I) | {w})


def find_diamonds(G: CubicGraph, I: Iterable[int]) -> list[Diamond]:
    I = check_independent(G, I)
    out = []
    for a, b in G.edges():
        if a in I or b in I:
            continue
        common = sorted(set(G.adj[a]) & set(G.adj[b]) & I)
        if len(common) == 2:
            out.append(Diamond(common[0], common[1], a, b))
    return out


def _outer_neighbor(G: CubicGraph, v: int, d: Diamond) -> int:
    (x,) = [y for y in G.adj[v] if y not in (d.a, d.b)]
    return x


def free_sets(G: CubicGraph, I: Iterable[int]) -> FreeClassification:
    I = check_independent(G, I)
    rest = complement(G, I)
    f0 = tuple(sorted(w for w in I if w not in odd_cycle_vertices(G, rest | {w})))
    taken = set(f0)
    f1, f2 = [], []
    for d in find_diamonds(G, I):
        if d.u in taken or d.w in taken:
            continue
        # cycles meeting the diamond in exactly 3 vertices run u-a-w (or
        # u-b-w) and close through the outer neighbours of u and w, so it
        # suffices to ask whether ``a`` lies on an odd cycle once ``b`` is gone
        region = (rest - {d.b}) | {d.u, d.w}
        if d.a not in odd_cycle_vertices(G, region):
            f1.append(d)
            taken |= {d.u, d.w}
            continue
        c, e = _outer_neighbor(G, d.u, d), _outer_neighbor(G, d.w, d)
        if c != e and G.has_edge(c, e):
            common = sorted((set(G.adj[c]) & set(G.adj[e]) & I) - {d.u, d.w})
            if common:
                f2.append(TypeTwoWitness(d, c, e, common[0]))
                taken |= {d.u, d.w}
    return FreeClassification(f0, tuple(f1), tuple(f2))
