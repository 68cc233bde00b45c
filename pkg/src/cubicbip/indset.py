"""Independent sets: min-degree greedy and an exact branch-and-bound."""

from __future__ import annotations

from typing import Iterable

from .core import CubicGraph
from .errors import BudgetExceeded, KTooLarge, NotIndependent
from .gen import SplitMix64

DEFAULT_NODE_BUDGET = 10**7


def is_independent(G: CubicGraph, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return all(u not in S for v in S for u in G.adj[v])


def check_independent(G: CubicGraph, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    if any(not 0 <= v < G.n for v in S):
        raise NotIndependent(f"vertex out of range in {sorted(S)}")
    for v in sorted(S):
        for u in G.adj[v]:
            if u in S:
                raise NotIndependent(f"edge {min(u, v)}-{max(u, v)} inside the set")
    return S


def greedy_mis(G: CubicGraph, seed: int = 0) -> frozenset[int]:
    """Maximal independent set built by repeatedly taking a vertex of minimum
    residual degree; ties go to a seeded random priority, then to index."""
    order = list(range(G.n))
    SplitMix64(seed).shuffle(order)
    rank = {v: i for i, v in enumerate(order)}
    alive = set(range(G.n))
    deg = {v: 3 for v in alive}
    chosen = set()
    while alive:
        v = min(alive, key=lambda x: (deg[x], rank[x], x))
        chosen.add(v)
        removed = {v} | (set(G.adj[v]) & alive)
        alive -= removed
        for r in removed:
            for u in G.adj[r]:
                if u in alive:
                    deg[u] -= 1
    out = frozenset(chosen)
    assert is_independent(G, out)
    return out


def _popcount(x: int) -> int:
    return bin(x).count("1")


def max_is(G: CubicGraph, node_budget: int = DEFAULT_NODE_BUDGET) -> frozenset[int]:
    """Maximum independent set by branch and bound on bitmasks.

    Vertices of residual degree <= 1 are taken without branching.  The bound
    is ``|alive| - ceil(edges/maxdeg)``: every edge left must be covered by a
    vertex outside the set, and each covers at most maxdeg of them.
    """
    masks = G.masks
    best = [0, 0]  # size, mask
    nodes = [0]

    def bound(alive: int) -> int:
        cnt = 0
        edges2 = 0
        maxdeg = 0
        a = alive
        while a:
            low = a & -a
            v = low.bit_length() - 1
            a ^= low
            d = _popcount(masks[v] & alive)
            edges2 += d
            maxdeg = max(maxdeg, d)
            cnt += 1
        if maxdeg == 0:
            return cnt
        return cnt - (edges2 // 2 + maxdeg - 1) // maxdeg

    def search(alive: int, size: int, chosen: int) -> None:
        nodes[0] += 1
        if nodes[0] > node_budget:
            raise BudgetExceeded(f"max_is exceeded {node_budget} search nodes")
        # forced moves: isolated and pendant vertices
        changed = True
        while changed and alive:
            changed = False
            a = alive
            while a:
                low = a & -a
                v = low.bit_length() - 1
                a ^= low
                if not alive >> v & 1:
                    continue
                if _popcount(masks[v] & alive) <= 1:
                    chosen |= low
                    size += 1
                    alive &= ~(low | masks[v])
                    changed = True
        if not alive:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + bound(alive) <= best[0]:
            return
        # branch on the lowest-index vertex of maximum residual degree
        pick, pick_deg = -1, -1
        a = alive
        while a:
            low = a & -a
            v = low.bit_length() - 1
            a ^= low
            d = _popcount(masks[v] & alive)
            if d > pick_deg:
                pick, pick_deg = v, d
        bit = 1 << pick
        search(alive & ~(bit | masks[pick]), size + 1, chosen | bit)
        search(alive & ~bit, size, chosen)

    search((1 << G.n) - 1, 0, 0)
    out = frozenset(v for v in range(G.n) if best[1] >> v & 1)
    assert len(out) == best[0] and is_independent(G, out)
    return out


def shrink_to(I: Iterable[int], k: int) -> frozenset[int]:
    """Keep the ``k`` smallest members."""
    members = sorted(I)
    if k > len(members) or k < 0:
        raise KTooLarge(f"cannot shrink a set of size {len(members)} to {k}")
    return frozenset(members[:k])
