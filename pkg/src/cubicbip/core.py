"""Cubic graphs, the graph6 codec and basic structural predicates.

Vertices are dense integers ``0..n-1``.  Graphs never change after
construction; "removing" a vertex set is always expressed by passing the
set of surviving vertices to the function that needs the induced subgraph.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator

import networkx as nx

from .errors import Disconnected, MalformedGraph6, NotCubic, NotSimple


@dataclass(frozen=True)
class CubicGraph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n <= 0 or len(self.adj) != self.n:
            raise NotCubic(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            if len(set(nbrs)) != len(nbrs) or v in nbrs:
                raise NotSimple(f"vertex {v} has a loop or a repeated neighbour")
            if any(not 0 <= u < self.n for u in nbrs):
                raise NotSimple(f"vertex {v} has a neighbour out of range")
            if len(nbrs) != 3:
                raise NotCubic(f"vertex {v} has degree {len(nbrs)}")
            if list(nbrs) != sorted(nbrs):
                raise NotSimple(f"neighbours of {v} are not sorted")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if v not in self.adj[u]:
                    raise NotSimple(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "CubicGraph":
        nbrs: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if u == v:
                raise NotSimple(f"loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise NotSimple(f"duplicate edge {key}")
            if not (0 <= u < n and 0 <= v < n):
                raise NotSimple(f"edge {key} out of range for n={n}")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        return cls(n, tuple(tuple(sorted(x)) for x in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(range(self.n))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of every vertex as an integer bitmask."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adj)

    def relabel(self, perm: list[int]) -> "CubicGraph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return CubicGraph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])


@dataclass(frozen=True)
class Bipartition:
    side_a: frozenset[int]
    side_b: frozenset[int]

    def is_valid_for(self, G: CubicGraph, S: Iterable[int]) -> bool:
        S = frozenset(S)
        if self.side_a & self.side_b or (self.side_a | self.side_b) != S:
            return False
        for u in S:
            for v in G.adj[u]:
                if v in S and ((u in self.side_a) == (v in self.side_a)):
                    return False
        return True


@dataclass(frozen=True)
class OddCycleWitness:
    """A simple odd cycle, rotated so that its smallest vertex comes first and
    oriented so that the second vertex is smaller than the last one."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def is_valid_for(self, G: CubicGraph) -> bool:
        vs = self.vertices
        return (
            len(vs) >= 3
            and len(vs) % 2 == 1
            and len(set(vs)) == len(vs)
            and all(G.has_edge(u, v) for u, v in self.edges())
        )


def canonical_cycle(seq: Iterable[int]) -> tuple[int, ...]:
    seq = list(seq)
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


# ---------------------------------------------------------------------------
# graph6


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    raise ValueError(f"n={n} too large for graph6")


def to_graph6(G: CubicGraph) -> str:
    """Encode ``G`` under its current labelling (no canonical relabelling)."""
    bits = []
    for j in range(1, G.n):
        row = G.masks[j]
        for i in range(j):
            bits.append((row >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_size(G.n) + body


def parse_graph6(text: str | bytes) -> CubicGraph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise MalformedGraph6("non-ASCII byte in graph6 line") from exc
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise MalformedGraph6("empty graph6 line")
    codes = [ord(c) - 63 for c in text]
    if any(not 0 <= c <= 63 for c in codes):
        raise MalformedGraph6("byte outside the printable graph6 range")
    if codes[0] == 63:
        if len(codes) >= 2 and codes[1] == 63:
            raise MalformedGraph6("8-byte size header is not supported")
        if len(codes) < 4:
            raise MalformedGraph6("truncated size header")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        if n < 63:
            raise MalformedGraph6("non-minimal size header")
        data = codes[4:]
    else:
        n = codes[0]
        data = codes[1:]
    nbits = n * (n - 1) // 2
    if len(data) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(data)}")
    bitstring = 0
    for c in data:
        bitstring = (bitstring << 6) | c
    pad = 6 * len(data) - nbits
    if bitstring & ((1 << pad) - 1):
        raise MalformedGraph6("non-zero padding bits")
    bitstring >>= pad
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bitstring >> k) & 1:
                edges.append((i, j))
            k -= 1
    if n == 0:
        raise NotCubic("empty graph")
    deg = [0] * n
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    bad = [v for v in range(n) if deg[v] != 3]
    if bad:
        raise NotCubic(f"vertex {bad[0]} has degree {deg[bad[0]]}")
    return CubicGraph.from_edges(n, edges)


def read_graph6_lines(lines: Iterable[str | bytes]) -> list[CubicGraph]:
    out = []
    for line in lines:
        if isinstance(line, bytes):
            line = line.decode("ascii", errors="replace")
        if line.strip():
            out.append(parse_graph6(line))
    return out


# ---------------------------------------------------------------------------
# induced-subgraph predicates


def components(G: CubicGraph, S: Iterable[int]) -> list[tuple[int, ...]]:
    """Connected components of G[S], each sorted, ordered by smallest vertex."""
    S = frozenset(S)
    seen: set[int] = set()
    comps = []
    for s in sorted(S):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in G.adj[v]:
                if u in S and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(G: CubicGraph) -> bool:
    return len(components(G, range(G.n))) == 1


def _two_color(G: CubicGraph, S: frozenset[int]) -> dict[int, int] | None:
    color: dict[int, int] = {}
    for s in sorted(S):
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in G.adj[v]:
                if u not in S:
                    continue
                if u not in color:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def _bfs_dist(G: CubicGraph, S: frozenset[int], src: int) -> dict[int, int]:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for u in G.adj[v]:
            if u in S and u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def shortest_odd_cycle(G: CubicGraph, S: Iterable[int]) -> OddCycleWitness | None:
    """Shortest odd cycle of G[S]; ties go to the lexicographically smallest
    canonical vertex sequence.  None when G[S] is bipartite."""
    S = frozenset(S)
    best = None
    for s in S:
        dist = _bfs_dist(G, S, s)
        for v, dv in dist.items():
            for u in G.adj[v]:
                if u in dist and dist[u] == dv and (best is None or 2 * dv + 1 < best):
                    best = 2 * dv + 1
    if best is None:
        return None
    for s in sorted(S):
        allowed = frozenset(v for v in S if v >= s)
        dist = _bfs_dist(G, allowed, s)
        path = [s]
        on_path = {s}

        def dfs(v: int) -> bool:
            remaining = best - len(path)
            if remaining == 0:
                return s in G.adj[v]
            for u in G.adj[v]:
                if u in allowed and u not in on_path and dist.get(u, best) <= remaining:
                    path.append(u)
                    on_path.add(u)
                    if dfs(u):
                        return True
                    path.pop()
                    on_path.discard(u)
            return False

        if dfs(s):
            return OddCycleWitness(canonical_cycle(path))
    raise AssertionError("odd closed walk found but no odd cycle")  # pragma: no cover


def bipartition_of(G: CubicGraph, S: Iterable[int]) -> Bipartition | OddCycleWitness:
    S = frozenset(S)
    color = _two_color(G, S)
    if color is None:
        cycle = shortest_odd_cycle(G, S)
        assert cycle is not None
        return cycle
    return Bipartition(
        frozenset(v for v, c in color.items() if c == 0),
        frozenset(v for v, c in color.items() if c == 1),
    )


def is_bipartite(G: CubicGraph, S: Iterable[int]) -> bool:
    return _two_color(G, frozenset(S)) is not None


def odd_cycle_vertices(G: CubicGraph, S: Iterable[int]) -> frozenset[int]:
    """Vertices of G[S] lying on at least one odd cycle.

    In a 2-connected non-bipartite graph every vertex lies on an odd cycle,
    so these are exactly the vertices of the non-bipartite blocks.
    """
    S = frozenset(S)
    H = nx.Graph()
    H.add_edges_from((u, v) for u in S for v in G.adj[u] if v in S and u < v)
    out: set[int] = set()
    for block in nx.biconnected_components(H):
        if len(block) >= 3 and not is_bipartite(G, block):
            out |= block
    return frozenset(out)


def girth(G: CubicGraph) -> int:
    best = G.n + 1
    for s in range(G.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] >= best:
                break
            for u in G.adj[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


class GraphClass(enum.Enum):
    BIPARTITE = "Bipartite"
    K4 = "K4"
    TRIPARTITE = "Tripartite"


def classify(G: CubicGraph) -> GraphClass:
    if not is_connected(G):
        raise Disconnected("graph is not connected")
    if G.n == 4:
        return GraphClass.K4
    if is_bipartite(G, range(G.n)):
        return GraphClass.BIPARTITE
    return GraphClass.TRIPARTITE


def decycling_bounds(G: CubicGraph) -> tuple[Fraction, Fraction]:
    """Girth-based upper bounds on the decycling number:
    ``(g+1)/(4g-2) n + (g-1)/(2g-1)`` and ``g/(4(g-1)) n + (g-3)/(2g-2)``."""
    g = girth(G)
    n = G.n
    speck = Fraction(g + 1, 4 * g - 2) * n + Fraction(g - 1, 2 * g - 1)
    liu_zhao = Fraction(g, 4 * (g - 1)) * n + Fraction(g - 3, 2 * g - 2)
    return speck, liu_zhao
