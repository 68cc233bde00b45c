"""Bipartization of a cubic graph by growing or reshaping an independent set.

One round takes an odd cycle ``C`` of ``G - I``.  If some vertex of ``C`` has
all three neighbours outside ``I`` it simply joins ``I``.  Otherwise a
shortest path ``P = v0 v1 ... vk`` runs from ``C`` to a free or pseudo-free
vertex ``vk``, and membership is exchanged along the alternating stretches of
``P``: even positions enter the set, odd positions leave.  Where two
consecutive path vertices are both outside the set, the exchange stops just
before them and the edge between them is examined for a new odd cycle; such a
cycle is either cut at a vertex of residual degree 3 or followed to the point
where it leaves ``P``, from which the exchange continues.

Path positions are 0-based throughout this module.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .coloring import TriColoring, semi_equitable, transfer
from .core import (
    CubicGraph,
    GraphClass,
    OddCycleWitness,
    canonical_cycle,
    classify,
    is_bipartite,
    odd_cycle_vertices,
)
from .errors import (
    BadStart,
    BalanceFailed,
    BalanceInfeasible,
    BudgetExceeded,
    CertificateFailed,
    IterationCapExceeded,
    KOutOfRange,
    NoFreeVertex,
    NotAlternating,
    NotTripartite,
    ResultNotIndependent,
    StepFailed,
    ThresholdNotMet,
)
from .indset import DEFAULT_NODE_BUDGET, check_independent, greedy_mis, is_independent, max_is, shrink_to
from .residuum import FreeClassification, complement, free_sets, residuum

log = logging.getLogger(__name__)

DEG3_ABSORB = "Deg3Absorb"
CASE_1_1 = "1.1"
CASE_1_2 = "1.2"
CASE_2_1 = "2.1"
CASE_2_2 = "2.2"


def meets_threshold(n: int, size: int) -> bool:
    return 10 * size >= 4 * n


@dataclass(frozen=True)
class PathP:
    vertices: tuple[int, ...]
    in_set: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def last(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class IterationRecord:
    cycle: OddCycleWitness
    cases: tuple[str, ...]
    path: tuple[int, ...]
    set_before: frozenset[int]
    set_after: frozenset[int]

    @property
    def case(self) -> str:
        return self.cases[-1]


@dataclass
class SolveTrace:
    iterations: list[IterationRecord] = field(default_factory=list)
    final: frozenset[int] = frozenset()

    @property
    def count(self) -> int:
        return len(self.iterations)

    def cases_taken(self) -> list[str]:
        return [c for it in self.iterations for c in it.cases]


# ---------------------------------------------------------------------------
# path selection


def find_path(G: CubicGraph, I: Iterable[int], C: OddCycleWitness, F: FreeClassification) -> PathP:
    """Shortest path from ``C`` to a free or pseudo-free vertex whose interior
    avoids such vertices.  Ties: smallest end vertex, then the
    lexicographically smallest vertex sequence."""
    I = frozenset(I)
    targets = F.members
    sources = frozenset(C)
    if not targets:
        raise NoFreeVertex(f"no free or pseudo-free vertex for |I|={len(I)}")
    dist = {s: 0 for s in sources}
    queue = deque(sorted(sources))
    while queue:
        v = queue.popleft()
        if v in targets:
            continue
        for u in G.adj[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    reached = [t for t in targets if t in dist]
    if not reached:
        raise NoFreeVertex("no free or pseudo-free vertex reachable from the cycle")
    d = min(dist[t] for t in reached)
    end = min(t for t in reached if dist[t] == d)

    back = {end: 0}
    queue = deque([end])
    while queue:
        v = queue.popleft()
        for u in G.adj[v]:
            if u not in back and u not in targets:
                back[u] = back[v] + 1
                queue.append(u)
    v = min(s for s in sources if back.get(s) == d)
    path = [v]
    while v != end:
        v = min(u for u in G.adj[v] if back.get(u) == back[v] - 1)
        path.append(v)
    return PathP(tuple(path), tuple(x in I for x in path))


# ---------------------------------------------------------------------------
# the three procedures


def alternating_path(G: CubicGraph, P: PathP, start: int, S: Iterable[int]) -> int:
    """End of the alternating stretch of ``P`` starting at ``start``.

    Returns the first vertex (at an even offset past ``start``) outside ``S``
    whose three neighbours are all in ``S``; failing that, the last vertex
    before two consecutive non-members; failing that, the last position.
    """
    S = frozenset(S)
    vs = P.vertices
    if vs[start] in S:
        raise BadStart(f"path vertex {vs[start]} at position {start} is in the set")
    i = start
    while True:
        i += 1
        if vs[i] not in S:
            return i - 1
        if i == P.last:
            return i
        i += 1
        if all(u in S for u in G.adj[vs[i]]):
            return i


def new_independent_set(
    G: CubicGraph,
    P: PathP,
    start: int,
    out: int,
    S: Iterable[int],
    F: FreeClassification,
    use_b: bool = False,
) -> frozenset[int]:
    """Exchange membership along ``P[start:out]``, or along ``P[start:]`` when
    ``out`` is the last position.  Ending on a pseudo-free vertex also swaps
    its diamond partner out and one of the diamond's other two vertices in."""
    S = frozenset(S)
    vs = P.vertices
    stop = out + 1 if out == P.last else out
    add, remove = set(), set()
    for pos in range(start, stop):
        v = vs[pos]
        if (pos - start) % 2 == 0:
            if v in S:
                raise NotAlternating(f"position {pos} should be outside the set")
            add.add(v)
        else:
            if v not in S:
                raise NotAlternating(f"position {pos} should be in the set")
            remove.add(v)
    if out == P.last:
        diamond = F.diamond_of(vs[-1])
        if diamond is not None:
            remove.add(diamond.partner(vs[-1]))
            add.add(diamond.b if use_b else diamond.a)
    J = (S - remove) | add
    if not is_independent(G, J):
        raise ResultNotIndependent(f"exchange along {vs[start:stop]} broke independence")
    return frozenset(J)


def odd_cycle_through_edge(G: CubicGraph, S: Iterable[int], x: int, y: int) -> OddCycleWitness | None:
    """Shortest odd cycle of G[S] using edge ``xy`` (lexicographic ties)."""
    S = frozenset(S)
    if x not in odd_cycle_vertices(G, S) or y not in odd_cycle_vertices(G, S):
        return None
    best: list[int] | None = None
    for length in range(2, len(S), 2):
        path = [y]
        on_path = {y}

        def dfs(v: int) -> bool:
            if len(path) == length:
                return x in G.adj[v]
            for u in G.adj[v]:
                if u in S and u not in on_path and u != x:
                    path.append(u)
                    on_path.add(u)
                    if dfs(u):
                        return True
                    path.pop()
                    on_path.discard(u)
            return False

        if dfs(y):
            best = [x] + path
            break
    if best is None:
        return None
    return OddCycleWitness(canonical_cycle(best))


@dataclass(frozen=True)
class NonAlternatingOutcome:
    case: str
    out: int
    J: frozenset[int]
    cycle: OddCycleWitness | None


def non_alternating_path(G: CubicGraph, P: PathP, j: int, S: Iterable[int]) -> NonAlternatingOutcome:
    """Deal with the break between ``P[j-1]`` and ``P[j]``, both outside ``S``.

    Any odd cycle through that edge must follow the forced chain of residual
    degree-2 vertices starting at ``P[j]``.  If the chain meets a vertex of
    residual degree 3, that vertex joins the set and cuts every such cycle.
    Otherwise the chain is the cycle itself; it runs along ``P`` up to the
    position returned as ``out`` and the exchange resumes there.
    """
    S = frozenset(S)
    vs = P.vertices
    x, y = vs[j - 1], vs[j]
    if x in S or y in S or not G.has_edge(x, y):
        raise NotAlternating(f"no non-member edge at positions {j - 1},{j}")
    rest = complement(G, S)
    cycle = odd_cycle_through_edge(G, rest, x, y)
    if cycle is None:
        return NonAlternatingOutcome(CASE_2_1, j, S, None)

    def rdeg(v: int) -> int:
        return sum(u in rest for u in G.adj[v])

    prev, cur = x, y
    while cur != x:
        if rdeg(cur) == 3:
            return NonAlternatingOutcome(CASE_2_2, P.last, S | {cur}, cycle)
        (nxt,) = [u for u in G.adj[cur] if u in rest and u != prev]
        prev, cur = cur, nxt
    t = j
    while vs[t + 1] not in S:
        t += 1
    return NonAlternatingOutcome(CASE_2_2, t, S, cycle)


# ---------------------------------------------------------------------------
# one round and the outer loop


def shrink_certificate(G: CubicGraph, I: frozenset[int], J: frozenset[int]) -> bool:
    """True iff the odd cycles of ``G - J`` form a proper subset of those of
    ``G - I``, decided through block structure rather than enumeration."""
    if not is_independent(G, J) or len(J) < len(I):
        return False
    left = I - J
    if left and left & odd_cycle_vertices(G, complement(G, J)):
        return False
    joined = J - I
    return bool(joined & odd_cycle_vertices(G, complement(G, I)))


def _run_exchange(G, I, P, F, use_b):
    S = I
    start = 0
    cases = []
    for _ in range(len(P) + 1):
        out = alternating_path(G, P, start, S)
        if out == P.last:
            cases.append(CASE_1_1)
            return new_independent_set(G, P, start, out, S, F, use_b), cases
        if P.vertices[out + 1] in S:
            cases.append(CASE_1_2)
            return new_independent_set(G, P, start, out, S, F), cases
        if out == start:
            raise NotAlternating(f"path breaks immediately at position {start}")
        S = new_independent_set(G, P, start, out, S, F)
        step = non_alternating_path(G, P, out, S)
        cases.append(step.case)
        if step.case == CASE_2_1 or step.J != S:
            return step.J, cases
        start = step.out
    raise IterationCapExceeded(f"exchange along a path of {len(P)} vertices did not finish")


def break_cycle(
    G: CubicGraph, I: Iterable[int], C: OddCycleWitness, require_threshold: bool = True
) -> tuple[frozenset[int], IterationRecord]:
    """One round: an independent ``J`` with ``|J| >= |I|`` whose odd cycles
    are a proper subset of those of ``G - I``.

    ``require_threshold=False`` lifts the ``10|I| >= 4n`` guard; below it a
    free or pseudo-free vertex may not exist and NoFreeVertex is likely.
    """
    I = check_independent(G, I)
    if require_threshold and not meets_threshold(G.n, len(I)):
        raise ThresholdNotMet(f"|I|={len(I)} is below 4n/10 for n={G.n}")
    for v in C.vertices:
        if all(u not in I for u in G.adj[v]):
            J = I | {v}
            return J, IterationRecord(C, (DEG3_ABSORB,), (), I, J)
    F = free_sets(G, I)
    P = find_path(G, I, C, F)
    diamond = F.diamond_of(P.vertices[-1])
    for use_b in (False, True) if diamond else (False,):
        J, cases = _run_exchange(G, I, P, F, use_b)
        if shrink_certificate(G, I, J):
            return J, IterationRecord(C, tuple(cases), P.vertices, I, J)
        log.warning("exchange along %s (use_b=%s) did not shrink the residuum", P.vertices, use_b)
    raise CertificateFailed(f"no exchange along {P.vertices} shrinks the residuum")


def bipartize(
    G: CubicGraph, I: Iterable[int], max_rounds: int | None = None, require_threshold: bool = True
) -> tuple[frozenset[int], SolveTrace]:
    I = check_independent(G, I)
    if require_threshold and not meets_threshold(G.n, len(I)):
        raise ThresholdNotMet(f"|I|={len(I)} is below 4n/10 for n={G.n}")
    cap = G.n * G.n if max_rounds is None else max_rounds
    trace = SolveTrace()
    J = I
    for _ in range(cap):
        C = residuum(G, J).shortest_cycle()
        if C is None:
            trace.final = J
            return J, trace
        J_next, record = break_cycle(G, J, C, require_threshold)
        trace.iterations.append(record)
        J = J_next
    if residuum(G, J).is_empty:
        trace.final = J
        return J, trace
    raise IterationCapExceeded(f"residuum still non-empty after {cap} rounds")


# ---------------------------------------------------------------------------
# solving for a prescribed size


@dataclass
class SolveResult:
    n: int
    k: int
    independent_set: frozenset[int]
    coloring: TriColoring
    alpha: int
    alpha_exact: bool
    route: str
    trace: SolveTrace
    verified: bool = False

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "alpha": self.alpha,
            "alpha_exact": self.alpha_exact,
            "k": self.k,
            "set": sorted(self.independent_set),
            "coloring": list(self.coloring.assignment),
            "coloring_sizes": list(self.coloring.sizes),
            "route": self.route,
            "iterations": self.trace.count,
            "cases_taken": self.trace.cases_taken(),
            "verified": self.verified,
        }


def threshold_size(n: int) -> int:
    """Smallest size s with 10 s >= 4 n."""
    return -(-4 * n // 10)


def _ceil_third(n: int) -> int:
    return -(-n // 3)


def _top_class(G: CubicGraph, witness: frozenset[int], m: int) -> tuple[TriColoring, SolveTrace]:
    """Proper 3-colouring with class 0 of size ``m`` and classes 1, 2 sized
    ceil and floor of (n - m)/2."""
    start = shrink_to(witness, max(m, threshold_size(G.n)))
    J, trace = bipartize(G, start)
    col = semi_equitable(G, J)
    while col.sizes[0] > m:
        s = col.sizes
        col = transfer(G, col, 0, 2 if s[1] > s[2] else 1)
    return col, trace


def _rebalance_around(G: CubicGraph, top: TriColoring, c: int) -> TriColoring:
    """Even out the two classes other than ``c`` by transfers that leave the
    size of class ``c`` alone, then list class ``c`` first."""
    col = top
    other = 3 - c
    try:
        while abs(col.sizes[0] - col.sizes[other]) > 1:
            src, dst = (0, other) if col.sizes[0] > col.sizes[other] else (other, 0)
            col = transfer(G, col, src, dst)
    except StepFailed as exc:
        log.warning("could not balance around class %d: %s", c, exc)
    rest = sorted((col.cls(0), col.cls(other)), key=len, reverse=True)
    return TriColoring.from_classes(G.n, (col.cls(c), rest[0], rest[1]))


def verify_solution(G: CubicGraph, I: Iterable[int], k: int) -> bool:
    I = frozenset(I)
    return len(I) == k and is_independent(G, I) and is_bipartite(G, complement(G, I))


def solve(G: CubicGraph, k: int, node_budget: int = DEFAULT_NODE_BUDGET, seed: int = 0) -> SolveResult:
    if classify(G) is not GraphClass.TRIPARTITE:
        raise NotTripartite(f"graph is {classify(G).value}, not a connected tripartite cubic graph")
    try:
        witness = max_is(G, node_budget)
        exact = True
    except BudgetExceeded:
        log.info("max_is budget exhausted; falling back to greedy")
        witness = greedy_mis(G, seed)
        exact = False
    n, alpha = G.n, len(witness)
    if not meets_threshold(n, alpha):
        raise ThresholdNotMet(f"independence number {alpha} is below 4n/10 for n={n}")
    if not (n - alpha) // 2 <= k <= alpha:
        raise KOutOfRange(f"k={k} outside [{(n - alpha) // 2}, {alpha}]")

    if k >= _ceil_third(n):
        col, trace = _top_class(G, witness, k)
        I_k = col.cls(0)
        route = "direct" if k >= threshold_size(n) else "reduce"
    else:
        for m in (n - 2 * k, n - 2 * k - 1):
            if not _ceil_third(n) <= m <= alpha:
                continue
            try:
                top, trace = _top_class(G, witness, m)
            except (StepFailed, BalanceInfeasible) as exc:
                log.warning("top class of size %d failed: %s", m, exc)
                continue
            c = 1 if top.sizes[1] == k else 2
            try:
                col = semi_equitable(G, top.cls(c))
            except BalanceInfeasible:
                col = _rebalance_around(G, top, c)
            I_k = col.cls(0)
            route = "split"
            break
        else:
            log.warning("BalanceFailed for n=%d k=%d", n, k)
            raise BalanceFailed(f"could not produce a class of size exactly {k}")

    result = SolveResult(n, k, I_k, col, alpha, exact, route, trace)
    result.verified = (
        verify_solution(G, I_k, k) and col.is_proper(G) and col.cls(0) == I_k
    )
    if not result.verified:
        raise ResultNotIndependent(f"solution for k={k} failed verification")
    return result
