"""Random connected tripartite cubic graphs and a small gallery of fixtures.

Randomness comes from SplitMix64 so that a corpus is reproducible from
``(n, seed)`` alone, independent of the Python version:

    state <- state + 0x9E3779B97F4A7C15            (mod 2**64)
    z <- state
    z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9      (mod 2**64)
    z <- (z ^ (z >> 27)) * 0x94D049BB133111EB      (mod 2**64)
    output z ^ (z >> 31)

Bounded draws use rejection sampling on the raw 64-bit output and shuffles
are the descending Fisher-Yates variant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CubicGraph, GraphClass, classify
from .errors import Disconnected, GenerationExhausted, NotSimple, UnknownName

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Uniform integer in ``[0, m)``."""
        if m <= 0:
            raise ValueError("m must be positive")
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % m

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class GenSpec:
    n: int
    seed: int
    max_attempts: int = 1000

    def __post_init__(self):
        if self.n < 4 or self.n % 2:
            raise ValueError(f"n must be even and at least 4, got {self.n}")
        if self.max_attempts <= 0:
            raise ValueError("max_attempts must be positive")


def pairing_graph(n: int, rng: SplitMix64) -> CubicGraph | None:
    """One draw of the pairing model; None if it produced a loop or a
    parallel edge."""
    stubs = [v for v in range(n) for _ in range(3)]
    rng.shuffle(stubs)
    try:
        return CubicGraph.from_edges(n, zip(stubs[::2], stubs[1::2]))
    except NotSimple:
        return None


def random_cubic(spec: GenSpec) -> CubicGraph:
    rng = SplitMix64(spec.seed)
    for _ in range(spec.max_attempts):
        G = pairing_graph(spec.n, rng)
        if G is None:
            continue
        try:
            if classify(G) is GraphClass.TRIPARTITE:
                return G
        except Disconnected:
            continue
    raise GenerationExhausted(
        f"no connected tripartite cubic graph on n={spec.n} after {spec.max_attempts} attempts"
    )


def _petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return CubicGraph.from_edges(10, outer + spokes + inner)


def _moebius_kantor():
    # generalized Petersen graph GP(8, 3)
    outer = [(i, (i + 1) % 8) for i in range(8)]
    spokes = [(i, i + 8) for i in range(8)]
    inner = [(8 + i, 8 + (i + 3) % 8) for i in range(8)]
    return CubicGraph.from_edges(16, outer + spokes + inner)


def _twin_diamond():
    # u1 w1 a1 b1 = 0 1 2 3, u2 w2 a2 b2 = 4 5 6 7
    edges = []
    for u, w, a, b in ((0, 1, 2, 3), (4, 5, 6, 7)):
        edges += [(u, a), (u, b), (w, a), (w, b), (a, b)]
    edges += [(0, 4), (1, 5)]
    return CubicGraph.from_edges(8, edges)


NAMED = {
    "petersen": _petersen,
    "k4": lambda: CubicGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    "k33": lambda: CubicGraph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)]),
    # a1 a2 a3 = 0 1 2, b1 b2 b3 = 3 4 5
    "prism": lambda: CubicGraph.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    ),
    "moebius_kantor": _moebius_kantor,
    "twin_diamond": _twin_diamond,
}


def named(name: str) -> CubicGraph:
    try:
        return NAMED[name]()
    except KeyError:
        raise UnknownName(f"unknown graph {name!r}; choose from {', '.join(NAMED)}") from None
