"""Named graph families and a bit-reproducible random family.

Vertex labelings are fixed per family so generated corpora are deterministic:
stars and wheels put the hub at vertex 0, multipartite parts are consecutive
blocks, cycles and paths run 0, 1, ..., n-1. The random family draws one
64-bit word per vertex pair from a splitmix64 stream, so identical seeds give
identical graphs on any platform.
"""

from __future__ import annotations

from .graphs import Graph, iter_vertex_pairs

_MASK64 = (1 << 64) - 1


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("empty graph needs n >= 1")
    return Graph(n)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, iter_vertex_pairs(n))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star on n vertices, hub at 0: the complete bipartite graph K_{1,n-1}."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    return Graph(n, ((0, i) for i in range(1, n)))


def wheel(n: int) -> Graph:
    """Wheel on n vertices: hub 0 joined to a cycle on 1..n-1."""
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    rim = [(i, i + 1) for i in range(1, n - 1)]
    rim.append((1, n - 1))
    spokes = [(0, i) for i in range(1, n)]
    return Graph(n, rim + spokes)


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise ValueError("complete bipartite needs s, t >= 1")
    return Graph(s + t, ((i, s + j) for i in range(s) for j in range(t)))


def complete_multipartite(*sizes: int) -> Graph:
    """Complete multipartite graph; part i occupies a consecutive vertex block."""
    if not sizes:
        raise ValueError("complete multipartite needs at least one part")
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be >= 1")
    n = sum(sizes)
    starts = []
    offset = 0
    for s in sizes:
        starts.append(offset)
        offset += s
    part_of = []
    for idx, s in enumerate(sizes):
        part_of.extend([idx] * s)
    edges = [(i, j) for i, j in iter_vertex_pairs(n) if part_of[i] != part_of[j]]
    return Graph(n, edges)


def k13plus() -> Graph:
    """The 4-vertex, 4-edge graph: a triangle 0,1,2 with a pendant 3 on 0."""
    return Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def double_star(s: int, t: int) -> Graph:
    """Two adjacent centers 0 and 1 carrying s and t leaves respectively."""
    if s < 0 or t < 0:
        raise ValueError("leaf counts must be >= 0")
    edges = [(0, 1)]
    edges.extend((0, 2 + i) for i in range(s))
    edges.extend((1, 2 + s + i) for i in range(t))
    return Graph(2 + s + t, edges)


def circulant(n: int, offsets: tuple[int, ...] | list[int]) -> Graph:
    """Circulant graph: i adjacent to i +- s (mod n) for each offset s."""
    if n < 1:
        raise ValueError("circulant needs n >= 1")
    offs = sorted(set(int(s) for s in offsets))
    if any(not 1 <= s <= n // 2 for s in offs):
        raise ValueError(f"offsets must lie in [1, {n // 2}]")
    edges = set()
    for s in offs:
        for i in range(n):
            j = (i + s) % n
            edges.add((min(i, j), max(i, j)))
    return Graph(n, edges)


class SplitMix64:
    """splitmix64 pseudo-random stream of 64-bit words."""

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next_word(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return (z ^ (z >> 31)) & _MASK64


def _edge_threshold(p: float) -> int:
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    # p times 2^64 is exact in binary floating point (power-of-two scaling).
    return int(p * 2.0**64)


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) drawn from a splitmix64 stream seeded with `seed`.

    One word is drawn per vertex pair in lexicographic order; the edge is
    present iff the word is below p * 2^64.
    """
    if n < 1:
        raise ValueError("random graph needs n >= 1")
    stream = SplitMix64(seed)
    return _erdos_renyi_from_stream(n, p, stream)


def _erdos_renyi_from_stream(n: int, p: float, stream: SplitMix64) -> Graph:
    threshold = _edge_threshold(p)
    edges = [e for e in iter_vertex_pairs(n) if stream.next_word() < threshold]
    return Graph(n, edges)


def erdos_renyi_batch(n: int, p: float, count: int, seed: int) -> list[Graph]:
    """`count` independent G(n, p) samples from one sequential stream."""
    if count < 0:
        raise ValueError("count must be >= 0")
    stream = SplitMix64(seed)
    return [_erdos_renyi_from_stream(n, p, stream) for _ in range(count)]


_FIXED_ARITY = {
    "star": (star, 1),
    "wheel": (wheel, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "empty": (empty_graph, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "double_star": (double_star, 2),
    "k13plus": (k13plus, 0),
}


def generate(family: str, *params) -> Graph:
    """Build a named family member; raises ValueError for unknown families."""
    if family in _FIXED_ARITY:
        func, arity = _FIXED_ARITY[family]
        if len(params) != arity:
            raise ValueError(f"{family} takes {arity} parameter(s), got {len(params)}")
        return func(*(int(p) for p in params))
    if family == "complete_multipartite":
        if not params:
            raise ValueError("complete_multipartite needs part sizes")
        return complete_multipartite(*(int(p) for p in params))
    if family == "circulant":
        if len(params) < 2:
            raise ValueError("circulant needs n and at least one offset")
        return circulant(int(params[0]), [int(p) for p in params[1:]])
    if family == "random":
        if len(params) != 3:
            raise ValueError("random takes n, p, seed")
        return erdos_renyi(int(params[0]), float(params[1]), int(params[2]))
    raise ValueError(f"unknown family {family!r}")


FAMILY_NAMES = tuple(sorted(list(_FIXED_ARITY) + ["complete_multipartite", "circulant", "random"]))
