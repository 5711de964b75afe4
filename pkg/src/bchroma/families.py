"""Constructors for the graph families used by the verification suite.

Labeling conventions (fixed, so hand-traced values are reproducible):

* ``path``/``cycle``: ``1..n`` in order around the path or cycle.
* ``complete_bipartite(a, b)``: part A is ``1..a``, part B is ``a+1..a+b``.
* ``star(n)``: ``K_{1,n}``, centre is vertex 1.
* ``wheel(n)``: hub 1, rim cycle ``2..n+1`` (the wheel ``W_{n+1}``).
* ``sunlet(n)``: cycle ``1..n``, pendant ``n+i`` hangs off ``i``.
* ``sun(n)``: core clique ``1..n``, outer vertices ``n+1..2n``.
* ``helm(n)``: hub 1, rim ``2..n+1``, pendant ``n+1+i`` hangs off rim vertex ``1+i``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from bchroma.graph import (
    Digraph,
    Graph,
    GraphError,
    build_digraph,
    build_graph,
    degree_profile,
    induced,
    underlying,
)

SET_GRAPH_MAX_N = 5
EDGE_SET_MAX_EDGES = 5


@dataclass(frozen=True)
class JacoParams:
    n: int
    m: int = 1
    c: int = 0

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1 or self.c < 0:
            raise GraphError(f"invalid Jaco parameters n={self.n}, m={self.m}, c={self.c}")

    def f(self, x: int) -> int:
        return self.m * x + self.c


@dataclass(frozen=True)
class JacoStructure:
    jaconian_set: frozenset[int]
    prime: int
    # None when the prime Jaconian vertex is v_n (no higher-indexed vertices)
    hope: Graph | None


# -- classic families --------------------------------------------------------

def path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    return build_graph(n, combinations(range(1, n + 1), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    _require(a >= 1 and b >= 1, "complete bipartite graph needs both parts >= 1")
    return build_graph(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def star(n: int) -> Graph:
    return complete_bipartite(1, n)


def edgeless(n: int) -> Graph:
    _require(n >= 1, "edgeless graph needs n >= 1")
    return build_graph(n, [])


def wheel(n: int) -> Graph:
    _require(n >= 3, "wheel needs a rim of n >= 3")
    rim = [(1 + i, 1 + i % n + 1) for i in range(1, n + 1)]
    spokes = [(1, 1 + i) for i in range(1, n + 1)]
    return build_graph(n + 1, rim + spokes)


def sunlet(n: int) -> Graph:
    _require(n >= 3, "sunlet needs n >= 3")
    edges = [(i, i % n + 1) for i in range(1, n + 1)]
    edges += [(i, n + i) for i in range(1, n + 1)]
    return build_graph(2 * n, edges)


def sun(n: int) -> Graph:
    """Sun graph ``S_{2n}`` with edge set exactly as listed for ``d_1..d_{2n}``."""
    _require(n >= 2, "sun needs n >= 2")
    edges = list(combinations(range(1, n + 1), 2))
    edges += [(i, i + n) for i in range(1, n + 1)]
    edges += [(i + n, i + 1 + n) for i in range(1, n)]
    edges.append((2 * n, 1))
    return build_graph(2 * n, edges)


def helm(n: int) -> Graph:
    _require(n >= 3, "helm needs a rim of n >= 3")
    w = wheel(n)
    return build_graph(2 * n + 1, w.edges() + [(1 + i, n + 1 + i) for i in range(1, n + 1)])


CLASSIC_KINDS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "edgeless": (edgeless, 1),
    "wheel": (wheel, 1),
    "sunlet": (sunlet, 1),
    "sun": (sun, 1),
    "helm": (helm, 1),
}


def classic(kind: str, *params: int) -> Graph:
    try:
        ctor, arity = CLASSIC_KINDS[kind]
    except KeyError:
        raise GraphError(f"unknown family {kind!r}") from None
    if len(params) != arity:
        raise GraphError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    return ctor(*params)


# -- directed constructions -------------------------------------------------

def jaco(p: JacoParams) -> Digraph:
    """Finite linear Jaco digraph built by an ascending sweep.

    When ``v_i`` is processed its in-degree is already final (all arcs come
    from lower indices), so its reach ``f(i) + i - d^-(v_i)`` is well defined.
    """
    indeg = [0] * (p.n + 1)
    arcs = []
    for i in range(1, p.n + 1):
        reach = min(p.n, p.f(i) + i - indeg[i])
        for j in range(i + 1, reach + 1):
            arcs.append((i, j))
            indeg[j] += 1
    return build_digraph(p.n, arcs)


def jaco_structure(d: Digraph) -> JacoStructure:
    if d.n < 2:
        raise GraphError("Jaconian structure needs n >= 2")
    g = underlying(d)
    degrees = degree_profile(g)
    top = max(degrees)
    jset = frozenset(v for v in g.vertices if degrees[v - 1] == top)
    prime = min(jset)
    hope = induced(g, range(prime + 1, g.n + 1)) if prime < g.n else None
    return JacoStructure(jset, prime, hope)


def ornated(n: int, s: Sequence[int]) -> Digraph:
    """Odd positions of ``s`` reach forward, even positions reach backward."""
    _require(n >= 1, "ornated graph needs n >= 1")
    _require(len(s) >= 1 and all(a >= 0 for a in s), "ordered string must be a nonempty tuple of non-negative integers")
    arcs = []
    for i in range(1, n + 1):
        for pos, a in enumerate(s, start=1):
            if pos % 2:
                arcs.extend((i, j) for j in range(i + 1, min(n, i + a) + 1))
            else:
                arcs.extend((i, j) for j in range(max(1, i - a), i))
    return build_digraph(n, arcs)


def maximal_reach(n: int, s: Sequence[int]) -> Graph:
    _require(len(s) >= 1, "ordered string must be nonempty")
    return underlying(ornated(n, (max(s),)))


def path_power(n: int, r: int) -> Graph:
    """``P_n^r``: vertices at index distance at most ``r`` are adjacent."""
    return build_graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, min(n, i + r) + 1)])


# -- composite constructions ------------------------------------------------

def rasta(terms: Sequence[int]) -> Graph:
    terms = tuple(terms)
    _require(len(terms) >= 2, "Rasta graph needs at least two columns")
    _require(all(a > b for a, b in zip(terms, terms[1:])), f"column sizes {terms} must strictly decrease")
    _require(terms[-1] > 1, "last column must have more than one vertex")
    starts = [1]
    for t in terms:
        starts.append(starts[-1] + t)
    edges = [
        (u, v)
        for col in range(len(terms) - 1)
        for u in range(starts[col], starts[col + 1])
        for v in range(starts[col + 1], starts[col + 2])
    ]
    return build_graph(starts[-1] - 1, edges)


def nonempty_subsets(items: Sequence) -> list[tuple]:
    """All nonempty subsets of ``items`` ordered by size, then lexicographically."""
    return [c for size in range(1, len(items) + 1) for c in combinations(items, size)]


def set_graph(n: int) -> Graph:
    _require(1 <= n <= SET_GRAPH_MAX_N, f"set-graph ground set size must be in 1..{SET_GRAPH_MAX_N}, got {n}")
    subsets = [frozenset(s) for s in nonempty_subsets(range(1, n + 1))]
    edges = [
        (i, j)
        for i, j in combinations(range(1, len(subsets) + 1), 2)
        if subsets[i - 1] & subsets[j - 1]
    ]
    return build_graph(len(subsets), edges)


def edge_set_graph(g: Graph, shared_edge_adjacent: bool = False) -> Graph:
    """Edge-set graph of ``g``.

    Two edge subsets are adjacent when they contain two *distinct* edges of
    ``g`` sharing an endpoint.  With ``shared_edge_adjacent`` a common edge
    also makes them adjacent.
    """
    edges = g.edges()
    _require(1 <= len(edges) <= EDGE_SET_MAX_EDGES,
             f"edge-set graph needs 1..{EDGE_SET_MAX_EDGES} edges, got {len(edges)}")
    eps = len(edges)
    touching = [[False] * eps for _ in range(eps)]
    for a in range(eps):
        for b in range(eps):
            touching[a][b] = a != b and bool(set(edges[a]) & set(edges[b]))
    subsets = nonempty_subsets(range(eps))
    result = []
    for i, j in combinations(range(len(subsets)), 2):
        A, B = subsets[i], subsets[j]
        adjacent = any(touching[a][b] for a in A for b in B)
        if not adjacent and shared_edge_adjacent:
            adjacent = bool(set(A) & set(B))
        if adjacent:
            result.append((i + 1, j + 1))
    return build_graph(len(subsets), result)


def chithra(base: Graph, subsets: Sequence[Iterable[int]], require_cover: bool = True) -> Graph:
    """Add ``u_i`` (labeled ``n + i``) joined to every vertex of ``W_i``."""
    ws = [frozenset(w) for w in subsets]
    _require(len(ws) >= 1, "Chithra construction needs at least one subset")
    for i, w in enumerate(ws, start=1):
        _require(bool(w), f"subset W_{i} is empty")
        _require(all(1 <= v <= base.n for v in w), f"subset W_{i} leaves 1..{base.n}")
    if require_cover:
        covered = frozenset().union(*ws)
        _require(covered == frozenset(base.vertices), "subsets do not cover the base vertex set")
    edges = base.edges()
    edges += [(v, base.n + i) for i, w in enumerate(ws, start=1) for v in w]
    return build_graph(base.n + len(ws), edges)


def edge_joint(g: Graph, v: int, h: Graph, u: int) -> Graph:
    _require(1 <= v <= g.n, f"vertex {v} not in G")
    _require(1 <= u <= h.n, f"vertex {u} not in H")
    edges = g.edges() + [(a + g.n, b + g.n) for a, b in h.edges()] + [(v, u + g.n)]
    return build_graph(g.n + h.n, edges)


@dataclass(frozen=True)
class ChithraDecomposition:
    base: Graph
    subsets: tuple[frozenset[int], ...]
    # order[i - 1] is the label in G of vertex i of chithra(base, subsets)
    order: tuple[int, ...]


def chithra_decomposition(g: Graph, U: Iterable[int]) -> ChithraDecomposition | None:
    """Split ``g`` as a Chithra graph of ``g - U``, or return None."""
    us = sorted(set(U))
    _require(bool(us), "decomposition needs a nonempty U")
    _require(all(1 <= u <= g.n for u in us), f"U leaves 1..{g.n}")
    uset = set(us)
    if any(g.neighbors(u) & uset for u in us):
        return None
    rest = [v for v in g.vertices if v not in uset]
    if not rest:
        return None
    if any(not (g.neighbors(v) & uset) for v in rest):
        return None
    if any(not g.neighbors(u) for u in us):
        return None
    pos = {v: i for i, v in enumerate(rest, start=1)}
    base = induced(g, rest)
    subsets = tuple(frozenset(pos[v] for v in g.neighbors(u)) for u in us)
    return ChithraDecomposition(base, subsets, tuple(rest + us))


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise GraphError(message)
