"""Immutable simple graphs and digraphs on 1-based vertices, plus edge-list I/O."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Raised when a graph cannot be constructed from the given data."""


class ParseError(GraphError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..n``.

    ``adj[i]`` holds the neighbours of vertex ``i + 1``.  Instances are
    immutable; equality compares vertex count and adjacency exactly, so two
    graphs are equal only under identical labeling.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        masks = []
        for nbrs in self.adj:
            mask = 0
            for u in nbrs:
                mask |= 1 << (u - 1)
            masks.append(mask)
        object.__setattr__(self, "_masks", tuple(masks))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v - 1]

    def degree(self, v: int) -> int:
        return len(self.adj[v - 1])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u - 1]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in self.vertices for v in sorted(self.adj[u - 1]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks; bit ``v - 1`` stands for vertex ``v``."""
        return self._masks

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Digraph:
    """Simple directed graph on vertices ``1..n``; parallel arcs collapse."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def in_degree(self, v: int) -> int:
        return sum(1 for _, h in self.arcs if h == v)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u - 1].add(v)
        adj[v - 1].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


def build_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    arc_set = set()
    for t, h in arcs:
        if not (1 <= t <= n and 1 <= h <= n):
            raise GraphError(f"arc ({t}, {h}) has an endpoint outside 1..{n}")
        if t == h:
            raise GraphError(f"self-arc at vertex {t}")
        arc_set.add((t, h))
    return Digraph(n, frozenset(arc_set))


def underlying(d: Digraph) -> Graph:
    return build_graph(d.n, d.arcs)


def induced(g: Graph, subset: Iterable[int]) -> Graph:
    """Subgraph induced by ``subset``, relabeled ``1..|S|`` in ascending order."""
    keep = sorted(set(subset))
    if not keep:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    if keep[0] < 1 or keep[-1] > g.n:
        raise GraphError(f"vertex set {keep} not contained in 1..{g.n}")
    relabel = {v: i for i, v in enumerate(keep, start=1)}
    edges = [
        (relabel[u], relabel[v])
        for u in keep
        for v in g.neighbors(u)
        if v in relabel and u < v
    ]
    return build_graph(len(keep), edges)


def degree_profile(g: Graph) -> list[int]:
    return [len(a) for a in g.adj]


def is_complete(g: Graph) -> bool:
    return all(len(a) == g.n - 1 for a in g.adj)


def is_connected(g: Graph) -> bool:
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def is_path_graph(g: Graph) -> bool:
    """True when ``g`` is isomorphic to ``P_n`` (``K_1`` counts as ``P_1``)."""
    return g.m == g.n - 1 and max(degree_profile(g)) <= 2 and is_connected(g)


def bridges(g: Graph) -> list[tuple[int, int]]:
    """Edges whose removal disconnects their component."""
    found = []
    for u, v in g.edges():
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if (x, y) in ((u, v), (v, u)) or y in seen:
                    continue
                seen.add(y)
                stack.append(y)
        if v not in seen:
            found.append((u, v))
    return found


def relabel(g: Graph, mapping: dict[int, int]) -> Graph:
    """Apply the vertex bijection ``mapping`` (old label -> new label)."""
    if sorted(mapping) != list(g.vertices) or sorted(mapping.values()) != list(g.vertices):
        raise GraphError("relabeling must be a permutation of the vertex set")
    return build_graph(g.n, [(mapping[u], mapping[v]) for u, v in g.edges()])


def emit_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def emit_arclist(d: Digraph) -> str:
    lines = [f"{d.n} {len(d.arcs)}"]
    lines.extend(f"{t} {h}" for t, h in d.sorted_arcs())
    return "\n".join(lines) + "\n"


def _ints(line_no: int, line: str, count: int) -> list[int]:
    tokens = line.split()
    if len(tokens) != count:
        raise ParseError(line_no, f"expected {count} integers, got {line!r}")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(line_no, f"bad token in {line!r}") from None


def parse_edgelist(text: str) -> Graph:
    """Parse the ``n m`` header plus ``u v`` lines (``u < v``) format."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError(1, "missing header")
    n, m = _ints(1, lines[0], 2)
    if n < 1 or m < 0:
        raise ParseError(1, f"invalid header {lines[0]!r}")
    if len(lines) - 1 != m:
        raise ParseError(len(lines) + 1 if len(lines) - 1 < m else m + 2,
                         f"header announces {m} edges, found {len(lines) - 1}")
    seen: set[tuple[int, int]] = set()
    for line_no, line in enumerate(lines[1:], start=2):
        u, v = _ints(line_no, line, 2)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(line_no, f"endpoint out of range 1..{n}")
        if u >= v:
            raise ParseError(line_no, f"edge must satisfy u < v, got {u} {v}")
        if (u, v) in seen:
            raise ParseError(line_no, f"duplicate edge {u} {v}")
        seen.add((u, v))
    return build_graph(n, seen)
