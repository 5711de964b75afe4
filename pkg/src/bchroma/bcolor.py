"""b-coloring checks, upper bounds and exact b-chromatic number search.

Two definitions are supported:

``standard``
    proper, all ``k`` classes nonempty, every class owns a vertex whose
    neighbourhood meets every other class.
``pairwise``
    proper, all ``k`` classes nonempty, every pair of classes is joined by
    at least one edge (the weaker class-pair reading).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from bchroma.graph import Graph

DEFINITIONS = ("standard", "pairwise")
DEFAULT_BUDGET = 50_000_000
ORACLE_MAX_N = 9


class ColoringError(ValueError):
    pass


class SearchTimeout(Exception):
    """The node budget ran out before the search was decided."""

    def __init__(self, k: int, nodes: int) -> None:
        super().__init__(f"search for k={k} exhausted its budget after {nodes} nodes")
        self.k = k
        self.nodes = nodes


class PhiTimeout(Exception):
    """Some k values could not be decided within the budget."""

    def __init__(self, undecided: list[int], best: PhiResult | None) -> None:
        lo, hi = min(undecided), max(undecided)
        found = best.phi if best is not None else None
        super().__init__(f"undecided k in [{lo}, {hi}]; largest decided feasible k = {found}")
        self.undecided = undecided
        self.best = best


@dataclass(frozen=True)
class Coloring:
    k: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.k < 1:
            raise ColoringError(f"k must be >= 1, got {self.k}")
        bad = [c for c in self.colors if not 1 <= c <= self.k]
        if bad:
            raise ColoringError(f"color {bad[0]} outside 1..{self.k}")

    def color(self, v: int) -> int:
        return self.colors[v - 1]

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {c: [] for c in range(1, self.k + 1)}
        for v, c in enumerate(self.colors, start=1):
            out[c].append(v)
        return out

    def to_dict(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_dict(cls, data: dict) -> Coloring:
        try:
            return cls(int(data["k"]), tuple(int(c) for c in data["colors"]))
        except (KeyError, TypeError) as exc:
            raise ColoringError(f"malformed coloring JSON: {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> Coloring:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class PhiResult:
    phi: int
    witness: Coloring
    # one designated b-vertex per color (empty under the pairwise definition)
    b_vertices: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = self.witness.to_dict()
        d["phi"] = self.phi
        d["b_vertices"] = {str(c): v for c, v in sorted(self.b_vertices.items())}
        return d


@dataclass(frozen=True)
class Spectrum:
    feasible: frozenset[int]
    undecided: frozenset[int] = frozenset()


# -- checkers ----------------------------------------------------------------

def _check_size(g: Graph, c: Coloring) -> None:
    if len(c.colors) != g.n:
        raise ColoringError(f"coloring has {len(c.colors)} entries for a graph on {g.n} vertices")


def first_conflict(g: Graph, c: Coloring) -> tuple[int, int] | None:
    _check_size(g, c)
    for u, v in g.edges():
        if c.color(u) == c.color(v):
            return (u, v)
    return None


def is_proper(g: Graph, c: Coloring) -> bool:
    return first_conflict(g, c) is None


def is_surjective(c: Coloring) -> bool:
    return set(c.colors) == set(range(1, c.k + 1))


def b_vertices(g: Graph, c: Coloring) -> dict[int, frozenset[int]]:
    """For each color, the vertices of that color seeing every other color."""
    if not is_proper(g, c):
        raise ColoringError("coloring is not proper")
    if not is_surjective(c):
        raise ColoringError("coloring leaves a color class empty")
    out: dict[int, set[int]] = {i: set() for i in range(1, c.k + 1)}
    for v in g.vertices:
        own = c.color(v)
        around = {c.color(u) for u in g.neighbors(v)}
        if len(around - {own}) == c.k - 1:
            out[own].add(v)
    return {i: frozenset(s) for i, s in out.items()}


def _classes_pairwise_joined(g: Graph, c: Coloring) -> bool:
    joined = {(min(c.color(u), c.color(v)), max(c.color(u), c.color(v))) for u, v in g.edges()}
    return len(joined) == c.k * (c.k - 1) // 2


def is_b_coloring(g: Graph, c: Coloring, k: int | None = None, definition: str = "standard") -> bool:
    _check_size(g, c)
    if k is not None and k != c.k:
        if any(x > k for x in c.colors):
            return False
        c = Coloring(k, c.colors)
    if not is_proper(g, c) or not is_surjective(c):
        return False
    if definition == "pairwise":
        return _classes_pairwise_joined(g, c)
    if definition != "standard":
        raise ValueError(f"unknown definition {definition!r}")
    return all(b_vertices(g, c).values())


# -- bounds ------------------------------------------------------------------

def m_bound(g: Graph) -> int:
    """Largest k such that at least k vertices have degree >= k - 1."""
    degrees = sorted((g.degree(v) for v in g.vertices), reverse=True)
    best = 1
    for k in range(1, g.n + 1):
        if degrees[k - 1] >= k - 1:
            best = k
    return best


def pairwise_bound(g: Graph) -> int:
    """Largest k <= n with k(k-1)/2 <= |E|: every class pair needs its own edge."""
    k = 1
    while k + 1 <= g.n and (k + 1) * k // 2 <= g.m:
        k += 1
    return k


def upper_bound(g: Graph, definition: str = "standard") -> int:
    return m_bound(g) if definition == "standard" else pairwise_bound(g)


# -- exact search ----------------------------------------------------------

class _Search:
    """Backtracking over color-class partitions with b-feasibility pruning.

    Vertices are picked by a saturation rule that is invariant under color
    renaming, so introducing new colors only as ``used + 1`` loses no
    coloring up to permutation.
    """

    def __init__(self, g: Graph, k: int, budget: int, definition: str) -> None:
        self.n = g.n
        self.k = k
        self.budget = budget
        self.pairwise = definition == "pairwise"
        self.nbrs = [[u - 1 for u in sorted(g.neighbors(v))] for v in g.vertices]
        self.deg = [len(a) for a in self.nbrs]
        self.full = (1 << (k + 1)) - 2
        self.color = [0] * self.n
        self.count = [[0] * (k + 1) for _ in range(self.n)]
        self.seen = [0] * self.n
        self.unc = list(self.deg)
        self.free_edges = g.m
        self.used = 0
        self.left = self.n
        self.nodes = 0
        self.capable = [d >= k - 1 for d in self.deg]

    def run(self) -> list[int] | None:
        if self._dfs():
            return list(self.color)
        return None

    def _assign(self, v: int, c: int) -> None:
        self.color[v] = c
        self.left -= 1
        bit = 1 << c
        for u in self.nbrs[v]:
            self.unc[u] -= 1
            if self.color[u]:
                self.free_edges -= 1
            cnt = self.count[u]
            cnt[c] += 1
            if cnt[c] == 1:
                self.seen[u] |= bit

    def _unassign(self, v: int) -> None:
        c = self.color[v]
        self.color[v] = 0
        self.left += 1
        bit = 1 << c
        for u in self.nbrs[v]:
            self.unc[u] += 1
            if self.color[u] != 0:
                self.free_edges += 1
            cnt = self.count[u]
            cnt[c] -= 1
            if cnt[c] == 0:
                self.seen[u] &= ~bit

    def _pick(self) -> int:
        best, key = -1, None
        for v in range(self.n):
            if self.color[v]:
                continue
            cand = (self.seen[v].bit_count(), self.deg[v], -v)
            if key is None or cand > key:
                best, key = v, cand
        return best

    def _b_alive(self) -> bool:
        k, full = self.k, self.full
        color, seen, unc = self.color, self.seen, self.unc
        if self.used + self.left < k:
            return False
        satisfied = 0
        free_candidates = []
        for v in range(self.n):
            if not self.capable[v]:
                continue
            c = color[v]
            if c:
                if (full & ~seen[v] & ~(1 << c)).bit_count() <= unc[v]:
                    satisfied |= 1 << c
            else:
                free_candidates.append(v)
        # colors without a colored candidate must each claim a distinct
        # uncolored candidate that can still take that color
        needy = 0
        for c in range(1, self.used + 1):
            if satisfied >> c & 1:
                continue
            needy += 1
            bit = 1 << c
            if not any(
                not seen[w] & bit and (full & ~seen[w] & ~bit).bit_count() <= unc[w]
                for w in free_candidates
            ):
                return False
        if needy or self.used < k:
            usable = sum(1 for w in free_candidates if (full & ~seen[w]).bit_count() - 1 <= unc[w])
            if usable < needy + (k - self.used):
                return False
        return True

    def _pairs_alive(self) -> bool:
        k = self.k
        if self.used + self.left < k:
            return False
        joined = [0] * (k + 1)
        for v in range(self.n):
            c = self.color[v]
            if c:
                joined[c] |= self.seen[v]
        done = sum(joined[c].bit_count() for c in range(1, k + 1)) // 2
        return k * (k - 1) // 2 - done <= self.free_edges

    def _dfs(self) -> bool:
        if self.left == 0:
            return self.used == self.k
        v = self._pick()
        seen = self.seen[v]
        limit = self.used + 1 if self.used < self.k else self.used
        for c in range(1, limit + 1):
            if seen >> c & 1:
                continue
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchTimeout(self.k, self.nodes)
            fresh = c > self.used
            if fresh:
                self.used += 1
            self._assign(v, c)
            alive = self._pairs_alive() if self.pairwise else self._b_alive()
            if alive and self._dfs():
                return True
            self._unassign(v)
            if fresh:
                self.used -= 1
        return False


def feasible_k(g: Graph, k: int, budget: int = DEFAULT_BUDGET, definition: str = "standard") -> Coloring | None:
    """A k-b-coloring of ``g`` if one exists, else None.

    Raises SearchTimeout when more than ``budget`` nodes are expanded.
    """
    if definition not in DEFINITIONS:
        raise ValueError(f"unknown definition {definition!r}")
    if not 1 <= k <= g.n:
        raise ValueError(f"k must be in 1..{g.n}, got {k}")
    if k > upper_bound(g, definition):
        return None
    if k == 1:
        return Coloring(1, (1,) * g.n) if g.m == 0 else None
    found = _Search(g, k, budget, definition).run()
    if found is None:
        return None
    coloring = Coloring(k, tuple(found))
    assert is_b_coloring(g, coloring, k, definition), "search returned an invalid coloring"
    return coloring


def designate_b_vertices(g: Graph, c: Coloring) -> dict[int, int]:
    return {color: min(vs) for color, vs in b_vertices(g, c).items()}


def phi(g: Graph, budget: int = DEFAULT_BUDGET, definition: str = "standard") -> PhiResult:
    """b-chromatic number by descending search from the upper bound.

    No monotonicity in k is assumed: every k above the answer is refuted
    explicitly before a smaller k is accepted.
    """
    undecided: list[int] = []
    for k in range(upper_bound(g, definition), 0, -1):
        try:
            coloring = feasible_k(g, k, budget, definition)
        except SearchTimeout:
            undecided.append(k)
            continue
        if coloring is None:
            continue
        bv = designate_b_vertices(g, coloring) if definition == "standard" else {}
        result = PhiResult(k, coloring, bv)
        if undecided:
            raise PhiTimeout(undecided, result)
        return result
    # k = 1 is always decided, so reaching here means only timeouts above 1
    raise PhiTimeout(undecided, None)


def b_spectrum(g: Graph, budget: int = DEFAULT_BUDGET, definition: str = "standard") -> Spectrum:
    feasible, undecided = set(), set()
    for k in range(1, upper_bound(g, definition) + 1):
        try:
            if feasible_k(g, k, budget, definition) is not None:
                feasible.add(k)
        except SearchTimeout:
            undecided.add(k)
    return Spectrum(frozenset(feasible), frozenset(undecided))


# -- brute-force oracle ------------------------------------------------------

def _proper_partitions(g: Graph):
    """Yield every proper coloring as a restricted growth string.

    Vertex 1 takes color 1 and each later vertex takes an existing color or
    the next unused one, so every partition appears exactly once.
    """
    n = g.n
    colors = [0] * (n + 1)

    def extend(v: int, used: int):
        if v > n:
            yield Coloring(used, tuple(colors[1:]))
            return
        for c in range(1, used + 2):
            if any(colors[u] == c for u in g.neighbors(v) if u < v):
                continue
            colors[v] = c
            yield from extend(v + 1, max(used, c))
        colors[v] = 0

    yield from extend(1, 0)


def oracle_spectrum(g: Graph, definition: str = "standard") -> set[int]:
    """Every k admitting a k-b-coloring, by exhaustive enumeration (n <= 9)."""
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle is capped at {ORACLE_MAX_N} vertices, graph has {g.n}")
    return {c.k for c in _proper_partitions(g) if is_b_coloring(g, c, c.k, definition)}


def phi_oracle(g: Graph, definition: str = "standard") -> int:
    return max(oracle_spectrum(g, definition))


def chromatic_number(g: Graph) -> int:
    """Exhaustive chromatic number (n <= 9)."""
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"exhaustive chromatic number is capped at {ORACLE_MAX_N} vertices")
    return min(c.k for c in _proper_partitions(g))
