"""Claim registry, per-instance evaluation and report generation.

Each claim is a formula for some graph parameter.  An instance is evaluated
by building the graph, computing the formula value and the exact solver
value, and classifying the pair.  Formulas are hypotheses: a mismatch is
reported as REFUTED, never corrected.
"""

from __future__ import annotations

import json
import random
import re
import time
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from bchroma import __version__
from bchroma import families as fam
from bchroma.bcolor import (
    DEFAULT_BUDGET,
    ORACLE_MAX_N,
    PhiResult,
    PhiTimeout,
    phi,
    phi_oracle,
    upper_bound,
)
from bchroma.graph import (
    Graph,
    build_graph,
    is_complete,
    is_path_graph,
    relabel,
    underlying,
)

CONFIRMED = "CONFIRMED"
REFUTED = "REFUTED"
UNSUPPORTED = "UNSUPPORTED"
TIMEOUT = "TIMEOUT"
STATUSES = (CONFIRMED, REFUTED, UNSUPPORTED, TIMEOUT)

CLAIM_IDS = (
    "PROP12-COMPLETE",
    "PROP12-PATH",
    "PROP12-CYCLE",
    "PROP12-BIPARTITE",
    "JACO",
    "ORNATED",
    "RASTA",
    "CHITHRA",
    "SUNLET",
    "WHEEL",
    "SUN",
    "HELM",
    "P3-FROM-K1",
    "SETGRAPH",
    "SETGRAPH-CLIQUES",
    "EDGESET-STAR",
    "EDGESET-BOUND",
    "EDGEJOINT",
    "CHITHRA-DECOMP",
    "JACO-HOPE-COMPLETE",
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_REFUTED = 10
EXIT_TIMEOUT = 20

MAX_FAMILY_N = 12
JACO_SLOPES = ((1, 0), (1, 1), (2, 0))
RASTA_SPECS = ((3, 2), (4, 2), (4, 3, 2), (5, 3, 2), (5, 4, 3, 2))
CHITHRA_BASES = ("K3", "C4", "C5", "P4")
EDGESET_STARS = ("K1,1", "K1,2", "K1,3", "K1,4")
EDGESET_NONSTARS = ("P4", "K3", "P5", "chair", "C4", "paw")
EDGEJOINT_GRAPHS = ("K3", "C4", "C5", "P4", "K4")
DECOMP_CORPUS = (
    "P4", "P5", "C4", "C5", "C6", "K4", "K1,3", "K2,3", "paw", "chair",
    "W4", "W5", "sunlet4", "helm3", "sun3", "setgraph3", "rasta3,2", "rasta4,3,2",
)


class ClaimError(ValueError):
    """Unknown claim id or parameters outside the claim's grid bounds."""


class OracleDisagreement(RuntimeError):
    """The exact solver and the brute-force oracle disagree: a solver bug."""


@dataclass
class ClaimResult:
    claim: str
    params: dict
    formula: int
    solver: int | None
    status: str
    seconds: float = 0.0
    notes: str = ""
    witness: list[int] | None = None

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": self.params,
            "formula": self.formula,
            "solver": self.solver,
            "status": self.status,
            "seconds": self.seconds,
            "notes": self.notes,
        }


@dataclass
class Report:
    suite: str
    version: str
    results: list[ClaimResult] = field(default_factory=list)

    def summary(self) -> dict[str, int]:
        counts = {s.lower(): 0 for s in STATUSES}
        for r in self.results:
            counts[r.status.lower()] += 1
        return counts

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "version": self.version,
            "results": [r.to_dict() for r in self.results],
            "summary": self.summary(),
        }


@dataclass
class SuiteConfig:
    claims: tuple[str, ...] = CLAIM_IDS
    max_n: int | None = None
    n: int | None = None
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    deterministic: bool = False
    definition: str = "standard"
    suite: str = "default"


# -- named graphs ------------------------------------------------------------

_NAMED = {
    "paw": lambda: build_graph(4, [(1, 2), (1, 3), (2, 3), (1, 4)]),
    "chair": lambda: build_graph(5, [(1, 2), (2, 3), (2, 4), (4, 5)]),
}
_PATTERNS: list[tuple[str, Callable[..., Graph]]] = [
    (r"K(\d+),(\d+)", fam.complete_bipartite),
    (r"K(\d+)", fam.complete),
    (r"P(\d+)", fam.path),
    (r"C(\d+)", fam.cycle),
    (r"N(\d+)", fam.edgeless),
    (r"W(\d+)", fam.wheel),
    (r"sunlet(\d+)", fam.sunlet),
    (r"helm(\d+)", fam.helm),
    (r"sun(\d+)", fam.sun),
    (r"setgraph(\d+)", fam.set_graph),
    (r"rasta([\d,]+)", lambda *t: fam.rasta(t)),
]


def named_graph(name: str) -> Graph:
    """Resolve short names: ``K4``, ``K2,3``, ``P5``, ``C6``, ``N3``, ``W5``
    (hub + C_5), ``sunlet4``, ``helm3``, ``sun3``, ``setgraph3``,
    ``rasta4,3,2``, ``paw``, ``chair``."""
    if name in _NAMED:
        return _NAMED[name]()
    for pattern, ctor in _PATTERNS:
        match = re.fullmatch(pattern, name)
        if match:
            if pattern.startswith("rasta"):
                return ctor(*(int(t) for t in match.group(1).split(",")))
            return ctor(*(int(x) for x in match.groups()))
    raise ClaimError(f"unknown graph name {name!r}")


def is_star(g: Graph) -> bool:
    return g.n >= 2 and g.m == g.n - 1 and max(g.degree(v) for v in g.vertices) == g.n - 1


# -- clique counting -----------------------------------------------------------

def count_max_cliques(g: Graph) -> tuple[int, int]:
    """(maximum clique size, number of maximum cliques) via Bron-Kerbosch."""
    if g.n > 31:
        raise ClaimError(f"clique enumeration is capped at 31 vertices, graph has {g.n}")
    masks = g.masks
    best = [0, 0]

    def expand(size: int, cand: int, excl: int) -> None:
        if not cand and not excl:
            if size > best[0]:
                best[0], best[1] = size, 1
            elif size == best[0]:
                best[1] += 1
            return
        pivot_pool = cand | excl
        pivot = max(_bits(pivot_pool), key=lambda u: (masks[u] & cand).bit_count())
        for v in _bits(cand & ~masks[pivot]):
            bit = 1 << v
            expand(size + 1, cand & masks[v], excl & masks[v])
            cand &= ~bit
            excl |= bit

    expand(0, (1 << g.n) - 1, 0)
    return best[0], best[1]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def maximal_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    out = []
    for size in range(1, g.n + 1):
        for U in combinations(g.vertices, size):
            uset = set(U)
            if any(g.neighbors(u) & uset for u in U):
                continue
            if all(g.neighbors(w) & uset for w in g.vertices if w not in uset):
                out.append(U)
    return out


# -- solver access with oracle gating ----------------------------------------

_PHI_CACHE: dict = {}


@dataclass
class _Solved:
    value: int | None
    result: PhiResult | None
    error: PhiTimeout | None
    oracle: bool


def _solve(g: Graph, budget: int, definition: str) -> _Solved:
    key = (g.n, g.adj, budget, definition)
    if key in _PHI_CACHE:
        return _PHI_CACHE[key]
    try:
        res = phi(g, budget, definition)
        solved = _Solved(res.phi, res, None, False)
    except PhiTimeout as exc:
        solved = _Solved(None, None, exc, False)
    if g.n <= ORACLE_MAX_N:
        expected = phi_oracle(g, definition)
        if solved.value is not None and solved.value != expected:
            raise OracleDisagreement(
                f"solver phi={solved.value} but oracle phi={expected} on {g!r}"
            )
        solved.oracle = solved.value is not None
    _PHI_CACHE[key] = solved
    return solved


def _phi_claim(claim: str, params: dict, g: Graph, formula: int, budget: int, definition: str,
               notes: list[str], hypothesis: str | None = None) -> ClaimResult:
    """Compare ``formula`` against the exact b-chromatic number of ``g``."""
    if hypothesis is not None:
        notes.append(hypothesis)
        return ClaimResult(claim, params, formula, None, UNSUPPORTED, notes="; ".join(notes))
    bound = upper_bound(g, definition)
    fast_refute = formula > bound
    if fast_refute:
        notes.append(f"formula exceeds upper bound {bound}")
    solved = _solve(g, budget, definition)
    if solved.value is None:
        notes.append(str(solved.error))
        status = REFUTED if fast_refute else TIMEOUT
        return ClaimResult(claim, params, formula, None, status, notes="; ".join(notes))
    if solved.oracle:
        notes.append("oracle-confirmed")
    status = CONFIRMED if solved.value == formula else REFUTED
    if fast_refute and status != REFUTED:
        raise OracleDisagreement(f"upper bound {bound} < formula {formula} but solver found {solved.value}")
    return ClaimResult(claim, params, formula, solved.value, status, notes="; ".join(notes),
                       witness=list(solved.result.witness.colors))


def _flag_claim(claim: str, params: dict, expected: int, got: int, notes: list[str]) -> ClaimResult:
    status = CONFIRMED if expected == got else REFUTED
    return ClaimResult(claim, params, expected, got, status, notes="; ".join(notes))


# -- claim evaluators --------------------------------------------------------

def _need(cond: bool, claim: str, params: dict) -> None:
    if not cond:
        raise ClaimError(f"parameters {params} outside the grid bounds of {claim}")


def _eval_prop12(claim: str, params: dict, budget: int, definition: str) -> ClaimResult:
    if claim == "PROP12-BIPARTITE":
        a, b = params["m"], params["n"]
        _need(1 <= a and 1 <= b and a + b <= 2 * MAX_FAMILY_N, claim, params)
        return _phi_claim(claim, params, fam.complete_bipartite(a, b), 2, budget, definition, [])
    n = params["n"]
    if claim == "PROP12-COMPLETE":
        _need(1 <= n <= MAX_FAMILY_N, claim, params)
        return _phi_claim(claim, params, fam.complete(n), n, budget, definition, [])
    if claim == "PROP12-PATH":
        _need(2 <= n <= MAX_FAMILY_N, claim, params)
        return _phi_claim(claim, params, fam.path(n), 2 if n <= 3 else 3, budget, definition, [])
    _need(3 <= n <= MAX_FAMILY_N, claim, params)
    return _phi_claim(claim, params, fam.cycle(n), 2 if n == 4 else 3, budget, definition, [])


def _jaco_instance(claim: str, params: dict):
    n, m, c = params["n"], params["m"], params["c"]
    _need(2 <= n <= MAX_FAMILY_N and m >= 1 and c >= 0, claim, params)
    d = fam.jaco(fam.JacoParams(n, m, c))
    return d, fam.jaco_structure(d)


def _eval_jaco(claim: str, params: dict, budget: int, definition: str) -> ClaimResult:
    d, st = _jaco_instance(claim, params)
    hope = "none" if st.hope is None else ("complete" if is_complete(st.hope) else "not complete")
    notes = [f"prime Jaconian vertex v_{st.prime}", f"Hope subgraph {hope}"]
    return _phi_claim(claim, params, underlying(d), (params["n"] - st.prime) + 1, budget, definition, notes)


def _eval_jaco_hope(claim: str, params: dict, budget: int, definition: str) -> ClaimResult:
    _, st = _jaco_instance(claim, params)
    notes = [f"prime Jaconian vertex v_{st.prime}"]
    if st.hope is None:
        notes.append("prime Jaconian vertex is v_n; Hope subgraph is empty")
        return ClaimResult(claim, params, 1, None, UNSUPPORTED, notes="; ".join(notes))
    return _flag_claim(claim, params, 1, int(is_complete(st.hope)), notes)


def _eval_ornated(claim: str, params: dict, budget: int, definition: str) -> ClaimResult:
    n, s = params["n"], tuple(params["s"])
    _need(1 <= n <= MAX_FAMILY_N and 1 <= len(s) and all(a >= 0 for a in s), claim, params)
    top = max(s)
    g = underlying(fam.ornated(n, s))
    formula = n if n <= top + 1 else top + 2
    if g != fam.maximal_reach(n, s):
        raise OracleDisagreement(f"ornated graph differs from its maximal reach graph for n={n}, s={s}")
    hypothesis = "all string entries are zero" if top == 0 else None
    return _phi_claim(claim, params, g, formula, budget, definition, [f"a_max={top}"], hypothesis)


def _eval_rasta(claim: str, params: dict, budget: int, definition: str) -> ClaimResult:
    terms = tuple(params["terms"])
    try:
        g = fam.rasta(terms)
    except ValueError as exc:
        return ClaimResult(claim, params, 2, None, UNSUPPORTED, notes=str(exc))
    return _phi_claim(claim, params, g, 2, budget, definition, [])


def _eval_chithra(claim: str, params: dict, budget: int, definition: str) -> ClaimResult:
    base = named_graph(params["base"])
    subsets = [tuple(w) for w in params["subsets"]]
    _need(base.n <= ORACLE_MAX_N and 1 <= len(subsets), claim, params)
    g = fam.chithra(base, subsets, require_cover=False)
    covered = set().union(*map(set, subsets)) == set(base.vertices)
    notes = ["subsets cover the base" if covered else "subsets do not cover the base"]
    hypothesis = f"result is the path P_{g.n}" if is_path_graph(g) and g.n >= 4 else None
    base_phi = _solve(base, budget, definition)
    if base_phi.value is None:
        return ClaimResult(claim, params, 0, None, TIMEOUT, notes=f"base: {base_phi.error}")
    return _phi_claim(claim, params, g, base_phi.value + 1, budget, definition, notes, hypothesis)


def _eval_corollary(claim: str, params: dict, budget: int, definition: str) -> ClaimResult:
    if claim == "P3-FROM-K1":
        g = fam.chithra(fam.complete(1), [(1,), (1,)])
        return _phi_claim(claim, params, g, 2, budget, definition, ["chithra(K_1, {v1},{v1})"])
    n = params["n"]
    if claim == "SUN":
        _need(2 <= n <= 8, claim, params)
        return _phi_claim(claim, params, fam.sun(n), n + 1, budget, definition, [])
    _need(5 <= n <= MAX_FAMILY_N, claim, params)
    if claim == "SUNLET":
        g = fam.chithra(fam.cycle(n), [(i,) for i in range(1, n + 1)])
        notes = ["chithra(C_n, singletons) equals sunlet labeling"] if g == fam.sunlet(n) else []
        return _phi_claim(claim, params, g, 4, budget, definition, notes)
    if claim == "WHEEL":
        return _phi_claim(claim, params, fam.wheel(n), 4, budget, definition, [f"W_{n + 1} = hub + C_{n}"])
    return _phi_claim(claim, params, fam.helm(n), 5, budget, definition, [f"helm over W_{n + 1}"])


def _eval_setgraph(claim: str, params: dict, budget: int, definition: str) -> ClaimResult:
    n = params["n"]
    _need(2 <= n <= fam.SET_GRAPH_MAX_N, claim, params)
    g = fam.set_graph(n)
    target = 2 ** (n - 1)
    if claim == "SETGRAPH":
        return _phi_claim(claim, params, g, target + 1, budget, definition, [])
    size, count = count_max_cliques(g)
    notes = [f"maximum clique size {size} (expected {target})"]
    status = CONFIRMED if (size, count) == (target, target) else REFUTED
    return ClaimResult(claim, params, target, count, status, notes="; ".join(notes))


def _eval_edgeset(claim: str, params: dict, budget: int, definition: str) -> ClaimResult:
    g = named_graph(params["graph"])
    _need(1 <= g.m <= fam.EDGE_SET_MAX_EDGES, claim, params)
    shared = bool(params.get("shared_edge_adjacent", False))
    esg = fam.edge_set_graph(g, shared_edge_adjacent=shared)
    star = is_star(g)
    if claim == "EDGESET-STAR":
        notes = ["star" if star else "non-star", f"edge-set graph on {esg.n} vertices"]
        return _flag_claim(claim, params, int(star), int(is_complete(esg)), notes)
    bound = g.n if star else g.n - 1
    solved = _solve(esg, budget, definition)
    notes = [f"bound {'n' if star else 'n-1'} with n=|V(G)|={g.n}"]
    if solved.value is None:
        notes.append(str(solved.error))
        return ClaimResult(claim, params, bound, None, TIMEOUT, notes="; ".join(notes))
    if solved.oracle:
        notes.append("oracle-confirmed")
    alt = esg.n if is_complete(esg) else esg.n - 1
    notes.append(f"bound read with n=|V(edge-set graph)| holds: {'yes' if solved.value <= alt else 'no'}")
    status = CONFIRMED if solved.value <= bound else REFUTED
    return ClaimResult(claim, params, bound, solved.value, status, notes="; ".join(notes))


def _eval_edgejoint(claim: str, params: dict, budget: int, definition: str) -> ClaimResult:
    G, H = named_graph(params["G"]), named_graph(params["H"])
    v, u = params["v"], params["u"]
    _need(1 <= v <= G.n and 1 <= u <= H.n and G.n + H.n <= 2 * MAX_FAMILY_N, claim, params)
    joint = fam.edge_joint(G, v, H, u)
    excluded = [x for x in (G, H) if is_path_graph(x) and x.n in (2, 3)]
    hypothesis = "a factor is P_2 or P_3" if excluded else None
    phis = [_solve(x, budget, definition) for x in (G, H)]
    if any(p.value is None for p in phis):
        return ClaimResult(claim, params, 0, None, TIMEOUT, notes="factor phi undecided")
    formula = max(p.value for p in phis)
    notes = [f"phi(G)={phis[0].value}, phi(H)={phis[1].value}"]
    return _phi_claim(claim, params, joint, formula, budget, definition, notes, hypothesis)


def _eval_decomp(claim: str, params: dict, budget: int, definition: str) -> ClaimResult:
    g = named_graph(params["graph"])
    U = tuple(params["U"])
    _need(g.n <= ORACLE_MAX_N and U, claim, params)
    alpha = max(len(s) for s in maximal_independent_sets(g))
    notes = ["maximum independent set" if len(U) == alpha else f"maximal, not maximum (alpha={alpha})"]
    dec = fam.chithra_decomposition(g, U)
    if dec is None:
        notes.append("neighbourhoods of U do not cover V(G) - U")
        return ClaimResult(claim, params, 1, None, UNSUPPORTED, notes="; ".join(notes))
    rebuilt = fam.chithra(dec.base, dec.subsets)
    mapping = {i: old for i, old in enumerate(dec.order, start=1)}
    return _flag_claim(claim, params, 1, int(relabel(rebuilt, mapping) == g), notes)


_EVALUATORS: dict[str, Callable[[str, dict, int, str], ClaimResult]] = {
    "PROP12-COMPLETE": _eval_prop12,
    "PROP12-PATH": _eval_prop12,
    "PROP12-CYCLE": _eval_prop12,
    "PROP12-BIPARTITE": _eval_prop12,
    "JACO": _eval_jaco,
    "JACO-HOPE-COMPLETE": _eval_jaco_hope,
    "ORNATED": _eval_ornated,
    "RASTA": _eval_rasta,
    "CHITHRA": _eval_chithra,
    "SUNLET": _eval_corollary,
    "WHEEL": _eval_corollary,
    "SUN": _eval_corollary,
    "HELM": _eval_corollary,
    "P3-FROM-K1": _eval_corollary,
    "SETGRAPH": _eval_setgraph,
    "SETGRAPH-CLIQUES": _eval_setgraph,
    "EDGESET-STAR": _eval_edgeset,
    "EDGESET-BOUND": _eval_edgeset,
    "EDGEJOINT": _eval_edgejoint,
    "CHITHRA-DECOMP": _eval_decomp,
}


def evaluate_claim(claim: str, params: dict, budget: int = DEFAULT_BUDGET,
                   definition: str = "standard") -> ClaimResult:
    try:
        evaluator = _EVALUATORS[claim]
    except KeyError:
        raise ClaimError(f"unknown claim id {claim!r}") from None
    start = time.perf_counter()
    try:
        result = evaluator(claim, params, budget, definition)
    except KeyError as exc:
        raise ClaimError(f"{claim} is missing parameter {exc}") from None
    result.seconds = round(time.perf_counter() - start, 6)
    return result


# -- grids -------------------------------------------------------------------

def default_grid(claim: str, max_n: int | None = None, n: int | None = None) -> list[dict]:
    """Parameter grid for ``claim``; ``max_n``/``n`` restrict the size parameter."""
    top = MAX_FAMILY_N if max_n is None else min(max_n, MAX_FAMILY_N)

    def sizes(lo: int, hi: int) -> Iterable[int]:
        if n is not None:
            return [n] if lo <= n <= hi else []
        return range(lo, min(hi, top) + 1)

    if claim == "PROP12-COMPLETE":
        return [{"n": k} for k in sizes(1, MAX_FAMILY_N)]
    if claim == "PROP12-PATH":
        return [{"n": k} for k in sizes(2, MAX_FAMILY_N)]
    if claim == "PROP12-CYCLE":
        return [{"n": k} for k in sizes(3, MAX_FAMILY_N)]
    if claim == "PROP12-BIPARTITE":
        return [{"m": a, "n": b} for b in sizes(1, MAX_FAMILY_N) for a in range(1, b + 1) if a + b <= MAX_FAMILY_N]
    if claim in ("JACO", "JACO-HOPE-COMPLETE"):
        return [{"n": k, "m": m, "c": c} for m, c in JACO_SLOPES for k in sizes(2, MAX_FAMILY_N)]
    if claim == "ORNATED":
        strings = [list(s) for length in (1, 2, 3) for s in _tuples(range(4), length)]
        return [{"n": k, "s": s} for k in sizes(1, MAX_FAMILY_N) for s in strings]
    if claim == "RASTA":
        return [{"terms": list(t)} for t in RASTA_SPECS if n is None or t[0] == n]
    if claim == "CHITHRA":
        out = []
        for name in CHITHRA_BASES:
            base = named_graph(name)
            if n is not None and base.n != n:
                continue
            choices = fam.nonempty_subsets(tuple(base.vertices))
            for k in (1, 2):
                for pick in combinations_with_replacement(choices, k):
                    out.append({"base": name, "subsets": [list(w) for w in pick]})
        return out
    if claim == "SUNLET":
        return [{"n": k} for k in sizes(5, 8)]
    if claim == "WHEEL":
        return [{"n": k} for k in sizes(5, 10)]
    if claim == "SUN":
        return [{"n": k} for k in sizes(3, 6)]
    if claim == "HELM":
        return [{"n": k} for k in sizes(5, 7)]
    if claim == "P3-FROM-K1":
        return [{}]
    if claim in ("SETGRAPH", "SETGRAPH-CLIQUES"):
        return [{"n": k} for k in sizes(2, 4)]
    if claim in ("EDGESET-STAR", "EDGESET-BOUND"):
        return [{"graph": name} for name in EDGESET_STARS + EDGESET_NONSTARS]
    if claim == "EDGEJOINT":
        out = []
        for gname in EDGEJOINT_GRAPHS:
            for hname in EDGEJOINT_GRAPHS:
                G, H = named_graph(gname), named_graph(hname)
                out.extend({"G": gname, "v": v, "H": hname, "u": u} for v in G.vertices for u in H.vertices)
        return out
    if claim == "CHITHRA-DECOMP":
        return [
            {"graph": name, "U": list(U)}
            for name in DECOMP_CORPUS
            for U in maximal_independent_sets(named_graph(name))
        ]
    raise ClaimError(f"unknown claim id {claim!r}")


def _tuples(values: Iterable[int], length: int) -> list[tuple[int, ...]]:
    out = [()]
    vals = list(values)
    for _ in range(length):
        out = [t + (v,) for t in out for v in vals]
    return out


# -- corpus --------------------------------------------------------------------

def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Uniform G(n, p) sample; pairs are visited in lexicographic order."""
    return build_graph(n, [(u, v) for u, v in combinations(range(1, n + 1), 2) if rng.random() < p])


def random_corpus(count: int = 240, seed: int = 20240601) -> list[tuple[str, Graph]]:
    """Seeded random graphs cycling through n in 4..8 and p in {0.2, 0.5, 0.8}."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = 4 + i % 5
        p = (0.2, 0.5, 0.8)[(i // 5) % 3]
        out.append((f"random#{i}:n={n},p={p}", random_graph(n, p, rng)))
    return out


def family_corpus() -> list[tuple[str, Graph]]:
    """One labeled graph per distinct family instance in the default grids."""
    items: list[tuple[str, Graph]] = []
    items += [(f"K{n}", fam.complete(n)) for n in range(1, MAX_FAMILY_N + 1)]
    items += [(f"P{n}", fam.path(n)) for n in range(2, MAX_FAMILY_N + 1)]
    items += [(f"C{n}", fam.cycle(n)) for n in range(3, MAX_FAMILY_N + 1)]
    items += [(f"K{p['m']},{p['n']}", fam.complete_bipartite(p["m"], p["n"]))
              for p in default_grid("PROP12-BIPARTITE")]
    items += [(f"jaco{p['n']},{p['m']},{p['c']}", underlying(fam.jaco(fam.JacoParams(p["n"], p["m"], p["c"]))))
              for p in default_grid("JACO")]
    items += [(f"ornated{n}^{r}", fam.path_power(n, r)) for n in range(1, MAX_FAMILY_N + 1) for r in range(4)]
    items += [(f"rasta{t}", fam.rasta(t)) for t in RASTA_SPECS]
    items += [(f"chithra{p['base']}{p['subsets']}",
               fam.chithra(named_graph(p["base"]), p["subsets"], require_cover=False))
              for p in default_grid("CHITHRA")]
    items += [(f"sunlet{n}", fam.sunlet(n)) for n in range(5, 9)]
    items += [(f"wheel{n}", fam.wheel(n)) for n in range(5, 11)]
    items += [(f"sun{n}", fam.sun(n)) for n in range(3, 7)]
    items += [(f"helm{n}", fam.helm(n)) for n in range(5, 8)]
    items += [(f"setgraph{n}", fam.set_graph(n)) for n in range(1, 5)]
    items += [(f"edgeset({name})", fam.edge_set_graph(named_graph(name)))
              for name in EDGESET_STARS + EDGESET_NONSTARS]
    items += [(f"edgejoint({p['G']},{p['v']},{p['H']},{p['u']})",
               fam.edge_joint(named_graph(p["G"]), p["v"], named_graph(p["H"]), p["u"]))
              for p in default_grid("EDGEJOINT")]
    seen, out = set(), []
    for label, g in items:
        if (g.n, g.adj) not in seen:
            seen.add((g.n, g.adj))
            out.append((label, g))
    return out


# -- suite -------------------------------------------------------------------

def _sort_key(result: ClaimResult) -> tuple:
    return (CLAIM_IDS.index(result.claim), _norm(result.params))


def _norm(value):
    if isinstance(value, dict):
        return tuple((k, _norm(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return tuple(_norm(v) for v in value)
    return value


def _run_one(task: tuple[str, dict, int, str]) -> ClaimResult:
    claim, params, budget, definition = task
    return evaluate_claim(claim, params, budget, definition)


def run_suite(config: SuiteConfig) -> Report:
    unknown = [c for c in config.claims if c not in CLAIM_IDS]
    if unknown:
        raise ClaimError(f"unknown claim id(s): {', '.join(unknown)}")
    tasks = [
        (claim, params, config.budget, config.definition)
        for claim in config.claims
        for params in default_grid(claim, config.max_n, config.n)
    ]
    if config.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_run_one, tasks, chunksize=max(1, len(tasks) // (4 * config.workers))))
    else:
        results = [_run_one(t) for t in tasks]
    if config.deterministic:
        for r in results:
            r.seconds = 0.0
    results.sort(key=_sort_key)
    return Report(config.suite, __version__, results)


def exit_code(report: Report) -> int:
    summary = report.summary()
    if summary["timeout"]:
        return EXIT_TIMEOUT
    if summary["refuted"]:
        return EXIT_REFUTED
    return EXIT_OK


def emit_report(report: Report, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n").encode("ascii")
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    header = f"{'claim':<20} {'params':<44} {'formula':>7} {'solver':>6} {'status':<11} {'seconds':>9}  notes"
    lines = [f"suite {report.suite}  version {report.version}", header, "-" * len(header)]
    for r in report.results:
        params = json.dumps(r.params, sort_keys=True, separators=(",", ":"))
        solver = "-" if r.solver is None else str(r.solver)
        lines.append(
            f"{r.claim:<20} {params:<44} {r.formula:>7} {solver:>6} {r.status:<11} {r.seconds:>9.4f}  {r.notes}"
        )
    s = report.summary()
    lines.append("-" * len(header))
    lines.append(" ".join(f"{k}={s[k]}" for k in ("confirmed", "refuted", "unsupported", "timeout")))
    return ("\n".join(lines) + "\n").encode("utf-8")
