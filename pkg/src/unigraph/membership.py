"""Certification engine: the necessary-condition battery, constructive
certificates, the alternating-projection solver, Sperner capacity, and the
hamiltonicity survey.

`certify` is the front door.  It can answer three ways: "excluded" (a
necessary condition fails, with a witness), "certified" (a concrete matrix
whose support is the digraph and whose unitarity residual passes), or
"undecided" (the solver gave up; never evidence of non-membership).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from .digraphs import (
    Digraph,
    _augmenting_matching,
    add_loops,
    bipartition,
    connectivity_numbers,
    cycle_factor,
    hall_violations,
    hamiltonian_cycle,
    hypercube_graph,
    induced_subgraph_search,
    k33_minus_edge,
    perfect_two_matching,
    quadrangularity_violations,
    structure_report,
    term_rank,
)
from .errors import CapacityError, InputError, InternalError
from .linedigraphs import independent_full_submatrices, recognize_line_digraph
from .matrices import (
    dft,
    hypercube_weighing,
    nearest_unitary,
    support,
    unitarity_residual,
)
from .reporting import FAIL, NOT_APPLICABLE, PASS, Condition, ConditionReport

__all__ = [
    "SolverConfig",
    "Certificate",
    "CertifyOutcome",
    "necessary_battery",
    "certify",
    "alternating_projection",
    "SpernerResult",
    "sperner_capacity",
    "SurveyRow",
    "SurveyResult",
    "conjecture_survey",
    "graph_canonical_mask",
]


@dataclass(frozen=True)
class SolverConfig:
    """Knobs for the numerical realization search (all deterministic in seed)."""

    tol: float = 1e-8
    min_magnitude: float = 1e-6
    max_iter: int = 10000
    restarts: int = 50
    seed: int = 0

    def __post_init__(self):
        if self.tol <= 0 or self.min_magnitude <= 0:
            raise InputError("tol and min_magnitude must be positive")
        if self.max_iter < 1 or self.restarts < 1:
            raise InputError("max_iter and restarts must be at least 1")
        if self.seed < 0:
            raise InputError("seed must be nonnegative")


@dataclass(frozen=True)
class Certificate:
    """A matrix witnessing membership: unitary within tol, support = the digraph."""

    kind: str  # explicit | line-digraph-dft | weighing | numerical
    matrix: np.ndarray
    residual: float
    support_match: bool


@dataclass(frozen=True)
class CertifyOutcome:
    status: str  # certified | excluded | undecided
    battery: ConditionReport
    certificate: Certificate | None
    reason: str | None


# === necessary-condition battery ===

_K2 = np.array([[0, 1], [1, 0]], dtype=np.int8)
_K2_LOOPED = np.ones((2, 2), dtype=np.int8)


def _is_k2_component(D: Digraph, members) -> bool:
    if len(members) != 2:
        return False
    sub = D.adj[np.ix_(members, members)]
    return np.array_equal(sub, _K2) or np.array_equal(sub, _K2_LOOPED)


def necessary_battery(D: Digraph) -> ConditionReport:
    """Every necessary condition for supporting a unitary, evaluated in order.

    Failures carry witnesses; conditions whose premise does not hold (e.g. the
    graph-only ones on an asymmetric digraph) report not-applicable.
    """
    sr = structure_report(D)
    comp_of = {}
    for comp in sr.weak_components:
        for v in comp:
            comp_of[v] = comp
    conds: list[Condition] = []

    violations = quadrangularity_violations(D)
    conds.append(
        Condition(
            "quadrangularity",
            FAIL if violations else PASS,
            witness={"violations": violations[:16]} if violations else None,
        )
    )

    conds.append(
        Condition(
            "no-directed-bridges",
            FAIL if sr.directed_bridges else PASS,
            witness={"arcs": sr.directed_bridges} if sr.directed_bridges else None,
        )
    )

    bad_bridges = [e for e in sr.bridges if not _is_k2_component(D, comp_of[e[0]])]
    conds.append(
        Condition(
            "bridges-in-k2-components",
            FAIL if bad_bridges else PASS,
            witness={
                "edges": bad_bridges,
                "components": [comp_of[e[0]] for e in bad_bridges],
            }
            if bad_bridges
            else None,
        )
    )

    bad_cuts = [v for v in sr.cut_vertices if not _is_k2_component(D, comp_of[v])]
    conds.append(
        Condition(
            "cut-vertices-in-k2-components",
            FAIL if bad_cuts else PASS,
            witness={"vertices": bad_cuts, "components": [comp_of[v] for v in bad_cuts]}
            if bad_cuts
            else None,
        )
    )

    tr = term_rank(D)
    conds.append(
        Condition(
            "term-rank",
            PASS if tr.value == D.n else FAIL,
            witness={"term_rank": tr.value, "n": D.n},
        )
    )

    cf = cycle_factor(D)
    conds.append(
        Condition(
            "cycle-factor",
            PASS if cf is not None else FAIL,
            witness={"permutation": cf} if cf is not None else {"term_rank": tr.value},
        )
    )

    symmetric = sr.is_symmetric
    if symmetric and not D.has_loops():
        tm = perfect_two_matching(D)
        unmatched = [v for v, c in enumerate(tr.matching) if c is None]
        conds.append(
            Condition(
                "perfect-two-matching",
                PASS if tm is not None else FAIL,
                witness={"edges": tm.edges, "cycles": tm.cycles}
                if tm is not None
                else {"unmatched": unmatched},
            )
        )
    else:
        conds.append(Condition("perfect-two-matching", NOT_APPLICABLE))

    if symmetric and D.n <= 16:
        hv = hall_violations(D)
        conds.append(
            Condition(
                "hall-condition",
                FAIL if hv else PASS,
                witness={"set": hv[0], "neighborhood": sorted(set().union(*(D.out_neighbors(v) for v in hv[0])))}
                if hv
                else None,
            )
        )
    elif symmetric:
        conds.append(
            Condition("hall-condition", NOT_APPLICABLE, witness={"note": "beyond subset-enumeration cap"})
        )
    else:
        conds.append(Condition("hall-condition", NOT_APPLICABLE))

    if symmetric and sr.weakly_connected and D.n >= 3:
        kappa, lam = connectivity_numbers(D)
        conds.append(
            Condition(
                "two-connected",
                PASS if kappa >= 2 and lam >= 2 else FAIL,
                witness={"vertex_connectivity": kappa, "edge_connectivity": lam},
            )
        )
    else:
        conds.append(Condition("two-connected", NOT_APPLICABLE))

    parts = bipartition(D) if symmetric else None
    if parts is not None:
        p0, p1 = parts
        pos = {v: i for i, v in enumerate(p1)}
        rows = [tuple(pos[w] for w in D.out_neighbors(v)) for v in p0]
        match = _augmenting_matching(rows, len(p1))
        size = sum(1 for c in match if c is not None)
        ok = len(p0) == len(p1) and size == len(p0)
        unmatched = [p0[r] for r, c in enumerate(match) if c is None]
        conds.append(
            Condition(
                "bipartite-perfect-matching",
                PASS if ok else FAIL,
                witness=None
                if ok
                else {"part_sizes": (len(p0), len(p1)), "unmatched": unmatched},
            )
        )
    else:
        conds.append(Condition("bipartite-perfect-matching", NOT_APPLICABLE))

    return ConditionReport(conditions=tuple(conds))


# === constructive certificates ===

def _line_digraph_certificate(D: Digraph) -> Certificate | None:
    """DFT-per-block certificate for regular, strongly connected line digraphs."""
    d = D.is_regular()
    if not d:
        return None
    if not structure_report(D).strongly_connected:
        return None
    if not recognize_line_digraph(D).is_line_digraph:
        return None
    u = np.zeros((D.n, D.n), dtype=np.complex128)
    f = dft(d)
    for rows, cols in independent_full_submatrices(D).blocks:
        if len(rows) != d or len(cols) != d:
            raise InternalError(
                f"line-digraph block is {len(rows)}x{len(cols)} in a {d}-regular digraph"
            )
        u[np.ix_(rows, cols)] = f
    return Certificate("line-digraph-dft", u, unitarity_residual(u), True)


_V3 = np.array(
    [
        [1 / math.sqrt(2), -1 / math.sqrt(2), 0.0],
        [0.5, 0.5, 1 / math.sqrt(2)],
        [0.5, 0.5, -1 / math.sqrt(2)],
    ]
)


def _k33_minus_edge_matrix() -> np.ndarray:
    u = np.zeros((6, 6))
    u[:3, 3:] = _V3
    u[3:, :3] = _V3.T
    return u


def _registry_certificate(D: Digraph) -> Certificate | None:
    """Hand-registered patterns with known realizations."""
    n = D.n
    if n == 2:
        if np.array_equal(D.adj, _K2):
            m = np.array([[0.0, 1.0], [1.0, 0.0]])
            return Certificate("explicit", m.astype(np.complex128), unitarity_residual(m), True)
        if np.array_equal(D.adj, _K2_LOOPED):
            m = dft(2)
            return Certificate("explicit", m, unitarity_residual(m), True)
    if n >= 4 and (n & (n - 1)) == 0:
        k = n.bit_length() - 1
        if 2 <= k <= 12:
            cube = hypercube_graph(k)
            if D == cube:
                m = hypercube_weighing(k) / math.sqrt(k)
                return Certificate("weighing", m.astype(np.complex128), unitarity_residual(m), True)
            if D == add_loops(cube):
                m = hypercube_weighing(k, loops=True) / math.sqrt(k + 1)
                return Certificate("weighing", m.astype(np.complex128), unitarity_residual(m), True)
    if n == 6 and not D.has_loops() and D.is_symmetric():
        fixture = k33_minus_edge()
        if sorted(D.adj.sum(axis=1)) == sorted(fixture.adj.sum(axis=1)):
            f = induced_subgraph_search(D, fixture)
            if f is not None:
                uh = _k33_minus_edge_matrix()
                u = np.zeros((6, 6))
                for a in range(6):
                    for b in range(6):
                        u[f[a], f[b]] = uh[a, b]
                return Certificate("explicit", u.astype(np.complex128), unitarity_residual(u), True)
    return None


def _verify_certificate(D: Digraph, cert: Certificate, cfg: SolverConfig) -> None:
    """A constructed certificate that fails its own claim is a bug, never silence."""
    residual = unitarity_residual(cert.matrix)
    if residual > cfg.tol:
        raise InternalError(
            f"{cert.kind} certificate has unitarity residual {residual:.3e} > tol {cfg.tol:.1e}"
        )
    if support(cert.matrix, cfg.min_magnitude) != D:
        raise InternalError(f"{cert.kind} certificate support does not match the input digraph")


def certify(D: Digraph, cfg: SolverConfig | None = None) -> CertifyOutcome:
    """Decide membership as far as the toolbox can: battery, constructions, solver.

    Order: necessary battery (excluded on any failure); DFT blocks for regular
    strongly connected line digraphs; the registry of known constructions;
    alternating projection.  Every certificate is re-verified before release.
    """
    cfg = cfg or SolverConfig()
    battery = necessary_battery(D)
    if battery.verdict == "excluded":
        first = battery.first_failure
        return CertifyOutcome("excluded", battery, None, first.name)
    cert = _line_digraph_certificate(D) or _registry_certificate(D)
    if cert is None:
        m = alternating_projection(D, cfg)
        if m is not None:
            cert = Certificate("numerical", m, unitarity_residual(m), True)
    if cert is None:
        return CertifyOutcome("undecided", battery, None, "no realization found within budget")
    _verify_certificate(D, cert, cfg)
    return CertifyOutcome("certified", battery, cert, None)


# === numerical realization ===

_STALL_WINDOW = 50


def alternating_projection(target: Digraph, cfg: SolverConfig | None = None) -> np.ndarray | None:
    """Search for a unitary supported exactly by the target pattern.

    Each restart draws a random complex matrix on the allowed entries and
    alternates: project to the nearest unitary (polar factor), zero the
    forbidden entries, renormalize.  Success requires unitarity residual
    <= tol with every required entry above the magnitude floor; a run whose
    support collapses restarts.  Restart r uses seed^r; the first success by
    restart index is returned, so results are reproducible and identical to
    serial execution.  None after all restarts means "undecided", never
    "not a member".
    """
    cfg = cfg or SolverConfig()
    mask = target.adj.astype(np.float64)
    required = target.adj.astype(bool)
    n = target.n
    scale = math.sqrt(n)
    for r in range(cfg.restarts):
        rng = np.random.default_rng(cfg.seed ^ r)
        x = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) * mask
        best = np.inf
        stall = 0
        for _ in range(cfg.max_iter):
            u = nearest_unitary(x)
            z = u * mask
            res = unitarity_residual(z)
            if res <= cfg.tol:
                if (np.abs(z)[required] > cfg.min_magnitude).all():
                    return z
                break  # unitary found, but on a proper subpattern: restart
            if res < best - 1e-12:
                best = res
                stall = 0
            else:
                stall += 1
                if stall >= _STALL_WINDOW:
                    break
            norm = np.linalg.norm(z, "fro")
            if norm < 1e-12:
                break
            x = z * (scale / norm)
    return None


# === Sperner capacity ===

def _binary_entropy(p: float) -> float:
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def _edge_entropy(mu: np.ndarray, i: int, j: int) -> float:
    s = mu[i] + mu[j]
    if s <= 0.0:
        return 0.0
    return s * _binary_entropy(mu[i] / s)


@dataclass(frozen=True)
class SpernerResult:
    mode: str
    value: float
    distribution: tuple[float, ...]


_OPTIMIZE_CAP = 10


def sperner_capacity(D: Digraph, mode: str = "uniform", seed: int = 0) -> SpernerResult:
    """Min over edges of the pair entropy H = (mu_i+mu_j) h(mu_i/(mu_i+mu_j)).

    Uniform mode evaluates the uniform distribution (2/n exactly on any graph
    with an edge, since both summands double exactly and h(1/2) = 1).
    Optimize mode runs a projected-ascent max-min search and reports the best
    distribution found - a heuristic lower bound, no optimality claim.
    """
    if not D.is_symmetric():
        raise InputError("sperner_capacity needs a graph (symmetric adjacency)")
    edges = D.edges()
    if not edges:
        raise InputError("sperner_capacity needs at least one edge")
    n = D.n

    def min_entropy(mu):
        return min(_edge_entropy(mu, i, j) for i, j in edges)

    uniform = np.full(n, 1.0 / n)
    if mode == "uniform":
        return SpernerResult("uniform", min_entropy(uniform), tuple(uniform))
    if mode != "optimize":
        raise InputError(f"mode must be 'uniform' or 'optimize', got {mode!r}")
    if n > _OPTIMIZE_CAP:
        raise CapacityError(f"optimize mode capped at {_OPTIMIZE_CAP} vertices, got {n}")

    rng = np.random.default_rng(seed)
    best_mu = uniform.copy()
    best_val = min_entropy(uniform)
    starts = [uniform] + [
        _project_simplex(uniform + 0.25 * rng.standard_normal(n)) for _ in range(8)
    ]
    eps = 1e-6
    for mu in starts:
        mu = mu.copy()
        step = 0.1
        val = min_entropy(mu)
        if val > best_val:
            best_val, best_mu = val, mu.copy()
        for _ in range(300):
            grad = np.zeros(n)
            base = min_entropy(mu)
            for v in range(n):
                bumped = mu.copy()
                bumped[v] += eps
                grad[v] = (min_entropy(_project_simplex(bumped)) - base) / eps
            mu = _project_simplex(mu + step * grad)
            val = min_entropy(mu)
            if val > best_val:
                best_val, best_mu = val, mu.copy()
            step *= 0.99
    return SpernerResult("optimize", best_val, tuple(best_mu))


def _project_simplex(v: np.ndarray) -> np.ndarray:
    """Euclidean projection onto the probability simplex."""
    u = np.sort(v)[::-1]
    css = np.cumsum(u)
    rho = np.nonzero(u * np.arange(1, len(v) + 1) > (css - 1))[0][-1]
    theta = (css[rho] - 1) / (rho + 1)
    return np.maximum(v - theta, 0.0)


# === conjecture survey ===

def _pair_list(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _perm_bit_maps(n: int) -> np.ndarray:
    """Row p: where bit k of a relabeled mask comes from in the original mask."""
    pairs = _pair_list(n)
    index = {p: k for k, p in enumerate(pairs)}
    maps = np.empty((math.factorial(n), len(pairs)), dtype=np.int64)
    for p, perm in enumerate(permutations(range(n))):
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            maps[p, k] = index[(a, b) if a < b else (b, a)]
    return maps


_CANONICAL_CAP = 8


def graph_canonical_mask(D: Digraph) -> int:
    """Canonical form of a loop-free graph: the minimum edge bitmask over relabelings."""
    if not D.is_symmetric() or D.has_loops():
        raise InputError("canonical masks are defined for loop-free graphs")
    n = D.n
    if n > _CANONICAL_CAP:
        raise CapacityError(f"canonicalization capped at {_CANONICAL_CAP} vertices, got {n}")
    if n < 2:
        return 0
    pairs = _pair_list(n)
    bits = np.array([int(D.adj[i, j]) for i, j in pairs], dtype=np.int64)
    maps = _perm_bit_maps(n)
    pow2 = 1 << np.arange(len(pairs), dtype=np.int64)
    return int((bits[maps] @ pow2).min())


def _mask_to_digraph(n: int, mask: int) -> Digraph:
    a = np.zeros((n, n), dtype=np.int8)
    for k, (i, j) in enumerate(_pair_list(n)):
        if (mask >> k) & 1:
            a[i, j] = a[j, i] = 1
    return Digraph(a)


def _connected_mask(n: int, mask: int) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k, (i, j) in enumerate(_pair_list(n)):
        if (mask >> k) & 1:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    return len({find(v) for v in range(n)}) == 1


def _connected_classes_small(n: int) -> list[int]:
    """All connected loop-free graphs on n <= 6 labeled vertices, one mask per class."""
    k = n * (n - 1) // 2
    masks = np.arange(1 << k, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(k)) & 1).astype(np.int8)
    maps = _perm_bit_maps(n)
    pow2 = 1 << np.arange(k, dtype=np.int64)
    canon = np.full(len(masks), np.iinfo(np.int64).max, dtype=np.int64)
    for p in range(maps.shape[0]):
        np.minimum(canon, bits[:, maps[p]].astype(np.int64) @ pow2, out=canon)
    reps = np.flatnonzero(canon == masks)
    return [int(m) for m in reps if _connected_mask(n, int(m))]


def _connected_classes_grown(n: int, smaller: list[int]) -> list[int]:
    """Connected classes on n vertices from the (n-1)-vertex classes.

    Every connected graph has a vertex whose removal leaves it connected, so
    attaching a new vertex to each nonempty neighbor subset of each smaller
    class reaches every class at least once.
    """
    pairs = _pair_list(n)
    index = {p: k for k, p in enumerate(pairs)}
    maps = _perm_bit_maps(n)
    pow2 = 1 << np.arange(len(pairs), dtype=np.int64)
    seen: set[int] = set()
    prev_pairs = _pair_list(n - 1)
    for base in smaller:
        base_bits = [(base >> k) & 1 for k in range(len(prev_pairs))]
        for subset in range(1, 1 << (n - 1)):
            bits = np.zeros(len(pairs), dtype=np.int64)
            for k, (i, j) in enumerate(prev_pairs):
                bits[index[(i, j)]] = base_bits[k]
            for v in range(n - 1):
                if (subset >> v) & 1:
                    bits[index[(v, n - 1)]] = 1
            seen.add(int((bits[maps] @ pow2).min()))
    return sorted(seen)


@dataclass(frozen=True)
class SurveyRow:
    n: int
    mask: int
    adjacency: tuple[tuple[int, ...], ...]
    status: str
    certificate_kind: str | None
    hamiltonian: bool


@dataclass(frozen=True)
class SurveyResult:
    max_n: int
    rows: tuple[SurveyRow, ...]
    class_counts: dict[int, int]
    counterexample_candidates: tuple[SurveyRow, ...]


def conjecture_survey(max_n: int, cfg: SolverConfig | None = None) -> SurveyResult:
    """Test "certified members are hamiltonian" over all small connected graphs.

    Enumerates connected loop-free graphs up to isomorphism for n = 2..max_n,
    certifies each, and checks hamiltonicity (K2's 2-cycle counts).  A row
    that is certified but not hamiltonian is a counterexample candidate.
    """
    if not 2 <= max_n <= 8:
        raise InputError(f"max_n must be between 2 and 8, got {max_n}")
    cfg = cfg or SolverConfig()
    rows: list[SurveyRow] = []
    class_counts: dict[int, int] = {}
    classes: list[int] = []
    for n in range(2, max_n + 1):
        if n <= 6:
            classes = _connected_classes_small(n)
        else:
            classes = _connected_classes_grown(n, classes)
        class_counts[n] = len(classes)
        for mask in classes:
            D = _mask_to_digraph(n, mask)
            outcome = certify(D, cfg)
            ham = hamiltonian_cycle(D) is not None
            rows.append(
                SurveyRow(
                    n=n,
                    mask=mask,
                    adjacency=tuple(tuple(int(x) for x in row) for row in D.adj),
                    status=outcome.status,
                    certificate_kind=outcome.certificate.kind if outcome.certificate else None,
                    hamiltonian=ham,
                )
            )
    candidates = tuple(r for r in rows if r.status == "certified" and not r.hamiltonian)
    return SurveyResult(
        max_n=max_n,
        rows=tuple(rows),
        class_counts=class_counts,
        counterexample_candidates=candidates,
    )
