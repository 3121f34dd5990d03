"""Digraph type and the combinatorial tests used by the membership pipeline.

Vertices are always 0..n-1 and a digraph is exactly its 0/1 adjacency
pattern: entry (i, j) = 1 means the arc (i, j) is present, loops sit on
the diagonal, and an (undirected) edge is a pair of antiparallel arcs.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import CapacityError, InputError

__all__ = [
    "Digraph",
    "StructureReport",
    "TermRank",
    "TwoMatching",
    "AutomorphismReport",
    "neighborhood",
    "structure_report",
    "quadrangularity_violations",
    "diameter",
    "term_rank",
    "cycle_factor",
    "permutation_cycles",
    "perfect_two_matching",
    "hall_violations",
    "connectivity_numbers",
    "independent_paths",
    "hamiltonian_cycle",
    "automorphism_group",
    "induced_subgraph_search",
    "bipartition",
    "directed_cycle",
    "directed_path",
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "star_graph",
    "claw_graph",
    "paw_graph",
    "k33_minus_edge",
    "hypercube_graph",
    "add_loops",
    "induced_subdigraph",
]


class Digraph:
    """Immutable digraph on vertices 0..n-1 backed by a 0/1 adjacency matrix."""

    __slots__ = ("_adj",)

    def __init__(self, adjacency):
        raw = np.asarray(adjacency)
        if raw.ndim != 2 or raw.shape[0] != raw.shape[1]:
            raise InputError(f"adjacency must be a square matrix, got shape {raw.shape}")
        if raw.shape[0] < 1:
            raise InputError("a digraph needs at least one vertex")
        if not np.isin(raw, (0, 1)).all():
            raise InputError("adjacency entries must be 0 or 1")
        adj = raw.astype(np.int8)
        adj.setflags(write=False)
        self._adj = adj

    @property
    def adj(self) -> np.ndarray:
        return self._adj

    @property
    def n(self) -> int:
        return int(self._adj.shape[0])

    def arcs(self) -> list[tuple[int, int]]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self._adj))]

    @property
    def arc_count(self) -> int:
        return int(self._adj.sum())

    def edges(self) -> list[tuple[int, int]]:
        """Unordered pairs {i, j}, i < j, with both arcs present."""
        sym = self._adj & self._adj.T
        return [(i, j) for i, j in combinations(range(self.n), 2) if sym[i, j]]

    def out_neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(int(j) for j in np.flatnonzero(self._adj[i]))

    def in_neighbors(self, j: int) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self._adj[:, j]))

    def out_degree(self, i: int) -> int:
        return int(self._adj[i].sum())

    def in_degree(self, j: int) -> int:
        return int(self._adj[:, j].sum())

    def is_symmetric(self) -> bool:
        return bool((self._adj == self._adj.T).all())

    def has_loops(self) -> bool:
        return bool(self._adj.diagonal().any())

    def is_regular(self):
        """Common in- and out-degree d if the digraph is d-regular, else None."""
        outs = self._adj.sum(axis=1)
        ins = self._adj.sum(axis=0)
        d = int(outs[0])
        if (outs == d).all() and (ins == d).all():
            return d
        return None

    def __eq__(self, other):
        return isinstance(other, Digraph) and np.array_equal(self._adj, other._adj)

    def __hash__(self):
        return hash((self.n, self._adj.tobytes()))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={self.arc_count})"


def _check_vertices(D: Digraph, members) -> list[int]:
    out = []
    for v in members:
        v = int(v)
        if not 0 <= v < D.n:
            raise InputError(f"vertex {v} out of range 0..{D.n - 1}")
        out.append(v)
    return out


def neighborhood(D: Digraph, members, direction: str = "out") -> frozenset[int]:
    """N+(S), N-(S), or their union for a vertex set S.

    N+(S) collects heads of arcs leaving S; N-(S) collects tails of arcs
    entering S.  Vertices of S may appear in the result (loops, 2-cycles).
    """
    vs = _check_vertices(D, members)
    if direction not in ("in", "out", "both"):
        raise InputError(f"direction must be 'in', 'out' or 'both', got {direction!r}")
    result: set[int] = set()
    for v in vs:
        if direction in ("out", "both"):
            result.update(D.out_neighbors(v))
        if direction in ("in", "both"):
            result.update(D.in_neighbors(v))
    return frozenset(result)


# === connectivity structure ===

def _weak_count(D: Digraph, *, drop_vertex=None, drop_arc=None, drop_edge=None) -> int:
    """Number of weak components, optionally with a vertex/arc/edge removed.

    drop_edge removes both arcs of the pair; the removed vertex does not count
    as a component of its own.
    """
    n = D.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in D.arcs():
        if i == j:
            continue
        if drop_vertex is not None and drop_vertex in (i, j):
            continue
        if drop_arc is not None and (i, j) == drop_arc:
            continue
        if drop_edge is not None and (min(i, j), max(i, j)) == drop_edge:
            continue
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    roots = {find(v) for v in range(n) if v != drop_vertex}
    return len(roots)


def _weak_components(D: Digraph) -> tuple[tuple[int, ...], ...]:
    n = D.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in D.arcs():
        if i != j:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))


def _strong_components(D: Digraph) -> tuple[tuple[int, ...], ...]:
    """Strongly connected components (iterative Tarjan)."""
    n = D.n
    out = [list(D.out_neighbors(v)) for v in range(n)]
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[tuple[int, ...]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for k in range(pi, len(out[v])):
                w = out[v][k]
                if index[w] == -1:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(tuple(sorted(comp)))
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])
    return tuple(sorted(comps, key=min))


@dataclass(frozen=True)
class StructureReport:
    weak_components: tuple[tuple[int, ...], ...]
    strong_components: tuple[tuple[int, ...], ...]
    directed_bridges: tuple[tuple[int, int], ...]
    bridges: tuple[tuple[int, int], ...]
    cut_vertices: tuple[int, ...]
    is_symmetric: bool

    @property
    def weakly_connected(self) -> bool:
        return len(self.weak_components) == 1

    @property
    def strongly_connected(self) -> bool:
        return len(self.strong_components) == 1


def structure_report(D: Digraph) -> StructureReport:
    """Weak/strong components plus every bridge-like feature of D.

    A directed bridge is an arc whose removal raises the weak-component
    count; a bridge removes both arcs of an edge; a cut-vertex is removed
    together with its arcs.  All three are evaluated against weak
    connectivity.
    """
    base = _weak_count(D)
    directed_bridges = []
    for i, j in D.arcs():
        if i == j or D.adj[j, i]:
            # a loop never disconnects; an antiparallel partner keeps i-j joined
            continue
        if _weak_count(D, drop_arc=(i, j)) > base:
            directed_bridges.append((i, j))
    bridges = []
    for i, j in D.edges():
        if _weak_count(D, drop_edge=(i, j)) > base:
            bridges.append((i, j))
    cut_vertices = []
    if D.n >= 2:
        for v in range(D.n):
            if _weak_count(D, drop_vertex=v) > base:
                cut_vertices.append(v)
    return StructureReport(
        weak_components=_weak_components(D),
        strong_components=_strong_components(D),
        directed_bridges=tuple(directed_bridges),
        bridges=tuple(bridges),
        cut_vertices=tuple(cut_vertices),
        is_symmetric=D.is_symmetric(),
    )


def quadrangularity_violations(D: Digraph) -> list[tuple[tuple[int, int], str]]:
    """Unordered pairs whose common in- or out-neighborhood has size exactly 1.

    Returns ((i, j), side) records with side "in" or "out"; a pair failing on
    both sides yields two records.  Empty list = D is quadrangular.
    """
    A = D.adj.astype(np.int32)
    common_out = A @ A.T
    common_in = A.T @ A
    found = []
    for i, j in combinations(range(D.n), 2):
        if common_in[i, j] == 1:
            found.append(((i, j), "in"))
        if common_out[i, j] == 1:
            found.append(((i, j), "out"))
    return found


def diameter(D: Digraph):
    """Max over ordered pairs of dipath distance; math.inf if some pair is unreachable."""
    n = D.n
    out = [D.out_neighbors(v) for v in range(n)]
    best = 0
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        q = deque([s])
        seen = 1
        while q:
            v = q.popleft()
            for w in out[v]:
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    seen += 1
                    q.append(w)
        if seen < n:
            return math.inf
        best = max(best, max(dist))
    return best


# === matchings ===

def _augmenting_matching(rows: list[tuple[int, ...]], n_cols: int) -> list[int | None]:
    """Maximum bipartite matching rows -> columns, deterministic scan order."""
    match_col = [-1] * n_cols
    match_row: list[int | None] = [None] * len(rows)

    def try_row(r, seen):
        for c in rows[r]:
            if not seen[c]:
                seen[c] = True
                if match_col[c] == -1 or try_row(match_col[c], seen):
                    match_col[c] = r
                    match_row[r] = c
                    return True
        return False

    for r in range(len(rows)):
        try_row(r, [False] * n_cols)
    return match_row


@dataclass(frozen=True)
class TermRank:
    value: int
    matching: tuple[int | None, ...]


def term_rank(D: Digraph) -> TermRank:
    """Size of a maximum row-column matching of the pattern, with one witness."""
    rows = [D.out_neighbors(i) for i in range(D.n)]
    match_row = _augmenting_matching(rows, D.n)
    value = sum(1 for c in match_row if c is not None)
    return TermRank(value=value, matching=tuple(match_row))


def cycle_factor(D: Digraph) -> tuple[int, ...] | None:
    """Permutation p with an arc (i, p(i)) for every i, or None.

    Exists iff the term rank equals n; the support of p is a spanning
    union of dicycles.
    """
    tr = term_rank(D)
    if tr.value < D.n:
        return None
    return tuple(int(c) for c in tr.matching)  # type: ignore[arg-type]


def permutation_cycles(perm) -> tuple[tuple[int, ...], ...]:
    """Cycle decomposition of a permutation given in one-line notation."""
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        v = start
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = perm[v]
        cycles.append(tuple(cyc))
    return tuple(cycles)


@dataclass(frozen=True)
class TwoMatching:
    """Spanning subgraph made of vertex-disjoint edges and cycles."""

    edges: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...]


def perfect_two_matching(D: Digraph) -> TwoMatching | None:
    """Perfect 2-matching of a loop-free graph, or None if there is none.

    Built from a cycle factor: its 2-cycles give edges, longer cycles give
    cycles; loop-freeness rules out fixed points, so together they cover
    every vertex exactly.
    """
    if not D.is_symmetric():
        raise InputError("perfect_two_matching needs a graph (symmetric adjacency)")
    if D.has_loops():
        raise InputError("perfect_two_matching needs a loop-free graph")
    perm = cycle_factor(D)
    if perm is None:
        return None
    edges, cycles = [], []
    for cyc in permutation_cycles(perm):
        if len(cyc) == 2:
            edges.append((cyc[0], cyc[1]))
        else:
            cycles.append(cyc)
    return TwoMatching(edges=tuple(edges), cycles=tuple(cycles))


def hall_violations(D: Digraph, max_n: int = 16) -> list[tuple[int, ...]]:
    """Inclusion-minimal vertex sets S of a graph with |S| > |N(S)|."""
    if not D.is_symmetric():
        raise InputError("hall_violations needs a graph (symmetric adjacency)")
    if D.n > max_n:
        raise CapacityError(f"hall_violations capped at {max_n} vertices, got {D.n}")
    n = D.n
    nb_mask = [0] * n
    for v in range(n):
        m = 0
        for w in D.out_neighbors(v):
            m |= 1 << w
        nb_mask[v] = m
    minimal_masks: list[int] = []
    minimal_sets: list[tuple[int, ...]] = []
    for size in range(1, n + 1):
        for comb in combinations(range(n), size):
            smask = 0
            nmask = 0
            for v in comb:
                smask |= 1 << v
                nmask |= nb_mask[v]
            if any(m & smask == m for m in minimal_masks):
                continue
            if size > bin(nmask).count("1"):
                minimal_masks.append(smask)
                minimal_sets.append(comb)
    return minimal_sets


# === vertex/edge connectivity via max-flow ===

def _maxflow(cap: np.ndarray, s: int, t: int) -> tuple[int, np.ndarray]:
    """Edmonds-Karp max flow on an integer capacity matrix; returns (value, residual)."""
    res = cap.astype(np.int64).copy()
    n = res.shape[0]
    value = 0
    while True:
        parent = [-1] * n
        parent[s] = s
        q = deque([s])
        while q and parent[t] == -1:
            v = q.popleft()
            for w in np.flatnonzero(res[v]):
                w = int(w)
                if parent[w] == -1:
                    parent[w] = v
                    q.append(w)
        if parent[t] == -1:
            return value, res
        bottleneck = None
        v = t
        while v != s:
            u = parent[v]
            b = int(res[u, v])
            bottleneck = b if bottleneck is None else min(bottleneck, b)
            v = u
        v = t
        while v != s:
            u = parent[v]
            res[u, v] -= bottleneck
            res[v, u] += bottleneck
            v = u
        value += bottleneck


def _vertex_flow_network(D: Digraph, s: int, t: int) -> np.ndarray:
    """Split-vertex network: internal vertices get capacity 1, s and t stay whole.

    Node v is represented by v (in-copy) and v+n (out-copy).
    """
    n = D.n
    big = n + 1
    cap = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for v in range(n):
        cap[v, v + n] = big if v in (s, t) else 1
    for i, j in D.arcs():
        if i != j:
            cap[i + n, j] = big
    return cap


def connectivity_numbers(D: Digraph) -> tuple[int, int]:
    """(vertex connectivity, edge connectivity) of a connected graph, n >= 3."""
    if not D.is_symmetric():
        raise InputError("connectivity_numbers needs a graph (symmetric adjacency)")
    if D.n < 3:
        raise InputError("connectivity_numbers needs at least 3 vertices")
    if _weak_count(D) != 1:
        raise InputError("connectivity_numbers needs a connected graph")
    n = D.n
    arc_cap = D.adj.astype(np.int64).copy()
    np.fill_diagonal(arc_cap, 0)
    lam = min(_maxflow(arc_cap, 0, t)[0] for t in range(1, n))
    nonadjacent = [(i, j) for i, j in combinations(range(n), 2) if not D.adj[i, j]]
    if not nonadjacent:
        kappa = n - 1
    else:
        kappa = min(
            _maxflow(_vertex_flow_network(D, s, t), s + n, t)[0] for s, t in nonadjacent
        )
    return kappa, lam


def independent_paths(D: Digraph, s: int, t: int) -> list[list[int]] | None:
    """Two internally vertex-disjoint s-t paths in a graph, or None."""
    _check_vertices(D, (s, t))
    if s == t:
        raise InputError("endpoints must differ")
    n = D.n
    cap = _vertex_flow_network(D, s, t)
    value, res = _maxflow(cap, s + n, t)
    if value < 2:
        return None
    flow = np.maximum(cap - res, 0)
    paths = []
    for _ in range(2):
        path = [s]
        node = s + n
        while node != t:
            nxt = None
            for w in np.flatnonzero(flow[node]):
                w = int(w)
                nxt = w
                break
            flow[node, nxt] -= 1
            if nxt < n:
                path.append(nxt)
                node = nxt + n if nxt != t else nxt
            else:
                node = nxt
        paths.append(path)
    return paths


def hamiltonian_cycle(D: Digraph, limit_n: int = 12) -> list[int] | None:
    """Spanning dicycle found by backtracking, or None.

    Vertices are listed once, the closing arc back to the start is implied.
    For n = 1 a loop is required; for a graph the dicycle doubles as a
    spanning cycle (n = 2 uses both arcs of the edge).
    """
    n = D.n
    if n > limit_n:
        raise CapacityError(f"hamiltonian search capped at {limit_n} vertices, got {n}")
    if n == 1:
        return [0] if D.adj[0, 0] else None
    out = [D.out_neighbors(v) for v in range(n)]
    ins = [D.in_neighbors(v) for v in range(n)]
    if any(not o for o in out) or any(not i for i in ins):
        return None
    used = [False] * n
    used[0] = True
    path = [0]

    def feasible(last):
        for u in range(n):
            if used[u]:
                continue
            if not any((not used[w]) or w == 0 for w in out[u]):
                return False
            if not any((not used[w]) or w == last for w in ins[u]):
                return False
        return True

    def extend():
        last = path[-1]
        if len(path) == n:
            return bool(D.adj[last, 0])
        if not feasible(last):
            return False
        for w in out[last]:
            if not used[w]:
                used[w] = True
                path.append(w)
                if extend():
                    return True
                path.pop()
                used[w] = False
        return False

    return path if extend() else None


# === automorphisms and pattern search ===

def _search_order(D: Digraph) -> list[int]:
    """BFS order over the underlying graph so each vertex sees a placed neighbor."""
    n = D.n
    und = [set(D.out_neighbors(v)) | set(D.in_neighbors(v)) for v in range(n)]
    order, seen = [], [False] * n
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        q = deque([start])
        while q:
            v = q.popleft()
            order.append(v)
            for w in sorted(und[v]):
                if not seen[w]:
                    seen[w] = True
                    q.append(w)
    return order


@dataclass(frozen=True)
class AutomorphismReport:
    automorphisms: tuple[tuple[int, ...], ...]
    vertex_transitive: bool
    arc_transitive: bool

    @property
    def order(self) -> int:
        return len(self.automorphisms)


def automorphism_group(D: Digraph, limit_n: int = 10) -> AutomorphismReport:
    """All adjacency-preserving vertex permutations, with transitivity flags."""
    n = D.n
    if n > limit_n:
        raise CapacityError(f"automorphism search capped at {limit_n} vertices, got {n}")
    A = D.adj
    profile = [(D.in_degree(v), D.out_degree(v), int(A[v, v])) for v in range(n)]
    order = _search_order(D)
    image = [-1] * n
    taken = [False] * n
    found: list[tuple[int, ...]] = []

    def place(k):
        if k == len(order):
            found.append(tuple(image))
            return
        v = order[k]
        for w in range(n):
            if taken[w] or profile[w] != profile[v]:
                continue
            ok = True
            for m in range(k):
                u = order[m]
                fu = image[u]
                if A[u, v] != A[fu, w] or A[v, u] != A[w, fu]:
                    ok = False
                    break
            if ok:
                image[v] = w
                taken[w] = True
                place(k + 1)
                taken[w] = False
                image[v] = -1

    place(0)
    perms = tuple(sorted(found))
    vertex_orbit = {p[0] for p in perms}
    vertex_transitive = len(vertex_orbit) == n
    arcs = D.arcs()
    if arcs:
        a0 = arcs[0]
        arc_orbit = {(p[a0[0]], p[a0[1]]) for p in perms}
        arc_transitive = arc_orbit == set(arcs)
    else:
        arc_transitive = True
    return AutomorphismReport(perms, vertex_transitive, arc_transitive)


def induced_subgraph_search(D: Digraph, H: Digraph) -> tuple[int, ...] | None:
    """Injective map f with H(u,v) = D(f(u),f(v)) for all u,v, or None."""
    if H.n > D.n:
        return None
    AD, AH = D.adj, H.adj
    order = _search_order(H)
    image = [-1] * H.n
    taken = [False] * D.n

    def place(k):
        if k == len(order):
            return True
        v = order[k]
        for w in range(D.n):
            if taken[w] or AH[v, v] != AD[w, w]:
                continue
            ok = True
            for m in range(k):
                u = order[m]
                fu = image[u]
                if AH[u, v] != AD[fu, w] or AH[v, u] != AD[w, fu]:
                    ok = False
                    break
            if ok:
                image[v] = w
                taken[w] = True
                if place(k + 1):
                    return True
                taken[w] = False
                image[v] = -1
        return False

    return tuple(image) if place(0) else None


def bipartition(D: Digraph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """2-coloring of a graph, or None if it has an odd closed walk (loops included)."""
    if not D.is_symmetric():
        raise InputError("bipartition needs a graph (symmetric adjacency)")
    if D.has_loops():
        return None
    n = D.n
    color = [-1] * n
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        q = deque([start])
        while q:
            v = q.popleft()
            for w in D.out_neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    q.append(w)
                elif color[w] == color[v]:
                    return None
    part0 = tuple(v for v in range(n) if color[v] == 0)
    part1 = tuple(v for v in range(n) if color[v] == 1)
    return part0, part1


def induced_subdigraph(D: Digraph, vertices) -> Digraph:
    vs = _check_vertices(D, vertices)
    if len(set(vs)) != len(vs) or not vs:
        raise InputError("vertex list must be nonempty and duplicate-free")
    idx = np.array(vs)
    return Digraph(D.adj[np.ix_(idx, idx)])


# === standard patterns ===

def directed_cycle(n: int) -> Digraph:
    if n < 1:
        raise InputError("need n >= 1")
    a = np.zeros((n, n), dtype=np.int8)
    for i in range(n):
        a[i, (i + 1) % n] = 1
    return Digraph(a)


def directed_path(n: int) -> Digraph:
    if n < 1:
        raise InputError("need n >= 1")
    a = np.zeros((n, n), dtype=np.int8)
    for i in range(n - 1):
        a[i, i + 1] = 1
    return Digraph(a)


def cycle_graph(n: int) -> Digraph:
    """Undirected n-cycle (n = 2 degenerates to a single edge)."""
    if n < 2:
        raise InputError("need n >= 2")
    a = np.zeros((n, n), dtype=np.int8)
    for i in range(n):
        j = (i + 1) % n
        a[i, j] = a[j, i] = 1
    return Digraph(a)


def path_graph(n: int) -> Digraph:
    if n < 1:
        raise InputError("need n >= 1")
    a = np.zeros((n, n), dtype=np.int8)
    for i in range(n - 1):
        a[i, i + 1] = a[i + 1, i] = 1
    return Digraph(a)


def complete_graph(n: int) -> Digraph:
    if n < 1:
        raise InputError("need n >= 1")
    a = np.ones((n, n), dtype=np.int8)
    np.fill_diagonal(a, 0)
    return Digraph(a)


def star_graph(leaves: int) -> Digraph:
    """Center 0 joined to `leaves` leaves."""
    if leaves < 1:
        raise InputError("need at least one leaf")
    n = leaves + 1
    a = np.zeros((n, n), dtype=np.int8)
    a[0, 1:] = 1
    a[1:, 0] = 1
    return Digraph(a)


def claw_graph() -> Digraph:
    return star_graph(3)


def paw_graph() -> Digraph:
    """Triangle with one pendant vertex."""
    return Digraph(
        [
            [0, 1, 0, 0],
            [1, 0, 1, 1],
            [0, 1, 0, 1],
            [0, 1, 1, 0],
        ]
    )


def k33_minus_edge() -> Digraph:
    """Complete bipartite graph on 3+3 vertices minus the edge {0, 5}."""
    a = np.zeros((6, 6), dtype=np.int8)
    for i in (0, 1, 2):
        for j in (3, 4, 5):
            a[i, j] = a[j, i] = 1
    a[0, 5] = a[5, 0] = 0
    return Digraph(a)


def hypercube_graph(k: int) -> Digraph:
    """Binary k-cube: vertices are bitmasks, edges join masks at Hamming distance 1."""
    if k < 0:
        raise InputError("need k >= 0")
    n = 1 << k
    a = np.zeros((n, n), dtype=np.int8)
    for v in range(n):
        for b in range(k):
            a[v, v ^ (1 << b)] = 1
    return Digraph(a)


def add_loops(D: Digraph) -> Digraph:
    a = D.adj.copy()
    np.fill_diagonal(a, 1)
    return Digraph(a)
