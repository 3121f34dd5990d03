"""Shared test helpers: independent oracles kept deliberately dumb."""
import itertools
from collections import Counter, deque

import numpy as np

from unigraph import Digraph


def pnk_digraph(n: int, k: int) -> Digraph:
    """Permutation digraph P(n,k): vertices are the injective k-tuples over
    {1..n} in lex order, with an arc t -> t[1:]+(i) for every i not in t."""
    verts = list(itertools.permutations(range(1, n + 1), k))
    index = {t: i for i, t in enumerate(verts)}
    a = np.zeros((len(verts), len(verts)), dtype=np.int8)
    for t in verts:
        for i in range(1, n + 1):
            if i not in t:
                a[index[t], index[t[1:] + (i,)]] = 1
    return Digraph(a)


def find_isomorphism(d1: Digraph, d2: Digraph):
    """Backtracking digraph isomorphism oracle. Returns a vertex map
    (tuple: vertex of d1 -> vertex of d2) or None."""
    if d1.n != d2.n or d1.arc_count != d2.arc_count:
        return None
    n = d1.n
    a1, a2 = d1.adj, d2.adj

    def profile(a, v):
        return (int(a[v].sum()), int(a[:, v].sum()), int(a[v, v]))

    prof1 = [profile(a1, v) for v in range(n)]
    prof2 = [profile(a2, v) for v in range(n)]
    if Counter(prof1) != Counter(prof2):
        return None

    # fill order: BFS over the underlying graph so new vertices are pinned
    # by already-mapped neighbors
    seen = [False] * n
    order = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in range(n):
                if not seen[w] and (a1[u, w] or a1[w, u]):
                    seen[w] = True
                    queue.append(w)

    mapping = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        u = order[i]
        for w in range(n):
            if used[w] or prof2[w] != prof1[u]:
                continue
            ok = True
            for v in order[:i]:
                x = mapping[v]
                if a1[u, v] != a2[w, x] or a1[v, u] != a2[x, w]:
                    ok = False
                    break
            if ok:
                mapping[u] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                mapping[u] = -1
        return False

    return tuple(mapping) if extend(0) else None


def random_digraph(rng, n: int, density: float, symmetric: bool = False, loops: bool = False) -> Digraph:
    a = (rng.random((n, n)) < density).astype(np.int8)
    if symmetric:
        a = np.maximum(a, a.T)
    if not loops:
        np.fill_diagonal(a, 0)
    return Digraph(a)


def check_certificate(D: Digraph, matrix, tol: float, delta: float) -> bool:
    """Independent certificate verification by plain multiplication."""
    m = np.asarray(matrix, dtype=np.complex128)
    n = m.shape[0]
    eye = np.eye(n)
    if max(np.abs(m @ m.conj().T - eye).max(), np.abs(m.conj().T @ m - eye).max()) > tol:
        return False
    return bool(((np.abs(m) > delta) == D.adj.astype(bool)).all())
