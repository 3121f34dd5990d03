"""Matrix workhorse: supports, unitarity, DFT, weighing matrices, permutations.

Complex matrices are plain numpy arrays; the functions here are pure.
Weighing-matrix arithmetic stays in exact integers; everything unitary is
measured by `unitarity_residual`, the max entrywise deviation of M M† and
M† M from the identity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .digraphs import Digraph
from .errors import CapacityError, InputError

__all__ = [
    "support",
    "unitarity_residual",
    "dft",
    "weighing_weight",
    "hypercube_weighing",
    "block_double",
    "nearest_unitary",
    "Permutation",
    "complementary",
    "first_noncomplementary_pair",
    "pairwise_complementary",
    "circulant_spectrum",
    "matrix_to_jsonable",
    "matrix_from_jsonable",
    "HYPERCUBE_SEED",
    "HYPERCUBE_LOOPED_SEED",
]


def _square(m) -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise InputError(f"need a nonempty square matrix, got shape {a.shape}")
    return a


def support(m, tol: float = 1e-9) -> Digraph:
    """Digraph of a matrix: arc (i, j) present iff |m[i, j]| > tol."""
    a = _square(m)
    if tol < 0:
        raise InputError("tol must be nonnegative")
    return Digraph((np.abs(a) > tol).astype(np.int8))


def unitarity_residual(m) -> float:
    """Max entrywise deviation of M·M† and M†·M from the identity."""
    a = _square(m).astype(np.complex128)
    eye = np.eye(a.shape[0])
    left = np.abs(a @ a.conj().T - eye).max()
    right = np.abs(a.conj().T @ a - eye).max()
    return float(max(left, right))


def dft(n: int) -> np.ndarray:
    """Unitary Fourier matrix: entries omega^(jk)/sqrt(n), omega = e^(2*pi*i/n)."""
    if n < 1:
        raise InputError("need n >= 1")
    j = np.arange(n)
    return np.exp(2j * np.pi * np.outer(j, j) / n) / math.sqrt(n)


def weighing_weight(w) -> int | None:
    """Weight k with W·Wᵀ = k·I in exact integer arithmetic, or None.

    Entries must lie in {-1, 0, 1}; anything else is an input error rather
    than a plain "no".
    """
    a = _square(w)
    if not np.issubdtype(a.dtype, np.integer):
        if not np.equal(np.asarray(a, dtype=np.float64), np.round(a)).all():
            raise InputError("weighing matrices have integer entries")
        a = a.astype(np.int64)
    if not np.isin(a, (-1, 0, 1)).all():
        raise InputError("weighing matrix entries must be in {-1, 0, 1}")
    a = a.astype(np.int64)
    prod = a @ a.T
    k = int(prod[0, 0])
    if k >= 1 and np.array_equal(prod, k * np.eye(a.shape[0], dtype=np.int64)):
        return k
    return None


# Weight-2 seed supported by the 4-cycle Q_2 (vertices numbered as bitmasks),
# and the weight-3 seed supported by Q_2 with a loop at every vertex.
HYPERCUBE_SEED = np.array(
    [
        [0, -1, 1, 0],
        [-1, 0, 0, 1],
        [1, 0, 0, 1],
        [0, 1, 1, 0],
    ],
    dtype=np.int64,
)
HYPERCUBE_LOOPED_SEED = np.array(
    [
        [1, 1, -1, 0],
        [1, -1, 0, 1],
        [-1, 0, -1, 1],
        [0, 1, 1, 1],
    ],
    dtype=np.int64,
)
_HYPERCUBE_CAP = 4096


def hypercube_weighing(k: int, loops: bool = False) -> np.ndarray:
    """Integer weighing matrix supported by the k-cube (with loops: cube + loops).

    Doubling step [[W, -I], [I, Wᵀ]] raises the weight by one and extends the
    support from M(Q_k) to M(Q_{k+1}); the new coordinate is the high bit of
    the vertex index.  Weight is k, or k+1 with loops.
    """
    if k < 2:
        raise InputError("need k >= 2")
    if 2**k > _HYPERCUBE_CAP:
        raise CapacityError(f"hypercube weighing capped at {_HYPERCUBE_CAP} rows, got 2^{k}")
    w = (HYPERCUBE_LOOPED_SEED if loops else HYPERCUBE_SEED).copy()
    for _ in range(k - 2):
        eye = np.eye(w.shape[0], dtype=np.int64)
        w = np.block([[w, -eye], [eye, w.T]])
    return w


def block_double(a, tol: float = 1e-8) -> np.ndarray:
    """(1/sqrt 2)·[[A, -I], [I, A†]] for a unitary A; unitary again, twice the size.

    For real A the corner is the plain transpose; for complex A only the
    conjugate transpose keeps the result unitary, so that is what is used.
    """
    m = _square(a).astype(np.complex128)
    r = unitarity_residual(m)
    if r > tol:
        raise InputError(f"block_double needs a unitary input, residual {r:.3e} > {tol:.1e}")
    eye = np.eye(m.shape[0])
    return np.block([[m, -eye], [eye, m.conj().T]]) / math.sqrt(2)


def nearest_unitary(m) -> np.ndarray:
    """Unitary polar factor of m (the closest unitary in Frobenius norm).

    Scaled Newton iteration X <- (mu X + (mu X)^-†)/2; on singular input,
    stall, or divergence, falls back to the singular-value factorization.
    """
    x = _square(m).astype(np.complex128)
    n = x.shape[0]
    try:
        for _ in range(100):
            inv = np.linalg.inv(x)
            mu = math.sqrt(np.linalg.norm(inv, "fro") / np.linalg.norm(x, "fro"))
            nxt = 0.5 * (mu * x + inv.conj().T / mu)
            if not np.isfinite(nxt).all():
                raise np.linalg.LinAlgError("iteration diverged")
            step = np.linalg.norm(nxt - x, "fro")
            x = nxt
            if step <= 1e-14 * n:
                return x
        raise np.linalg.LinAlgError("iteration stalled")
    except (np.linalg.LinAlgError, FloatingPointError, ZeroDivisionError):
        u, _, vh = np.linalg.svd(_square(m).astype(np.complex128))
        return u @ vh


@dataclass(frozen=True)
class Permutation:
    """Permutation of {0..n-1} in one-line notation: i maps to mapping[i]."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        n = len(self.mapping)
        if n < 1 or sorted(self.mapping) != list(range(n)):
            raise InputError(f"not a permutation of 0..{n - 1}: {self.mapping}")

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def matrix(self) -> np.ndarray:
        """0/1 matrix with a 1 at (i, mapping[i]): row = source, column = image."""
        p = np.zeros((self.n, self.n), dtype=np.int8)
        p[np.arange(self.n), np.array(self.mapping)] = 1
        return p

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return Permutation(tuple(inv))


def complementary(p: Permutation, q: Permutation) -> bool:
    """Whether P_{i,j} = P_{h,k} = Q_{i,k} = 1 always forces Q_{h,j} = 1.

    In one-line terms: q(i) = p(h) implies q(h) = p(i) for all i, h.  The
    swapped implication (P and Q exchanged) follows by substituting i and h,
    so one scan settles both.
    """
    if p.n != q.n:
        raise InputError(f"size mismatch: {p.n} vs {q.n}")
    pinv = p.inverse()
    for i in range(p.n):
        h = pinv(q(i))
        if q(h) != p(i):
            return False
    return True


def first_noncomplementary_pair(perms) -> tuple[int, int] | None:
    """First index pair (i, j), i < j, whose permutations fail `complementary`."""
    perms = list(perms)
    for i in range(len(perms)):
        for j in range(i + 1, len(perms)):
            if not complementary(perms[i], perms[j]):
                return (i, j)
    return None


def pairwise_complementary(perms) -> bool:
    return first_noncomplementary_pair(perms) is None


def circulant_spectrum(n: int, residues) -> np.ndarray:
    """Eigenvalues of the circulant 0/1 matrix with ones at offsets `residues`.

    lambda_j = sum over s of omega^(j s), omega = e^(2 pi i / n), j = 0..n-1.
    """
    if n < 1:
        raise InputError("need n >= 1")
    S = sorted({int(s) for s in residues})
    if not S:
        raise InputError("need at least one residue")
    if S[0] < 0 or S[-1] >= n:
        raise InputError(f"residues must lie in 0..{n - 1}, got {S}")
    j = np.arange(n)
    omega = np.exp(2j * np.pi / n)
    return np.sum(omega ** np.outer(j, np.array(S)), axis=1)


def matrix_to_jsonable(m) -> dict:
    """JSON form: complex entries as [re, im] pairs, integer entries as ints."""
    a = _square(m)
    if np.iscomplexobj(a):
        entries = [[[float(v.real), float(v.imag)] for v in row] for row in a]
    elif np.issubdtype(a.dtype, np.integer):
        entries = [[int(v) for v in row] for row in a]
    else:
        entries = [[float(v) for v in row] for row in a]
    return {"n": int(a.shape[0]), "entries": entries}


def matrix_from_jsonable(obj) -> np.ndarray:
    try:
        n = int(obj["n"])
        entries = obj["entries"]
        if len(entries) != n or any(len(row) != n for row in entries):
            raise InputError(f"entries are not {n}x{n}")
        first = entries[0][0]
        if isinstance(first, (list, tuple)):
            return np.array(
                [[complex(v[0], v[1]) for v in row] for row in entries], dtype=np.complex128
            )
        if all(isinstance(v, int) for row in entries for v in row):
            return np.array(entries, dtype=np.int64)
        return np.array(entries, dtype=np.float64)
    except (KeyError, TypeError, IndexError) as exc:
        raise InputError(f"not a serialized matrix: {exc}") from exc
