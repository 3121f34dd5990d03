"""Line digraphs: construction from a multidigraph, recognition, blocks.

The line digraph L(B) has one vertex per arc of B and an arc (a, b)
exactly when the head of a is the tail of b.  Recognition relies on the
pattern test: D is a line digraph iff any two rows of its adjacency
matrix are identical or have disjoint support, and likewise any two
columns.  Grouping rows/columns by support and matching the groups
recovers a base whose line digraph is D vertex-for-vertex.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .digraphs import Digraph
from .errors import InputError

__all__ = [
    "Multidigraph",
    "LineDigraphResult",
    "RecognitionResult",
    "BlockDecomposition",
    "line_digraph",
    "recognize_line_digraph",
    "independent_full_submatrices",
]


class Multidigraph:
    """Digraph with arc multiplicities: entry (i, j) counts arcs i -> j."""

    __slots__ = ("_mult",)

    def __init__(self, multiplicities):
        m = np.array(multiplicities, dtype=np.int64)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InputError(f"multiplicity matrix must be square, got shape {m.shape}")
        if m.shape[0] < 1:
            raise InputError("a multidigraph needs at least one vertex")
        if (m < 0).any():
            raise InputError("arc multiplicities must be nonnegative")
        m.setflags(write=False)
        self._mult = m

    @property
    def mult(self) -> np.ndarray:
        return self._mult

    @property
    def n(self) -> int:
        return int(self._mult.shape[0])

    @property
    def arc_count(self) -> int:
        return int(self._mult.sum())

    def arcs(self) -> list[tuple[int, int, int]]:
        """(tail, head, copy) triples, ordered by tail, then head, then copy."""
        out = []
        for i in range(self.n):
            for j in range(self.n):
                for c in range(int(self._mult[i, j])):
                    out.append((i, j, c))
        return out

    def __eq__(self, other):
        return isinstance(other, Multidigraph) and np.array_equal(self._mult, other._mult)

    def __repr__(self):
        return f"Multidigraph(n={self.n}, arcs={self.arc_count})"


@dataclass(frozen=True)
class LineDigraphResult:
    """L(B) together with the arc of B that each L-vertex stands for."""

    digraph: Digraph
    labels: tuple[tuple[int, int, int], ...]


def line_digraph(B: Multidigraph) -> LineDigraphResult:
    """Line digraph of a multidigraph with at least one arc.

    Parallel arcs give rise to distinct L-vertices with identical rows and
    columns; a loop at v yields an L-vertex with a loop.
    """
    labels = B.arcs()
    if not labels:
        raise InputError("line digraph of an arcless multidigraph is empty")
    m = len(labels)
    a = np.zeros((m, m), dtype=np.int8)
    for p, (_, head, _) in enumerate(labels):
        for q, (tail, _, _) in enumerate(labels):
            if head == tail:
                a[p, q] = 1
    return LineDigraphResult(digraph=Digraph(a), labels=tuple(labels))


@dataclass(frozen=True)
class RecognitionResult:
    """Outcome of line-digraph recognition.

    On success `base` is a multidigraph and `vertex_arcs[v] = (tail, head)`
    names the base arc that vertex v stands for, so that D has the arc
    (a, b) iff vertex_arcs[a].head == vertex_arcs[b].tail -- an exact
    correspondence, checkable without any isomorphism search.

    On failure `base` is None and `witness` is ("row", i, j) for two rows
    that overlap without being identical, or ("column", i, j) likewise.
    """

    base: Multidigraph | None
    vertex_arcs: tuple[tuple[int, int], ...]
    witness: tuple[str, int, int] | None

    @property
    def is_line_digraph(self) -> bool:
        return self.witness is None


def _support_classes(A: np.ndarray):
    """Group indices of equal nonzero rows of A; returns (classes, class_of_row).

    Zero rows belong to no class (class_of_row = -1).  Classes are ordered
    by their smallest member.
    """
    n = A.shape[0]
    key_to_class: dict[bytes, int] = {}
    classes: list[list[int]] = []
    class_of = [-1] * n
    for i in range(n):
        row = A[i]
        if not row.any():
            continue
        key = row.tobytes()
        c = key_to_class.get(key)
        if c is None:
            c = len(classes)
            key_to_class[key] = c
            classes.append([])
        classes[c].append(i)
        class_of[i] = c
    return classes, class_of


def recognize_line_digraph(D: Digraph) -> RecognitionResult:
    """Decide whether D = L(B) for some multidigraph B and recover B if so.

    In a line digraph the row of a vertex (an arc of B) is determined by the
    arc's head and the column by its tail, so rows sharing a column must be
    identical, and dually.  When those two checks pass, row classes and
    column classes pair up (the support of a row class is exactly one column
    class); each pair becomes one base vertex.  Vertices with a zero row are
    arcs into a common fresh sink, those with a zero column arcs out of a
    common fresh source; merging them is harmless because no line-digraph
    arc ever depends on the head of a sink or the tail of a source.

    Base vertices from matched pairs are ordered by the smallest D-vertex
    involved; the source and sink, when present, come last.
    """
    A = D.adj
    n = D.n

    row_classes, row_of = _support_classes(A)
    col_classes, col_of = _support_classes(np.ascontiguousarray(A.T))

    for j in range(n):
        rows = [int(i) for i in np.flatnonzero(A[:, j])]
        if len({row_of[i] for i in rows}) > 1:
            first = rows[0]
            other = next(i for i in rows if row_of[i] != row_of[first])
            return RecognitionResult(base=None, vertex_arcs=(), witness=("row", first, other))
    for i in range(n):
        cols = [int(j) for j in np.flatnonzero(A[i])]
        if len({col_of[j] for j in cols}) > 1:
            first = cols[0]
            other = next(j for j in cols if col_of[j] != col_of[first])
            return RecognitionResult(base=None, vertex_arcs=(), witness=("column", first, other))

    # With both checks passed, the support of each row class is exactly the
    # member set of one column class, and the map row class -> column class
    # is a bijection; the pair stands for one base vertex (the common head
    # of the row class = the common tail of the column class).
    pairs = []
    for rc, members in enumerate(row_classes):
        j = int(np.flatnonzero(A[members[0]])[0])
        cc = col_of[j]
        smallest = min(members[0], col_classes[cc][0])
        pairs.append((smallest, rc, cc))
    pairs.sort()

    head_of = [-1] * n
    tail_of = [-1] * n
    for u, (_, rc, cc) in enumerate(pairs):
        for v in row_classes[rc]:
            head_of[v] = u
        for v in col_classes[cc]:
            tail_of[v] = u

    b = len(pairs)
    source = sink = None
    if any(t == -1 for t in tail_of):
        source = b
        b += 1
    if any(h == -1 for h in head_of):
        sink = b
        b += 1
    for v in range(n):
        if tail_of[v] == -1:
            tail_of[v] = source
        if head_of[v] == -1:
            head_of[v] = sink

    mult = np.zeros((b, b), dtype=np.int64)
    for v in range(n):
        mult[tail_of[v], head_of[v]] += 1
    vertex_arcs = tuple((tail_of[v], head_of[v]) for v in range(n))
    return RecognitionResult(base=Multidigraph(mult), vertex_arcs=vertex_arcs, witness=None)


@dataclass(frozen=True)
class BlockDecomposition:
    """Partition of the nonzero entries into full row-set x column-set blocks."""

    blocks: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


def independent_full_submatrices(D: Digraph) -> BlockDecomposition:
    """Split the pattern into fully-populated blocks with disjoint rows and columns.

    Rows with equal support form a block against that common support.  This
    succeeds exactly when any two rows are identical or support-disjoint and
    every column's support is a whole row class; otherwise the offending
    entry is reported.
    """
    A = D.adj
    row_classes, _ = _support_classes(A)
    blocks = []
    for members in row_classes:
        cols = tuple(int(j) for j in np.flatnonzero(A[members[0]]))
        rows = tuple(members)
        row_set = set(rows)
        for j in cols:
            col_support = {int(i) for i in np.flatnonzero(A[:, j])}
            if col_support != row_set:
                bad = min(col_support ^ row_set)
                raise InputError(
                    "pattern does not split into independent full blocks: "
                    f"entry ({bad}, {j}) breaks the block of rows {rows}"
                )
        blocks.append((rows, cols))
    return BlockDecomposition(blocks=tuple(blocks))
