"""
Binary matroids: the column matroid of a 0/1 matrix over GF(2).

Columns carry stable element identities (``elements``); weight functions are
dicts keyed by those identities and survive deletion, contraction and duality.
"""
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..graphs.multigraph import Multigraph
from ..errors import GraphFormatError


def to_gf2(matrix) -> np.ndarray:
    return np.array(matrix, dtype=np.uint8) % 2


@dataclass(frozen=True)
class RowReduceResult:
    matrix: np.ndarray
    rank: int
    pivots: Tuple[int, ...]


def gf2_row_reduce(matrix: np.ndarray) -> RowReduceResult:
    """Reduced row echelon form over GF(2)"""
    mat = to_gf2(matrix).copy()
    m, n = mat.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        candidates = np.nonzero(mat[row:, col])[0]
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        for r in np.nonzero(mat[:, col])[0]:
            if r != row:
                mat[r, :] ^= mat[row, :]
        pivots.append(col)
        row += 1
    return RowReduceResult(matrix=mat, rank=len(pivots), pivots=tuple(pivots))


def gf2_rank(matrix: np.ndarray) -> int:
    return gf2_row_reduce(matrix).rank


def gf2_nullspace_basis(matrix: np.ndarray) -> np.ndarray:
    """Rows spanning the nullspace; from RREF this is the standard-form complement [D^T | I]"""
    reduced = gf2_row_reduce(matrix)
    mat = reduced.matrix
    n = mat.shape[1]
    pivots = set(reduced.pivots)
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        vec = np.zeros(n, dtype=np.uint8)
        vec[free] = 1
        for row, col in enumerate(reduced.pivots):
            if mat[row, free] == 1:
                vec[col] = 1
        basis.append(vec)
    if not basis:
        return np.zeros((0, n), dtype=np.uint8)
    return np.vstack(basis)


@dataclass(frozen=True, eq=False)
class BinaryMatroid:
    """Immutable; minors and duals are new values with the same element identities."""
    matrix: np.ndarray
    elements: Tuple = field(default=None)

    def __post_init__(self):
        matrix = to_gf2(self.matrix)
        if matrix.ndim != 2:
            raise ValueError("matroid representation must be a 2-d matrix")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        elements = tuple(range(matrix.shape[1])) if self.elements is None else tuple(self.elements)
        if len(elements) != matrix.shape[1] or len(set(elements)) != len(elements):
            raise ValueError("one distinct element identity per column is required")
        object.__setattr__(self, "elements", elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    def column(self, element) -> int:
        try:
            return self.elements.index(element)
        except ValueError:
            raise ValueError(f"unknown matroid element: {element!r}") from None

    def rank(self, subset: Optional[Iterable] = None) -> int:
        """GF(2) rank of the chosen columns (all columns by default)"""
        if subset is None:
            return gf2_rank(self.matrix)
        columns = sorted({self.column(e) for e in subset})
        if not columns:
            return 0
        return gf2_rank(self.matrix[:, columns])

    def delete(self, element) -> "BinaryMatroid":
        col = self.column(element)
        matrix = np.delete(self.matrix, col, axis=1)
        return BinaryMatroid(matrix, self.elements[:col] + self.elements[col + 1:])

    def contract(self, element) -> "BinaryMatroid":
        """Pivot on the element's column, then drop that row and column; a loop is just deleted"""
        col = self.column(element)
        rows = np.nonzero(self.matrix[:, col])[0]
        if rows.size == 0:
            return self.delete(element)
        pivot = int(rows[0])
        mat = self.matrix.copy()
        for r in rows[1:]:
            mat[r, :] ^= mat[pivot, :]
        mat = np.delete(np.delete(mat, pivot, axis=0), col, axis=1)
        return BinaryMatroid(mat, self.elements[:col] + self.elements[col + 1:])

    def dual(self) -> "BinaryMatroid":
        return BinaryMatroid(gf2_nullspace_basis(self.matrix), self.elements)

    def is_loop(self, element) -> bool:
        return not self.matrix[:, self.column(element)].any()

    def is_coloop(self, element) -> bool:
        rest = [e for e in self.elements if e != element]
        return self.rank(rest) == self.rank() - 1

    def loops(self) -> FrozenSet:
        return frozenset(e for e in self.elements if self.is_loop(e))

    def coloops(self) -> FrozenSet:
        full = self.rank()
        return frozenset(
            e for e in self.elements
            if self.rank([f for f in self.elements if f != e]) == full - 1
        )

    def parallel_pairs(self) -> List[Tuple]:
        """Size-2 circuits: duplicate nonzero columns"""
        pairs = []
        for (i, a), (j, b) in combinations(enumerate(self.elements), 2):
            ci, cj = self.matrix[:, i], self.matrix[:, j]
            if ci.any() and np.array_equal(ci, cj):
                pairs.append((a, b))
        return pairs

    def series_pairs(self) -> List[Tuple]:
        """Size-2 cocircuits, i.e. size-2 circuits of the dual"""
        return self.dual().parallel_pairs()

    def bicycle_dimension(self) -> int:
        """dim(rowspace ∩ rowspace⊥) = rank(A) - rank(A A^T) over GF(2)"""
        gram = (self.matrix.astype(np.int64) @ self.matrix.T.astype(np.int64)) % 2
        return self.rank() - gf2_rank(gram)

    def same_rank_function(self, other: "BinaryMatroid") -> bool:
        """Exhaustive comparison over all subsets; small matroids only"""
        if set(self.elements) != set(other.elements):
            return False
        for size in range(len(self.elements) + 1):
            for subset in combinations(self.elements, size):
                if self.rank(subset) != other.rank(subset):
                    return False
        return True


def cycle_matroid(g: Multigraph) -> BinaryMatroid:
    """Vertex-edge incidence matrix over GF(2); a loop is a zero column"""
    matrix = np.zeros((g.vertex_count, g.edge_count), dtype=np.uint8)
    for col, (u, v) in enumerate(g.edges):
        if u != v:
            matrix[u, col] = 1
            matrix[v, col] = 1
    return BinaryMatroid(matrix, g.labels)


def parse_matroid_text(text: str) -> BinaryMatroid:
    """
    Format: ``matrix <rows> <cols>`` followed by one 0/1 string per row.
    """
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise GraphFormatError("missing 'matrix' line")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "matrix":
        raise GraphFormatError(f"bad header {lines[0]!r}")
    try:
        rows, cols = int(header[1]), int(header[2])
    except ValueError:
        raise GraphFormatError(f"bad header {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != rows:
        raise GraphFormatError(f"expected {rows} rows, found {len(body)}")
    matrix = np.zeros((rows, cols), dtype=np.uint8)
    for r, line in enumerate(body):
        if len(line) != cols or set(line) - {"0", "1"}:
            raise GraphFormatError(f"row {r + 1} is not a {cols}-character 0/1 string")
        matrix[r, :] = [int(ch) for ch in line]
    return BinaryMatroid(matrix)


def read_matroid(path: Union[str, Path]) -> BinaryMatroid:
    return parse_matroid_text(Path(path).read_text())


def format_matroid_text(m: BinaryMatroid) -> str:
    rows, cols = m.matrix.shape
    lines = [f"matrix {rows} {cols}"]
    lines.extend("".join(str(int(x)) for x in row) for row in m.matrix)
    return "\n".join(lines) + "\n"
