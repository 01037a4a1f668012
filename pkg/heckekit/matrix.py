"""Sparse matrices with Laurent polynomial entries."""

from __future__ import annotations

from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from .errors import SizeMismatch
from .laurent import ONE, ZERO, LaurentPoly, Scalar, as_laurent

Entries = Dict[int, Dict[int, LaurentPoly]]


class LaurentMatrix:
    """
    Row-sparse matrix over ``Z[v, v^-1]``.

    Only nonzero entries are stored, row by row, so equality is structural.
    Matrices act on column vectors: the column of index ``j`` holds the
    image of the ``j``-th basis vector.
    """

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, nrows: int, ncols: int, entries: Optional[Entries] = None):
        self.nrows = nrows
        self.ncols = ncols
        self._rows: Entries = {}
        for i, row in (entries or {}).items():
            kept = {j: c for j, c in row.items() if c}
            if kept:
                self._rows[i] = kept

    @classmethod
    def zeros(cls, nrows: int, ncols: Optional[int] = None) -> LaurentMatrix:
        return cls(nrows, nrows if ncols is None else ncols)

    @classmethod
    def identity(cls, n: int) -> LaurentMatrix:
        return cls.scalar(n, ONE)

    @classmethod
    def scalar(cls, n: int, c: Scalar) -> LaurentMatrix:
        c = as_laurent(c)
        return cls(n, n, {i: {i: c} for i in range(n)})

    @classmethod
    def diagonal_matrix(cls, diag: Sequence[Scalar]) -> LaurentMatrix:
        return cls(len(diag), len(diag), {i: {i: as_laurent(c)} for i, c in enumerate(diag)})

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[Scalar]]) -> LaurentMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        entries = {i: {j: as_laurent(c) for j, c in enumerate(row)} for i, row in enumerate(rows)}
        return cls(nrows, ncols, entries)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Dict[int, LaurentPoly]]) -> LaurentMatrix:
        """Build from images of basis vectors: ``columns[j]`` maps row -> entry."""
        entries: Entries = {}
        for j, col in enumerate(columns):
            for i, c in col.items():
                if c:
                    entries.setdefault(i, {})[j] = c
        return cls(nrows, len(columns), entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, key: Tuple[int, int]) -> LaurentPoly:
        i, j = key
        return self._rows.get(i, {}).get(j, ZERO)

    def items(self) -> Iterator[Tuple[int, int, LaurentPoly]]:
        for i in sorted(self._rows):
            row = self._rows[i]
            for j in sorted(row):
                yield i, j, row[j]

    def row(self, i: int) -> Dict[int, LaurentPoly]:
        return dict(self._rows.get(i, {}))

    def column(self, j: int) -> Dict[int, LaurentPoly]:
        return {i: row[j] for i, row in self._rows.items() if j in row}

    def nnz(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def is_zero(self) -> bool:
        return not self._rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, tuple(self.items())))

    def _check_same_shape(self, other: LaurentMatrix, op: str):
        if self.shape != other.shape:
            raise SizeMismatch(f"cannot {op} matrices of shape {self.shape} and {other.shape}")

    def __add__(self, other: LaurentMatrix) -> LaurentMatrix:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        self._check_same_shape(other, "add")
        entries = {i: dict(row) for i, row in self._rows.items()}
        for i, row in other._rows.items():
            target = entries.setdefault(i, {})
            for j, c in row.items():
                target[j] = target.get(j, ZERO) + c
        return LaurentMatrix(self.nrows, self.ncols, entries)

    def __neg__(self) -> LaurentMatrix:
        return LaurentMatrix(self.nrows, self.ncols,
                             {i: {j: -c for j, c in row.items()} for i, row in self._rows.items()})

    def __sub__(self, other: LaurentMatrix) -> LaurentMatrix:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> LaurentMatrix:
        c = as_laurent(c)
        return LaurentMatrix(self.nrows, self.ncols,
                             {i: {j: c * x for j, x in row.items()} for i, row in self._rows.items()})

    def __mul__(self, other):
        """Scalar multiplication; use ``@`` for the matrix product."""
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other: LaurentMatrix) -> LaurentMatrix:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise SizeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        entries: Entries = {}
        for i, row in self._rows.items():
            acc: Dict[int, LaurentPoly] = {}
            for k, a in row.items():
                for j, b in other._rows.get(k, {}).items():
                    acc[j] = acc.get(j, ZERO) + a * b
            entries[i] = acc
        return LaurentMatrix(self.nrows, other.ncols, entries)

    def __pow__(self, n: int) -> LaurentMatrix:
        if self.nrows != self.ncols:
            raise SizeMismatch(f"cannot raise a {self.shape} matrix to a power")
        result = LaurentMatrix.identity(self.nrows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def apply(self, vector: Dict[int, LaurentPoly]) -> Dict[int, LaurentPoly]:
        """Multiply a sparse column vector ``{index: coefficient}``."""
        out: Dict[int, LaurentPoly] = {}
        for i, row in self._rows.items():
            acc = ZERO
            for j, c in row.items():
                x = vector.get(j)
                if x:
                    acc = acc + c * x
            if acc:
                out[i] = acc
        return out

    def kron(self, other: LaurentMatrix) -> LaurentMatrix:
        """Kronecker product; index ``(a, b)`` becomes ``a * other.size + b``."""
        entries: Entries = {}
        for i, row in self._rows.items():
            for k, orow in other._rows.items():
                target = entries.setdefault(i * other.nrows + k, {})
                for j, a in row.items():
                    for l, b in orow.items():
                        target[j * other.ncols + l] = a * b
        return LaurentMatrix(self.nrows * other.nrows, self.ncols * other.ncols, entries)

    def transpose(self) -> LaurentMatrix:
        entries: Entries = {}
        for i, j, c in self.items():
            entries.setdefault(j, {})[i] = c
        return LaurentMatrix(self.ncols, self.nrows, entries)

    def diagonal(self) -> List[LaurentPoly]:
        return [self[i, i] for i in range(min(self.nrows, self.ncols))]

    def is_diagonal(self) -> bool:
        return all(set(row) <= {i} for i, row in self._rows.items())

    def trace(self) -> LaurentPoly:
        return sum(self.diagonal(), ZERO)

    def is_scalar(self) -> Optional[LaurentPoly]:
        """The scalar ``c`` if this matrix equals ``c * I``, else ``None``."""
        if self.nrows != self.ncols or not self.is_diagonal():
            return None
        diag = self.diagonal()
        if not diag:
            return ZERO
        first = diag[0]
        return first if all(d == first for d in diag) else None

    def map(self, fn) -> LaurentMatrix:
        """Apply ``fn`` entrywise (e.g. ``LaurentPoly.bar``)."""
        return LaurentMatrix(self.nrows, self.ncols,
                             {i: {j: fn(c) for j, c in row.items()} for i, row in self._rows.items()})

    def at_one(self) -> DomainMatrix:
        """Specialize ``v = 1``; returns an integer matrix."""
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for i, j, c in self.items():
            rows[i][j] = c.eval_at_one()
        return DomainMatrix.from_list(rows, ZZ)

    def to_dense(self) -> List[List[LaurentPoly]]:
        return [[self[i, j] for j in range(self.ncols)] for i in range(self.nrows)]

    def to_json(self) -> List[List[str]]:
        return [[c.fmt() for c in row] for row in self.to_dense()]

    def __repr__(self) -> str:
        return f"LaurentMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"
