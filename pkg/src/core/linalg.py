"""Exact rational matrices and the semi-tensor product.

RationalMatrix is a thin immutable wrapper over sympy's DomainMatrix on QQ.
Row reduction, inversion and products are delegated to sympy; entries cross
the public boundary as fractions.Fraction. Zero-size shapes (a subspace with
no basis columns) are handled here so callers never special-case them.
"""

from decimal import Decimal
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from src.core.errors import ShapeError

RationalLike = Union[int, Fraction, Decimal, str]


def to_fraction(value) -> Fraction:
    """Convert an int, Fraction, Decimal, float, "p/q" string or QQ element exactly.

    Floats are read through their decimal repr, the way a JSON literal would be.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    numerator = getattr(value, "numerator", None)
    denominator = getattr(value, "denominator", None)
    if numerator is not None and denominator is not None:
        return Fraction(int(numerator), int(denominator))
    raise TypeError(f"cannot read {value!r} as a rational")


def _qq(value) -> object:
    x = to_fraction(value)
    return QQ(x.numerator, x.denominator)


class RationalMatrix:
    """Dense exact matrix over the rationals."""

    __slots__ = ("_dm", "_shape", "_rows")

    def __init__(self, dm: Optional[DomainMatrix], shape: tuple[int, int]):
        self._dm = dm
        self._shape = shape
        self._rows: Optional[list[list[Fraction]]] = None

    # --- construction -------------------------------------------------

    @classmethod
    def _from_qq_rows(cls, rows: list[list], shape: tuple[int, int]) -> "RationalMatrix":
        m, n = shape
        if m == 0 or n == 0:
            return cls(None, shape)
        return cls(DomainMatrix(rows, shape, QQ), shape)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], ncols: Optional[int] = None) -> "RationalMatrix":
        """Build from a list of rows; ncols fixes the width of a matrix with no rows."""
        m = len(rows)
        n = len(rows[0]) if m else (ncols or 0)
        if any(len(row) != n for row in rows):
            raise ShapeError("every row must have the same number of entries")
        if ncols is not None and ncols != n:
            raise ShapeError(f"expected {ncols} columns, got {n}")
        return cls._from_qq_rows([[_qq(x) for x in row] for row in rows], (m, n))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]], nrows: int) -> "RationalMatrix":
        """Build from a list of columns, each of length nrows."""
        if any(len(col) != nrows for col in columns):
            raise ShapeError(f"every column must have {nrows} entries")
        rows = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
        return cls.from_rows(rows, ncols=len(columns))

    @classmethod
    def column_vector(cls, values: Iterable[RationalLike]) -> "RationalMatrix":
        return cls.from_rows([[x] for x in values], ncols=1)

    @classmethod
    def row_vector(cls, values: Iterable[RationalLike]) -> "RationalMatrix":
        values = list(values)
        return cls.from_rows([values], ncols=len(values))

    @classmethod
    def zeros(cls, m: int, n: int) -> "RationalMatrix":
        return cls._from_qq_rows([[QQ.zero] * n for _ in range(m)], (m, n))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> "RationalMatrix":
        n = len(values)
        rows = [[QQ.zero] * n for _ in range(n)]
        for i, x in enumerate(values):
            rows[i][i] = _qq(x)
        return cls._from_qq_rows(rows, (n, n))

    @classmethod
    def delta(cls, n: int, i: int) -> "RationalMatrix":
        """The column δ_n^i: i-th column of I_n, 1-based."""
        if not 1 <= i <= n:
            raise ShapeError(f"delta index {i} outside 1..{n}")
        return cls.column_vector(1 if j == i - 1 else 0 for j in range(n))

    # --- access -------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self._shape

    @property
    def nrows(self) -> int:
        return self._shape[0]

    @property
    def ncols(self) -> int:
        return self._shape[1]

    def _qq_rows(self) -> list[list]:
        m, n = self._shape
        if self._dm is None:
            return [[] if n == 0 else [QQ.zero] * n for _ in range(m)]
        return self._dm.to_list()

    def rows(self) -> list[list[Fraction]]:
        """A fresh copy of the entries, row by row."""
        if self._rows is None:
            self._rows = [[to_fraction(x) for x in row] for row in self._qq_rows()]
        return [list(row) for row in self._rows]

    def entry(self, i: int, j: int) -> Fraction:
        """0-based entry access."""
        if self._rows is None:
            self.rows()
        return self._rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        if not 0 <= j < self.ncols:
            raise ShapeError(f"column {j} outside 0..{self.ncols - 1}")
        return tuple(row[j] for row in self.rows())

    def columns(self) -> list[tuple[Fraction, ...]]:
        rows = self.rows()
        return [tuple(row[j] for row in rows) for j in range(self.ncols)]

    def flat(self) -> tuple[Fraction, ...]:
        return tuple(x for row in self.rows() for x in row)

    def select_columns(self, indices: Sequence[int]) -> "RationalMatrix":
        rows = self._qq_rows()
        return self._from_qq_rows([[row[j] for j in indices] for row in rows], (self.nrows, len(indices)))

    def __repr__(self) -> str:
        return f"RationalMatrix({self.nrows}x{self.ncols}, {[[str(x) for x in row] for row in self.rows()]})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._shape == other._shape and self._qq_rows() == other._qq_rows()

    __hash__ = None

    # --- arithmetic ---------------------------------------------------

    def _same_shape(self, other: "RationalMatrix", op: str) -> None:
        if self._shape != other._shape:
            raise ShapeError(f"cannot {op} {self._shape} and {other._shape} matrices")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other, "add")
        if self._dm is None:
            return self
        return RationalMatrix(self._dm + other._dm, self._shape)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other, "subtract")
        if self._dm is None:
            return self
        return RationalMatrix(self._dm - other._dm, self._shape)

    def __neg__(self) -> "RationalMatrix":
        if self._dm is None:
            return self
        return RationalMatrix(-self._dm, self._shape)

    def scale(self, c: RationalLike) -> "RationalMatrix":
        if self._dm is None:
            return self
        return RationalMatrix(self._dm * _qq(c), self._shape)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self._shape} by {other._shape}")
        shape = (self.nrows, other.ncols)
        if self._dm is None or other._dm is None:
            return RationalMatrix.zeros(*shape)
        return RationalMatrix(self._dm.matmul(other._dm), shape)

    def transpose(self) -> "RationalMatrix":
        m, n = self._shape
        if self._dm is None:
            return RationalMatrix.zeros(n, m)
        return RationalMatrix(self._dm.transpose(), (n, m))

    def kron(self, other: "RationalMatrix") -> "RationalMatrix":
        """Kronecker product self ⊗ other."""
        a, b = self._qq_rows(), other._qq_rows()
        p, q = other.shape
        rows = [
            [a[i][j] * b[k][l] for j in range(self.ncols) for l in range(q)]
            for i in range(self.nrows)
            for k in range(p)
        ]
        return self._from_qq_rows(rows, (self.nrows * p, self.ncols * q))

    def hstack(self, *others: "RationalMatrix") -> "RationalMatrix":
        if any(o.nrows != self.nrows for o in others):
            raise ShapeError("hstack needs equal row counts")
        rows = self._qq_rows()
        for o in others:
            rows = [r + s for r, s in zip(rows, o._qq_rows())]
        return self._from_qq_rows(rows, (self.nrows, self.ncols + sum(o.ncols for o in others)))

    # --- elimination --------------------------------------------------

    def rref(self) -> tuple["RationalMatrix", tuple[int, ...]]:
        """Reduced row echelon form and pivot columns (0-based)."""
        if self._dm is None:
            return self, ()
        reduced, pivots = self._dm.rref()
        return RationalMatrix(reduced, self._shape), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._qq_rows() for x in row)

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and self == self.transpose()

    def nullspace(self) -> "RationalMatrix":
        """Basis of {x : self·x = 0} as the columns of an n×f matrix."""
        n = self.ncols
        if self.nrows == 0:
            return RationalMatrix.identity(n)
        reduced, pivots = self.rref()
        rows = reduced._qq_rows()
        free = [j for j in range(n) if j not in pivots]
        columns = []
        for f in free:
            x = [QQ.zero] * n
            x[f] = QQ.one
            for r, p in enumerate(pivots):
                x[p] = -rows[r][f]
            columns.append(x)
        return self._from_qq_rows([[col[i] for col in columns] for i in range(n)], (n, len(free)))

    def column_basis(self) -> "RationalMatrix":
        """The pivot columns of self: an independent subset spanning the column space."""
        return self.select_columns(self.rref()[1])

    def primitive_columns(self) -> "RationalMatrix":
        """Scale each column to coprime integers with a positive leading entry."""
        scaled = []
        for col in self.columns():
            nonzero = [x for x in col if x != 0]
            if not nonzero:
                scaled.append(col)
                continue
            den = lcm(*(x.denominator for x in nonzero))
            ints = [int(x * den) for x in col]
            g = gcd(*ints)
            sign = -1 if next(v for v in ints if v != 0) < 0 else 1
            scaled.append(tuple(Fraction(sign * v, g) for v in ints))
        return RationalMatrix.from_columns(scaled, self.nrows)

    def inverse(self) -> "RationalMatrix":
        """Exact inverse; ShapeError when non-square or singular."""
        if self.nrows != self.ncols:
            raise ShapeError(f"cannot invert a {self._shape} matrix")
        if self._dm is None:
            return self
        try:
            return RationalMatrix(self._dm.inv(), self._shape)
        except DMNonInvertibleMatrixError as e:
            raise ShapeError("matrix is singular") from e

    def solve(self, rhs: "RationalMatrix") -> Optional["RationalMatrix"]:
        """One exact solution x of self·x = rhs (free variables set to 0), or None."""
        if rhs.shape != (self.nrows, 1):
            raise ShapeError(f"right-hand side must be {self.nrows}x1, got {rhs.shape}")
        n = self.ncols
        reduced, pivots = self.hstack(rhs).rref()
        if n in pivots:
            return None
        rows = reduced._qq_rows()
        x = [QQ.zero] * n
        for r, p in enumerate(pivots):
            x[p] = rows[r][n]
        return self._from_qq_rows([[v] for v in x], (n, 1))


def ldl_pivots(m: RationalMatrix) -> list[Fraction]:
    """Diagonal of D in the exact LDLᵀ factorisation of a symmetric matrix.

    Stops after the first non-positive pivot, so a positive definite matrix is
    exactly one whose pivot list has full length and is all positive.
    """
    a = m.rows()
    n = len(a)
    pivots: list[Fraction] = []
    for k in range(n):
        d = a[k][k]
        pivots.append(d)
        if d <= 0:
            break
        for i in range(k + 1, n):
            f = a[i][k] / d
            if f:
                for j in range(k + 1, n):
                    a[i][j] -= f * a[k][j]
    return pivots


def stp(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Semi-tensor product A ⋉ B = (A ⊗ I_{t/n})(B ⊗ I_{t/p}), t = lcm(n, p)."""
    n, p = a.ncols, b.nrows
    if n == 0 or p == 0:
        raise ShapeError("semi-tensor product needs non-empty factors")
    if n == p:
        return a @ b
    t = lcm(n, p)
    return a.kron(RationalMatrix.identity(t // n)) @ b.kron(RationalMatrix.identity(t // p))
