"""Exact dense linear algebra over Q and prime fields.

Everything downstream (category presentations, quotients, searches) runs on
this module.  There is no floating point anywhere: rationals are
`fractions.Fraction`, prime-field elements are ints reduced mod p.  All
decisions (rank, solvability, membership) are therefore exact.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatch, ShapeError


class Field:
    """A computable field: the rationals or F_p for a prime p."""

    def of(self, x):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def fmt(self, a) -> str:
        raise NotImplementedError

    def parse(self, s: str):
        raise NotImplementedError


class RationalField(Field):
    """Arbitrary-precision rationals, always reduced (Fraction invariant)."""

    zero = Fraction(0)
    one = Fraction(1)

    def of(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / a

    def fmt(self, a) -> str:
        return f"{a.numerator}/{a.denominator}" if a.denominator != 1 else str(a.numerator)

    def parse(self, s: str):
        return Fraction(s)

    def __repr__(self):
        return "QQ"


QQ = RationalField()

_PRIME_FIELDS: dict[int, "PrimeField"] = {}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeField(Field):
    """Integers mod p for a prime p <= 2^31; elements are ints in [0, p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p > 2**31:
            raise ValueError("prime too large")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def of(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return (x.numerator % self.p) * pow(den, -1, self.p) % self.p
        if isinstance(x, str):
            return self.of(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into F_{self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return pow(a, -1, self.p)

    def fmt(self, a) -> str:
        return str(a)

    def parse(self, s: str):
        return self.of(Fraction(s))

    def __repr__(self):
        return f"GF({self.p})"


def GF(p: int) -> PrimeField:
    if p not in _PRIME_FIELDS:
        _PRIME_FIELDS[p] = PrimeField(p)
    return _PRIME_FIELDS[p]


def _check_same_field(a: "Matrix", b: "Matrix"):
    if a.field is not b.field:
        raise FieldMismatch(f"mixed fields {a.field!r} and {b.field!r}")


class Matrix:
    """Dense row-major matrix over a fixed field.  Treated as immutable."""

    __slots__ = ("field", "nrows", "ncols", "data", "_rref")

    def __init__(self, field: Field, nrows: int, ncols: int, data):
        if len(data) != nrows:
            raise ShapeError(f"expected {nrows} rows, got {len(data)}")
        for row in data:
            if len(row) != ncols:
                raise ShapeError(f"expected {ncols} columns, got {len(row)}")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.data = [list(row) for row in data]
        self._rref = None

    @classmethod
    def from_rows(cls, field: Field, rows, ncols: int | None = None) -> "Matrix":
        rows = [[field.of(x) for x in row] for row in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, nrows, ncols, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field is other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        rows = "; ".join(" ".join(self.field.fmt(x) for x in row) for row in self.data)
        return f"Matrix({self.nrows}x{self.ncols}: {rows})"

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for row in self.data for x in row)

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.nrows, self.ncols, self.data)

    def row(self, i):
        return list(self.data[i])

    def col(self, j):
        return [self.data[i][j] for i in range(self.nrows)]

    def __add__(self, other: "Matrix") -> "Matrix":
        _check_same_field(self, other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeError("matrix addition shape mismatch")
        add = self.field.add
        return Matrix(
            self.field,
            self.nrows,
            self.ncols,
            [
                [add(self.data[i][j], other.data[i][j]) for j in range(self.ncols)]
                for i in range(self.nrows)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(
            self.field,
            self.nrows,
            self.ncols,
            [[neg(x) for x in row] for row in self.data],
        )

    def scale(self, c) -> "Matrix":
        mul = self.field.mul
        c = self.field.of(c)
        return Matrix(
            self.field,
            self.nrows,
            self.ncols,
            [[mul(c, x) for x in row] for row in self.data],
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        _check_same_field(self, other)
        if self.ncols != other.nrows:
            raise ShapeError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        f = self.field
        zero, add, mul = f.zero, f.add, f.mul
        out = [[zero] * other.ncols for _ in range(self.nrows)]
        for i in range(self.nrows):
            arow = self.data[i]
            orow = out[i]
            for k in range(self.ncols):
                a = arow[k]
                if a == zero:
                    continue
                brow = other.data[k]
                for j in range(other.ncols):
                    b = brow[j]
                    if b != zero:
                        orow[j] = add(orow[j], mul(a, b))
        return Matrix(f, self.nrows, other.ncols, out)

    def apply(self, vec):
        """Matrix-vector product m * v."""
        if len(vec) != self.ncols:
            raise ShapeError(f"vector length {len(vec)} != {self.ncols} columns")
        f = self.field
        out = []
        for i in range(self.nrows):
            s = f.zero
            row = self.data[i]
            for j, v in enumerate(vec):
                if v != f.zero:
                    s = f.add(s, f.mul(row[j], v))
            out.append(s)
        return out

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            self.ncols,
            self.nrows,
            [[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        _check_same_field(self, other)
        if self.nrows != other.nrows:
            raise ShapeError("hstack row mismatch")
        return Matrix(
            self.field,
            self.nrows,
            self.ncols + other.ncols,
            [self.data[i] + other.data[i] for i in range(self.nrows)],
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        _check_same_field(self, other)
        if self.ncols != other.ncols:
            raise ShapeError("vstack column mismatch")
        return Matrix(self.field, self.nrows + other.nrows, self.ncols, self.data + other.data)

    def rref(self):
        """Reduced row echelon form; returns (rref matrix, pivot column tuple).

        First-nonzero pivoting, fully deterministic.
        """
        if self._rref is not None:
            return self._rref
        f = self.field
        zero = f.zero
        rows = [list(r) for r in self.data]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pivot_row = None
            for i in range(r, self.nrows):
                if rows[i][c] != zero:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = f.inv(rows[r][c])
            rows[r] = [f.mul(inv, x) for x in rows[r]]
            for i in range(self.nrows):
                if i != r and rows[i][c] != zero:
                    factor = rows[i][c]
                    rows[i] = [
                        f.sub(rows[i][j], f.mul(factor, rows[r][j])) for j in range(self.ncols)
                    ]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        result = (Matrix(f, self.nrows, self.ncols, rows), tuple(pivots))
        self._rref = result
        return result

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self):
        """Basis of the right kernel {v : m v = 0}, as column vectors (lists)."""
        f = self.field
        reduced, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivset]
        basis = []
        for fc in free:
            v = [f.zero] * self.ncols
            v[fc] = f.one
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(reduced.data[r][fc])
            basis.append(v)
        return basis

    def solve(self, b):
        """Some x with m x = b, or None when the system is inconsistent."""
        if len(b) != self.nrows:
            raise ShapeError(f"rhs length {len(b)} != {self.nrows} rows")
        f = self.field
        aug = Matrix(f, self.nrows, self.ncols + 1, [self.data[i] + [b[i]] for i in range(self.nrows)])
        reduced, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [f.zero] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = reduced.data[r][self.ncols]
        return x

    def solve_matrix(self, B: "Matrix"):
        """Some X with self * X = B, or None."""
        _check_same_field(self, B)
        if B.nrows != self.nrows:
            raise ShapeError("solve_matrix shape mismatch")
        cols = []
        for j in range(B.ncols):
            x = self.solve(B.col(j))
            if x is None:
                return None
            cols.append(x)
        return Matrix(
            self.field,
            self.ncols,
            B.ncols,
            [[cols[j][i] for j in range(B.ncols)] for i in range(self.ncols)],
        )

    def inverse(self):
        """Two-sided inverse, or None if not square/invertible."""
        if self.nrows != self.ncols:
            return None
        if self.rank() != self.nrows:
            return None
        return self.solve_matrix(Matrix.identity(self.field, self.nrows))


class RowSpace:
    """A row space kept in reduced echelon form for fast reduction queries.

    Used wherever a subspace must be quotiented out deterministically: the
    reduce() of a vector is its canonical coset representative.
    """

    def __init__(self, field: Field, width: int):
        self.field = field
        self.width = width
        self.rows = []  # echelon rows
        self.pivots = []  # pivot column per row, strictly increasing order kept

    @classmethod
    def from_rows(cls, field: Field, width: int, rows) -> "RowSpace":
        rs = cls(field, width)
        for row in rows:
            rs.add(row)
        return rs

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec):
        """Canonical representative of vec modulo the row space."""
        if len(vec) != self.width:
            raise ShapeError("vector width mismatch")
        f = self.field
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c != f.zero:
                v = [f.sub(v[j], f.mul(c, row[j])) for j in range(self.width)]
        return v

    def contains(self, vec) -> bool:
        z = self.field.zero
        return all(x == z for x in self.reduce(vec))

    def add(self, vec) -> bool:
        """Insert vec; returns True if it enlarged the space."""
        f = self.field
        v = self.reduce(vec)
        p = next((j for j, x in enumerate(v) if x != f.zero), None)
        if p is None:
            return False
        inv = f.inv(v[p])
        v = [f.mul(inv, x) for x in v]
        for i in range(len(self.rows)):
            c = self.rows[i][p]
            if c != f.zero:
                self.rows[i] = [
                    f.sub(self.rows[i][j], f.mul(c, v[j])) for j in range(self.width)
                ]
        idx = next((k for k, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(idx, v)
        self.pivots.insert(idx, p)
        return True

    def complement_indices(self):
        """Coordinate indices of the canonical complement (non-pivot slots)."""
        pivset = set(self.pivots)
        return [j for j in range(self.width) if j not in pivset]

    def coords_in_basis(self, vec):
        """Coefficients of vec against the echelon rows, or None if outside."""
        f = self.field
        v = list(vec)
        coeffs = []
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            coeffs.append(c)
            if c != f.zero:
                v = [f.sub(v[j], f.mul(c, row[j])) for j in range(self.width)]
        if any(x != f.zero for x in v):
            return None
        return coeffs


def vec_add(field: Field, u, v):
    if len(u) != len(v):
        raise ShapeError("vector length mismatch")
    return [field.add(a, b) for a, b in zip(u, v)]


def vec_sub(field: Field, u, v):
    if len(u) != len(v):
        raise ShapeError("vector length mismatch")
    return [field.sub(a, b) for a, b in zip(u, v)]


def vec_scale(field: Field, c, v):
    return [field.mul(c, x) for x in v]


def vec_is_zero(field: Field, v) -> bool:
    return all(x == field.zero for x in v)
