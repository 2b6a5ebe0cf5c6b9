"""
Dense matrices and vectors over the rationals.

Entries are ``fractions.Fraction`` (Python ints underneath, so there is no
overflow). Matrices are immutable and hashable; every operation returns a
new matrix.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm


class LinAlgError(ValueError):
    pass


def Q(value):
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or a 'p/q' string")
    return Fraction(value)


def fmt_q(value):
    "Fraction -> 'p/q', or 'p' when the denominator is 1."
    value = Q(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def vec(*entries):
    """Build a vector (a tuple of Fractions).

    Accepts either ``vec(1, 2, 3)`` or ``vec([1, 2, 3])``.
    """
    if len(entries) == 1 and not isinstance(entries[0], (int, Fraction, str)):
        entries = tuple(entries[0])
    return tuple(Q(e) for e in entries)


def dot(u, v):
    if len(u) != len(v):
        raise LinAlgError("length mismatch: %d vs %d" % (len(u), len(v)))
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vadd(u, v):
    if len(u) != len(v):
        raise LinAlgError("length mismatch: %d vs %d" % (len(u), len(v)))
    return tuple(a + b for a, b in zip(u, v))


def vscale(c, v):
    c = Q(c)
    return tuple(c * a for a in v)


def lincomb(coeffs, vectors):
    "sum_i coeffs[i] * vectors[i]"
    out = None
    for c, v in zip(coeffs, vectors):
        term = vscale(c, v)
        out = term if out is None else vadd(out, term)
    if out is None:
        raise LinAlgError("empty linear combination")
    return out


def primitive_integral(v):
    """Scale v to a primitive integer vector whose first nonzero entry is positive.

    Returns ``(w, scale)`` with ``w == scale * v``.
    """
    if not any(v):
        raise LinAlgError("zero vector has no primitive multiple")
    den = reduce(lcm, (e.denominator for e in v), 1)
    ints = [int(e * den) for e in v]
    g = reduce(gcd, ints, 0)
    scale = Fraction(den, g)
    lead = next(e for e in ints if e)
    if lead < 0:
        scale = -scale
    return tuple(scale * e for e in v), scale


class Matrix:
    """Immutable dense matrix with Fraction entries, stored row-major."""

    __slots__ = ("rows", "nrows", "ncols", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(Q(e) for e in row) for row in rows)
        if not rows:
            raise LinAlgError("matrix must have at least one row")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise LinAlgError("ragged rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __reduce__(self):
        return (Matrix, (self.rows,))

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    @classmethod
    def _raw(cls, rows):
        # trusted constructor: rows is already a tuple of tuples of Fractions
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "nrows", len(rows))
        object.__setattr__(m, "ncols", len(rows[0]))
        object.__setattr__(m, "_hash", None)
        return m

    @classmethod
    def identity(cls, n):
        one, zero = Fraction(1), Fraction(0)
        return cls._raw(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        zero = Fraction(0)
        return cls._raw(tuple((zero,) * ncols for _ in range(nrows)))

    @classmethod
    def from_columns(cls, columns):
        columns = [vec(c) for c in columns]
        return cls._raw(tuple(zip(*columns)))

    @classmethod
    def diag(cls, entries):
        entries = vec(entries)
        n = len(entries)
        zero = Fraction(0)
        return cls._raw(tuple(tuple(entries[i] if i == j else zero for j in range(n)) for i in range(n)))

    # -- basic protocol --

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.rows)
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return "Matrix(%s)" % self.tolist()

    def __str__(self):
        cells = [[fmt_q(e) for e in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

    def tolist(self):
        "Row-major nested lists of 'p/q' strings (the JSON encoding)."
        return [[fmt_q(e) for e in row] for row in self.rows]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(row[j] for row in self.rows)

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self):
        return Matrix._raw(tuple(zip(*self.rows)))

    def is_square(self):
        return self.nrows == self.ncols

    def is_identity(self):
        return self.is_square() and self == Matrix.identity(self.nrows)

    def is_integral(self):
        return all(e.denominator == 1 for row in self.rows for e in row)

    def is_symmetric(self):
        return self.rows == tuple(zip(*self.rows))

    # -- arithmetic --

    def __add__(self, other):
        if self.shape != other.shape:
            raise LinAlgError("shape mismatch %s vs %s" % (self.shape, other.shape))
        return Matrix._raw(tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)))

    def __sub__(self, other):
        if self.shape != other.shape:
            raise LinAlgError("shape mismatch %s vs %s" % (self.shape, other.shape))
        return Matrix._raw(tuple(
            tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)))

    def __neg__(self):
        return Matrix._raw(tuple(tuple(-a for a in row) for row in self.rows))

    def scale(self, c):
        c = Q(c)
        return Matrix._raw(tuple(tuple(c * a for a in row) for row in self.rows))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return self.apply(other)

    def apply(self, v):
        "Matrix times column vector."
        if len(v) != self.ncols:
            raise LinAlgError("vector length %d, matrix has %d columns" % (len(v), self.ncols))
        return tuple(dot(row, v) for row in self.rows)

    def __pow__(self, k):
        return mat_pow(self, k)

    def inv(self):
        return mat_inv(self)

    def det(self):
        return det(self)


def mat_mul(a, b):
    if a.ncols != b.nrows:
        raise LinAlgError("cannot multiply %s by %s" % (a.shape, b.shape))
    cols = tuple(zip(*b.rows))
    zero = Fraction(0)
    return Matrix._raw(tuple(
        tuple(sum((x * y for x, y in zip(row, col)), zero) for col in cols)
        for row in a.rows))


def mat_pow(a, k):
    "a**k by binary exponentiation; negative k uses the exact inverse."
    if not a.is_square():
        raise LinAlgError("power of a non-square matrix")
    if k < 0:
        a, k = mat_inv(a), -k
    result = Matrix.identity(a.nrows)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def _integer_rows(a):
    "Clear denominators: returns (int rows, d) with a == rows / d."
    d = reduce(lcm, (e.denominator for row in a.rows for e in row), 1)
    return [[int(e * d) for e in row] for row in a.rows], d


def mat_inv(a):
    """Exact inverse by fraction-free Gauss-Jordan elimination.

    Denominators are cleared once up front; afterwards every elimination
    step is an exact integer division (Bareiss), so intermediate entries
    stay bounded by minors of the input.
    """
    if not a.is_square():
        raise LinAlgError("cannot invert a %dx%d matrix" % a.shape)
    n = a.nrows
    rows, d = _integer_rows(a)
    aug = [rows[i] + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if aug[i][k]), None)
        if piv is None:
            raise LinAlgError("matrix is singular")
        if piv != k:
            aug[k], aug[piv] = aug[piv], aug[k]
        pk = aug[k][k]
        rk = aug[k]
        for i in range(n):
            if i == k:
                continue
            ri = aug[i]
            aik = ri[k]
            aug[i] = [(pk * x - aik * y) // prev for x, y in zip(ri, rk)]
        prev = pk
    # every diagonal entry now equals prev (= +-det of the integer matrix)
    return Matrix._raw(tuple(
        tuple(Fraction(d * x, prev) for x in aug[i][n:]) for i in range(n)))


def det(a):
    "Determinant via Bareiss elimination."
    if not a.is_square():
        raise LinAlgError("determinant of a non-square matrix")
    n = a.nrows
    m, d = _integer_rows(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], d ** n)


def rref(a):
    """Reduced row echelon form over Q.

    Returns (rows as list of lists of Fractions, pivot column indices).
    """
    m = [list(row) for row in a.rows]
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [e * inv for e in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [e - f * p for e, p in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a):
    return len(rref(a)[1])


def nullspace(a):
    "Basis of {w : a w = 0}, one vector per free column, free entry set to 1."
    m, pivots = rref(a)
    ncols = a.ncols
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        w = [Fraction(0)] * ncols
        w[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            w[pc] = -m[r][fc]
        basis.append(tuple(w))
    return basis


def congruence(s, q):
    "s^t q s: the Gram matrix of q in the basis given by the columns of s."
    if not (s.is_square() and q.is_square()) or s.nrows != q.nrows:
        raise LinAlgError("congruence needs square matrices of equal size")
    return mat_mul(mat_mul(s.T, q), s)


def is_unipotent(g, n=None):
    "True iff (g - I)^n == 0."
    if not g.is_square():
        return False
    n = g.nrows if n is None else n
    nil = g - Matrix.identity(g.nrows)
    return not any(e for row in mat_pow(nil, n).rows for e in row)


def is_proportional(a, b):
    """Return the scalar c with a == c * b, or None if there is none."""
    if a.shape != b.shape:
        return None
    c = None
    for ra, rb in zip(a.rows, b.rows):
        for x, y in zip(ra, rb):
            if y == 0:
                if x != 0:
                    return None
                continue
            ratio = x / y
            if c is None:
                c = ratio
            elif ratio != c:
                return None
    if c is None or c == 0:
        return None
    return c
