"""
The quadratic form preserved by an orthogonal hypergeometric group.

Pipeline: v = (C - I) e_n; the orbit v, Gv, ..., G^(n-1) v of one generator
G is a basis; in that basis the Gram matrix is symmetric Toeplitz with
first row read off the last coordinate of G^k v (after normalizing
Q(v, e_n) = 1). Changing back to the standard basis gives N_Q.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .exact_linalg import (
    LinAlgError,
    Matrix,
    congruence,
    mat_inv,
    mat_mul,
    nullspace,
    rank,
)
from .monodromy import FormType, classify_form


class FormError(ValueError):
    pass


@dataclass(frozen=True)
class OrbitBasis:
    generator: Matrix
    vectors: tuple
    T: Matrix


@dataclass(frozen=True)
class FormBundle:
    M_Q: Matrix
    T: Matrix
    N_Q: Matrix
    N_int: Matrix
    scale: Fraction
    orbit_generator: str = "B"


def monodromy_vector(triple):
    "Last column of C - I."
    n = triple.n
    v = list(triple.C.col(n - 1))
    v[n - 1] -= 1
    return tuple(v)


def orbit_basis(g, v):
    n = g.nrows
    if not any(v):
        raise FormError("orbit degenerate: v is zero")
    vectors = [tuple(v)]
    for _ in range(n - 1):
        vectors.append(g.apply(vectors[-1]))
    T = Matrix.from_columns(vectors)
    if rank(T) < n:
        raise FormError("orbit degenerate: iterates of v are linearly dependent")
    return OrbitBasis(generator=g, vectors=tuple(vectors), T=T)


def gram_on_orbit(ob):
    """Gram matrix on the orbit basis, normalized by Q(v, e_n) = 1.

    Q(G^i v, G^j v) = Q(v, G^|i-j| v) = last coordinate of G^|i-j| v.
    """
    q = [w[-1] for w in ob.vectors]
    n = len(q)
    return Matrix([[q[abs(i - j)] for j in range(n)] for i in range(n)])


def to_standard_basis(m_q, t):
    try:
        t_inv = mat_inv(t)
    except LinAlgError:
        raise FormError("change-of-basis matrix is singular") from None
    return congruence(t_inv, m_q)


def normalize_integral(n_q):
    """The primitive integral multiple of n_q with positive (0, 0) entry.

    Returns (matrix, scale) with matrix == scale * n_q. When the corner
    entry is zero the first nonzero entry in row-major order is made positive.
    """
    entries = [e for row in n_q.rows for e in row]
    if not any(entries):
        raise FormError("cannot normalize the zero form")
    den = reduce(lcm, (e.denominator for e in entries), 1)
    g = reduce(gcd, (int(e * den) for e in entries), 0)
    scale = Fraction(den, g)
    lead = next(e for e in entries if e)
    if lead < 0:
        scale = -scale
    return n_q.scale(scale), scale


def invariant_form_oracle(a, b):
    """Solve {X symmetric : a^t X a = X, b^t X b = X} directly.

    Unknowns are the n(n+1)/2 upper-triangular entries of X; the result is
    the unique (up to scalar) solution, returned primitive-integral.
    """
    n = a.nrows
    idx = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {p: k for k, p in enumerate(idx)}

    def var(i, j):
        return pos[(i, j) if i <= j else (j, i)]

    eqs = []
    for g in (a, b):
        # (g^t X g)[r][s] - X[r][s] = sum_{i,j} g[i][r] g[j][s] X[i][j] - X[r][s]
        for r, s in idx:
            row = [Fraction(0)] * len(idx)
            for i in range(n):
                gir = g[i, r]
                if not gir:
                    continue
                for j in range(n):
                    gjs = g[j, s]
                    if gjs:
                        row[var(i, j)] += gir * gjs
            row[var(r, s)] -= 1
            eqs.append(row)
    sol = nullspace(Matrix(eqs))
    if len(sol) != 1:
        raise FormError("form not unique: invariant space has dimension %d" % len(sol))
    w = sol[0]
    x = Matrix([[w[var(i, j)] for j in range(n)] for i in range(n)])
    return normalize_integral(x)[0]


def compute_form(triple, orbit_generator="B"):
    """Full pipeline from a monodromy triple to a FormBundle."""
    kind = classify_form(triple.f, triple.g)
    if kind is not FormType.ORTHOGONAL:
        raise FormError("invariant quadratic form needs an orthogonal pair, got %s" % kind.value)
    gen = {"A": triple.A, "B": triple.B}.get(orbit_generator)
    if gen is None:
        raise FormError("orbit generator must be 'A' or 'B'")
    v = monodromy_vector(triple)
    ob = orbit_basis(gen, v)
    m_q = gram_on_orbit(ob)
    n_q = to_standard_basis(m_q, ob.T)
    n_int, scale = normalize_integral(n_q)
    return FormBundle(M_Q=m_q, T=ob.T, N_Q=n_q, N_int=n_int, scale=scale,
                      orbit_generator=orbit_generator)


def is_invariant(q, g):
    return mat_mul(mat_mul(g.T, q), g) == q
