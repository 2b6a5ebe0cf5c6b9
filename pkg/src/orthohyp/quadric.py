"""
Isotropic vectors, orthogonal complements and hyperbolic bases.

A hyperbolic basis of a 5-dimensional form of Q-rank 2 is an ordered basis
(e1, e2, u, e2*, e1*) whose Gram matrix is anti-diagonal:
Q(ei, ei*) = lambda_i, Q(u, u) = lambda_3, every other pairing zero.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt

from .exact_linalg import (
    LinAlgError,
    Matrix,
    congruence,
    det,
    dot,
    mat_inv,
    mat_mul,
    nullspace,
    primitive_integral,
    rank,
    vadd,
    vec,
    vscale,
)


class RankCertificateError(ValueError):
    pass


def eval_form(q, w1, w2):
    "w1^t q w2"
    if len(w1) != q.nrows or len(w2) != q.ncols:
        raise LinAlgError("vector lengths do not match the form")
    return dot(w1, q.apply(w2))


@dataclass(frozen=True)
class IsotropicPair:
    v1: tuple
    v2: tuple
    form: Matrix


def verify_rank2_certificate(q, v1, v2):
    """v1, v2 independent, isotropic and mutually orthogonal."""
    v1, v2 = vec(v1), vec(v2)
    if rank(Matrix([v1, v2])) != 2:
        return False
    return (eval_form(q, v1, v1) == 0 and eval_form(q, v2, v2) == 0
            and eval_form(q, v1, v2) == 0)


def _normalize_sign(w):
    lead = next(e for e in w if e)
    return w if lead > 0 else tuple(-e for e in w)


def _integer_roots(a, b, c, bound):
    """Integer t with |t| <= bound and a t^2 + 2 b t + c == 0."""
    if a == 0:
        if b == 0:
            return range(-bound, bound + 1) if c == 0 else ()
        if c % (2 * b) == 0:
            t = -c // (2 * b)
            return (t,) if abs(t) <= bound else ()
        return ()
    disc = b * b - a * c
    if disc < 0:
        return ()
    s = isqrt(disc)
    if s * s != disc:
        return ()
    out = set()
    for num in (-b + s, -b - s):
        if num % a == 0 and abs(num // a) <= bound:
            out.add(num // a)
    return sorted(out)


def iter_isotropic(q, height, subspace=None):
    """Yield primitive isotropic integer vectors of sup-norm <= height.

    Vectors come out by increasing sup-norm, then lexicographically, each
    with its first nonzero entry positive. With a subspace basis the
    search runs over integer coefficient vectors in that basis and the
    yielded vectors are the coefficient vectors' images, made primitive.
    """
    if subspace is not None:
        basis = [vec(b) for b in subspace]
        if not basis:
            return
        k = Matrix.from_columns(basis)
        gram = congruence_rect(k, q)
        for coeffs in iter_isotropic(gram, height):
            w = k.apply(coeffs)
            yield primitive_integral(w)[0]
        return

    n = q.nrows
    # work with an integral multiple of q; isotropy is scale invariant
    den = 1
    for row in q.rows:
        for e in row:
            den = den * e.denominator // gcd(den, e.denominator)
    qi = [[int(e * den) for e in row] for row in q.rows]
    a = qi[n - 1][n - 1]
    for h in range(1, height + 1):
        found = set()
        for head in itertools.product(range(-h, h + 1), repeat=n - 1):
            # Q(w, w) = a t^2 + 2 b t + c with t the last coordinate
            b = sum(qi[i][n - 1] * head[i] for i in range(n - 1))
            c = sum(qi[i][j] * head[i] * head[j]
                    for i in range(n - 1) for j in range(n - 1))
            top = max((abs(x) for x in head), default=0)
            for t in _integer_roots(a, b, c, h):
                w = head + (t,)
                if max(top, abs(t)) != h:
                    continue
                if reduce(gcd, w, 0) != 1:
                    continue
                found.add(_normalize_sign(w))
        for w in sorted(found):
            yield vec(w)


def congruence_rect(k, q):
    "k^t q k for a possibly non-square k (Gram matrix of the columns of k)."
    return mat_mul(mat_mul(k.T, q), k)


def search_isotropic(q, height, subspace=None):
    """First primitive isotropic vector in enumeration order, or None."""
    return next(iter_isotropic(q, height, subspace), None)


def orthogonal_complement(q, span):
    """Basis of {w : Q(w, s) = 0 for every s in span}."""
    span = [vec(s) for s in span]
    n = q.nrows
    if not span:
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    rows = Matrix([q.apply(s) for s in span])  # q symmetric: Q(s, w) = (q s) . w
    return nullspace(rows)


def hyperbolic_partner(q, e, w):
    """Isotropic e* with Q(e, e*) = 1, built from any w with Q(e, w) != 0.

    e* = w / Q(e, w) - Q(w, w) / (2 Q(e, w)^2) * e
    """
    c = eval_form(q, e, w)
    if c == 0:
        raise RankCertificateError("w is orthogonal to e")
    return vadd(vscale(1 / c, w), vscale(-eval_form(q, w, w) / (2 * c * c), e))


@dataclass(frozen=True)
class HyperbolicBasis:
    K: Matrix
    lambdas: tuple

    @property
    def gram(self):
        lam1, lam2, lam3 = self.lambdas
        return antidiagonal_form(lam1, lam2, lam3)


def antidiagonal_form(lam1, lam2, lam3):
    z = 0
    return Matrix([
        [z, z, z, z, lam1],
        [z, z, z, lam2, z],
        [z, z, lam3, z, z],
        [z, lam2, z, z, z],
        [lam1, z, z, z, z],
    ])


def read_lambdas(g):
    """(lambda1, lambda2, lambda3) if g has the anti-diagonal pattern, else None."""
    if g.shape != (5, 5):
        return None
    lam1, lam2, lam3 = g[0, 4], g[1, 3], g[2, 2]
    if not (lam1 and lam2 and lam3):
        return None
    if g != antidiagonal_form(lam1, lam2, lam3):
        return None
    return (lam1, lam2, lam3)


def basis_from_matrix(q, k):
    """Validate a user-supplied K and read off its lambdas."""
    lams = read_lambdas(congruence(k, q))
    if lams is None:
        raise RankCertificateError("K^t Q K is not anti-diagonal")
    return HyperbolicBasis(K=k, lambdas=lams)


def _first_partner(q, e, candidates):
    for w in candidates:
        if eval_form(q, e, w) != 0:
            return w
    raise RankCertificateError("no vector pairs nontrivially with the isotropic vector")


def _project_out(q, w, pairs):
    "Remove the components of w along hyperbolic planes (e, e*) with Q(e, e*) = 1."
    for e, es in pairs:
        w = vadd(w, vscale(-eval_form(q, w, es), e))
        w = vadd(w, vscale(-eval_form(q, w, e), es))
    return w


def hyperbolic_basis(q, seed=None, height=6):
    """Build (e1, e2, u, e2*, e1*) for a nondegenerate 5x5 form of Q-rank 2.

    With a seed pair (two orthogonal isotropic vectors) no search is done.
    Otherwise e1 is searched in Q^5 and e2 inside the complement of the
    first hyperbolic plane, both up to the given height.
    """
    if q.shape != (5, 5) or not q.is_symmetric():
        raise RankCertificateError("need a symmetric 5x5 form")
    if det(q) == 0:
        raise RankCertificateError("form is degenerate")
    std = [tuple(Fraction(int(i == j)) for j in range(5)) for i in range(5)]

    if seed is not None:
        e1, v2 = vec(seed.v1), vec(seed.v2)
        if not verify_rank2_certificate(q, e1, v2):
            raise RankCertificateError("seed is not a rank-2 certificate")
    else:
        e1 = search_isotropic(q, height)
        if e1 is None:
            raise RankCertificateError("rank certificate unavailable within height %d" % height)
        v2 = None

    e1s = hyperbolic_partner(q, e1, _first_partner(q, e1, std))
    plane1 = [(e1, e1s)]
    comp = orthogonal_complement(q, [e1, e1s])

    if v2 is not None:
        # v2 is orthogonal to e1; remove its e1 component to land in E^perp
        e2 = _project_out(q, v2, plane1)
    else:
        e2 = search_isotropic(q, height, subspace=comp)
        if e2 is None:
            raise RankCertificateError(
                "rank certificate unavailable: no isotropic vector in the complement "
                "within height %d" % height)
    e2 = primitive_integral(e2)[0]
    e2s = hyperbolic_partner(q, e2, _first_partner(q, e2, comp))
    pairs = plane1 + [(e2, e2s)]

    for w in comp + std:
        u = _project_out(q, w, pairs)
        if any(u):
            break
    u = primitive_integral(u)[0]
    k = Matrix.from_columns([e1, e2, u, e2s, e1s])
    hb = basis_from_matrix(q, k)
    return hb


def conjugate_generators(a, b, k):
    """(K^-1 a K, K^-1 b K)."""
    try:
        k_inv = mat_inv(k)
    except LinAlgError:
        raise LinAlgError("basis change K is singular") from None
    return mat_mul(mat_mul(k_inv, a), k), mat_mul(mat_mul(k_inv, b), k)
