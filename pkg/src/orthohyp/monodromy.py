"""
Hypergeometric parameters -> integer polynomials -> companion matrices.

Polynomials are tuples of ints in ascending degree order, monic.
"""

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exact_linalg import Matrix, Q, mat_inv, mat_mul


class ParameterError(ValueError):
    pass


class FormType(enum.Enum):
    SYMPLECTIC = "symplectic"
    ORTHOGONAL = "orthogonal"
    FINITE_OR_UNKNOWN = "finite-or-unknown"


def parse_params(text):
    "'0,1/6,5/6' -> tuple of Fractions."
    try:
        return tuple(Fraction(t.strip()) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise ParameterError("cannot parse parameters %r: %s" % (text, exc)) from None


@dataclass(frozen=True)
class HGParams:
    alpha: tuple
    beta: tuple

    def __post_init__(self):
        # reduce mod 1 into [0, 1)
        alpha = tuple(Q(a) % 1 for a in self.alpha)
        beta = tuple(Q(b) % 1 for b in self.beta)
        if not alpha or len(alpha) != len(beta):
            raise ParameterError("alpha and beta must be nonempty and of equal length")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def n(self):
        return len(self.alpha)


# -- integer polynomials, ascending coefficients --

def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def poly_divmod(p, q):
    "Division by a monic integer polynomial q, exact over Z."
    if q[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(p)
    dq = len(q) - 1
    if len(p) - 1 < dq:
        return (0,), _trim(rem)
    quot = [0] * (len(p) - dq)
    for k in range(len(p) - 1 - dq, -1, -1):
        c = rem[k + dq]
        quot[k] = c
        if c:
            for j, b in enumerate(q):
                rem[k + j] -= c * b
    return _trim(quot), _trim(rem[:dq] or [0])


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_str(p, var="X"):
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else "%s^%d" % (var, k))
        if mono and abs(c) == 1:
            body = mono
        else:
            body = str(abs(c)) + mono
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += " %s %s" % (sign, body)
    return out


_cyclo_cache = {}


def cyclotomic(n):
    "The n-th cyclotomic polynomial."
    if n in _cyclo_cache:
        return _cyclo_cache[n]
    p = (-1,) + (0,) * (n - 1) + (1,)  # X^n - 1
    for d in range(1, n):
        if n % d == 0:
            p, r = poly_divmod(p, cyclotomic(d))
            assert r == (0,)
    _cyclo_cache[n] = p
    return p


def euler_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def params_to_poly(params):
    """prod_j (X - exp(2 pi i q_j)) for a Galois-closed multiset of rationals.

    The multiset must, for each denominator b, contain every primitive
    b-th root the same number of times; the product is then a product of
    cyclotomic polynomials.
    """
    params = [Q(q) % 1 for q in params]
    by_den = {}
    for q in params:
        by_den.setdefault(q.denominator, Counter())[q.numerator] += 1
    poly = (1,)
    for b in sorted(by_den):
        counts = by_den[b]
        mult = set(counts.values())
        if len(counts) != euler_phi(b) or len(mult) != 1:
            raise ParameterError(
                "non-integral polynomial: parameters with denominator %d "
                "are not closed under Galois conjugation" % b)
        for _ in range(mult.pop()):
            poly = poly_mul(poly, cyclotomic(b))
    return poly


def params_to_polys(p):
    return params_to_poly(p.alpha), params_to_poly(p.beta)


def _rem_q(a, b):
    "Remainder of a by b over Q (lists of Fractions, ascending, b[-1] != 0)."
    r = list(a)
    while len(r) >= len(b):
        c = r[-1] / b[-1]
        shift = len(r) - len(b)
        for j, bj in enumerate(b):
            r[shift + j] -= c * bj
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


def poly_gcd_is_one(f, g):
    "True iff f and g are coprime over Q."
    a = [Fraction(c) for c in _trim(f)]
    b = [Fraction(c) for c in _trim(g)]
    if not any(b):
        a, b = b, a
    while b and any(b):
        a, b = b, _rem_q(a, b)
    return len(a) == 1


@dataclass
class ValidationReport:
    coprime: bool
    f0: int
    g0: int
    f1: int
    g1: int
    warnings: list = field(default_factory=list)

    @property
    def g1_nonzero(self):
        return self.g1 != 0

    @property
    def ok(self):
        return self.coprime


def validate_pair(f, g):
    if len(f) != len(g):
        raise ParameterError("f and g must have the same degree")
    return ValidationReport(
        coprime=poly_gcd_is_one(f, g),
        f0=poly_eval(f, 0), g0=poly_eval(g, 0),
        f1=poly_eval(f, 1), g1=poly_eval(g, 1),
        warnings=["primitivity of the pair is not checked"],
    )


def companion(p):
    """Companion matrix: e_i -> e_{i+1}, last column is minus the low coefficients."""
    if not p or p[-1] != 1:
        raise ParameterError("companion matrix needs a monic polynomial")
    n = len(p) - 1
    if n < 1:
        raise ParameterError("degree must be at least 1")
    rows = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i + 1][i] = 1
    for i in range(n):
        rows[i][n - 1] = -p[i]
    return Matrix(rows)


def charpoly(a):
    """Characteristic polynomial det(X I - a), ascending coefficients.

    Faddeev-LeVerrier; exact over Q.
    """
    n = a.nrows
    ident = Matrix.identity(n)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = Matrix.zeros(n)
    for k in range(1, n + 1):
        m = mat_mul(a, m) + ident.scale(coeffs[n - k + 1])
        am = mat_mul(a, m)
        tr = sum(am[i, i] for i in range(n))
        coeffs[n - k] = -tr / k
    return tuple(coeffs)


@dataclass(frozen=True)
class MonodromyTriple:
    f: tuple
    g: tuple
    A: Matrix
    B: Matrix
    C: Matrix

    @property
    def n(self):
        return len(self.f) - 1


def build_triple(p):
    f, g = params_to_polys(p)
    return triple_from_polys(f, g)


def triple_from_polys(f, g):
    report = validate_pair(f, g)
    if not report.coprime:
        raise ParameterError("f and g share a root (gcd(f, g) != 1)")
    A, B = companion(f), companion(g)
    return MonodromyTriple(f=f, g=g, A=A, B=B, C=mat_mul(mat_inv(A), B))


def classify_form(f, g):
    n = len(f) - 1
    f0, g0 = poly_eval(f, 0), poly_eval(g, 0)
    if n % 2 == 0 and f0 == 1 and g0 == 1:
        return FormType.SYMPLECTIC
    if g0 != 0 and Fraction(f0, g0) == -1:
        return FormType.ORTHOGONAL
    return FormType.FINITE_OR_UNKNOWN


def signature_defect(p):
    """|p - q| = |sum_j (-1)^(j + m_j)|, m_j = #{k : beta_k < alpha_j}.

    Both parameter lists are taken in increasing order, j counted from 1.
    """
    alpha = sorted(p.alpha)
    beta = sorted(p.beta)
    total = 0
    for j, a in enumerate(alpha, start=1):
        m = sum(1 for b in beta if b < a)
        total += (-1) ** (j + m)
    return abs(total)


def signature(p):
    """Signature of the invariant form as a sorted pair (larger, smaller).

    Only |p - q| is determined, so (3, 2) stands for "(3, 2) or (2, 3)".
    """
    n = p.n
    defect = signature_defect(p)
    if (n - defect) % 2:
        raise ParameterError("signature defect %d inconsistent with n = %d" % (defect, n))
    big = (n + defect) // 2
    return (big, n - big)
