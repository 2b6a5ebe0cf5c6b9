"""
Root groups of SO_Q in a hyperbolic basis (e1, e2, u, e2*, e1*).

The torus is diag(t1, t2, 1, 1/t2, 1/t1). A root is recorded by its
exponents (a, b) for the character t1^a t2^b. Matrix indices below are
0-based.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exact_linalg import Matrix, Q


class RootError(ValueError):
    pass


POSITIVE_ROOTS = ((0, 1), (1, -1), (1, 0), (1, 1))
NEGATIVE_ROOTS = tuple((-a, -b) for a, b in POSITIVE_ROOTS)
ROOTS = POSITIVE_ROOTS + NEGATIVE_ROOTS
SIMPLE_ROOTS = ((0, 1), (1, -1))

# The linear-in-x entry of each positive template.
_PIVOT = {(0, 1): (1, 2), (1, -1): (0, 1), (1, 0): (0, 2), (1, 1): (0, 3)}


def root_name(root):
    """(1, -1) -> 't1*t2^-1'."""
    parts = []
    for name, e in zip(("t1", "t2"), root):
        if e == 1:
            parts.append(name)
        elif e == -1:
            parts.append(name + "^-1")
        elif e:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def parse_root(text):
    for r in ROOTS:
        if root_name(r) == text.replace(" ", ""):
            return r
    # the transposed spelling t2*t1^-1 is also accepted
    for r in ROOTS:
        if "*".join(reversed(root_name(r).split("*"))) == text.replace(" ", ""):
            return r
    raise RootError("unknown root %r" % text)


def is_positive(root):
    return root in POSITIVE_ROOTS


def character(root, t1, t2):
    a, b = root
    return Q(t1) ** a * Q(t2) ** b


def _positive_entries(root, x, lam1, lam2, lam3):
    """Off-diagonal entries of U_root(x) as {(i, j): value}."""
    if root == (0, 1):
        return {(1, 2): x, (1, 3): -lam2 / (2 * lam3) * x * x, (2, 3): -lam2 / lam3 * x}
    if root == (1, -1):
        return {(0, 1): x, (3, 4): -lam1 / lam2 * x}
    if root == (1, 0):
        return {(0, 2): x, (0, 4): -lam1 / (2 * lam3) * x * x, (2, 4): -lam1 / lam3 * x}
    if root == (1, 1):
        return {(0, 3): x, (1, 4): -lam1 / lam2 * x}
    raise RootError("%s is not a positive root" % (root,))


def _check_lambdas(lambdas):
    lam1, lam2, lam3 = (Q(v) for v in lambdas)
    if not (lam1 and lam2 and lam3):
        raise RootError("lambdas must be nonzero")
    return lam1, lam2, lam3


def _from_entries(entries, transpose=False):
    rows = [[Fraction(int(i == j)) for j in range(5)] for i in range(5)]
    for (i, j), val in entries.items():
        if transpose:
            i, j = j, i
        rows[i][j] = val
    return Matrix(rows)


def unipotent_template(root, x, lambdas):
    """U_root(x) for a positive root."""
    if root not in POSITIVE_ROOTS:
        raise RootError("%s is not a positive root; use negative_template" % root_name(root))
    return _from_entries(_positive_entries(root, Q(x), *_check_lambdas(lambdas)))


def negative_template(root, x, lambdas):
    """U_root(x) for a negative root.

    Take the template of the opposite positive root with every ratio
    lambda_i / lambda_j inverted, then transpose. Inverting all the ratios
    is the same as evaluating at the reciprocal lambdas.
    """
    if root not in NEGATIVE_ROOTS:
        raise RootError("%s is not a negative root" % root_name(root))
    lam1, lam2, lam3 = _check_lambdas(lambdas)
    pos = (-root[0], -root[1])
    entries = _positive_entries(pos, Q(x), 1 / lam1, 1 / lam2, 1 / lam3)
    return _from_entries(entries, transpose=True)


def root_template(root, x, lambdas):
    if root in POSITIVE_ROOTS:
        return unipotent_template(root, x, lambdas)
    return negative_template(root, x, lambdas)


def pivot(root):
    "Position of the entry equal to the parameter x."
    if root in POSITIVE_ROOTS:
        return _PIVOT[root]
    i, j = _PIVOT[(-root[0], -root[1])]
    return (j, i)


def torus(t1, t2):
    t1, t2 = Q(t1), Q(t2)
    return Matrix.diag([t1, t2, 1, 1 / t2, 1 / t1])


@dataclass(frozen=True)
class RootElement:
    root: tuple
    param: Fraction
    matrix: Matrix

    @property
    def name(self):
        return root_name(self.root)


def classify_unipotent(g, lambdas):
    """Match g against every root template; RootElement or None.

    The identity lies in every root group and is reported as None, as is
    anything that is not a single root-group element.
    """
    if g.shape != (5, 5) or g.is_identity():
        return None
    for root in ROOTS:
        i, j = pivot(root)
        x = g[i, j]
        if x and root_template(root, x, lambdas) == g:
            return RootElement(root=root, param=x, matrix=g)
    return None


def density_certificate(elements, side="negative"):
    """True iff every root on the chosen side has a non-trivial element.

    side is "positive" or "negative". Every element must be integral.
    """
    side = side.lower()
    if side not in ("positive", "negative"):
        raise RootError("side must be 'positive' or 'negative'")
    wanted = POSITIVE_ROOTS if side == "positive" else NEGATIVE_ROOTS
    covered = set()
    for el in elements:
        if not el.matrix.is_integral():
            raise RootError("not in U(Z): %s element has non-integral entries" % el.name)
        if el.param != 0:
            covered.add(el.root)
    return all(r in covered for r in wanted)


def covered_roots(elements, side):
    wanted = POSITIVE_ROOTS if side == "positive" else NEGATIVE_ROOTS
    return [r for r in wanted if any(e.root == r and e.param for e in elements)]
