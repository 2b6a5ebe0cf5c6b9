from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from orthohyp.exact_linalg import (
    LinAlgError, Matrix, Q, congruence, det, dot, fmt_q, is_proportional,
    is_unipotent, mat_inv, mat_mul, mat_pow, nullspace, primitive_integral, rank, vec,
)
from orthohyp.golden import CASE1

from .conftest import fractions


def matrices(n, max_num=9):
    return st.lists(st.lists(fractions(max_num, 4), min_size=n, max_size=n),
                    min_size=n, max_size=n).map(Matrix)


def to_sympy(m):
    return sympy.Matrix([[sympy.Rational(e.numerator, e.denominator) for e in row] for row in m.rows])


def from_sympy(s):
    return Matrix([[Fraction(int(e.p), int(e.q)) for e in s.row(i)] for i in range(s.rows)])


A = CASE1["A"]
B = CASE1["B"]


def test_q_rejects_floats():
    with pytest.raises(TypeError):
        Q(0.5)
    assert Q("3/6") == Fraction(1, 2)
    assert fmt_q(Fraction(-3, 4)) == "-3/4"
    assert fmt_q(Fraction(8, 2)) == "4"


def test_identity_product():
    assert mat_mul(Matrix.identity(5), A) == A


def test_product_dimension_mismatch():
    with pytest.raises(LinAlgError):
        mat_mul(Matrix.zeros(2, 3), Matrix.zeros(2, 3))


def test_inverse_of_companion():
    assert mat_mul(A, mat_inv(A)).is_identity()
    assert mat_inv(Matrix.identity(5)) == Matrix.identity(5)


def test_recorded_c_is_a_inverse_b():
    C = mat_mul(mat_inv(A), B)
    assert C == CASE1["C"]
    assert C.col(4) == vec(-4, 9, -11, 6, -1)


def test_singular_inverse_raises():
    with pytest.raises(LinAlgError):
        mat_inv(Matrix.zeros(3))


def test_congruence_identity():
    assert congruence(Matrix.identity(5), CASE1["M_Q"]) == CASE1["M_Q"]


def test_unipotent_examples():
    assert is_unipotent(Matrix.identity(5))
    assert is_unipotent(A)
    assert not is_unipotent(B)
    assert is_unipotent(CASE1["words"]["c11"])


def test_nullspace_and_rank():
    m = Matrix([[1, 2, 3], [2, 4, 6]])
    assert rank(m) == 1
    ns = nullspace(m)
    assert len(ns) == 2
    for w in ns:
        assert m.apply(w) == vec(0, 0)


def test_primitive_integral():
    w, s = primitive_integral(vec(Fraction(1, 2), Fraction(3, 4), 0))
    assert w == vec(2, 3, 0) and s == 4


def test_is_proportional():
    assert is_proportional(A.scale(-3), A) == -3
    assert is_proportional(A, B) is None


def test_matrix_is_hashable_and_immutable():
    copy = Matrix([list(row) for row in A.rows])
    assert copy == A and hash(copy) == hash(A)
    assert len({A, copy, B}) == 2
    with pytest.raises(AttributeError):
        A.foo = 1


def test_dot_length_mismatch():
    with pytest.raises(LinAlgError):
        dot(vec(1, 2), vec(1, 2, 3))


@settings(max_examples=60, deadline=None)
@given(matrices(4))
def test_inverse_matches_sympy(m):
    s = to_sympy(m)
    if s.det() == 0:
        with pytest.raises(LinAlgError):
            mat_inv(m)
        return
    assert mat_inv(m) == from_sympy(s.inv())


@settings(max_examples=60, deadline=None)
@given(matrices(5))
def test_det_matches_sympy(m):
    assert det(m) == Fraction(str(to_sympy(m).det()))


@settings(max_examples=50, deadline=None)
@given(matrices(3), matrices(3), matrices(3))
def test_product_associative(a, b, c):
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))
    assert mat_mul(a, b).T == mat_mul(b.T, a.T)


@settings(max_examples=50, deadline=None)
@given(matrices(3), matrices(3), matrices(3))
def test_congruence_composes(s, t, q):
    assert congruence(mat_mul(s, t), q) == congruence(t, congruence(s, q))


@settings(max_examples=50, deadline=None)
@given(matrices(3), st.integers(-3, 3))
def test_power_and_double_inverse(m, k):
    if det(m) == 0:
        return
    assert mat_inv(mat_inv(m)) == m
    assert mat_mul(mat_pow(m, k), mat_pow(m, -k)).is_identity()


def test_copy_and_pickle():
    import copy
    import pickle
    assert copy.deepcopy(A) is A
    assert pickle.loads(pickle.dumps(A)) == A
