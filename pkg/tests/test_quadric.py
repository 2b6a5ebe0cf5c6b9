from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from orthohyp.cases import CASES, get_case
from orthohyp.exact_linalg import Matrix, congruence, det, rank, vec
from orthohyp.golden import CASE1, CASE5
from orthohyp.quadric import (
    IsotropicPair, RankCertificateError, antidiagonal_form, basis_from_matrix,
    conjugate_generators, eval_form, hyperbolic_basis, hyperbolic_partner,
    iter_isotropic, orthogonal_complement, read_lambdas, search_isotropic,
    verify_rank2_certificate,
)

from .conftest import nonzero_fractions


def test_eval_form_examples(forms):
    q = forms[1].N_int
    c = get_case(1)
    assert eval_form(q, c.iso1, c.iso1) == 0
    assert eval_form(q, c.iso1, c.iso2) == 0
    assert eval_form(Matrix.identity(5), vec(1, 0, 0, 0, 0), vec(1, 0, 0, 0, 0)) == 1


@pytest.mark.parametrize("case", CASES, ids=lambda c: "row%d" % c.id)
def test_rank2_certificates(case, forms):
    assert verify_rank2_certificate(forms[case.id].N_int, case.iso1, case.iso2)


def test_row4_explicit(forms):
    q = forms[4].N_int
    assert verify_rank2_certificate(q, (118, 365, 551, 463, 111), (1028, 2527, 4360, 4265, 0))


def test_dependent_pair_rejected(forms):
    c = get_case(1)
    assert not verify_rank2_certificate(forms[1].N_int, c.iso1, c.iso1)
    assert not verify_rank2_certificate(forms[1].N_int, c.iso1, (2, 0, 0, 2, 0))


def test_search_finds_table_vectors(forms):
    row5 = list(iter_isotropic(forms[5].N_int, 2))
    assert vec(1, 1, 1, 1, 0) in row5
    row1 = list(iter_isotropic(forms[1].N_int, 1))
    assert vec(1, 0, 0, 1, 0) in row1
    for q in (forms[1].N_int, forms[5].N_int):
        first = search_isotropic(q, 2)
        assert first is not None and eval_form(q, first, first) == 0


def test_search_order_is_deterministic(forms):
    hits = list(iter_isotropic(forms[5].N_int, 2))
    assert hits == list(iter_isotropic(forms[5].N_int, 2))
    norms = [max(abs(e) for e in w) for w in hits]
    assert norms == sorted(norms)
    for w in hits:
        assert next(e for e in w if e) > 0


def test_search_definite_form():
    assert search_isotropic(Matrix.identity(2), 10) is None
    assert search_isotropic(Matrix.diag([1, 1]), 3) is None


def test_search_hyperbolic_plane():
    assert list(iter_isotropic(Matrix([[0, 1], [1, 0]]), 3)) == [vec(0, 1), vec(1, 0)]


def test_search_in_subspace(forms):
    q = forms[1].N_int
    e1, e1s = vec(CASE1["eps1"]), vec(CASE1["eps1*"])
    comp = orthogonal_complement(q, [e1, e1s])
    w = search_isotropic(q, 3, subspace=comp)
    assert w is not None
    assert eval_form(q, w, w) == 0 and eval_form(q, w, e1) == 0 and eval_form(q, w, e1s) == 0


def test_orthogonal_complement_examples(forms):
    q = forms[1].N_Q
    comp = orthogonal_complement(q, [CASE1["eps1"], CASE1["eps1*"]])
    assert len(comp) == 3
    u1 = vec(CASE1["u1"])
    assert rank(Matrix(list(comp) + [u1])) == 3
    assert len(orthogonal_complement(q, [])) == 5
    std = [tuple(int(i == j) for j in range(5)) for i in range(5)]
    assert orthogonal_complement(q, std) == []


def test_hyperbolic_partner(forms):
    q = forms[1].N_Q
    e = vec(CASE1["eps1"])
    es = hyperbolic_partner(q, e, vec(0, 0, 0, 0, 1))
    assert eval_form(q, es, es) == 0 and eval_form(q, e, es) == 1
    with pytest.raises(RankCertificateError):
        hyperbolic_partner(q, e, e)


def test_recorded_bases(forms):
    hb1 = basis_from_matrix(forms[1].N_Q, CASE1["K"])
    assert hb1.lambdas == (1, 1, -8)
    assert congruence(CASE1["K"], forms[1].N_Q)[2, 2] == -8
    hb5 = basis_from_matrix(forms[5].N_Q, CASE5["K"])
    assert hb5.lambdas == (1, 1, -32)
    assert hb5.gram == antidiagonal_form(1, 1, -32)


def test_basis_for_antidiagonal_input():
    g = antidiagonal_form(2, 3, -5)
    hb = basis_from_matrix(g, Matrix.identity(5))
    assert hb.K.is_identity() and hb.lambdas == (2, 3, -5)
    assert read_lambdas(Matrix.identity(5)) is None


@pytest.mark.parametrize("case", CASES, ids=lambda c: "row%d" % c.id)
def test_seeded_basis_all_rows(case, forms):
    q = forms[case.id].N_Q
    hb = hyperbolic_basis(q, seed=IsotropicPair(vec(case.iso1), vec(case.iso2), q))
    lam1, lam2, lam3 = hb.lambdas
    g = congruence(hb.K, q)
    assert g == antidiagonal_form(lam1, lam2, lam3)
    # the anti-diagonal reversal on 5 letters is an even permutation
    assert det(g) == lam1 ** 2 * lam2 ** 2 * lam3
    assert hb.K.col(0) == vec(case.iso1)


def test_unseeded_basis(forms):
    for c in (1, 5):
        q = forms[c].N_Q
        hb = hyperbolic_basis(q, height=3)
        assert congruence(hb.K, q) == hb.gram


def test_basis_errors():
    with pytest.raises(RankCertificateError):
        hyperbolic_basis(Matrix.identity(5), height=2)
    with pytest.raises(RankCertificateError):
        hyperbolic_basis(Matrix.zeros(5))
    with pytest.raises(RankCertificateError, match="rank certificate unavailable"):
        hyperbolic_basis(Matrix.diag([1, 1, 1, 1, -1]), height=3)


def test_conjugate_generators(triples):
    t = triples[1]
    x, y = conjugate_generators(t.A, t.B, CASE1["K"])
    assert x == CASE1["x"] and x.row(3) == vec(1, 4, -8, 2, -4)
    t5 = triples[5]
    x5, y5 = conjugate_generators(t5.A, t5.B, CASE5["K"])
    assert y5 == CASE5["y"] and y5[0, 4] == F(3, 32)
    assert conjugate_generators(t.A, t.B, Matrix.identity(5)) == (t.A, t.B)


@settings(max_examples=60, deadline=None)
@given(nonzero_fractions(), nonzero_fractions(), nonzero_fractions())
def test_lambda_determinant_identity(l1, l2, l3):
    assert det(antidiagonal_form(l1, l2, l3)) == l1 ** 2 * l2 ** 2 * l3
    assert read_lambdas(antidiagonal_form(l1, l2, l3)) == (l1, l2, l3)
