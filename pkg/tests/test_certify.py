import copy

import pytest

from orthohyp import certify
from orthohyp.certify import NoCertificateError, matrix_diff, replay_case, root_table
from orthohyp.exact_linalg import Matrix
from orthohyp.golden import GOLDEN


def test_case1_report():
    r = replay_case(1)
    assert r.passed and r.certificate and r.side == "negative"
    assert root_table(r) == {
        "t1^-1*t2^-1": ("c11", 2),
        "t2^-1": ("c14", 8),
        "t1^-1": ("c17", -16),
        "t1^-1*t2": ("c19", 16),
    }
    assert r.matrices["KtNK"][2, 2] == -8


def test_case5_report():
    r = replay_case(5)
    assert r.passed and r.side == "positive"
    assert {w: (e.name, e.param) for w, e in r.elements} == {
        "c2": ("t1*t2", -1), "c10": ("t1", -128), "c11": ("t1*t2^-1", -16), "c17": ("t2", 8192)}
    assert len(r.covered()) == 4
    assert r.to_dict()["roots_covered"] == "4/4"
    assert "density certificate: true" in r.to_text()


def test_no_certificate():
    with pytest.raises(NoCertificateError, match="no embedded certificate"):
        replay_case(2)


def test_mismatch_is_reported_not_raised(monkeypatch):
    gold = copy.deepcopy(GOLDEN[1])
    rows = [list(r) for r in gold["M_Q"].rows]
    rows[0][0] += 1
    gold["M_Q"] = Matrix(rows)
    monkeypatch.setitem(certify.GOLDEN, 1, gold)
    r = replay_case(1)
    assert not r.passed
    bad = [c for c in r.checks if not c.ok]
    assert [c.name for c in bad] == ["M_Q"]
    assert bad[0].diff == ["(1,1): expected -1, got -2"]
    assert r.certificate  # the certificate itself is unaffected


def test_matrix_diff_shapes():
    assert matrix_diff(Matrix.identity(2), Matrix.identity(3)) == ["shape (2, 2) != (3, 3)"]
    assert matrix_diff(Matrix.identity(2), Matrix.identity(2)) == []
