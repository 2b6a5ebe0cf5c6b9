"""
End-to-end replay of the two arithmeticity certificates.

params -> (A, B, C) -> invariant form -> fixed hyperbolic basis K ->
x = K^-1 A K, y = K^-1 B K -> word script -> root-group classification ->
density check. Every intermediate is diffed against the recorded matrices;
mismatches are recorded in the report rather than raised.
"""

from dataclasses import dataclass, field

from .cases import get_case
from .exact_linalg import congruence, fmt_q, lincomb, vec
from .golden import GOLDEN
from .invariant_form import compute_form, is_invariant, monodromy_vector
from .monodromy import build_triple
from .quadric import antidiagonal_form, conjugate_generators, eval_form
from .root_system import classify_unipotent, covered_roots, density_certificate, root_name
from .words import evaluate, load_script


class NoCertificateError(KeyError):
    pass


@dataclass
class Check:
    name: str
    ok: bool
    diff: list = field(default_factory=list)

    def to_dict(self):
        return {"name": self.name, "ok": self.ok, "diff": self.diff}


@dataclass
class CertificateReport:
    case_id: int
    side: str
    checks: list
    elements: list  # [(word name, RootElement)]
    certificate: bool
    matrices: dict

    @property
    def golden_ok(self):
        return all(c.ok for c in self.checks)

    @property
    def passed(self):
        return self.certificate and self.golden_ok

    def covered(self):
        return covered_roots([e for _, e in self.elements], self.side)

    def to_dict(self):
        return {
            "schema": 1,
            "case": self.case_id,
            "side": self.side,
            "passed": self.passed,
            "certificate": self.certificate,
            "roots_covered": "%d/4" % len(self.covered()),
            "elements": [
                {"word": w, "root": e.name, "param": fmt_q(e.param)}
                for w, e in self.elements
            ],
            "checks": [c.to_dict() for c in self.checks],
            "matrices": {k: m.tolist() for k, m in self.matrices.items()},
        }

    def to_text(self):
        lines = ["case %d: %s" % (self.case_id, "PASS" if self.passed else "FAIL")]
        for c in self.checks:
            lines.append("  [%s] %s" % ("ok" if c.ok else "MISMATCH", c.name))
            for d in c.diff[:10]:
                lines.append("      %s" % d)
        for w, e in self.elements:
            lines.append("  %-4s in U_%s with x = %s" % (w, e.name, fmt_q(e.param)))
        lines.append("  roots covered: %d/4 %s" % (len(self.covered()), self.side))
        lines.append("  density certificate: %s" % ("true" if self.certificate else "false"))
        return "\n".join(lines)


def matrix_diff(expected, got):
    if expected.shape != got.shape:
        return ["shape %s != %s" % (expected.shape, got.shape)]
    out = []
    for i in range(expected.nrows):
        for j in range(expected.ncols):
            if expected[i, j] != got[i, j]:
                out.append("(%d,%d): expected %s, got %s"
                           % (i + 1, j + 1, fmt_q(expected[i, j]), fmt_q(got[i, j])))
    return out


def _vector_diff(expected, got):
    expected, got = vec(expected), vec(got)
    if expected == got:
        return []
    return ["expected (%s), got (%s)" % (", ".join(map(fmt_q, expected)),
                                        ", ".join(map(fmt_q, got)))]


def replay_case(case_id):
    if case_id not in GOLDEN:
        raise NoCertificateError("no embedded certificate for case %r" % (case_id,))
    gold = GOLDEN[case_id]
    case = get_case(case_id)
    checks = []

    def check(name, diff):
        checks.append(Check(name, not diff, diff))

    triple = build_triple(case.params)
    check("A", matrix_diff(gold["A"], triple.A))
    check("B", matrix_diff(gold["B"], triple.B))
    check("C = A^-1 B", matrix_diff(gold["C"], triple.C))

    form = compute_form(triple, "B")
    v = monodromy_vector(triple)
    check("M_Q", matrix_diff(gold["M_Q"], form.M_Q))
    check("T", matrix_diff(gold["T"], form.T))
    check("v = (C - I) e_5", _vector_diff(gold["v"], v))
    check("C v = -v", _vector_diff(tuple(-e for e in v), triple.C.apply(v)))
    n_q = form.N_Q
    inv_diff = []
    if not is_invariant(n_q, triple.A):
        inv_diff.append("A^t N_Q A != N_Q")
    if not is_invariant(n_q, triple.B):
        inv_diff.append("B^t N_Q B != N_Q")
    check("A, B preserve N_Q", inv_diff)

    if "orbit" in gold:
        for k, w in enumerate(gold["orbit"]):
            check("B^%d v" % k, _vector_diff(w, form.T.col(k)))
        orbit = [form.T.col(k) for k in range(5)]
        for name, coords in gold["orbit_coords"].items():
            check(name, _vector_diff(gold[name], lincomb(coords, orbit)))
        e1, e1s = vec(gold["eps1"]), vec(gold["eps1*"])
        iso = []
        for label, a, b, want in (("Q(eps1, eps1)", e1, e1, 0), ("Q(eps1*, eps1*)", e1s, e1s, 0),
                                  ("Q(eps1, eps1*)", e1, e1s, 1)):
            got = eval_form(n_q, a, b)
            if got != want:
                iso.append("%s = %s, expected %s" % (label, fmt_q(got), want))
        check("eps1, eps1* hyperbolic pair", iso)
        u_expect = lincomb((4, 0, 0, 3, 0), orbit)
        u_expect = tuple(a - b - 3 * c for a, b, c in zip(u_expect, vec(gold["eps2"]), vec(gold["eps2*"])))
        check("u = (4v + 3B^3 v) - eps2 - 3 eps2*", _vector_diff(gold["u"], u_expect))
        check("L^t N_Q L", matrix_diff(gold["LtNL"], congruence(gold["L"], n_q)))

    K = gold["K"]
    lam = gold["lambdas"]
    check("K^t N_Q K", matrix_diff(antidiagonal_form(*lam), congruence(K, n_q)))

    x, y = conjugate_generators(triple.A, triple.B, K)
    check("x = K^-1 A K", matrix_diff(gold["x"], x))
    check("y = K^-1 B K", matrix_diff(gold["y"], y))

    values = evaluate(load_script(case.proof_words), x, y)
    elements = []
    for name, expected in gold["words"].items():
        got = values[name]
        check(name, matrix_diff(expected, got))
        el = classify_unipotent(got, lam)
        if el is None:
            checks.append(Check("%s is a root-group element" % name, False,
                                ["not a single root-group element"]))
        else:
            elements.append((name, el))

    side = gold["side"]
    try:
        cert = density_certificate([e for _, e in elements], side)
    except ValueError as exc:
        checks.append(Check("integrality", False, [str(exc)]))
        cert = False

    matrices = {"A": triple.A, "B": triple.B, "C": triple.C, "M_Q": form.M_Q,
                "T": form.T, "N_Q": n_q, "N_int": form.N_int, "K": K,
                "KtNK": congruence(K, n_q), "x": x, "y": y}
    matrices.update({name: values[name] for name in gold["words"]})
    return CertificateReport(case_id=case_id, side=side, checks=checks,
                             elements=elements, certificate=cert, matrices=matrices)


def root_table(report):
    "{root name: (word, param)} for the classified elements."
    return {root_name(e.root): (w, e.param) for w, e in report.elements}

