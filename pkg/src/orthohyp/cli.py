"""
Command line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error or
unsupported input.
"""

import argparse
import json
import sys

from .cases import CASES, get_case
from .certify import NoCertificateError, replay_case
from .exact_linalg import fmt_q, vec
from .golden import GOLDEN
from .invariant_form import FormError, compute_form, is_invariant, monodromy_vector
from .monodromy import (
    FormType,
    HGParams,
    ParameterError,
    build_triple,
    classify_form,
    params_to_polys,
    parse_params,
    poly_str,
    signature,
    validate_pair,
)
from .quadric import (
    IsotropicPair,
    RankCertificateError,
    conjugate_generators,
    eval_form,
    hyperbolic_basis,
    search_isotropic,
    verify_rank2_certificate,
)
from .search import Budget, search_unipotents

SCHEMA = 1
EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _vec_out(v):
    return [fmt_q(e) for e in v]


def _emit(args, payload, text):
    if args.json:
        payload = dict({"schema": SCHEMA}, **payload)
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def _resolve(args):
    """-> (HGParams, case record or None)"""
    if getattr(args, "case", None) is not None:
        try:
            case = get_case(args.case)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        return case.params, case
    beta = getattr(args, "beta", None)
    if beta is None:
        raise UsageError("give --case N or --beta (and optionally --alpha)")
    alpha = getattr(args, "alpha", None)
    beta_q = parse_params(beta)
    alpha_q = parse_params(alpha) if alpha else (0,) * len(beta_q)
    return HGParams(alpha_q, beta_q), None


# -- analyze --

def analyze(params, orbit_gen="B"):
    f, g = params_to_polys(params)
    report = validate_pair(f, g)
    kind = classify_form(f, g)
    out = {
        "alpha": [fmt_q(a) for a in params.alpha],
        "beta": [fmt_q(b) for b in params.beta],
        "f": poly_str(f), "g": poly_str(g),
        "f_coeffs": list(f), "g_coeffs": list(g),
        "coprime": report.coprime,
        "f(0)": report.f0, "g(0)": report.g0, "f(1)": report.f1, "g(1)": report.g1,
        "form_type": kind.value,
        "warnings": report.warnings,
    }
    if not report.coprime:
        raise ParameterError("f and g share a root (gcd(f, g) != 1)")
    triple = build_triple(params)
    out["C_last_column"] = _vec_out(triple.C.col(triple.n - 1))
    if kind is not FormType.ORTHOGONAL:
        return out, None
    form = compute_form(triple, orbit_gen)
    sig = signature(params)
    out.update({
        "v": _vec_out(monodromy_vector(triple)),
        "orbit_generator": orbit_gen,
        "M_Q": form.M_Q.tolist(),
        "T": form.T.tolist(),
        "N_Q": form.N_Q.tolist(),
        "N_int": form.N_int.tolist(),
        "scale": fmt_q(form.scale),
        "first_row": _vec_out(form.N_int.row(0)),
        "signature": list(sig),
    })
    return out, form


def cmd_analyze(args):
    params, _case = _resolve(args)
    out, form = analyze(params, args.orbit_gen)
    if form is None:
        _emit(args, out, "f = %s\ng = %s\nform type: %s (no quadratic form computed)"
              % (out["f"], out["g"], out["form_type"]))
        return EXIT_USAGE
    text = "\n".join([
        "f = %s" % out["f"],
        "g = %s" % out["g"],
        "form type: %s" % out["form_type"],
        "C last column: (%s)" % ", ".join(out["C_last_column"]),
        "v: (%s)" % ", ".join(out["v"]),
        "M_Q (orbit basis of %s):\n%s" % (args.orbit_gen, form.M_Q),
        "N_int = %s * N_Q:\n%s" % (out["scale"], form.N_int),
        "first row of Q: (%s)" % ", ".join(out["first_row"]),
        "signature: (%d, %d) or (%d, %d)" % (out["signature"][0], out["signature"][1],
                                            out["signature"][1], out["signature"][0]),
    ])
    _emit(args, out, text)
    return EXIT_OK


# -- table2 --

def table2_rows(cases=CASES):
    rows = []
    for case in cases:
        triple = build_triple(case.params)
        form = compute_form(triple)
        q = form.N_int
        got = tuple(int(e) for e in q.row(0))
        iso = [eval_form(q, vec(case.iso1), vec(case.iso1)),
               eval_form(q, vec(case.iso2), vec(case.iso2)),
               eval_form(q, vec(case.iso1), vec(case.iso2))]
        rec = {
            "id": case.id,
            "beta": [fmt_q(b) for b in case.beta],
            "first_row": list(got),
            "expected_first_row": list(case.first_row),
            "first_row_ok": got == tuple(case.first_row),
            "iso1": list(case.iso1),
            "iso2": list(case.iso2),
            "Q(iso1,iso1)": fmt_q(iso[0]),
            "Q(iso2,iso2)": fmt_q(iso[1]),
            "Q(iso1,iso2)": fmt_q(iso[2]),
            "rank2_ok": verify_rank2_certificate(q, case.iso1, case.iso2),
            "invariant_ok": is_invariant(form.N_Q, triple.A) and is_invariant(form.N_Q, triple.B),
            "signature": list(signature(case.params)),
            "status": case.status,
        }
        rec["ok"] = rec["first_row_ok"] and rec["rank2_ok"] and rec["invariant_ok"]
        rows.append(rec)
    return rows


def cmd_table2(args, cases=CASES):
    rows = table2_rows(cases)
    n_ok = sum(r["ok"] for r in rows)
    lines = []
    for r in rows:
        line = "%2d  %-28s  (%s)  %s" % (
            r["id"], ",".join(r["beta"]), ", ".join(map(str, r["first_row"])),
            "PASS" if r["ok"] else "FAIL")
        lines.append(line)
        if not r["first_row_ok"]:
            lines.append("    first row: expected (%s)" % ", ".join(map(str, r["expected_first_row"])))
        if not r["rank2_ok"]:
            lines.append("    isotropic check: Q(v1,v1)=%s Q(v2,v2)=%s Q(v1,v2)=%s"
                         % (r["Q(iso1,iso1)"], r["Q(iso2,iso2)"], r["Q(iso1,iso2)"]))
        if not r["invariant_ok"]:
            lines.append("    N_Q not invariant under A, B")
    lines.append("%d/%d PASS" % (n_ok, len(rows)))
    _emit(args, {"rows": rows, "passed": n_ok, "total": len(rows)}, "\n".join(lines))
    return EXIT_OK if n_ok == len(rows) else EXIT_MISMATCH


# -- rank2 / hyperbolic --

def cmd_rank2(args):
    params, case = _resolve(args)
    _out, form = analyze(params)
    if form is None:
        raise UsageError("not an orthogonal pair")
    q = form.N_int
    out = {"N_int_first_row": _vec_out(q.row(0))}
    ok = True
    if case is not None:
        ok = verify_rank2_certificate(q, case.iso1, case.iso2)
        out.update({"iso1": list(case.iso1), "iso2": list(case.iso2), "certificate_ok": ok})
    if args.height:
        w = search_isotropic(q, args.height)
        out["search_height"] = args.height
        out["found"] = None if w is None else _vec_out(w)
    lines = ["first row of Q: (%s)" % ", ".join(out["N_int_first_row"])]
    if case is not None:
        lines.append("isotropic pair %s, %s: %s" % (case.iso1, case.iso2, "PASS" if ok else "FAIL"))
    if args.height:
        lines.append("search up to height %d: %s" % (
            args.height, "not found" if out["found"] is None else "(%s)" % ", ".join(out["found"])))
    _emit(args, out, "\n".join(lines))
    return EXIT_OK if ok else EXIT_MISMATCH


def _hyperbolic_for(params, case, height):
    triple = build_triple(params)
    form = compute_form(triple)
    seed = None
    if case is not None:
        seed = IsotropicPair(vec(case.iso1), vec(case.iso2), form.N_Q)
    return triple, form, hyperbolic_basis(form.N_Q, seed=seed, height=height)


def cmd_hyperbolic(args):
    params, case = _resolve(args)
    _triple, _form, hb = _hyperbolic_for(params, case, args.height or 6)
    out = {"K": hb.K.tolist(), "lambdas": _vec_out(hb.lambdas),
           "basis_order": ["eps1", "eps2", "u", "eps2*", "eps1*"]}
    text = "K (columns eps1, eps2, u, eps2*, eps1*):\n%s\nlambdas: (%s)" % (
        hb.K, ", ".join(out["lambdas"]))
    _emit(args, out, text)
    return EXIT_OK


# -- certify / replay --

def _replay(args, full):
    try:
        report = replay_case(args.case)
    except NoCertificateError as exc:
        print("case %s: no embedded certificate" % args.case, file=sys.stderr)
        if args.json:
            print(json.dumps({"schema": SCHEMA, "case": args.case, "error": str(exc.args[0])}))
        return EXIT_USAGE
    payload = report.to_dict()
    if not full:
        payload.pop("matrices")
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(report.to_text())
        if full:
            for name, m in report.matrices.items():
                print("%s =\n%s" % (name, m))
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_certify(args):
    return _replay(args, full=False)


def cmd_replay(args):
    return _replay(args, full=True)


# -- search --

def cmd_search(args):
    params, case = _resolve(args)
    if case is not None and case.id in GOLDEN:
        gold = GOLDEN[case.id]
        triple = build_triple(params)
        x, y = conjugate_generators(triple.A, triple.B, gold["K"])
        lambdas = gold["lambdas"]
    else:
        triple, _form, hb = _hyperbolic_for(params, case, args.height or 6)
        x, y = conjugate_generators(triple.A, triple.B, hb.K)
        lambdas = hb.lambdas
    budget = Budget(max_len=args.max_len, max_power=args.max_power,
                    max_commutator_depth=args.max_commutator_depth,
                    node_limit=args.node_limit)
    res = search_unipotents(x, y, lambdas, budget)
    hits = [{"root": h.element.name, "param": fmt_q(h.element.param),
             "word": h.word, "length": h.length} for h in res.hits]
    out = {"lambdas": _vec_out(lambdas), "nodes": res.nodes,
           "partial": res.exhausted, "hits": hits}
    lines = ["%-12s x = %-8s %s" % ("U_" + h["root"], h["param"], h["word"]) for h in hits]
    lines.append("%d root elements from %d nodes%s" % (
        len(hits), res.nodes, " (node limit reached)" if res.exhausted else ""))
    _emit(args, out, "\n".join(lines))
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="orthohyp", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, params=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if params:
            sp.add_argument("--case", type=int, help="built-in case 1-14")
            sp.add_argument("--alpha", help="comma-separated rationals (default all 0)")
            sp.add_argument("--beta", help="comma-separated rationals")

    sp = sub.add_parser("analyze", help="polynomials, invariant form, signature")
    common(sp)
    sp.add_argument("--orbit-gen", choices=("A", "B"), default="B")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("table2", help="recompute and verify all 14 forms and isotropic pairs")
    common(sp, params=False)
    sp.set_defaults(func=cmd_table2)

    sp = sub.add_parser("rank2", help="verify the Q-rank 2 certificate")
    common(sp)
    sp.add_argument("--height", type=int, default=0, help="also search isotropic vectors")
    sp.set_defaults(func=cmd_rank2)

    sp = sub.add_parser("hyperbolic", help="hyperbolic basis K and lambdas")
    common(sp)
    sp.add_argument("--height", type=int, default=0)
    sp.set_defaults(func=cmd_hyperbolic)

    for name, func in (("certify", cmd_certify), ("replay", cmd_replay)):
        sp = sub.add_parser(name, help="replay the arithmeticity certificate (cases 1, 5)")
        sp.add_argument("--case", type=int, required=True)
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)

    sp = sub.add_parser("search", help="bounded search for root-group elements")
    common(sp)
    sp.add_argument("--height", type=int, default=0)
    sp.add_argument("--max-len", type=int, default=8)
    sp.add_argument("--max-power", type=int, default=6)
    sp.add_argument("--max-commutator-depth", type=int, default=1)
    sp.add_argument("--node-limit", type=int, default=10 ** 5)
    sp.set_defaults(func=cmd_search)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ParameterError, FormError, RankCertificateError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
