"""Command-line front end.

Every command prints one JSON report ``{"command", "status", "payload"}``.
Exit codes: 0 all checks pass, 1 mathematical violation, 2 parse/IO or
usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from . import catalog, kernels
from .algebra import ViolationReport, center, derived_algebra, is_perfect, is_solvable
from .classify import classify
from .errors import (
    ClassificationInconsistency,
    DimensionMismatch,
    NLieError,
    ParameterError,
    ParseError,
    VerificationError,
)
from .fileio import (
    algebra_to_dict,
    dumps,
    format_mat,
    format_scalar,
    format_vec,
    load_algebra,
    parse_scalar,
    parse_vectors,
    save_algebra,
    subspace_to_list,
)
from .linalg import span
from .metric import (
    LeviAnnotation,
    MetricAlgebra,
    check_all,
    dual_isotropic_basis,
    invariant_form_space,
    is_isotropic,
    metric_quotient,
    orthogonal_complement,
    ortho_split,
    reduce_by_center,
    verify,
    verify_levi,
)

CHECK_ANCHORS = {
    "fundamental_identity": "fundamental identity [[x1..xn],y2..yn] = sum_i [x1..[xi,y2..yn]..xn]",
    "symmetry": "symmetry B(x,y) = B(y,x)",
    "invariance": "invariance B([x1..x(n-1),y1],y2) = -B([x1..x(n-1),y2],y1)",
    "nondegeneracy": "nondegeneracy of B",
}

EXIT_OK, EXIT_VIOLATION, EXIT_ERROR = 0, 1, 2


class _Usage(Exception):
    pass


def _emit(command: str, status: str, payload: dict) -> None:
    sys.stdout.write(dumps({"command": command, "status": status, "payload": payload}))


def _report_dict(rep: ViolationReport) -> dict:
    wit = []
    for w in rep.witnesses:
        r = w.residual
        wit.append({
            "indices": [list(t) for t in w.indices],
            "residual": format_vec(r) if isinstance(r, tuple) else format_scalar(r),
        })
    return {"ok": rep.ok, "check": CHECK_ANCHORS[rep.kind], "witnesses": wit}


def _status_dict(MA: MetricAlgebra) -> dict:
    s = MA.status
    return {
        "fundamental_identity_ok": s.fundamental_identity_ok,
        "symmetric_ok": s.symmetric_ok,
        "invariance_ok": s.invariance_ok,
        "nondegenerate_ok": s.nondegenerate_ok,
    }


def _load_metric(path: str) -> MetricAlgebra:
    A, B = load_algebra(path)
    if B is None:
        raise _Usage(f"{path} has no form; this command needs a metric algebra")
    return verify(A, B)


def _require_verified(MA: MetricAlgebra) -> None:
    if not MA.status.ok:
        raise VerificationError(f"input fails its checks: {_status_dict(MA)}")


def _metric_payload(MA: MetricAlgebra) -> dict:
    return {"status": _status_dict(MA), "algebra": algebra_to_dict(MA.algebra, MA.form)}


# --------------------------------------------------------------------------
# commands; each returns (status, payload)
# --------------------------------------------------------------------------


def cmd_check(args):
    A, B = load_algebra(args.path)
    reports = check_all(A, B)
    ok = all(r.ok for r in reports.values())
    return ("ok" if ok else "violation"), {"reports": {k: _report_dict(r) for k, r in reports.items()}}


def cmd_invariants(args):
    A, B = load_algebra(args.path)
    C, D = center(A), derived_algebra(A)
    payload = {
        "dim": A.dim,
        "arity": A.arity,
        "dim_center": C.dim,
        "dim_derived": D.dim,
        "center_isotropic": is_isotropic(B, C) if B is not None else None,
        "perfect": is_perfect(A),
        "solvable": is_solvable(A),
        "derived_eq_center_perp": (D == orthogonal_complement(B, C)) if B is not None else None,
    }
    return "ok", payload


def _scalar_arg(v):
    return None if v is None else parse_scalar(v)


def cmd_build(args):
    fam = args.family
    if fam == "ortho_sum":
        if not args.parts:
            raise _Usage("ortho_sum needs --parts FILE [FILE ...]")
        parts = [_load_metric(p) for p in args.parts]
        MA = catalog.ortho_direct_sum(parts)
        params = {"family": fam, "parts": list(args.parts)}
    else:
        p = catalog.FamilyParams(
            family=fam, n=args.n, k=args.k, l=args.l, d=args.d,
            a=_scalar_arg(args.a), c=_scalar_arg(args.c),
            lam=_scalar_arg(args.lam), mu=_scalar_arg(args.mu),
        )
        MA = catalog.build(p)
        params = {k: (format_scalar(v) if isinstance(v, Fraction) else v)
                  for k, v in vars(p).items() if v is not None}
    if args.out:
        save_algebra(args.out, MA.algebra, MA.form)
    payload = {"params": params, **_metric_payload(MA)}
    if args.out:
        payload["written"] = args.out
    return ("ok" if MA.status.ok else "violation"), payload


def cmd_classify(args):
    MA = _load_metric(args.path)
    _require_verified(MA)
    try:
        rep = classify(MA)
    except ClassificationInconsistency as e:
        return "violation", {"error": str(e), "profile": e.profile}
    return "ok", rep.to_dict()


def cmd_forms(args):
    A, _ = load_algebra(args.path)
    forms, dim = invariant_form_space(A)
    return "ok", {"dimension": dim, "basis": [format_mat(f.gram) for f in forms]}


def cmd_quotient(args):
    MA = _load_metric(args.path)
    _require_verified(MA)
    I = span(parse_vectors(args.ideal, MA.dim), MA.dim)
    Q = metric_quotient(MA, I)
    if args.out:
        save_algebra(args.out, Q.algebra, Q.form)
    payload = {"ideal": subspace_to_list(I), "quotient_dim": Q.dim, **_metric_payload(Q)}
    return ("ok" if Q.status.ok else "violation"), payload


def cmd_reduce(args):
    MA = _load_metric(args.path)
    _require_verified(MA)
    R = reduce_by_center(MA, args.l)
    C = center(MA.algebra)
    sel = span(C.basis[:args.l], MA.dim)
    payload = {
        "l": args.l,
        "new_arity": R.arity,
        "central_vectors": subspace_to_list(sel),
        "dual_vectors": [format_vec(v) for v in dual_isotropic_basis(MA, sel)],
        **_metric_payload(R),
    }
    if args.out:
        save_algebra(args.out, R.algebra, R.form)
        payload["written"] = args.out
    return "ok", payload


def cmd_orthosplit(args):
    MA = _load_metric(args.path)
    _require_verified(MA)
    C1, g1 = ortho_split(MA)
    return "ok", {"C1": subspace_to_list(C1), "g1": subspace_to_list(g1),
                  "dim_C1": C1.dim, "dim_g1": g1.dim}


def cmd_verify_levi(args):
    MA = _load_metric(args.path)
    d = MA.dim
    s_parts = tuple(span(parse_vectors(s, d), d) for s in args.s)
    r = span(parse_vectors(args.r, d), d)
    iso = span(parse_vectors(args.iso, d), d) if args.iso is not None else None
    rep = verify_levi(MA, LeviAnnotation(s_parts, r, iso))
    return ("ok" if rep.ok else "violation"), {
        "checks": [{"name": k, "ok": v} for k, v in rep.checks],
        "failures": rep.failures,
    }


COMMANDS = {
    "check": cmd_check,
    "invariants": cmd_invariants,
    "build": cmd_build,
    "classify": cmd_classify,
    "forms": cmd_forms,
    "quotient": cmd_quotient,
    "reduce": cmd_reduce,
    "orthosplit": cmd_orthosplit,
    "verify-levi": cmd_verify_levi,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nlk", description="Exact tools for metric n-Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("check", "invariants", "classify", "forms", "orthosplit"):
        sp = sub.add_parser(name)
        sp.add_argument("path")

    sp = sub.add_parser("build", help="emit a catalog algebra")
    sp.add_argument("family", choices=catalog.FAMILIES)
    sp.add_argument("--n", type=int, default=3, help="arity")
    sp.add_argument("--k", type=int)
    sp.add_argument("--l", type=int)
    sp.add_argument("--d", type=int, help="dimension (abelian)")
    sp.add_argument("--a")
    sp.add_argument("--c")
    sp.add_argument("--lam")
    sp.add_argument("--mu")
    sp.add_argument("--parts", nargs="+", help="algebra files for ortho_sum")
    sp.add_argument("-o", "--out")

    sp = sub.add_parser("quotient")
    sp.add_argument("path")
    sp.add_argument("--ideal", required=True, help='basis vectors, e.g. "1,0,0;0,1,0"')
    sp.add_argument("-o", "--out")

    sp = sub.add_parser("reduce")
    sp.add_argument("path")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("-o", "--out")

    sp = sub.add_parser("verify-levi")
    sp.add_argument("path")
    sp.add_argument("--s", action="append", required=True, help="one simple part; repeat per part")
    sp.add_argument("--r", required=True)
    sp.add_argument("--iso")
    return p


_NEG_SCALAR = re.compile(r"^-\d+(/\d+)?$")
_SCALAR_OPTS = ("--a", "--c", "--lam", "--mu")


def _join_negative_scalars(argv: list) -> list:
    # argparse mistakes "-1/2" for an option; rewrite "--mu -1/2" as "--mu=-1/2"
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _SCALAR_OPTS and i + 1 < len(argv) and _NEG_SCALAR.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    argv = _join_negative_scalars(list(sys.argv[1:] if argv is None else argv))
    command = argv[0] if argv else ""
    try:
        kernels.default_workers()
        args = build_parser().parse_args(argv)
        command = args.command
        status, payload = COMMANDS[command](args)
    except (ParseError, _Usage, OSError, ParameterError, DimensionMismatch) as e:
        _emit(command, "error", {"error": str(e)})
        return EXIT_ERROR
    except NLieError as e:
        # not an ideal, not isotropic, failed verification, ...
        _emit(command, "violation", {"error": str(e), "kind": type(e).__name__})
        return EXIT_VIOLATION
    except ValueError as e:
        _emit(command, "error", {"error": str(e)})
        return EXIT_ERROR
    _emit(command, status, payload)
    return EXIT_OK if status == "ok" else EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
