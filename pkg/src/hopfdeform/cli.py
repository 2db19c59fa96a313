"""Command-line front end.

Exit codes: 0 success, 2 configuration or schema error, 3 mathematical
precondition failure, 4 obstruction failure (residual class reported),
5 internal symmetry assertion, 1 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import certificates
from .errors import (
    HopfDeformError,
    ObstructionError,
    PreconditionError,
    SchemaError,
)
from .lie import dj_r_matrix, load_lie_algebra
from .schouten import h3_invariant_test, schouten
from .solvers import (
    associator_for_twist,
    solve_pentagon,
    solve_quasitriangular,
    solve_twist,
)
from .tensor import casimir_tensor
from .verify import verify_certificate

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


def resolve_algebra(spec):
    if os.path.exists(spec):
        return load_lie_algebra(spec)
    bundled = os.path.join(DATA_DIR, f"{spec}.json")
    if os.path.exists(bundled):
        return load_lie_algebra(bundled)
    raise SchemaError(f"algebra {spec!r}: no such file or bundled name")


def load_wedge_file(path, degree):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read wedge file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"wedge file is not valid JSON: {exc}") from exc
    w = certificates.wedge_from_json(doc)
    if w.degree != degree:
        raise SchemaError(f"expected a degree-{degree} wedge, got {w.degree}")
    return w


def resolve_f(L, spec):
    if spec == "dj":
        return dj_r_matrix(L)
    return load_wedge_file(spec, 2)


def resolve_t(L, spec):
    if spec == "casimir":
        return casimir_tensor(L)
    try:
        with open(spec, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read tensor file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"tensor file is not valid JSON: {exc}") from exc
    return certificates.tensor_terms_from_json(L, 2, doc.get("terms", doc))


def _common(parser, order_required=True):
    parser.add_argument("--algebra", required=True, help="path or bundled name")
    parser.add_argument("--order", type=int, required=order_required)
    parser.add_argument("--degree-cap", type=int, default=None)
    parser.add_argument("--theta", choices=("on", "off"), default=None)
    parser.add_argument("--out", default=None, help="certificate output path")
    parser.add_argument("--pivot-reverse", action="store_true")


def build_parser():
    p = argparse.ArgumentParser(
        prog="hopfdeform",
        description="Exact-order constructions of associators, twists and braidings",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("associator", help="solve the pentagon identity")
    _common(pa)
    pa.add_argument("--even", action="store_true", help="use the squared parameter")
    src = pa.add_mutually_exclusive_group(required=True)
    src.add_argument("--phi", help="degree-3 wedge JSON file")
    src.add_argument("--from-f", dest="from_f", help="'dj' or degree-2 wedge file")

    pt = sub.add_parser("twist", help="solve for the coproduct-side equivalence")
    _common(pt)
    pt.add_argument("--from-f", dest="from_f", default="dj")

    pq = sub.add_parser("qt", help="solve for a braided pair")
    _common(pq)
    pq.add_argument("--t", dest="t", default="casimir", help="'casimir' or tensor file")

    pv = sub.add_parser("verify", help="re-verify a certificate")
    pv.add_argument("certificate")

    pc = sub.add_parser("cohomology", help="sector dimension report")
    _common(pc, order_required=False)
    pc.add_argument("--from-f", dest="from_f", default=None)
    return p


def _theta_flag(args, L):
    if args.theta == "on":
        if L.cartan is None:
            raise PreconditionError("missing Cartan data")
        return True
    if args.theta == "off":
        return False
    return None


def _emit(doc, out):
    text = certificates.dumps(doc)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {out}")
    else:
        sys.stdout.write(text)


def _order_check(order):
    if order is None or order < 1:
        raise SchemaError("--order must be at least 1")


def cmd_associator(args):
    L = resolve_algebra(args.algebra)
    _order_check(args.order)
    theta = _theta_flag(args, L)
    if args.from_f:
        if L.cartan is None and args.from_f == "dj":
            raise PreconditionError("missing Cartan data")
        f = resolve_f(L, args.from_f)
        phi = schouten(L, f, f).scale(Fraction(2, 3))
    else:
        phi = load_wedge_file(args.phi, 3)
    cert = solve_pentagon(
        L,
        phi,
        args.order,
        cond_c=theta if theta is not None else (L.cartan is not None),
        even_parameter=args.even,
        degree_cap=args.degree_cap,
        pivot_reverse=args.pivot_reverse,
    )
    doc = certificates.associator_to_json(cert)
    report, _ = verify_certificate(doc)
    doc["verification"] = report
    _emit(doc, args.out)
    return 0 if report["ok"] else 1


def cmd_twist(args):
    L = resolve_algebra(args.algebra)
    _order_check(args.order)
    if args.from_f == "dj" and L.cartan is None:
        raise PreconditionError("missing Cartan data")
    f = resolve_f(L, args.from_f)
    acert = associator_for_twist(
        L, f, args.order, degree_cap=args.degree_cap, pivot_reverse=args.pivot_reverse
    )
    cert = solve_twist(L, f, acert, args.order, pivot_reverse=args.pivot_reverse)
    doc = certificates.twist_to_json(cert)
    report, _ = verify_certificate(doc)
    doc["verification"] = report
    _emit(doc, args.out)
    return 0 if report["ok"] else 1


def cmd_qt(args):
    L = resolve_algebra(args.algebra)
    _order_check(args.order)
    theta = _theta_flag(args, L)
    t = resolve_t(L, args.t)
    cert = solve_quasitriangular(
        L,
        t,
        args.order,
        use_theta=theta,
        degree_cap=args.degree_cap,
        pivot_reverse=args.pivot_reverse,
    )
    doc = certificates.qt_to_json(cert)
    report, _ = verify_certificate(doc)
    doc["verification"] = report
    _emit(doc, args.out)
    return 0 if report["ok"] else 1


def cmd_verify(args):
    report, doc = verify_certificate(args.certificate)
    print(json.dumps(report, indent=1, sort_keys=True))
    if report["ok"]:
        return 0
    first = report["first_failure"]
    sys.stderr.write(
        f"verification failed: {first['identity']}"
        + (f" at h^{first['h_order']}" if first.get("h_order") is not None else "")
        + "\n"
    )
    return 1


def cmd_cohomology(args):
    from .cohomology import cartier_sector_dims

    L = resolve_algebra(args.algebra)
    cap = args.degree_cap if args.degree_cap is not None else 4
    doc = {
        "algebra": L.to_json_dict(),
        "degree_cap": cap,
        "cartier": [
            cartier_sector_dims(L, n, cap, invariant=True)
            for n in range(1, 5)
        ],
    }
    if args.from_f:
        f = resolve_f(L, args.from_f)
        rep = h3_invariant_test(
            L, f, theta_eigenvalue=1 if L.cartan is not None else None
        )
        doc["ce_h3"] = {
            "h3_dim": rep["h3_dim"],
            "sector_dim_wedge3": rep["sector_dim_wedge3"],
            "kernel_dim": rep["kernel_dim"],
            "image_rank": rep["image_rank"],
            "ce_action_trivial": rep["ce_action_trivial"],
            "exact_exponential_hint": rep["exact_exponential_hint"],
            "representatives": [
                certificates.wedge_to_json(w) for w in rep["representatives"]
            ],
        }
    _emit(doc, args.out)
    return 0


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors, matching the config code
        return int(exc.code) if exc.code else 0
    handlers = {
        "associator": cmd_associator,
        "twist": cmd_twist,
        "qt": cmd_qt,
        "verify": cmd_verify,
        "cohomology": cmd_cohomology,
    }
    try:
        return handlers[args.command](args)
    except HopfDeformError as exc:
        block = {
            "error": {
                "kind": type(exc).__name__,
                "code": exc.exit_code,
                "message": str(exc),
            }
        }
        if isinstance(exc, ObstructionError):
            block["error"]["order"] = exc.order
            block["error"]["residual"] = repr(exc.residual)
        print(json.dumps(block, indent=1, sort_keys=True))
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
