"""Command-line front end.

Exit codes: 0 when every check passes, 1 on verification failures, 2 on
usage, spec or document errors.  Reports go to stdout, diagnostics to
stderr.
"""
from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path

from .builders import BuildSpec, build, d_weights, named_subalgebras, r_charges
from .cohomology import solve_and_certify
from .core import (
    AlgebraError, Central, D, Family, Generator, R, Superalgebra, ViolationReport,
    Violation, verify_antisymmetry, verify_subalgebra_closure, verify_super_jacobi,
    verify_weight_grading,
)
from .realizations import (
    build_oscillator_basis, canonical_relations, hamiltonian_residual, realize,
    verify_realization,
)
from .serialization import (
    check_entry, export_algebra, export_report, import_algebra, report_document,
)

CHECKS = ("jacobi", "grading", "closure", "realization", "oscillator-basis", "hamiltonian")


class UsageError(Exception):
    pass


def _spec_flags(p: argparse.ArgumentParser, with_input: bool) -> None:
    p.add_argument("--family", choices=[f.value for f in Family])
    p.add_argument("--d", type=int)
    p.add_argument("--two-ell", type=int, dest="two_ell")
    p.add_argument("--central", choices=[c.value for c in Central], default="none")
    if with_input:
        p.add_argument("--in", dest="input", type=Path, help="algebra document to read")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="supergca", description="Galilean (super)conformal algebra toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build an algebra and write its document")
    _spec_flags(b, with_input=False)
    b.add_argument("--out", type=Path)

    e = sub.add_parser("export", help="write the canonical document of a spec or input document")
    _spec_flags(e, with_input=True)
    e.add_argument("--out", type=Path)

    v = sub.add_parser("verify", help="run one verification suite")
    v.add_argument("check", choices=CHECKS)
    _spec_flags(v, with_input=True)
    v.add_argument("--flip-fermion-sign", action="store_true",
                   help="oscillator basis: use the sign-flipped fermion annihilators")

    a = sub.add_parser("appendix", help="solve for extra central terms at d = 1 and absorb them")
    a.add_argument("--two-ell", type=int, dest="two_ell", required=True)

    for p in (v, a):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", type=Path)
        p.add_argument("--timing", action="store_true", help="include wall-clock timings (json only)")
    return ap


def _algebra(args) -> Superalgebra:
    if getattr(args, "input", None) is not None:
        try:
            text = args.input.read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
        return import_algebra(text)
    missing = [f"--{k.replace('_', '-')}" for k in ("family", "d", "two_ell")
               if getattr(args, k) is None]
    if missing:
        raise UsageError(f"missing {', '.join(missing)} (or give --in)")
    return build(args.family, args.d, args.two_ell, args.central)


def _subject(alg: Superalgebra) -> dict | None:
    if alg.family is None:
        return None
    return {"family": alg.family.value, "d": alg.d, "twice_ell": alg.two_ell,
            "central": alg.central.value}


def _write(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


# ---------------------------------------------------------------------------
# verify suites; each returns a list of (name, report, extra) triples
# ---------------------------------------------------------------------------

def _need_builtin(alg: Superalgebra, what: str) -> None:
    if alg.family is None:
        raise UsageError(f"{what} needs a document with a spec block")


def _suite_jacobi(alg, args):
    return [("antisymmetry", verify_antisymmetry(alg), {}),
            ("super-jacobi", verify_super_jacobi(alg), {})]


def _suite_grading(alg, args):
    _need_builtin(alg, "grading")
    out = [("d-weight", verify_weight_grading(alg, D, d_weights(alg)), {})]
    if alg.family is Family.STANDARD:
        out.append(("r-charge", verify_weight_grading(alg, R, r_charges(alg)), {}))
    return out


def _suite_closure(alg, args):
    _need_builtin(alg, "closure")
    return [(f"closure:{name}", verify_subalgebra_closure(alg, gens), {})
            for name, gens in named_subalgebras(alg).items()]


def _suite_realization(alg, args):
    return [("realization", verify_realization(realize(alg)), {})]


def _mass_standard(alg, what):
    _need_builtin(alg, what)
    if alg.family is not Family.STANDARD or alg.central is not Central.MASS:
        raise UsageError(f"{what} needs --family standard --central mass")


def _suite_oscillator(alg, args):
    _mass_standard(alg, "oscillator-basis")
    basis = build_oscillator_basis(alg.two_ell, alg.d, args.flip_fermion_sign)
    rel = canonical_relations(basis)
    out = []
    one = Fraction(1)

    def expect(kind, target):
        bad = []
        for (x, y), val in sorted(rel[kind].items()):
            want = target if x == y else 0
            if val != want:
                bad.append(Violation(kind, (Generator(kind, x), Generator(kind, y)), val))
        return ViolationReport(bad)

    for kind in ("bb+", "bb", "b+b+", "aa", "a+a+"):
        out.append((kind, expect(kind, one if kind == "bb+" else 0), {}))
    diag = {v for (x, y), v in rel["aa+"].items() if x == y}
    s = None
    if len(diag) == 1:
        (v,) = diag
        if v == 1 or v == -1:
            s = 1 if v == 1 else -1
    report = expect("aa+", s if s is not None else one)
    out.append(("aa+", report, {"fermion_sign": s}))
    return out


def _suite_hamiltonian(alg, args):
    _mass_standard(alg, "hamiltonian")
    res = hamiltonian_residual(alg.two_ell, alg.d, args.flip_fermion_sign)
    entries = [] if not res else [Violation("hamiltonian", (D,), res)]
    return [("hamiltonian", ViolationReport(entries), {})]


SUITES = {"jacobi": _suite_jacobi, "grading": _suite_grading, "closure": _suite_closure,
          "realization": _suite_realization, "oscillator-basis": _suite_oscillator,
          "hamiltonian": _suite_hamiltonian}


def _render_text(doc: dict) -> str:
    lines = []
    for c in doc["checks"]:
        extra = "".join(f" {k}={v}" for k, v in sorted(c.items())
                        if k not in ("name", "status", "violations"))
        lines.append(f"{c['name']}: {c['status']}{extra}")
        for v in c.get("violations", []):
            lines.append(f"  {v['kind']} ({', '.join(v['witnesses'])}): {_text_residual(v['residual'])}")
    lines.append(f"status: {doc['status']}")
    return "\n".join(lines) + "\n"


def _text_residual(r) -> str:
    if isinstance(r, list):
        return " ".join(f"{t['coefficient']}*{t['generator']}" for t in r) or "0"
    return str(r)


def _emit(doc: dict, args) -> int:
    text = export_report(doc) if args.format == "json" else _render_text(doc)
    _write(text, args.out)
    return 0 if doc["status"] == "pass" else 1


def cmd_build(args) -> int:
    if args.family is None or args.d is None or args.two_ell is None:
        raise UsageError("build needs --family, --d and --two-ell")
    BuildSpec(args.family, args.d, args.two_ell, args.central)
    _write(export_algebra(build(args.family, args.d, args.two_ell, args.central)), args.out)
    return 0


def cmd_export(args) -> int:
    _write(export_algebra(_algebra(args)), args.out)
    return 0


def cmd_verify(args) -> int:
    alg = _algebra(args)
    t0 = time.perf_counter()
    results = SUITES[args.check](alg, args)
    elapsed = time.perf_counter() - t0
    checks = [check_entry(name, rep, alg, **extra) for name, rep, extra in results]
    doc = report_document(f"verify {args.check}", checks, _subject(alg),
                          {"seconds": elapsed} if args.timing else None)
    return _emit(doc, args)


def cmd_appendix(args) -> int:
    t0 = time.perf_counter()
    cert = solve_and_certify(args.two_ell)
    elapsed = time.perf_counter() - t0
    shifts = []
    for red in cert.redefinitions:
        if red is None:
            shifts.append(None)
        else:
            shifts.append({"method": red.method,
                           "shift": {g.label: str(a) for g, a in red.shift.items()}})
    check = {"name": "appendix", "status": "pass" if cert.verdict == "trivial" else "fail",
             "verdict": cert.verdict, "constraints": cert.rows, "unknowns": cert.cols,
             "rank": cert.rank, "nullity": cert.nullity, "shifts": shifts,
             "violations": []}
    doc = report_document("appendix", [check], {"family": "standard", "d": 1,
                                                "twice_ell": args.two_ell, "central": "none"},
                          {"seconds": elapsed} if args.timing else None)
    if args.format == "text":
        lines = [f"2l = {args.two_ell}, d = 1",
                 f"constraints: {cert.rows} x {cert.cols}, rank {cert.rank}, nullity {cert.nullity}"]
        for k, s in enumerate(shifts):
            if s is None:
                lines.append(f"  solution {k}: not absorbed")
            else:
                body = ", ".join(f"{g} += {a}*K" for g, a in s["shift"].items()) or "none"
                lines.append(f"  solution {k}: {s['method']}: {body}")
        lines.append(f"verdict: {cert.verdict}")
        _write("\n".join(lines) + "\n", args.out)
        return 0 if cert.verdict == "trivial" else 1
    return _emit(doc, args)


COMMANDS = {"build": cmd_build, "export": cmd_export, "verify": cmd_verify,
            "appendix": cmd_appendix}


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (AlgebraError, UsageError) as exc:
        print(f"supergca: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
