"""Batch command line interface.

Exit codes: 0 pass, 1 domain-negative result or failure witness, 2 usage or
parse error, 3 resource cap exceeded. Stdout carries one deterministic JSON
document (or its text rendering); wall time goes to a stderr trailer so
byte-wise output comparison stays meaningful.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import jsonio
from .errors import (
    CapExceeded,
    IntegrityError,
    InvalidInstance,
    ParseError,
    PreconditionFailed,
    ReesKitError,
    TheoremCounterexample,
)
from .matroid import basis_monomial_ideal, enumerate_matroids
from .polymatroid import (
    PolymatroidBases,
    check_polymatroid_bases,
    divide_by_variable,
    symmetric_exchange_violations,
)
from .reescone import (
    ORACLE_CAP,
    Verdict,
    classify,
    facet_normals,
    facet_normals_oracle,
    rees_generators,
    verify_basis_facet_shape,
)
from .semigroup import (
    DEFAULT_CAP,
    certify_normality_pipeline,
    decomposition_check,
    ehrhart_equality_check,
    hilbert_basis,
    is_normal,
)

CHECKS = {
    "T3.6": "quasi-ideal facet shape of basis Rees cones",
    "P3.7": "dilation equality for basis monomials",
    "C3.9": "normality of basis monomial ideals",
    "T2.2": "decomposition of the normalization",
    "L3.10": "closure of base sets under variable division",
}


def _scalar_list(v) -> bool:
    return isinstance(v, list) and not any(isinstance(e, (dict, list)) for e in v)


def _render_text(payload, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for k in sorted(payload):
            v = payload[k]
            if _scalar_list(v):
                lines.append(f"{pad}{k}: [{', '.join(str(e) for e in v)}]")
            elif isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(payload, list):
        for v in payload:
            if _scalar_list(v):
                lines.append(f"{pad}- [{', '.join(str(e) for e in v)}]")
            elif isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{payload}")
    return "\n".join(line for line in lines if line != "")


def _emit(payload, args) -> None:
    if getattr(args, "format", "json") == "text":
        sys.stdout.write(_render_text(jsonio.encode(payload)) + "\n")
    else:
        sys.stdout.write(jsonio.dumps(payload))


def _load_valid(args):
    instance = jsonio.load_instance(args.instance)
    outcome = jsonio.realize(instance)
    return instance, outcome


def cmd_validate(args) -> int:
    instance, outcome = _load_valid(args)
    if not outcome.ok:
        _emit(
            {"valid": False, "kind": instance.kind, "name": instance.name,
             "witness": outcome.witness},
            args,
        )
        return 1
    value = outcome.value
    payload = {"valid": True, "kind": instance.kind, "name": instance.name}
    payload["normalized"] = value.to_json()
    _emit(payload, args)
    return 0


def cmd_analyze(args) -> int:
    instance, outcome = _load_valid(args)
    if not outcome.ok:
        _emit({"error": "invalid_instance", "witness": outcome.witness,
               "kind": instance.kind, "name": instance.name}, args)
        return 1
    ideal = jsonio.analysis_ideal(outcome.value)
    cone = rees_generators(ideal)
    fs = facet_normals(cone)
    payload = {
        "name": instance.name,
        "kind": instance.kind,
        "ideal": ideal.to_json(),
        "generators": [list(g) for g in cone.generators],
        "facets": fs.to_json(),
        "classification": classify(fs).to_json(),
    }
    try:
        payload["hilbert"] = hilbert_basis(cone, fs, args.cap).to_json()
        payload["normality"] = certify_normality_pipeline(ideal, args.cap).to_json()
    except CapExceeded as exc:
        notice = {"error": "cap_exceeded", "detail": str(exc)}
        payload.setdefault("hilbert", notice)
        payload["normality"] = notice
    _emit(payload, args)
    return 0


def cmd_rees_facets(args) -> int:
    instance, outcome = _load_valid(args)
    if not outcome.ok:
        _emit({"error": "invalid_instance", "witness": outcome.witness}, args)
        return 1
    ideal = jsonio.analysis_ideal(outcome.value)
    cone = rees_generators(ideal)
    fs = facet_normals(cone)
    run_oracle = args.oracle or len(cone.generators) <= ORACLE_CAP
    payload = {
        "name": instance.name,
        "generators": [list(g) for g in cone.generators],
        "facets": fs.to_json(),
        "oracle_checked": run_oracle,
    }
    if run_oracle:
        oracle = facet_normals_oracle(cone, cap=max(ORACLE_CAP, len(cone.generators)))
        if oracle != fs:
            _emit({"error": "integrity", "detail": "oracle disagrees with the engine",
                   "facets": fs.to_json(), "oracle": oracle.to_json()}, args)
            return 1
    _emit(payload, args)
    return 0


def cmd_classify(args) -> int:
    instance, outcome = _load_valid(args)
    if not outcome.ok:
        _emit({"error": "invalid_instance", "witness": outcome.witness}, args)
        return 1
    ideal = jsonio.analysis_ideal(outcome.value)
    fs = facet_normals(rees_generators(ideal))
    result = classify(fs)
    _emit({"name": instance.name, "facets": fs.to_json(),
           "classification": result.to_json()}, args)
    return 1 if result.verdict is Verdict.NEITHER else 0


def cmd_hilbert(args) -> int:
    instance, outcome = _load_valid(args)
    if not outcome.ok:
        _emit({"error": "invalid_instance", "witness": outcome.witness}, args)
        return 1
    ideal = jsonio.analysis_ideal(outcome.value)
    cone = rees_generators(ideal)
    fs = facet_normals(cone)
    hb = hilbert_basis(cone, fs, args.cap)
    _emit({"name": instance.name, "generators": [list(g) for g in cone.generators],
           "facets": fs.to_json(), "hilbert": hb.to_json()}, args)
    return 0


def cmd_normality(args) -> int:
    instance, outcome = _load_valid(args)
    if not outcome.ok:
        _emit({"error": "invalid_instance", "witness": outcome.witness}, args)
        return 1
    ideal = jsonio.analysis_ideal(outcome.value)
    cert = certify_normality_pipeline(ideal, args.cap)
    _emit({"name": instance.name, "certificate": cert.to_json()}, args)
    return 0 if cert.verdict == "normal" else 1


def cmd_ehrhart_check(args) -> int:
    instance, outcome = _load_valid(args)
    if not outcome.ok:
        _emit({"error": "invalid_instance", "witness": outcome.witness}, args)
        return 1
    ideal = jsonio.analysis_ideal(outcome.value)
    if args.bmax is not None:
        b_max = args.bmax
    else:
        cone = rees_generators(ideal)
        hb = hilbert_basis(cone, facet_normals(cone), args.cap)
        b_max = max(h[-1] for h in hb.elements)
    report = ehrhart_equality_check(ideal.exponents, b_max)
    _emit({"name": instance.name, "equality": report.to_json()}, args)
    return 0 if report.passed else 1


def cmd_polymatroid_check(args) -> int:
    instance = jsonio.load_instance(args.instance)
    if instance.kind == "matroid":
        outcome = jsonio.realize(instance)
        if not outcome.ok:
            _emit({"error": "invalid_instance", "witness": outcome.witness}, args)
            return 1
        vectors = basis_monomial_ideal(outcome.value).exponents
        n = outcome.value.n
    else:
        vectors, n = instance.vectors, instance.n
    got = check_polymatroid_bases(n, vectors)
    if not isinstance(got, PolymatroidBases):
        _emit({"name": instance.name, "valid": False, "witness": got.to_json()}, args)
        return 1
    divisions = []
    failures = 0
    for i in range(1, got.n + 1):
        if all(v[i - 1] == 0 for v in got.vectors):
            continue
        try:
            divide_by_variable(got, i)
            divisions.append({"coordinate": i, "ok": True})
        except TheoremCounterexample as exc:
            failures += 1
            divisions.append({"coordinate": i, "ok": False, "witness": exc.witness})
    sym = symmetric_exchange_violations(got)
    payload = {
        "name": instance.name,
        "valid": True,
        "bases": got.to_json(),
        "division_closure": divisions,
        "symmetric_exchange_violations": [
            {"vec_a": list(a), "vec_b": list(c), "index": i} for a, c, i in sym
        ],
    }
    _emit(payload, args)
    return 1 if failures or sym else 0


def _corpus_matroids(n_max: int, rank_filter: int | None):
    for n in range(1, n_max + 1):
        ranks = [rank_filter] if rank_filter is not None else range(1, n + 1)
        for d in ranks:
            if d < 1 or d > n:
                continue
            for idx, m in enumerate(enumerate_matroids(n, d)):
                yield f"n{n}_d{d}_{idx:04d}", m


def cmd_corpus(args) -> int:
    wanted = args.checks.split(",") if args.checks else list(CHECKS)
    for c in wanted:
        if c not in CHECKS:
            raise ParseError(f"unknown check {c!r}; expected one of {sorted(CHECKS)}")
    instances = list(_corpus_matroids(args.n_max, args.rank))
    reports = []
    all_pass = True
    for code in sorted(wanted):
        failures = []
        for name, m in instances:
            try:
                bad = _run_check(code, m, args)
            except ReesKitError as exc:
                bad = {"error": type(exc).__name__, "detail": str(exc)}
            if bad is not None:
                failures.append({"instance": name, "matroid": m.to_json(), **bad})
        failures.sort(key=lambda f: f["instance"])
        if failures:
            all_pass = False
        reports.append({
            "check": code,
            "title": CHECKS[code],
            "instances": len(instances),
            "failures": failures,
            "status": "pass" if not failures else "fail",
        })
    _emit({"n_max": args.n_max, "reports": reports}, args)
    return 0 if all_pass else 1


def _run_check(code: str, m, args):
    """None when the check passes on matroid m, else a failure payload."""
    if code == "T3.6":
        report = verify_basis_facet_shape(m)
        if not report.holds:
            return {"violations": [list(v) for v in report.violations]}
        return None
    ideal = basis_monomial_ideal(m)
    if code == "C3.9":
        cert = is_normal(ideal, args.cap)
        if cert.verdict != "normal":
            return {"certificate": cert.to_json()}
        return None
    if code == "P3.7":
        report = ehrhart_equality_check(ideal.exponents, args.bmax)
        if not report.passed:
            return {"equality": report.to_json()}
        return None
    if code == "T2.2":
        report = decomposition_check(ideal, args.cap)
        if not report.holds:
            return {"decomposition": report.to_json()}
        return None
    if code == "L3.10":
        got = check_polymatroid_bases(m.n, ideal.exponents)
        if not isinstance(got, PolymatroidBases):
            return {"witness": got.to_json()}
        for i in range(1, m.n + 1):
            if all(v[i - 1] == 0 for v in got.vectors):
                continue
            try:
                divide_by_variable(got, i)
            except TheoremCounterexample as exc:
                return {"witness": exc.witness}
        return None
    raise ParseError(f"unknown check {code!r}")


def cmd_enumerate_matroids(args) -> int:
    found = enumerate_matroids(args.n, args.d)
    _emit({
        "n": args.n,
        "d": args.d,
        "count": len(found),
        "matroids": [m.to_json() for m in found],
    }, args)
    return 0


def cmd_instances(args) -> int:
    if args.show:
        instance = jsonio.load_bundled(args.show)
        key = "bases" if instance.kind == "matroid" else "exponents"
        payload = {"n": instance.n, key: [list(v) for v in instance.vectors]}
        if instance.kind == "polymatroid":
            payload["polymatroid"] = True
        _emit({"kind": instance.kind, "name": instance.name, "payload": payload}, args)
        return 0
    _emit({"bundled": jsonio.bundled_names()}, args)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reeskit",
        description="Exact Rees-cone analysis of monomial ideals, matroids, "
        "and discrete polymatroids.",
    )
    sub = parser.add_subparsers(dest="command")

    def add(name, handler, help_, instance=True):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(handler=handler)
        if instance:
            p.add_argument(
                "instance",
                help="path to an instance file, or bundled:<name>",
            )
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help="parallelepiped lattice-point budget")
        return p

    add("validate", cmd_validate, "validate an instance file")
    add("analyze", cmd_analyze, "full report: generators, facets, "
        "classification, Hilbert basis, normality")
    p = add("rees-facets", cmd_rees_facets, "facet system of the Rees cone")
    p.add_argument("--oracle", action="store_true",
                   help="force the brute-force cross-check (auto below "
                   f"{ORACLE_CAP + 1} generators)")
    add("classify", cmd_classify, "ideal / quasi_ideal / neither")
    add("hilbert", cmd_hilbert, "Hilbert basis of the cone's lattice points")
    add("normality", cmd_normality, "two-route normality certificate")
    p = add("ehrhart-check", cmd_ehrhart_check, "dilation equality up to a bound")
    p.add_argument("--bmax", type=int, default=None,
                   help="dilation bound (default: largest Hilbert height)")
    add("polymatroid-check", cmd_polymatroid_check,
        "validate bases, division closure, symmetric exchange")
    p = add("corpus", cmd_corpus, "run structural checks over all matroids up "
            "to a ground-set size", instance=False)
    p.add_argument("n_max", type=int)
    p.add_argument("--rank", type=int, default=None, help="restrict to one rank")
    p.add_argument("--checks", default=None,
                   help="comma list from " + ",".join(sorted(CHECKS)))
    p.add_argument("--bmax", type=int, default=3,
                   help="dilation bound for P3.7")
    p = add("enumerate-matroids", cmd_enumerate_matroids,
            "all matroids of one rank on a ground set", instance=False)
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p = add("instances", cmd_instances, "list or show bundled instances",
            instance=False)
    p.add_argument("--show", default=None, metavar="NAME")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "handler"):
        parser.print_help(sys.stderr)
        return 2
    start = time.perf_counter()
    fmt_args = args
    try:
        return args.handler(args)
    except ParseError as exc:
        _emit({"error": "parse", "detail": str(exc)}, fmt_args)
        return 2
    except CapExceeded as exc:
        _emit({"error": "cap_exceeded", "detail": str(exc)}, fmt_args)
        return 3
    except (InvalidInstance, PreconditionFailed, IntegrityError) as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc)}, fmt_args)
        return 1
    except ReesKitError as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc)}, fmt_args)
        return 1
    finally:
        elapsed = time.perf_counter() - start
        print(f"wall_time_s: {elapsed:.3f}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
