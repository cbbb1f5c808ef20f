"""Command-line frontend: tangent reports, classes, Demazure products, verify.

Exit codes: 0 success, 1 domain error or verification failure, 2 usage error.
All machine output is JSON with a top-level schema_version and sorted keys,
so identical invocations are byte-identical; wall-clock diagnostics go to
stderr only.
"""

from __future__ import annotations

import argparse
import dataclasses
import enum
import json
import sys
from fractions import Fraction

from .errors import KltangentError
from .hecke import demazure_product
from .rootsys import RootSystem, build_root_system, format_root
from .rt_ring import LaurentPoly
from .subword import boundary_faces, build_complex, euler_characteristics
from .tangent import (
    TangentReport,
    cominuscule_witness,
    gp_tangent_report,
    kclass_restriction,
    kl_tangent_report,
)
from .verify import VerifyConfig, VerifyOutcome, run_battery
from .weyl import canonical_reduced_word, is_reduced, parse_word, word_to_element

SCHEMA_VERSION = 1


def _jsonable(value):
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, Fraction):
        return str(value)
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {k: _jsonable(v) for k, v in dataclasses.asdict(value).items()}
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    return value


def _dump(payload: dict) -> str:
    payload = dict(payload)
    payload["schema_version"] = SCHEMA_VERSION
    return json.dumps(_jsonable(payload), sort_keys=True, ensure_ascii=False)


def _root_json(rs: RootSystem, v) -> dict:
    return {"coeffs": list(v), "str": format_root(rs, v)}


def _poly_json(p: LaurentPoly) -> list[dict]:
    return [{"exponent": list(e), "coeff": str(c)} for e, c in p.items()]


def _poly_str(rs: RootSystem, p: LaurentPoly) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for exponent, coeff in sorted(p.items(), key=lambda item: (-sum(item[0]), item[0])):
        monomial = "1" if not any(exponent) else f"e^{{{format_root(rs, exponent)}}}"
        magnitude = "" if abs(coeff) == 1 or monomial == "1" else f"{abs(coeff)}*"
        body = f"{abs(coeff)}" if monomial == "1" else f"{magnitude}{monomial}"
        parts.append(("- " if coeff < 0 else ("+ " if parts else "")) + body)
    return " ".join(parts)


def _report_payload(rs: RootSystem, report: TangentReport) -> dict:
    return {
        "cartan_type": str(rs.cartan_type),
        "x_word": list(report.x_word),
        "x_length": len(report.x_word),
        "w_word": list(canonical_reduced_word(rs, report.w)),
        "w_length": report.w.length,
        "parabolic": sorted(report.parabolic) if report.parabolic is not None else None,
        "gamma": [_root_json(rs, g) for g in report.gamma.gammas],
        "statuses": [
            {
                "position": st.position,
                "gamma": _root_json(rs, st.gamma),
                "status": st.verdict.value,
                "evidence": _jsonable(st.evidence),
            }
            for st in report.statuses
        ],
        "kl_tangent_weights": [_root_json(rs, v) for v in sorted(report.kl_tangent_weights)],
        "schubert_extra_weights": [_root_json(rs, v) for v in sorted(report.schubert_extra_weights)],
        "complete": report.complete,
    }


def _print_report(rs: RootSystem, report: TangentReport) -> None:
    print(f"type {rs.cartan_type}   x = {' '.join(map(str, report.x_word))}   "
          f"w = {' '.join(map(str, canonical_reduced_word(rs, report.w)))}"
          + (f"   P = {sorted(report.parabolic)}" if report.parabolic else ""))
    for st in report.statuses:
        ev = st.evidence
        notes = [
            f"demazure={'yes' if ev.demazure_ok else 'no'}",
            f"ordinary={'yes' if ev.ordinary_product_ok else 'no'}",
        ]
        if not ev.indecomposable:
            notes.append("decomposable")
        if ev.cone_coefficient is not None:
            notes.append(f"cone-coeff={ev.cone_coefficient}")
        print(f"  j={st.position:2d}  gamma={format_root(rs, st.gamma):16s} {st.verdict.value:12s} "
              f"({', '.join(notes)})")
    kl = ", ".join(format_root(rs, v) for v in sorted(report.kl_tangent_weights)) or "(none)"
    extra = ", ".join(format_root(rs, v) for v in sorted(report.schubert_extra_weights)) or "(none)"
    print(f"  KL tangent weights: {kl}")
    print(f"  Schubert extra weights: {extra}")
    print(f"  complete: {report.complete}")


def _cmd_tangent(args) -> int:
    rs = build_root_system(args.type)
    x = word_to_element(rs, parse_word(args.x))
    w = word_to_element(rs, parse_word(args.w))
    if args.parabolic is not None:
        nodes = frozenset(int(tok) for tok in args.parabolic.replace(",", " ").split())
        report = gp_tangent_report(rs, w, x, nodes, use_type_a_oracle=args.type_a_oracle,
                                   include_cone_evidence=args.cone_evidence)
    else:
        report = kl_tangent_report(rs, w, x, use_type_a_oracle=args.type_a_oracle,
                                   include_cone_evidence=args.cone_evidence)
    if args.json:
        print(_dump(_report_payload(rs, report)))
    else:
        _print_report(rs, report)
    return 0


def _cmd_kclass(args) -> int:
    rs = build_root_system(args.type)
    s = parse_word(args.x)
    if not is_reduced(rs, s):
        s = canonical_reduced_word(rs, word_to_element(rs, s))
    w = word_to_element(rs, parse_word(args.w))
    poly = kclass_restriction(rs, w, s)
    if args.json:
        print(_dump({
            "cartan_type": str(rs.cartan_type),
            "x_word": list(s),
            "w_word": list(canonical_reduced_word(rs, w)),
            "kclass": _poly_json(poly),
        }))
    else:
        print(_poly_str(rs, poly))
    return 0


def _cmd_demazure(args) -> int:
    rs = build_root_system(args.type)
    word = parse_word(args.word)
    stats = demazure_product(rs, word)
    print(_dump({
        "cartan_type": str(rs.cartan_type),
        "word": list(word),
        "delta_word": list(canonical_reduced_word(rs, stats.delta)),
        "delta_length": stats.delta.length,
        "excess": stats.excess,
    }))
    return 0


def _cmd_subword_complex(args) -> int:
    rs = build_root_system(args.type)
    word = parse_word(args.word)
    target = word_to_element(rs, parse_word(args.target))
    complex_ = build_complex(rs, target, word)
    reduced, interior = euler_characteristics(complex_)
    print(_dump({
        "cartan_type": str(rs.cartan_type),
        "word": list(word),
        "target_word": list(canonical_reduced_word(rs, target)),
        "faces": [list(f) for f in complex_.faces],
        "facets": [list(f) for f in complex_.facets],
        "boundary": [list(f) for f in boundary_faces(complex_)],
        "dimension": complex_.dimension,
        "euler_reduced": reduced,
        "euler_interior": interior,
    }))
    return 0


def _cmd_cominuscule(args) -> int:
    rs = build_root_system(args.type)
    x = word_to_element(rs, parse_word(args.x))
    witness = cominuscule_witness(rs, x)
    if args.json:
        print(_dump({
            "cartan_type": str(rs.cartan_type),
            "x_word": list(canonical_reduced_word(rs, x)),
            "cominuscule": witness is not None,
            "witness": [str(c) for c in witness] if witness is not None else None,
        }))
    else:
        if witness is None:
            print("cominuscule: no")
        else:
            print(f"cominuscule: yes  (witness in coweight coordinates: {[str(c) for c in witness]})")
    return 0


def _outcome_payload(outcome: VerifyOutcome) -> dict:
    return {"suite": outcome.suite, "cases": outcome.cases, "failures": _jsonable(outcome.failures)}


def _cmd_verify(args) -> int:
    config = VerifyConfig(
        group_order_guard=args.max_rank_guard,
        random_cases=args.random_cases,
        seed=args.seed,
    )
    outcomes = run_battery(args.type, config)
    ok = all(o.ok for o in outcomes)
    for o in outcomes:
        print(f"[{'ok' if o.ok else 'FAIL'}] {o.suite}: {o.cases} cases, "
              f"{len(o.failures)} failures ({o.seconds:.2f}s)", file=sys.stderr)
    if args.json:
        print(_dump({
            "cartan_type": args.type.upper(),
            "ok": ok,
            "outcomes": [_outcome_payload(o) for o in outcomes],
        }))
    else:
        for o in outcomes:
            print(f"[{'ok' if o.ok else 'FAIL'}] {o.suite}: {o.cases} cases, {len(o.failures)} failures")
            for failure in o.failures[:10]:
                print(f"    {failure}")
        print("all suites passed" if ok else "FAILURES detected")
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kltangent",
                                     description="Exact tangent-space weights of Schubert varieties")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tangent", help="tangent-weight report at a fixed point")
    p.add_argument("type")
    p.add_argument("--x", required=True, help='reduced word for x, e.g. "1 2 1" or "s1 s2 s1"')
    p.add_argument("--w", required=True, help="word for w")
    p.add_argument("--parabolic", help="comma-separated parabolic generator nodes (G/P report)")
    p.add_argument("--type-a-oracle", action="store_true",
                   help="decide decomposable positions with the type-A ordinary-product criterion")
    p.add_argument("--cone-evidence", action="store_true",
                   help="attach tangent-cone coefficients to Undetermined positions")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_tangent)

    p = sub.add_parser("kclass", help="localized structure-sheaf class P_{w,s}")
    p.add_argument("type")
    p.add_argument("--x", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_kclass)

    p = sub.add_parser("demazure", help="Demazure product and excess of a word")
    p.add_argument("type")
    p.add_argument("word")
    p.set_defaults(func=_cmd_demazure)

    p = sub.add_parser("subword-complex", help="faces/facets/boundary/Euler data")
    p.add_argument("type")
    p.add_argument("word")
    p.add_argument("target")
    p.set_defaults(func=_cmd_subword_complex)

    p = sub.add_parser("cominuscule", help="cominuscule test for a Weyl element")
    p.add_argument("type")
    p.add_argument("--x", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cominuscule)

    p = sub.add_parser("verify", help="run the exhaustive verification battery")
    p.add_argument("type")
    p.add_argument("--max-rank-guard", type=int, default=400_000,
                   help="refuse to enumerate Weyl groups larger than this")
    p.add_argument("--random-cases", type=int, default=500)
    p.add_argument("--seed", type=int, default=2_718_281)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KltangentError as exc:
        if getattr(args, "json", False):
            print(_dump({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        else:
            print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
