"""Command-line front end.

Exit codes: 0 success / property holds; 1 property fails (witnesses are
reported); 2 parse or usage error; 3 domain/bound error; 4 theorem check vs
oracle disagreement (internal invariant violation).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .core import FiniteSemigroup, Homomorphism, enumerate_homomorphisms
from .enumeration import corpus_filename, corpus_to_text, load_or_generate, survey
from .errors import (
    CorpusMissing,
    NotInDomain,
    NotInSubvariety,
    OracleDisagreement,
    OrderTooLarge,
    SgtParseError,
)
from .galois import (
    PropertyReport,
    check_localization_condition,
    check_semi_left_exact,
    check_simple,
    check_stable_units_pair,
    connected_components,
    is_connected,
    oracle_pullback_preserved,
    oracle_semi_left_exact,
    oracle_stable_units,
)
from .reflection import BUILTIN_VARIETIES, VarietyConfig, reflect
from .sgt import SgtDocument, load_sgt

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_PARSE_ERROR = 2
EXIT_DOMAIN_ERROR = 3
EXIT_ORACLE_DISAGREEMENT = 4

PROPERTY_TOKENS = {
    "simple": "simple",
    "sle": "semi_left_exact",
    "stable-units": "stable_units",
    "localization": "localization_sufficient",
    "left-exact-oracle": "left_exact_oracle",
}

FILTER_TOKENS = {"none": None, "slat": "slat", "band": "band"}


def _report_json(report: PropertyReport, corpus_digest: str | None = None) -> dict:
    out = report.as_dict()
    out["tool_version"] = __version__
    out["corpus_hash"] = corpus_digest
    return out


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=False))


def _load_blocks(path: str) -> SgtDocument:
    return load_sgt(path)


def _variety(args) -> VarietyConfig:
    return BUILTIN_VARIETIES[args.variety]


def cmd_reflect(args) -> int:
    V = _variety(args)
    doc = _load_blocks(args.file)
    payload = []
    for block in doc.blocks:
        r = reflect(block.semigroup, V)
        payload.append({
            "name": block.name,
            "variety": V.name,
            "input_table": block.semigroup.rows(),
            "image_table": r.image.rows(),
            "unit": list(r.unit.map),
        })
        if not args.json:
            title = block.name or f"semigroup of order {block.semigroup.order}"
            print(f"{title}: image order {r.image.order}")
            for row in r.image.table:
                print("  " + " ".join(str(v) for v in row))
            print(f"  unit: {list(r.unit.map)}")
    if args.json:
        _print_json(payload if len(payload) > 1 else payload[0])
    return EXIT_OK


def cmd_components(args) -> int:
    V = _variety(args)
    doc = _load_blocks(args.file)
    payload = []
    for block in doc.blocks:
        comps = []
        for comp in connected_components(block.semigroup, V):
            comps.append({
                "point": comp.point,
                "fiber": list(comp.inclusion.map),
                "connected": is_connected(comp.carrier, V),
            })
        payload.append({
            "name": block.name,
            "variety": V.name,
            "table": block.semigroup.rows(),
            "components": comps,
        })
        if not args.json:
            title = block.name or f"semigroup of order {block.semigroup.order}"
            print(f"{title}: {len(comps)} component(s)")
            for c in comps:
                flag = "connected" if c["connected"] else "NOT connected"
                print(f"  point {c['point']}: fiber {c['fiber']} ({flag})")
    if args.json:
        _print_json(payload if len(payload) > 1 else payload[0])
    return EXIT_OK


def _parse_map(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise SgtParseError(f"bad map {text!r}")


def _cospan_from_doc(doc: SgtDocument, fmap: str, gmap: str) -> tuple[Homomorphism, Homomorphism]:
    if len(doc.blocks) == 2:
        A = B = doc.blocks[0].semigroup
        C = doc.blocks[1].semigroup
    elif len(doc.blocks) == 3:
        A, B, C = (b.semigroup for b in doc.blocks)
    else:
        raise SgtParseError("localization check needs a 2- or 3-block file")
    try:
        f = Homomorphism(A, C, _parse_map(fmap))
        g = Homomorphism(B, C, _parse_map(gmap))
    except ValueError as exc:
        raise SgtParseError(str(exc)) from exc
    return f, g


def _check_one_semigroup(C: FiniteSemigroup, V, args) -> tuple[PropertyReport, PropertyReport | None]:
    """Theorem-based report plus the optional definitional oracle report."""
    prop = PROPERTY_TOKENS[args.property]
    if prop == "semi_left_exact":
        report = check_semi_left_exact(C, V)
        oracle = oracle_semi_left_exact(C, V, args.max_order) if args.oracle else None
    elif prop == "stable_units":
        report = check_stable_units_pair(C, C, V)
        oracle = None
        if args.oracle:
            from .enumeration import _member_corpus_cached

            witnesses = []
            for D in _member_corpus_cached(V, args.max_order):
                witnesses.extend(check_stable_units_pair(C, D, V).witnesses)
            report = PropertyReport(V.name, "stable_units", not witnesses, witnesses,
                                    {"max_d_order": args.max_order})
            oracle = oracle_stable_units(C, V, args.max_order)
    else:
        raise SgtParseError(f"property {args.property} needs --cospan or --map input")
    return report, oracle


def cmd_check(args) -> int:
    V = _variety(args)
    prop = PROPERTY_TOKENS[args.property]
    reports: list[PropertyReport] = []
    oracle_reports: list[PropertyReport] = []
    disagreement = False

    for path in args.files:
        doc = _load_blocks(path)
        if prop in ("semi_left_exact", "stable_units"):
            if prop == "stable_units" and len(doc.blocks) == 2 and not args.oracle:
                C, D = doc.blocks[0].semigroup, doc.blocks[1].semigroup
                reports.append(check_stable_units_pair(C, D, V))
                continue
            for block in doc.blocks:
                report, oracle = _check_one_semigroup(block.semigroup, V, args)
                reports.append(report)
                if oracle is not None:
                    oracle_reports.append(oracle)
                    if oracle.verdict != report.verdict:
                        disagreement = True
        elif prop == "simple":
            blocks = doc.blocks
            A = blocks[0].semigroup
            B = blocks[-1].semigroup if len(blocks) > 1 else A
            if args.map is not None:
                try:
                    f = Homomorphism(A, B, _parse_map(args.map))
                except ValueError as exc:
                    raise SgtParseError(str(exc)) from exc
                reports.append(check_simple(f, V))
            else:
                for f in enumerate_homomorphisms(A, B):
                    reports.append(check_simple(f, V))
        elif prop in ("localization_sufficient", "left_exact_oracle"):
            if not args.cospan:
                raise SgtParseError("localization check needs --cospan FMAP GMAP")
            f, g = _cospan_from_doc(doc, *args.cospan)
            if prop == "left_exact_oracle":
                reports.append(oracle_pullback_preserved(f, g, V))
                continue
            report = check_localization_condition(f, g, V)
            reports.append(report)
            if args.oracle:
                oracle = oracle_pullback_preserved(f, g, V)
                oracle_reports.append(oracle)
                # The condition is sufficient only: condition true must imply
                # preservation; the converse may fail legitimately.
                if report.verdict and not oracle.verdict:
                    disagreement = True

    verdict = all(r.verdict for r in reports)
    if args.json:
        payload = [_report_json(r) for r in reports + oracle_reports]
        _print_json(payload if len(payload) > 1 else payload[0])
    else:
        for r in reports:
            status = "holds" if r.verdict else "FAILS"
            print(f"{r.property} [{r.variety}]: {status}"
                  + (f" ({len(r.witnesses)} witness(es))" if r.witnesses else ""))
        for r in oracle_reports:
            status = "holds" if r.verdict else "FAILS"
            print(f"oracle {r.property} [{r.variety}]: {status} bounds={r.bounds}")
        if oracle_reports and not disagreement and prop in ("semi_left_exact", "stable_units"):
            print("agreement: OK")
    if disagreement:
        print("theorem check and oracle DISAGREE", file=sys.stderr)
        return EXIT_ORACLE_DISAGREEMENT
    return EXIT_OK if verdict else EXIT_PROPERTY_FAILS


def cmd_enumerate(args) -> int:
    identity_filter = None
    if FILTER_TOKENS[args.filter]:
        identity_filter = BUILTIN_VARIETIES[FILTER_TOKENS[args.filter]].subvariety_identities
    corpus = load_or_generate(args.order, identity_filter,
                              Path(args.cache_dir) if args.cache_dir else None)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / corpus_filename(args.order, corpus.variety_filter)
    path.write_text(corpus_to_text(corpus))
    print(f"order {args.order} filter {args.filter}: {len(corpus.tables)} semigroups -> {path}")
    return EXIT_OK


def cmd_survey(args) -> int:
    V = _variety(args)
    try:
        properties = [PROPERTY_TOKENS[tok.strip()] for tok in args.properties.split(",")]
    except KeyError as exc:
        raise SgtParseError(f"unknown property token {exc.args[0]!r}") from exc
    result = survey(
        V, args.max_order, properties,
        include_oracles=args.oracle,
        oracle_bound=args.oracle_bound,
        max_witnesses=args.max_witnesses,
        cache_dir=Path(args.cache_dir) if args.cache_dir else None,
    )
    payload = [_report_json(r, result.corpus_hash) for r in result.reports]
    text = json.dumps(payload, indent=2, sort_keys=False)
    if args.out:
        Path(args.out).write_text(text + "\n")
    for report in result.reports:
        status = "no counterexamples" if report.verdict else f"{len(report.witnesses)} counterexample(s)"
        print(f"{report.property} [{V.name}] order<={args.max_order}: {status}")
    if not args.out:
        _print_json(payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgreflect",
        description="Reflections of finite semigroups into idempotent subvarieties.",
    )
    parser.add_argument("--version", action="version", version=f"sgreflect {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_variety(p):
        p.add_argument("--variety", choices=sorted(BUILTIN_VARIETIES),
                       default="slat", help="built-in variety config")

    p = sub.add_parser("reflect", help="print the image and unit of a reflection")
    p.add_argument("file")
    add_variety(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reflect)

    p = sub.add_parser("components", help="list connected components and flags")
    p.add_argument("file")
    add_variety(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("check", help="decide a reflection property")
    p.add_argument("files", nargs="+")
    p.add_argument("--property", required=True, choices=sorted(PROPERTY_TOKENS))
    add_variety(p)
    p.add_argument("--oracle", action="store_true",
                   help="also run the definitional oracle and compare")
    p.add_argument("--max-order", type=int, default=3,
                   help="oracle quantification bound")
    p.add_argument("--cospan", nargs=2, metavar=("FMAP", "GMAP"),
                   help="cospan maps for localization checks")
    p.add_argument("--map", help="explicit morphism map for --property simple")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="write a corpus file")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--filter", choices=sorted(FILTER_TOKENS), default="none")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--cache-dir")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("survey", help="sweep a corpus and report counterexamples")
    add_variety(p)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--properties", required=True,
                   help="comma-separated list: " + ",".join(sorted(PROPERTY_TOKENS)))
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--oracle-bound", type=int, default=3)
    p.add_argument("--max-witnesses", type=int)
    p.add_argument("--cache-dir")
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SgtParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except (NotInDomain, NotInSubvariety, OrderTooLarge, CorpusMissing) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except OracleDisagreement as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_ORACLE_DISAGREEMENT


if __name__ == "__main__":
    sys.exit(main())
