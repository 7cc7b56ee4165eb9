"""Command-line front end.

Subcommands: classify, apery, rectangle, flat, fixtures, batch, oracle.
Exit codes: 0 ok, 1 fixture or oracle disagreement, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from .algebra import AlgebraPair, make_pair
from .classify import ClassificationReport, classify
from .errors import InputError, TooLarge
from .fixtures import run_fixtures
from . import oracle as oracle_mod
from .rectangle import find_rectangles

EXAMPLES = [
    "nsalg classify -c 16,24 -e 16,24,31,46,44",
    "nsalg classify -c 22 -e 14,21,22,33 --json",
    "nsalg classify -c 2,3 -e 4,9 --scale 6",
    "nsalg apery -c 6 -e 3,5",
    "nsalg flat -c 9,15,21 -e 5,8,9",
    "nsalg rectangle -c 12 -e 2,3 --json",
    "nsalg oracle -c 14,22 -e 14,21,22,33",
    "nsalg fixtures --filter apery",
]


def parse_rationals(text: str) -> list[Fraction]:
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            out.append(Fraction(token))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse exponent {token!r}: {exc}") from exc
    if not out:
        raise InputError(f"no exponents in {text!r}")
    return out


def _load_spec_file(path: str) -> dict:
    p = Path(path)
    try:
        data = p.read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if p.suffix.lower() == ".toml":
        try:
            import tomllib
        except ModuleNotFoundError:
            import tomli as tomllib
        try:
            return tomllib.loads(data.decode("utf-8"))
        except Exception as exc:
            raise InputError(f"invalid TOML in {path}: {exc}") from exc
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc


def record_to_pair(record: dict) -> tuple[AlgebraPair, str]:
    """Build a pair from a spec record; returns (pair, label)."""
    if not isinstance(record, dict):
        raise InputError(f"record must be an object, got {type(record).__name__}")
    try:
        coeff = [Fraction(str(x)) for x in record["coefficient"]]
        ext = [Fraction(str(x)) for x in record["extension"]]
    except KeyError as exc:
        raise InputError(f"record is missing the {exc.args[0]!r} key") from exc
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"bad exponent in record: {exc}") from exc
    scale = Fraction(str(record.get("scale", "1")))
    label = str(record.get("label", ""))
    return make_pair(coeff, ext, scale), label


def _pair_from_args(args) -> tuple[AlgebraPair, str]:
    if args.file:
        record = _load_spec_file(args.file)
        if args.label:
            record["label"] = args.label
        return record_to_pair(record)
    if not args.coefficient or not args.extension:
        raise InputError("need --coefficient and --extension (or --file)")
    pair = make_pair(
        parse_rationals(args.coefficient),
        parse_rationals(args.extension),
        Fraction(args.scale),
    )
    return pair, args.label or ""


# -- report serialization ---------------------------------------------------


def _rectangle_dict(analysis) -> dict:
    m = analysis.matrix
    return {
        "sizes": list(analysis.rectangle.sizes),
        "matrix": [list(row) for row in m.matrix] if m else None,
        "t": list(m.t) if m else None,
        "det": m.det if m else None,
        "nonsingular": m.nonsingular if m else None,
        "triangular_permutation": (
            list(m.triangular_permutation)
            if m and m.triangular_permutation is not None
            else None
        ),
    }


def report_to_dict(report: ClassificationReport, label: str = "") -> dict:
    pair = report.pair
    witness = report.flat.witness
    return {
        "label": label,
        "coefficient": [str(g) for g in pair.coefficient.given_generators],
        "extension": [str(g) for g in pair.extension.given_generators],
        "scale": str(pair.common_scale),
        "d": pair.d,
        "d_prime": pair.d_prime,
        "apery": list(report.apery.exponents),
        "minimal_monomials": list(report.minimal_monomials),
        "flat": report.flat.is_flat,
        "flat_witness": witness.exponent if witness else None,
        "rectangular": report.rectangular,
        "rectangles": [_rectangle_dict(a) for a in report.rectangles],
        "gorenstein_indicator": report.gorenstein_indicator,
        "ci": report.ci,
        "justification": list(report.justification),
    }


def _print_report(report: ClassificationReport, label: str) -> None:
    pair = report.pair
    if label:
        print(f"label:             {label}")
    print(f"pair:              {pair.E} over {pair.C}  (common scale {pair.common_scale})")
    print(f"d, d':             {pair.d}, {pair.d_prime}")
    print(f"apery ({len(report.apery)}):        {list(report.apery.exponents)}")
    print(f"minimal monomials: {list(report.minimal_monomials)}")
    flat = report.flat
    if flat.is_flat:
        print(f"flat:              yes ({flat.apery_count} = d/d')")
    else:
        w = flat.witness
        print(
            f"flat:              no ({flat.apery_count} Apery vs d/d' = "
            f"{flat.expected_count}); u^{w.exponent} = "
            f"u^{w.first[0]}*u^{w.first[1]} = u^{w.second[0]}*u^{w.second[1]}"
        )
    if not report.rectangles:
        print("rectangles:        none")
    for analysis in report.rectangles:
        sizes = "x".join(map(str, analysis.rectangle.sizes)) or "trivial"
        line = f"rectangle {sizes}"
        m = analysis.matrix
        if m is not None:
            perm = m.triangular_permutation
            line += f": det {m.det}, " + (
                f"triangular via {list(perm)}" if perm is not None else "not triangular"
            )
            line += f", t = {list(m.t)}"
        print(f"                   {line}")
    print(f"gorenstein:        {'yes' if report.gorenstein_indicator else 'no'}")
    print(f"verdict:           {report.ci.upper()}  [{', '.join(report.justification)}]")
    if report.unknown_reason:
        print(f"reason:            {report.unknown_reason}")


# -- subcommands --------------------------------------------------------------


def cmd_classify(args) -> int:
    pair, label = _pair_from_args(args)
    report = classify(pair)
    if args.json:
        print(json.dumps(report_to_dict(report, label), indent=2))
    else:
        _print_report(report, label)
    return 0


def cmd_apery(args) -> int:
    pair, label = _pair_from_args(args)
    if args.json:
        data = report_to_dict(classify(pair), label)
        keys = ("label", "coefficient", "extension", "scale", "d", "d_prime",
                "apery", "minimal_monomials")
        print(json.dumps({k: data[k] for k in keys}, indent=2))
    else:
        apery = pair.apery_set
        print(f"pair:              {pair.E} over {pair.C}  (common scale {pair.common_scale})")
        print(f"apery ({len(apery)}):        {list(apery.exponents)}")
        print(f"minimal monomials: {list(pair.minimal_monomials)}")
    return 0


def cmd_flat(args) -> int:
    pair, label = _pair_from_args(args)
    if args.json:
        data = report_to_dict(classify(pair), label)
        keys = ("label", "coefficient", "extension", "scale", "d", "d_prime",
                "flat", "flat_witness")
        print(json.dumps({k: data[k] for k in keys}, indent=2))
    else:
        flat = pair.flatness
        if flat.is_flat:
            print(f"flat: yes ({flat.apery_count} Apery exponents = d/d')")
        else:
            w = flat.witness
            print(
                f"flat: no ({flat.apery_count} Apery exponents, d/d' = "
                f"{flat.expected_count}); witness u^{w.exponent} = "
                f"u^{w.first[0]}*u^{w.first[1]} = u^{w.second[0]}*u^{w.second[1]}"
            )
    return 0


def cmd_rectangle(args) -> int:
    pair, label = _pair_from_args(args)
    report = classify(pair)
    if args.json:
        data = report_to_dict(report, label)
        keys = ("label", "coefficient", "extension", "scale",
                "minimal_monomials", "flat", "rectangles")
        print(json.dumps({k: data[k] for k in keys}, indent=2))
    else:
        if not report.rectangles:
            print("not rectangular")
        for analysis in report.rectangles:
            sizes = "x".join(map(str, analysis.rectangle.sizes)) or "trivial"
            m = analysis.matrix
            if m is None:
                print(f"rectangle {sizes} (pair not flat: no matrix)")
            else:
                perm = m.triangular_permutation
                shape = (
                    f"triangular via {list(perm)}" if perm is not None else "not triangular"
                )
                print(f"rectangle {sizes}: det {m.det}, {shape}, t = {list(m.t)}")
    return 0


def cmd_fixtures(args) -> int:
    results = run_fixtures(args.filter or "")
    if args.json:
        print(json.dumps(
            [{"name": r.name, "pass": r.passed, "detail": r.detail} for r in results],
            indent=2,
        ))
    else:
        width = max((len(r.name) for r in results), default=0)
        for r in results:
            status = "PASS" if r.passed else f"FAIL  {r.detail}"
            print(f"{r.name:<{width}}  {status}")
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} fixtures passed")
    failing = [r.name for r in results if not r.passed]
    if failing:
        print("failing: " + ", ".join(failing), file=sys.stderr)
        return 1
    return 0


def classify_record_line(line: str) -> str:
    """One batch line in, one JSON report (or error) line out."""
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        return json.dumps({"error": f"invalid JSON: {exc}"})
    try:
        pair, label = record_to_pair(record)
        report = classify(pair)
    except InputError as exc:
        return json.dumps(
            {"label": str(record.get("label", "")), "error": str(exc)}
        )
    return json.dumps(report_to_dict(report, label), separators=(",", ":"))


def cmd_batch(args) -> int:
    try:
        lines = Path(args.corpus).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise InputError(f"cannot read corpus {args.corpus}: {exc}") from exc
    lines = [line for line in lines if line.strip()]
    jobs = args.jobs
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outputs = list(pool.map(classify_record_line, lines))
    else:
        outputs = [classify_record_line(line) for line in lines]
    counts = {"ci": 0, "not_ci": 0, "unknown": 0, "error": 0}
    for out in outputs:
        print(out)
        parsed = json.loads(out)
        counts["error" if "error" in parsed else parsed["ci"]] += 1
    print(json.dumps({"summary": counts}))
    return 0


def cmd_oracle(args) -> int:
    pair, label = _pair_from_args(args)
    apery_main = list(pair.apery_set.exponents)
    apery_oracle = oracle_mod.apery_by_definition(pair, pair.apery_set.bound_used)
    scan = oracle_mod.unique_representation_scan(pair)
    checks = {
        "apery_match": apery_oracle == apery_main,
        "flat_scan_agrees": (scan is None) == pair.is_flat,
    }
    try:
        sizes = oracle_mod.rectangle_by_exhaustion(pair)
        checks["rectangles_match"] = sizes == [
            r.sizes for r in find_rectangles(pair)
        ]
    except TooLarge:
        checks["rectangles_match"] = None
    payload = {
        "label": label,
        "apery": apery_main,
        "double_representation_at": scan,
        **{k: v for k, v in checks.items()},
    }
    print(json.dumps(payload, indent=2))
    return 0 if all(v is not False for v in checks.values()) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nsalg",
        description="Exact flat/rectangular/complete-intersection classification "
        "of numerical semigroup algebras.",
        epilog="examples:\n  " + "\n  ".join(EXAMPLES),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pair_args = argparse.ArgumentParser(add_help=False)
    pair_args.add_argument(
        "-c", "--coefficient", help="coefficient exponents, e.g. 2,3 or 3/2,2"
    )
    pair_args.add_argument(
        "-e", "--extension", help="extension exponents, e.g. 4,9"
    )
    pair_args.add_argument(
        "-t", "--scale", default="1",
        help="variable change t with u = v^t (default 1)",
    )
    pair_args.add_argument("--file", help="read the pair from a JSON/TOML spec file")
    pair_args.add_argument("--label", help="label echoed into reports")
    pair_args.add_argument("--json", action="store_true", help="emit JSON")

    for name, fn, desc in (
        ("classify", cmd_classify, "full classification report"),
        ("apery", cmd_apery, "Apery exponents and minimal monomials"),
        ("flat", cmd_flat, "flatness verdict with witness"),
        ("rectangle", cmd_rectangle, "rectangles and their matrices"),
        ("oracle", cmd_oracle, "cross-check the pair against brute force"),
    ):
        p = sub.add_parser(name, parents=[pair_args], help=desc)
        p.set_defaults(func=fn)

    fixtures_parser = sub.add_parser("fixtures", help="run the embedded example suite")
    fixtures_parser.add_argument("--filter", help="only fixtures whose name contains this")
    fixtures_parser.add_argument("--json", action="store_true", help="emit JSON")
    fixtures_parser.set_defaults(func=cmd_fixtures)

    batch_parser = sub.add_parser("batch", help="classify a line-delimited JSON corpus")
    batch_parser.add_argument("corpus", help="path to a JSONL corpus file")
    batch_parser.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("NSALG_JOBS", "1")),
        help="parallel workers (default: NSALG_JOBS or 1)",
    )
    batch_parser.set_defaults(func=cmd_batch)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
