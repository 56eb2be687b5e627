"""Command-line front end.

Subcommands: ``delta`` (single surgery, three routes), ``delta-multi``
(simultaneous surgeries), ``verify`` (exhaustive and randomized property
sweeps), ``invariants`` (diagram report), ``mazur`` (realization family).

Exit codes: 0 success, 1 verified-property or route failure, 2 input
error.  All numeric output is exact; reports are JSON (default) or
tab-delimited text, with optional PNG figures rendered alongside via
``--figures DIR``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import casson
from .algebra import LaurentPoly
from .alexander import alexander_knot, alexander_link, half_ddelta1, zeta
from .casson import (BorromeanConfig, ConfigError, CrossLinkMatrix,
                     TwoComponentSurgeryData, delta_from_leaves, delta_report,
                     delta_multi, fti_bracket, johannes_delta, kirby_reduce,
                     mazur_family, pairwise_correction, rochlin_delta)
from .diagram import (DiagramError, LeafTriple, framing, linking_matrix,
                      linking_number, parse_pd)
from .milnor import mu123

SCHEMA_VERSION = 1


class CliInputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Input helpers
# ---------------------------------------------------------------------------

def _load_json(text_or_path: str):
    """Accept inline JSON or a path to a JSON file."""
    text = text_or_path
    if not text.lstrip().startswith(("{", "[")):
        try:
            with open(text_or_path) as fh:
                text = fh.read()
        except OSError as exc:
            raise CliInputError(f"cannot read {text_or_path!r}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliInputError(f"malformed JSON input: {exc}") from exc


def _config_from_doc(doc) -> BorromeanConfig:
    try:
        return BorromeanConfig.from_parts(doc["f"], doc["l"], doc["mu123"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CliInputError(
            f"config must be {{'f': [i,i,i], 'l': [l12,l13,l23], 'mu123': i}}; "
            f"got {doc!r}") from exc


def _parse_triple(text: str) -> tuple[int, int, int]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise CliInputError(f"expected comma-separated integers, got {text!r}") \
            from exc
    if len(parts) != 3:
        raise CliInputError(f"expected three integers, got {text!r}")
    return parts


def _load_diagram(path: str):
    try:
        with open(path) as fh:
            return parse_pd(fh.read())
    except OSError as exc:
        raise CliInputError(f"cannot read {path!r}: {exc}") from exc


def _poly_dict(p: LaurentPoly) -> dict:
    return {"variables": list(p.variables),
            "terms": [{"exponents": list(e), "coefficient": c}
                      for e, c in sorted(p.terms.items())],
            "pretty": repr(p)}


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------

def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=1))
        return
    for key, value in _flatten(report):
        print(f"{key}\t{value}")


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}{k}." if prefix else f"{k}.")
    elif isinstance(obj, list) and obj and isinstance(obj[0], (dict, list)):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}{i}.")
    else:
        key = prefix.rstrip(".")
        if isinstance(obj, list):
            yield key, ",".join(str(x) for x in obj)
        else:
            yield key, obj


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_delta(args) -> int:
    if (args.config is None) == (args.diagram is None):
        raise CliInputError("give exactly one of --config or --diagram")
    if args.config is not None:
        config = _config_from_doc(_load_json(args.config))
        report_obj = delta_report(config, with_trace=True)
    else:
        d = _load_diagram(args.diagram)
        order = _parse_triple(args.order) if args.order else (1, 2, 3)
        leaves = LeafTriple.from_diagram(d, order)
        framings = _parse_triple(args.framings) if args.framings else None
        report_obj = delta_from_leaves(leaves, framings, with_trace=True)
    report = {"schema_version": SCHEMA_VERSION, "command": "delta"}
    report.update(report_obj.to_dict())
    if not args.trace:
        report["trace"] = []
    figures = []
    if args.figures:
        from .figures import render_trace
        figures.append(render_trace(report_obj.to_dict()["trace"],
                                    report_obj.closed_form,
                                    f"{args.figures}/delta_trace.png"))
    if figures:
        report["figures"] = figures
    _emit(report, args.format)
    if not report_obj.routes_agree():
        print("route disagreement:", file=sys.stderr)
        for step in report_obj.trace:
            print(f"  {step}", file=sys.stderr)
        return 1
    return 0


def cmd_delta_multi(args) -> int:
    doc = _load_json(args.input)
    try:
        configs = [_config_from_doc(item) for item in doc["configs"]]
    except (KeyError, TypeError) as exc:
        raise CliInputError("input must carry a 'configs' list") from exc
    cross = {}
    for key, rows in (doc.get("cross") or {}).items():
        try:
            k, l = (int(x) for x in key.split(","))
            cross[(k, l)] = CrossLinkMatrix.from_rows(rows)
        except (ValueError, ConfigError) as exc:
            raise CliInputError(f"bad cross matrix {key!r}: {exc}") from exc
    value = delta_multi(configs, cross)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "delta_multi",
        "value": value,
        "singles": [casson.delta_single(c) for c in configs],
        "pairwise_corrections": {
            f"{k},{l}": pairwise_correction(m) for (k, l), m in cross.items()},
        "rochlin_mod2": rochlin_delta(configs),
    }
    if len(configs) == 3:
        report["fti_bracket_deg3"] = fti_bracket(0, configs, cross)
    _emit(report, args.format)
    return 0


def _verify_properties(grid: int, seed: int) -> list[dict]:
    rng = random.Random(seed)
    props: list[dict] = []

    def add(name, cases, counterexample):
        props.append({"name": name, "cases": cases,
                      "passed": counterexample is None,
                      "counterexample": repr(counterexample)
                      if counterexample is not None else None})

    cases, fail = casson.check_route_agreement(grid)
    add("route_agreement", cases, fail)
    cases, fail = casson.check_mod2(grid)
    add("mod2_reduction", cases, fail)
    cases, fail = casson.check_recursion_confluence(min(grid, 2))
    add("recursion_confluence", cases, fail)
    cases, fail = casson.check_johannes_integrality(3)
    add("johannes_integrality", cases, fail)

    fail = None
    for k in range(100):
        configs = [BorromeanConfig(
            tuple(rng.randint(-2, 2) for _ in range(3)),
            tuple(rng.randint(-2, 2) for _ in range(3)),
            rng.randint(-2, 2)) for _ in range(3)]
        cross = {(a, b): CrossLinkMatrix.from_rows(
            [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)])
            for a in (1, 2, 3) for b in range(a + 1, 4)}
        if fti_bracket(rng.randint(-9, 9), configs, cross) != 0:
            fail = (configs, cross)
            break
    add("degree2_vanishing", 100, fail)

    fail = None
    for k in range(100):
        rows = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        m = CrossLinkMatrix.from_rows(rows)
        swapped = CrossLinkMatrix.from_rows([rows[1], rows[0], rows[2]])
        if pairwise_correction(m) != -pairwise_correction(swapped):
            fail = rows
            break
        degenerate = CrossLinkMatrix.from_rows([rows[0], rows[0], rows[2]])
        if pairwise_correction(degenerate) != 0:
            fail = rows
            break
    add("pairwise_antisymmetry", 100, fail)

    fail = None
    count = 0
    for f1, f2, f3, l12, l13, l23, mu in casson.grid_configs(min(grid, 1)):
        facts = kirby_reduce(BorromeanConfig((f1, f2, f3), (l12, l13, l23), mu))
        count += 1
        if (facts.determinant, facts.linking_number,
                facts.has_zero_framed_component) != (-1, 1, True):
            fail = (f1, f2, f3, l12, l13, l23, mu)
            break
    add("kirby_reduction_facts", count, fail)

    fail = None
    for n in range(-10, 11):
        config, lam, _ = mazur_family(n)
        if casson.delta_single(config) != lam or lam != -2 * n:
            fail = n
            break
    add("mazur_family", 21, fail)
    return props


def cmd_verify(args) -> int:
    if args.grid < 0:
        raise CliInputError("--grid must be >= 0")
    props = _verify_properties(args.grid, args.seed)
    all_passed = all(p["passed"] for p in props)
    report = {"schema_version": SCHEMA_VERSION, "command": "verify",
              "grid": args.grid, "seed": args.seed,
              "properties": props, "all_passed": all_passed}
    if args.figures:
        from .figures import render_verify
        report["figures"] = [render_verify(props, f"{args.figures}/verify.png")]
    _emit(report, args.format)
    return 0 if all_passed else 1


def cmd_invariants(args) -> int:
    d = _load_diagram(args.diagram)
    n = d.n_components()
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "invariants",
        "components": n,
        "crossings": len(d.crossings),
        "framings": [framing(d, i) for i in range(1, n + 1)],
        "linking_matrix": linking_matrix(d),
    }
    if n == 1:
        delta = alexander_knot(d)
        report["alexander"] = _poly_dict(delta)
        report["half_ddelta1"] = half_ddelta1(d)
        report["alexander_fox_route"] = _poly_dict(alexander_link(d))
    else:
        report["alexander"] = _poly_dict(alexander_link(d))
        report["zeta"] = zeta(d)
    if n == 3:
        split = all(linking_number(d, i, j) == 0
                    for i, j in ((1, 2), (1, 3), (2, 3)))
        if split:
            report["mu123"] = mu123(d)
    if args.figures:
        from .figures import render_linking_matrix
        report["figures"] = [render_linking_matrix(
            report["linking_matrix"], f"{args.figures}/linking_matrix.png")]
    _emit(report, args.format)
    return 0


def cmd_mazur(args) -> int:
    if args.sweep is not None:
        lo, hi = args.sweep
        ns = list(range(lo, hi + 1))
    else:
        ns = [args.n]
    entries = []
    for n in ns:
        config, lam, facts = mazur_family(n)
        entries.append({
            "n": n,
            "lambda": lam,
            "config": {"f": list(config.f), "l": list(config.l),
                       "mu123": config.mu123},
            "presentation": {
                "components": 2,
                "linking_number": facts.linking_number,
                "zero_framed_component": facts.has_zero_framed_component,
                "determinant": facts.determinant,
            },
        })
    report = {"schema_version": SCHEMA_VERSION, "command": "mazur",
              "entries": entries}
    if args.figures:
        from .figures import render_mazur
        report["figures"] = [render_mazur(
            [(e["n"], e["lambda"]) for e in entries],
            f"{args.figures}/mazur.png")]
    _emit(report, args.format)
    return 0


def cmd_johannes(args) -> int:
    doc = _load_json(args.data)
    try:
        data = TwoComponentSurgeryData(
            int(doc["f1"]), int(doc["f2"]), int(doc["l12"]),
            int(doc["l_ab"]), int(doc["l_a2"]), int(doc["l_b2"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise CliInputError(
            "data must carry integer fields f1,f2,l12,l_ab,l_a2,l_b2") from exc
    value = johannes_delta(data)
    report = {"schema_version": SCHEMA_VERSION, "command": "johannes",
              "numerator": value.numerator, "denominator": value.denominator,
              "value": str(value)}
    _emit(report, args.format)
    return 0


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cassurg",
        description="Variation of the Casson invariant under Borromean "
                    "surgery: closed form, step recursion, and the "
                    "global-surgery route, with a PD-code diagram pipeline.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--figures", metavar="DIR",
                       help="render PNG figures into DIR")

    p = sub.add_parser("delta", help="single-surgery variation, three routes")
    p.add_argument("--config", help="inline JSON or path: "
                                    '{"f":[..],"l":[..],"mu123":..}')
    p.add_argument("--diagram", help="PD-code JSON file with 3 components")
    p.add_argument("--framings", help="override blackboard framings, e.g. 0,0,0")
    p.add_argument("--order", help="leaf order as component indices, e.g. 2,1,3")
    p.add_argument("--trace", action="store_true",
                   help="include the recursion trace in the report")
    common(p)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("delta-multi", help="simultaneous surgeries")
    p.add_argument("--input", required=True,
                   help='inline JSON or path: {"configs":[..],'
                        '"cross":{"1,2":[[3x3]]}}')
    common(p)
    p.set_defaults(func=cmd_delta_multi)

    p = sub.add_parser("verify", help="exhaustive and randomized property sweeps")
    p.add_argument("--grid", type=int, default=3,
                   help="entry radius for exhaustive sweeps (default 3)")
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("invariants", help="diagram invariant report")
    p.add_argument("--diagram", required=True, help="PD-code JSON file")
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("mazur", help="realization family report")
    p.add_argument("n", nargs="?", type=int, default=None,
                   help="family parameter")
    p.add_argument("--sweep", nargs=2, type=int, metavar=("LO", "HI"),
                   help="report a whole parameter range")
    common(p)
    p.set_defaults(func=cmd_mazur)

    p = sub.add_parser("johannes", help="self-crossing change variation")
    p.add_argument("--data", required=True,
                   help='inline JSON or path with f1,f2,l12,l_ab,l_a2,l_b2')
    common(p)
    p.set_defaults(func=cmd_johannes)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.subcommand == "mazur" and args.n is None and args.sweep is None:
        parser.error("mazur needs a parameter or --sweep LO HI")
    try:
        return args.func(args)
    except (CliInputError, DiagramError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
