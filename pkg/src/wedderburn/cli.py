"""Command-line front end.

Subcommands: classes, decompose, oracle, units, check.  Exit codes:
0 success, 1 check mismatch, 2 input or parse error, 3 unsupported modular
case (the characteristic divides the group order), 4 the analytic solver
could not pin a unique decomposition.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import oracle as oracle_mod
from .errors import ModularCaseError
from .ffield import is_prime, make_field
from .perm import BUILTIN_GROUPS, FiniteGroup, builtin_sl32_on_p2f2, builtin_sl32_s8, load_group
from .units import sl32_expected_row, unit_group
from .wedder import (
    Decomposition,
    SolverReport,
    analytic_decomposition,
    classify_type,
    is_sl32_class_data,
    splitting_field_check,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_MODULAR = 3
EXIT_NONUNIQUE = 4

DEFAULT_QMAX = 10**6


def _add_common(sub: argparse.ArgumentParser, with_pk: bool = True):
    sub.add_argument("--group", default="builtin:sl32-s8",
                     help="group source: builtin:{sl32-s8,sl32-p2f2,s5} or file:PATH")
    sub.add_argument("--seed", type=int, default=0, help="seed for all randomized steps")
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--qmax", type=int, default=DEFAULT_QMAX,
                     help="largest field size the brute-force path will touch")
    if with_pk:
        sub.add_argument("--p", type=int, required=True, help="field characteristic (prime)")
        sub.add_argument("--k", type=int, default=1, help="extension degree, q = p^k")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wedderburn",
                                     description="Exact block decompositions of semisimple group "
                                                 "algebras F_q[G] and their unit groups.")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("classes", help="conjugacy class table of the group")
    _add_common(sub, with_pk=False)

    sub = subs.add_parser("decompose", help="analytic block decomposition of F_q[G]")
    _add_common(sub)

    sub = subs.add_parser("oracle", help="brute-force block decomposition of F_q[G]")
    _add_common(sub)

    sub = subs.add_parser("units", help="unit group of F_q[G]")
    _add_common(sub)

    sub = subs.add_parser("check", help="reproduce the SL(3,2) reference grid")
    sub.add_argument("--group", default="builtin:sl32-s8",
                     help="group source (the reference grid applies to SL(3,2))")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--qmax", type=int, default=DEFAULT_QMAX)
    sub.add_argument("--p", default="11..199", help="primes, e.g. '11,13' or '11..199'")
    sub.add_argument("--k", default="1..12", help="extension degrees, e.g. '1' or '1..12'")
    sub.add_argument("--with-oracle", action="store_true",
                     help="also run the brute-force decomposition on every cell with q <= qmax")
    return parser


def resolve_group(source: str) -> FiniteGroup:
    if source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        if name not in BUILTIN_GROUPS:
            raise ValueError(f"unknown builtin group {name!r}; choose from {sorted(BUILTIN_GROUPS)}")
        return BUILTIN_GROUPS[name]()
    if source.startswith("file:"):
        return load_group(source.split(":", 1)[1])
    return load_group(source)


def _actions_for(source: str, G: FiniteGroup) -> list[FiniteGroup]:
    if source.startswith("builtin:sl32"):
        return [builtin_sl32_s8(), builtin_sl32_on_p2f2()]
    return [G]


def _type_or_none(source: str, p: int, k: int):
    if source.startswith("builtin:sl32"):
        return classify_type(p, k)
    return None


def _emit(payload: dict, fmt: str, text_lines: list[str]):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _parse_int_ranges(text: str) -> list[int]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if ".." in tok:
            lo, hi = tok.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(tok))
    if not out:
        raise ValueError(f"empty range specification {text!r}")
    return sorted(set(out))


def _parse_prime_spec(text: str) -> list[int]:
    """Primes from a range spec: 'a..b' tokens keep only the primes in the
    interval, while explicitly listed values must themselves be prime."""
    out = set()
    for tok in str(text).split(","):
        tok = tok.strip()
        if not tok:
            continue
        if ".." in tok:
            lo, hi = tok.split("..", 1)
            out.update(p for p in range(int(lo), int(hi) + 1) if is_prime(p))
        else:
            p = int(tok)
            _validate_p(p)
            out.add(p)
    if not out:
        raise ValueError(f"no primes in range specification {text!r}")
    return sorted(out)


def _validate_p(p: int):
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")


def cmd_classes(args) -> int:
    G = resolve_group(args.group)
    rows = [
        {"representative": c.representative.cycle_string(), "order": c.element_order, "size": c.size}
        for c in G.classes
    ]
    payload = {"degree": G.degree, "order": G.order, "exponent": G.exponent, "classes": rows}
    lines = [f"group of order {G.order} on {G.degree} points, exponent {G.exponent}"]
    for i, r in enumerate(rows, start=1):
        lines.append(f"  C{i}: rep {r['representative']}  order {r['order']}  size {r['size']}")
    _emit(payload, args.format, lines)
    return EXIT_OK


def _component_json(dec: Decomposition) -> list[dict]:
    return [{"n": c.n, "d": c.d} for c in dec.components]


def _run_analytic(args, G: FiniteGroup) -> SolverReport:
    _validate_p(args.p)
    return analytic_decomposition(G, args.p, args.k, _actions_for(args.group, G))


def _print_nonunique(report: SolverReport, fmt: str):
    if fmt == "json":
        payload = {
            "unique": False,
            "candidates": [_component_json(d) for d in report.solutions],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"analytic solver found {len(report.solutions)} candidate decompositions:")
        for d in report.solutions:
            print("  " + _format_components(d))


def _format_components(dec: Decomposition) -> str:
    return " + ".join(
        f"M({c.n}, q{'^' + str(c.d) if c.d > 1 else ''})" for c in dec.components
    )


def cmd_decompose(args) -> int:
    G = resolve_group(args.group)
    report = _run_analytic(args, G)
    if not report.unique:
        _print_nonunique(report, args.format)
        return EXIT_NONUNIQUE
    dec = report.solutions[0]
    t = _type_or_none(args.group, args.p, args.k)
    payload = {
        "q": {"p": args.p, "k": args.k},
        "type": t,
        "components": _component_json(dec),
        "splitting_field": splitting_field_check(dec),
    }
    lines = [
        f"F_q[G] for q = {args.p}^{args.k}, |G| = {G.order}",
        "components: " + _format_components(dec),
    ]
    if t is not None:
        lines.append(f"type: {t}")
    lines.append(f"splitting field: {'yes' if payload['splitting_field'] else 'no'}")
    _emit(payload, args.format, lines)
    return EXIT_OK


def cmd_oracle(args) -> int:
    G = resolve_group(args.group)
    _validate_p(args.p)
    q = args.p**args.k
    if q > args.qmax:
        raise ValueError(f"q = {q} exceeds --qmax {args.qmax}")
    spec = make_field(args.p, args.k, seed=args.seed)
    t0 = time.perf_counter()
    split = oracle_mod.split_center(G, spec, seed=args.seed)
    elapsed = time.perf_counter() - t0
    pairs = split.pairs()
    payload = {
        "q": {"p": args.p, "k": args.k},
        "components": [{"n": n, "d": d} for n, d in pairs],
    }
    lines = [
        f"brute-force decomposition over F_{args.p}^{args.k} (|G| = {G.order})",
        "components: " + " + ".join(f"M({n}, q{'^' + str(d) if d > 1 else ''})" for n, d in pairs),
        f"elapsed: {elapsed:.2f}s",
    ]
    _emit(payload, args.format, lines)
    return EXIT_OK


def cmd_units(args) -> int:
    G = resolve_group(args.group)
    report = _run_analytic(args, G)
    if not report.unique:
        _print_nonunique(report, args.format)
        return EXIT_NONUNIQUE
    dec = report.solutions[0]
    ug = unit_group(dec)
    t = _type_or_none(args.group, args.p, args.k)
    payload = {
        "q": {"p": args.p, "k": args.k},
        "type": t,
        "components": _component_json(dec),
        "unit_group": [{"n": c.n, "field": f"{args.p}^{args.k * c.d}"} for c in dec.components],
        "order": str(ug.total_order),
    }
    lines = [
        f"unit group of F_q[G], q = {args.p}^{args.k}, |G| = {G.order}",
        ug.display(),
        f"order: {ug.total_order}",
    ]
    _emit(payload, args.format, lines)
    return EXIT_OK


def cmd_check(args) -> int:
    G = resolve_group(args.group)
    if not is_sl32_class_data(G):
        raise ValueError("check compares against the SL(3,2) reference grid; "
                         "use an SL(3,2) group source")
    ps = _parse_prime_spec(str(args.p))
    ks = _parse_int_ranges(str(args.k))
    actions = [builtin_sl32_s8(), builtin_sl32_on_p2f2()]
    cells = 0
    failures = []
    oracle_cells = 0
    for p in ps:
        for k in ks:
            cells += 1
            label = f"p={p} k={k}"
            try:
                report = analytic_decomposition(G, p, k, actions)
            except ModularCaseError:
                raise
            if not report.unique:
                failures.append(f"{label}: analytic solution not unique "
                                f"({len(report.solutions)} candidates)")
                continue
            dec = report.solutions[0]
            row = sl32_expected_row(p, k)
            if dec.components != row.components:
                failures.append(f"{label}: got {dec.pairs()}, reference says "
                                f"{tuple((c.n, c.d) for c in row.components)}")
                continue
            if classify_type(p, k) != row.family_type:
                failures.append(f"{label}: type mismatch")
                continue
            if splitting_field_check(dec) != (row.family_type == 1):
                failures.append(f"{label}: splitting-field verdict mismatch")
                continue
            if args.with_oracle and p**k <= args.qmax:
                oracle_cells += 1
                spec = make_field(p, k, seed=args.seed)
                split = oracle_mod.split_center(G, spec, seed=args.seed)
                if split.pairs() != dec.pairs():
                    failures.append(f"{label}: brute-force blocks {split.pairs()} "
                                    f"differ from analytic {dec.pairs()}")
    for line in failures:
        print("MISMATCH " + line)
    suffix = f" ({oracle_cells} with brute-force cross-check)" if args.with_oracle else ""
    print(f"checked {cells} cells{suffix}: {cells - len(failures)} ok, {len(failures)} mismatches")
    return EXIT_MISMATCH if failures else EXIT_OK


_COMMANDS = {
    "classes": cmd_classes,
    "decompose": cmd_decompose,
    "oracle": cmd_oracle,
    "units": cmd_units,
    "check": cmd_check,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ModularCaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MODULAR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
