"""Command-line interface.

Subcommands:
  spectrum       compute genus records for one curve and export them
  verify-tables  check the embedded reference genera against computed spectra
  genus          evaluate a single descriptor, e.g. sigma-cm:1,5,1
  oracle         run every brute-force/closed-form equivalence for one curve

Exit status is 0 for success and 1 when a verification fails.  Default
curve-size caps (s <= 6 Suzuki, s <= 5 Ree) bound runtimes; override with
--allow-large-s or the SKABELUND_MAX_S environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys

from .catalog import StandardExponents
from .curves import Family, make_params
from .spectrum import (
    compute_spectrum,
    descriptor_kind,
    descriptor_params,
    evaluate_descriptor,
    render_csv,
    render_json,
    render_table,
    run_oracle_suite,
    validate_export,
    verify_tables,
)

DEFAULT_MAX_S = {Family.SUZUKI: 6, Family.REE: 5}


def _family(name: str) -> Family:
    try:
        return Family(name)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown family {name!r}") from None


def _check_s_cap(family: Family, s: int, allow_large: bool) -> None:
    cap = int(os.environ.get("SKABELUND_MAX_S", 0)) or DEFAULT_MAX_S[family]
    if s > cap and not allow_large:
        raise SystemExit(
            f"s={s} exceeds the default cap {cap} for {family.value}; "
            "pass --allow-large-s to proceed"
        )


def _parse_descriptor(spec: str):
    kind, _, raw = spec.partition(":")
    try:
        values = [int(v) for v in raw.split(",")] if raw else []
    except ValueError:
        raise SystemExit(f"malformed descriptor parameters in {spec!r}") from None
    from . import catalog

    try:
        if kind == "sigma-cm":
            n1, n2, a = values
            return catalog.SigmaCm(StandardExponents(n1, n2, a))
        if kind == "b0-cyclic":
            d, n = values
            return catalog.B0Cyclic(d, n)
        if kind == "b0-dihedral":
            d, n = values
            return catalog.B0Dihedral(d, n)
        if kind == "psl28":
            (n,) = values
            return catalog.Psl28(n)
        if kind == "n2-nonskew":
            k_order, n = values
            return catalog.N2NonSkew(k_order, n)
        if kind == "n2-skew-full":
            i, w = values
            return catalog.N2SkewFull(i, w)
        if kind == "n2-skew-cyclic":
            i, w = values
            return catalog.N2SkewCyclic(i, w)
    except ValueError as exc:
        raise SystemExit(f"bad parameter count for {kind!r}: {exc}") from None
    raise SystemExit(f"unknown descriptor kind {kind!r}")


def _cmd_spectrum(args) -> int:
    _check_s_cap(args.family, args.s, args.allow_large_s)
    report = compute_spectrum(args.family, args.s, args.subgroup_family)
    if args.format == "csv":
        text = render_csv(report)
    elif args.format == "json":
        text = render_json(report)
        validate_export(text)  # round-trip check before anything is written
    else:
        text = render_table(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        print(f"wrote {len(report.records)} records to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify_tables(args) -> int:
    checks = verify_tables(s_max=args.s_max)
    failed = False
    for check in checks:
        t = check.table
        label = f"table {t.source_table} ({t.family.value} s={t.s})"
        if check.ok:
            print(f"PASS {label}: all {len(t.expected_genera)} genera reproduced")
        else:
            failed = True
            for miss, near in zip(check.missing, check.nearest):
                print(f"FAIL {label}: genus {miss} missing (nearest computed: {near})")
    return 1 if failed else 0


def _cmd_genus(args) -> int:
    _check_s_cap(args.family, args.s, args.allow_large_s)
    params = make_params(args.family, args.s)
    descriptor = _parse_descriptor(args.descriptor)
    record = evaluate_descriptor(params, descriptor)
    ps = ",".join(str(x) for x in descriptor_params(descriptor) if x is not None)
    print(
        f"family={params.family.value} s={params.s} q={params.q} m={params.m} "
        f"descriptor={descriptor_kind(descriptor)}:{ps} "
        f"order={record.order} delta={record.delta} genus={record.genus}"
    )
    return 0


def _cmd_oracle(args) -> int:
    _check_s_cap(args.family, args.s, args.allow_large_s)
    checks = run_oracle_suite(args.family, args.s, max_elements=args.max_elements)
    failed = False
    for check in checks:
        status = "PASS" if check.ok else "FAIL"
        failed |= not check.ok
        print(f"{status} {check.name}: {check.detail}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skabelund",
        description="Genera of Galois subcovers of the Skabelund maximal curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="compute and export a genus spectrum")
    sp.add_argument("--family", type=_family, required=True, choices=list(Family))
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--subgroup-family", default=None, help="restrict to one kind")
    sp.add_argument("--format", choices=("csv", "json", "table"), default="table")
    sp.add_argument("--out", default=None, help="write to file instead of stdout")
    sp.add_argument("--allow-large-s", action="store_true")
    sp.set_defaults(func=_cmd_spectrum)

    vt = sub.add_parser("verify-tables", help="verify the embedded reference genera")
    vt.add_argument("--s-max", type=int, default=4)
    vt.set_defaults(func=_cmd_verify_tables)

    gn = sub.add_parser("genus", help="evaluate one subgroup descriptor")
    gn.add_argument("--family", type=_family, required=True, choices=list(Family))
    gn.add_argument("--s", type=int, required=True)
    gn.add_argument("--descriptor", required=True, help="kind:params, e.g. sigma-cm:1,5,1")
    gn.add_argument("--allow-large-s", action="store_true")
    gn.set_defaults(func=_cmd_genus)

    orc = sub.add_parser("oracle", help="run brute-force equivalence checks")
    orc.add_argument("--family", type=_family, required=True, choices=list(Family))
    orc.add_argument("--s", type=int, required=True)
    orc.add_argument("--max-elements", type=int, default=None)
    orc.add_argument("--allow-large-s", action="store_true")
    orc.set_defaults(func=_cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
