"""Command-line entry point.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 golden-table
mismatch.  Domain errors print a single JSON line on stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from importlib import resources
from pathlib import Path

from . import census as census_mod
from . import construct, decode, equiv, mdscheck
from .galois import INF, field_from_descriptor, make_field, subfields


class CliError(ValueError):
    pass


def _default_jobs() -> int:
    env = os.environ.get("TWISTEDRS_JOBS")
    return max(1, int(env)) if env else 1


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(payload, as_json: bool, human: str):
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _field_from_args(args) -> "object":
    modulus = json.loads(args.modulus) if args.modulus else None
    return make_field(args.p, args.m, modulus)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_field_info(args) -> int:
    fld = _field_from_args(args)
    subs = [
        {"order": s.order, "elements": list(s.elements)} for s in subfields(fld)
    ]
    payload = {
        "field": fld.descriptor(),
        "q": fld.q,
        "generator": fld.generator,
        "subfields": subs,
    }
    _emit(
        payload,
        args.json,
        f"GF({fld.q}) = GF({fld.p}^{fld.m}), modulus digits {list(fld.modulus)}, "
        f"generator {fld.generator}, {len(subs)} proper subfield(s)",
    )
    return 0


def cmd_construct(args) -> int:
    spec = construct.spec_from_json(_load_json(args.spec))
    code = construct.twisted_code(spec)
    payload = code.to_json()
    if args.out:
        Path(args.out).write_text(json.dumps(payload, sort_keys=True))
    _emit(
        payload,
        args.json,
        f"[{code.n},{code.k}] twisted code over GF({code.field.q}); generator rows: "
        + "; ".join(str(list(r)) for r in code.generator),
    )
    return 0


def cmd_encode(args) -> int:
    spec = construct.spec_from_json(_load_json(args.spec))
    message = _load_json(args.message)
    word = decode.encode(spec, message)
    _emit({"codeword": word}, args.json, f"codeword: {word}")
    return 0


def cmd_decode(args) -> int:
    spec = construct.spec_from_json(_load_json(args.spec))
    received = _load_json(args.received)
    result = decode.twisted_decode(spec, received, args.tau)
    best = result.best()
    _emit(
        result.to_json(),
        args.json,
        "no candidate within radius"
        if best is None
        else f"best candidate at distance {best.distance}: {list(best.codeword)}"
        f" (message {list(best.message)}, {result.guesses} guesses)",
    )
    return 0


def cmd_is_mds(args) -> int:
    data = _load_json(args.spec)
    spec = construct.spec_from_json(data)
    if args.method == "minors":
        verdict = mdscheck.is_mds_minors(construct.twisted_code(spec))
    elif args.method == "general":
        verdict = mdscheck.is_mds_general(spec, args.allow_inf_any_hook)
    else:
        if spec.has_inf() and spec.h != spec.k - 1:
            verdict = mdscheck.is_mds_minors(construct.twisted_code(spec))
        else:
            verdict = mdscheck.is_mds_general(spec)
    _emit(
        verdict.to_json(),
        args.json,
        "MDS" if verdict.is_mds else f"not MDS (witness {list(verdict.witness.subset)})",
    )
    return 0


def cmd_is_grs(args) -> int:
    code = _load_code_or_spec(args)
    flag = equiv.is_grs(code)
    _emit({"grs": flag}, args.json, "GRS" if flag else "not GRS")
    return 0


def cmd_canon(args) -> int:
    code = _load_code_or_spec(args)
    sig = equiv.canonical_form(code)
    _emit(
        {"signature": sig.hex(), "q": sig.q, "n": sig.n, "k": sig.k},
        args.json,
        f"signature {sig.hex()}",
    )
    return 0


def _load_code_or_spec(args) -> construct.LinearCode:
    data = _load_json(args.spec if args.spec else args.code)
    if "generator" in data:
        fld = field_from_descriptor(data["field"])
        return construct.make_code(fld, data["generator"])
    return construct.twisted_code(construct.spec_from_json(data))


def cmd_census(args) -> int:
    fld = _make_field_for_q(args.q)
    jobs = args.jobs
    if args.family == "star":
        result = census_mod.census_star(fld, args.n, args.k, jobs=jobs)
    elif args.family == "plus":
        result = census_mod.census_plus(fld, args.n, args.k, jobs=jobs)
    elif args.family == "twisted":
        result = census_mod.census_twisted(
            fld, args.n, args.k, t=args.t, h=args.h,
            inf_policy=args.inf_policy, jobs=jobs,
        )
    elif args.family == "rl":
        result = census_mod.census_roth_lempel(
            fld, args.n, args.k, delta_policy=args.delta_policy, jobs=jobs
        )
    else:
        raise CliError(f"unknown family {args.family}")
    row = result.row
    lines = census_mod.rows_to_csv_lines([row])
    if args.out:
        Path(args.out).write_text("\n".join(lines) + "\n")
    payload = {
        "q": row.q, "n": row.n, "k": row.k, "family": row.family,
        "t": row.t, "h": row.h, "total": row.total,
        "inequivalent": row.inequivalent, "non_grs": row.non_grs,
        "runtime": round(row.runtime, 3),
        "signatures": sorted(result.signatures()),
    }
    _emit(
        payload,
        args.json,
        f"{row.family} census ({row.q},{row.n},{row.k}): "
        f"{row.total}/{row.inequivalent}/{row.non_grs} "
        f"in {row.runtime:.1f}s",
    )
    return 0


def _make_field_for_q(q: int):
    p, m = census_mod._factor_prime_power(q)
    return make_field(p, m)


def _load_golden(name: str) -> dict[tuple[int, int, int], tuple[int, int, int]]:
    ref = resources.files("twistedrs.tables").joinpath(name)
    out = {}
    with ref.open("r") as fh:
        for rec in csv.DictReader(fh):
            out[(int(rec["q"]), int(rec["n"]), int(rec["k"]))] = (
                int(rec["total"]), int(rec["inequivalent"]), int(rec["non_grs"])
            )
    return out


def cmd_tables(args) -> int:
    jobs = args.jobs
    which = [args.table] if args.table else [1, 2]
    mismatches = []
    report = []
    computed_rows = []
    for table in which:
        if table == 1:
            golden = _load_golden("table1.csv")
            if args.q and args.q != census_mod.TABLE1_Q:
                raise CliError(f"table 1 is defined for q = {census_mod.TABLE1_Q}")
            results = census_mod.reproduce_table1(jobs=jobs)
        else:
            golden = _load_golden("table2.csv")
            qs = [args.q] if args.q else None
            if args.q and args.q not in census_mod.TABLE2_MAX_N:
                raise CliError(
                    f"table 2 covers q in {sorted(census_mod.TABLE2_MAX_N)}"
                )
            results = census_mod.reproduce_table2(qs=qs, jobs=jobs)
        for res in results:
            row = res.row
            computed_rows.append(row)
            want = golden[(row.q, row.n, row.k)]
            got = row.counts()
            ok = want == got
            if not ok:
                mismatches.append((table, row.q, row.n, row.k, want, got))
            report.append(
                {
                    "table": table, "q": row.q, "n": row.n, "k": row.k,
                    "expected": list(want), "computed": list(got), "match": ok,
                }
            )
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        lines = census_mod.rows_to_csv_lines(computed_rows)
        (outdir / "computed.csv").write_text("\n".join(lines) + "\n")
        manifest = {
            "tables": which,
            "inf_policy": "liberal",
            "jobs": jobs,
            "cells": len(report),
            "mismatches": len(mismatches),
        }
        (outdir / "manifest.json").write_text(json.dumps(manifest, indent=2))
    if args.json:
        print(json.dumps({"cells": report, "mismatches": len(mismatches)}))
    else:
        for entry in report:
            status = "ok " if entry["match"] else "DIFF"
            print(
                f"{status} table {entry['table']} (q,n,k)=({entry['q']},{entry['n']},"
                f"{entry['k']}) expected {entry['expected']} computed {entry['computed']}"
            )
        print(f"{len(report)} cells checked, {len(mismatches)} mismatches")
    return 3 if mismatches else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistedrs",
        description="Twisted Reed-Solomon codes: construct, test, decode, count",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="describe GF(p^m)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--modulus", help="JSON list of base-p digits, lowest first")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("construct", help="generator matrix of a twisted code")
    p.add_argument("--spec", required=True)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("encode", help="encode a message with a twisted code")
    p.add_argument("--spec", required=True)
    p.add_argument("--message", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="hook-guessing list decoder")
    p.add_argument("--spec", required=True)
    p.add_argument("--received", required=True)
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("is-mds", help="decide MDS-ness of a twisted code")
    p.add_argument("--spec", required=True)
    p.add_argument("--method", choices=["auto", "general", "minors"], default="auto")
    p.add_argument("--allow-inf-any-hook", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_is_mds)

    p = sub.add_parser("is-grs", help="is the code equivalent to Reed-Solomon?")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--spec")
    group.add_argument("--code")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_is_grs)

    p = sub.add_parser("canon", help="canonical equivalence-class signature")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--spec")
    group.add_argument("--code")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("census", help="exhaustive family census")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--family", choices=["star", "plus", "twisted", "rl"], required=True
    )
    p.add_argument("--t", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--inf-policy", choices=["liberal", "strict", "none"],
                   default="liberal", dest="inf_policy")
    p.add_argument("--delta-policy", choices=["nonzero", "any"],
                   default="nonzero", dest="delta_policy")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("tables", help="replay the bundled census tables and diff")
    p.add_argument("--table", type=int, choices=[1, 2])
    p.add_argument("--q", type=int)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tables)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, FileNotFoundError, ZeroDivisionError) as exc:
        print(
            json.dumps({"error": str(exc), "kind": type(exc).__name__}),
            file=sys.stderr,
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
