"""Command-line front end: ``inscribed-orbits <command> ...``.

Exit codes: 0 success, 1 formula/oracle mismatch, 2 usage or validation
error, 3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import counting, oracle
from .errors import DomainError, InadmissibleWordError, ResourceCapError
from .geometry import (
    CLOSURE_TOL,
    FEASIBILITY_EPS,
    banach_iterate,
    build_polygon,
    realizability_audit,
    return_map,
    solve_periodic_orbit,
)
from .svg import emit_gallery_svg, emit_svg
from .transition import closed_walk_count, pure_orbit_count

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

PERIOD_TWO_NOTE = (
    "n=2 uses the formula's base value O(2)=2; geometrically an odd-sided "
    "regular polygon has no 2-periodic orbit"
)


class UsageError(Exception):
    pass


def _positive_int(minimum):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value

    return parse


def _word(text):
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"word must be comma-separated integers, got {text!r}")


def _fmt_float(x):
    return repr(float(x))


def _emit(args, text):
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _json(obj):
    return json.dumps(obj, indent=2) + "\n"


def _csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# --- count -----------------------------------------------------------------

def cmd_count(args):
    k, n = args.k, args.n
    result = {"k": k, "sides": 2 * k + 1, "n": n, "count": counting.count_orbits(k, n).count}
    breakdown = None
    if args.breakdown and n >= 3:
        breakdown = counting.count_breakdown(k, n)
        result["breakdown"] = breakdown.to_dict()
    status = EXIT_OK
    if args.oracle:
        result["oracle"] = oracle.count_orbits_bruteforce(k, n, args.max_oracle_n)
        if n == 2:
            result["match"] = None
        else:
            result["match"] = result["oracle"] == result["count"]
            if not result["match"]:
                status = EXIT_MISMATCH
    if n == 2:
        result["note"] = PERIOD_TWO_NOTE

    if args.format == "json":
        _emit(args, _json(result))
    elif args.format == "csv":
        header = ["k", "sides", "n", "count"] + [c for c in ("oracle", "match") if c in result]
        row = [result[c] if result[c] is not None else "" for c in header]
        _emit(args, _csv(header, [row]))
    else:
        lines = [f"O_{2 * k + 1}({n}) = {result['count']}"]
        if breakdown is not None:
            lines += _breakdown_lines(breakdown)
        if args.oracle:
            verdict = {None: "n/a (convention)", True: "match", False: "MISMATCH"}[result["match"]]
            lines.append(f"oracle: {result['oracle']}  formula: {result['count']}  {verdict}")
        if n == 2:
            lines.append(f"note: {PERIOD_TWO_NOTE}")
        _emit(args, "\n".join(lines) + "\n")
    return status


def _breakdown_lines(b):
    lines = ["mixed partitions:"]
    if not b.mixed_terms:
        lines.append("  (none)")
    for t in b.mixed_terms:
        lines.append(
            f"  {t.partition}: necklaces={t.necklaces} pure_product={t.pure_product} "
            f"-> {t.contribution}"
        )
    lines.append("equal parts:")
    for t in b.equal_part_terms:
        lines.append(f"  d={t.divisor}: kinds={t.kinds} -> {t.contribution}")
    lines.append("subtractions:")
    if not b.subtraction_terms:
        lines.append("  (none)")
    for t in b.subtraction_terms:
        lines.append(f"  O({t.divisor}) = {t.orbits}")
    lines.append(f"total: {b.formula()}")
    return lines


# --- table -----------------------------------------------------------------

def cmd_table(args):
    k = args.k
    rows = [
        (n, closed_walk_count(k, n), pure_orbit_count(k, n), counting.count_orbits(k, n).count)
        for n in range(2, args.max_n + 1)
    ]
    header = ["n", "closed_walks", "pure_orbits", "orbits"]
    if args.format == "csv":
        _emit(args, _csv(header, rows))
    elif args.format == "json":
        _emit(args, _json({"k": k, "sides": 2 * k + 1, "rows": [dict(zip(header, r)) for r in rows]}))
    else:
        widths = [max(len(h), *(len(str(r[i])) for r in rows)) for i, h in enumerate(header)]
        out = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        out += ["  ".join(str(v).rjust(w) for v, w in zip(r, widths)) for r in rows]
        _emit(args, "\n".join(out) + "\n")
    return EXIT_OK


# --- sequences -------------------------------------------------------------

def cmd_sequences(args):
    words = oracle.list_canonical_orbits(args.k, args.n, args.max_oracle_n)
    if args.format == "json":
        _emit(args, _json({"k": args.k, "sides": 2 * args.k + 1, "n": args.n,
                           "count": len(words), "words": [list(w) for w in words]}))
    else:
        _emit(args, "".join(",".join(map(str, w)) + "\n" for w in words))
    return EXIT_OK


# --- construct / gallery ---------------------------------------------------

def _orbit_record(geom, orbit):
    return {
        "word": list(orbit.word),
        "fixed_point": orbit.fixed_point,
        "params": list(orbit.params),
        "points": [[float(x), float(y)] for x, y in orbit.points],
        "closure_residual": orbit.closure_residual,
        "feasible": orbit.feasible,
        "degenerate_vertex": orbit.degenerate_vertex,
        "return_map_slope": return_map(geom, orbit.word).a,
    }


def cmd_construct(args):
    geom = build_polygon(args.k)
    try:
        orbit = solve_periodic_orbit(geom, args.word, eps=args.tol, closure_tol=args.closure_tol)
    except InadmissibleWordError as exc:
        raise UsageError(f"invalid word {','.join(map(str, args.word))}: {exc}")
    banach = banach_iterate(geom, orbit.word, tol=1e-12)
    record = _orbit_record(geom, orbit)
    record.update({"k": args.k, "sides": geom.sides, "banach_fixed_point": banach,
                   "eps": args.tol, "closure_tol": args.closure_tol})
    if args.svg:
        Path(args.svg).write_text(emit_svg(geom, [orbit]), encoding="utf-8")
    if args.format == "json":
        _emit(args, _json(record))
    else:
        status = "feasible" if orbit.feasible else "infeasible"
        if orbit.degenerate_vertex:
            status += " (degenerate: fixed point at a polygon vertex)" if len(set(orbit.word)) <= 2 \
                else " (degenerate: touches a vertex)"
        lines = [
            f"word: {','.join(map(str, orbit.word))}  (regular {geom.sides}-gon)",
            f"t* = {_fmt_float(orbit.fixed_point)}",
            f"banach t* = {_fmt_float(banach)}",
            f"return map slope = {_fmt_float(record['return_map_slope'])}",
            "params: " + ", ".join(f"{p:.12f}" for p in orbit.params),
            f"closure residual = {orbit.closure_residual:.3e}",
            f"status: {status}",
            f"tolerances: eps={args.tol!r} closure={args.closure_tol!r}",
        ]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_gallery(args):
    geom = build_polygon(args.k)
    words = oracle.list_canonical_orbits(args.k, args.n, args.max_oracle_n)
    orbits = [solve_periodic_orbit(geom, w, eps=args.tol) for w in words]
    if not orbits:
        print(f"warning: no {args.n}-periodic orbits through side 1 for k={args.k}", file=sys.stderr)
    if args.svg:
        if args.layout == "overlay":
            doc = emit_svg(geom, orbits)
        else:
            doc = emit_gallery_svg(geom, orbits)
        Path(args.svg).write_text(doc, encoding="utf-8")
    if args.format == "json":
        _emit(args, _json({"k": args.k, "sides": geom.sides, "n": args.n, "count": len(orbits),
                           "orbits": [_orbit_record(geom, o) for o in orbits]}))
    else:
        lines = [f"{len(orbits)} orbit(s) of period {args.n} in the regular {geom.sides}-gon"]
        for o in orbits:
            lines.append(
                f"  {','.join(map(str, o.word))}  t*={o.fixed_point:.12f}  "
                f"{'feasible' if o.feasible else 'infeasible'}"
            )
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


# --- verify ----------------------------------------------------------------

def verify_rows(k, n_max, n_min=3, max_oracle_n=oracle.DEFAULT_MAX_N):
    rows = []
    for n in range(n_min, n_max + 1):
        formula = counting.count_orbits(k, n).count
        brute = oracle.count_orbits_bruteforce(k, n, max_oracle_n)
        row = {"n": n, "formula": formula, "oracle": brute,
               "status": "OK" if formula == brute else "MISMATCH"}
        if formula != brute:
            b = counting.count_breakdown(k, n)
            diag = []
            for t in b.mixed_terms:
                aware = counting.rotation_aware_mixed_count(k, t.partition)
                if aware != t.contribution:
                    diag.append({"partition": list(t.partition.parts[::-1]),
                                 "printed": t.contribution, "rotation_aware": aware})
            row["breakdown"] = b.to_dict()
            row["diagnosis"] = diag
            row["rotation_aware_total"] = formula - sum(d["printed"] - d["rotation_aware"] for d in diag)
        rows.append(row)
    return rows


def cmd_verify(args):
    rows = verify_rows(args.k, args.max_n, args.min_n, args.max_oracle_n)
    all_ok = all(r["status"] == "OK" for r in rows)
    if args.format == "json":
        _emit(args, _json({"k": args.k, "sides": 2 * args.k + 1, "rows": rows, "all_ok": all_ok}))
    elif args.format == "csv":
        _emit(args, _csv(["n", "formula", "oracle", "status"],
                         [[r["n"], r["formula"], r["oracle"], r["status"]] for r in rows]))
    else:
        lines = [f"verify k={args.k} (regular {2 * args.k + 1}-gon), n={args.min_n}..{args.max_n}"]
        for r in rows:
            lines.append(f"  n={r['n']:>3}  formula={r['formula']:>8}  oracle={r['oracle']:>8}  {r['status']}")
            if r["status"] != "OK":
                for d in r["diagnosis"]:
                    part = "+".join(map(str, d["partition"]))
                    lines.append(f"      mixed {part}: printed {d['printed']}, rotation-aware {d['rotation_aware']}")
                lines.append(f"      formula {r['breakdown']['mixed_total']} mixed + "
                             f"{r['breakdown']['equal_part_total']} equal - "
                             f"{r['breakdown']['subtraction_total']} subtracted; "
                             f"rotation-aware total {r['rotation_aware_total']}")
        lines.append("all OK" if all_ok else "MISMATCH found")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if all_ok else EXIT_MISMATCH


# --- audit -----------------------------------------------------------------

def audit_summary(records):
    """Per (k, n) tallies of realised and unrealised orbit words."""
    groups = {}
    for r in records:
        g = groups.setdefault((r.k, r.n), {"k": r.k, "n": r.n, "words": 0, "feasible": 0,
                                           "infeasible_examples": []})
        g["words"] += 1
        if r.feasible:
            g["feasible"] += 1
        elif len(g["infeasible_examples"]) < 3:
            g["infeasible_examples"].append(list(r.word))
    return list(groups.values())


def cmd_audit(args):
    ks = sorted(set(args.k))
    summary = audit_summary(realizability_audit(ks, args.max_n))
    if args.format == "json":
        _emit(args, _json({"ks": ks, "max_n": args.max_n, "eps": FEASIBILITY_EPS, "rows": summary}))
    elif args.format == "csv":
        _emit(args, _csv(["k", "n", "words", "feasible"],
                         [[g["k"], g["n"], g["words"], g["feasible"]] for g in summary]))
    else:
        lines = [f"realizability audit (eps={FEASIBILITY_EPS!r}, closure={CLOSURE_TOL!r})"]
        for g in summary:
            line = f"  k={g['k']} n={g['n']:>2}: {g['feasible']}/{g['words']} realised"
            if g["infeasible_examples"]:
                line += "  e.g. not realised: " + "; ".join(
                    ",".join(map(str, w)) for w in g["infeasible_examples"])
            lines.append(line)
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


# --- parser ----------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="inscribed-orbits",
        description="Count and construct perpendicularly inscribed periodic polygons "
                    "through side 1 of a regular (2k+1)-gon.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, period=True, formats=("text", "json", "csv")):
        p.add_argument("-k", type=_positive_int(1), required=True, help="polygon has 2k+1 sides")
        if period:
            p.add_argument("-n", type=_positive_int(2), required=True, help="period")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", help="write the report here instead of stdout")

    def cap(p):
        p.add_argument("--max-oracle-n", type=_positive_int(2), default=oracle.DEFAULT_MAX_N,
                       help="largest period the brute-force enumeration may attempt")

    def tolerances(p):
        p.add_argument("--tol", type=float, default=FEASIBILITY_EPS,
                       help="side-parameter feasibility margin")
        p.add_argument("--closure-tol", type=float, default=CLOSURE_TOL)

    p = sub.add_parser("count", help="evaluate the counting formula")
    common(p)
    cap(p)
    p.add_argument("--breakdown", action="store_true", help="itemize every term")
    p.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="walk, pure-orbit and orbit counts for n=2..max-n")
    common(p, period=False)
    p.add_argument("--max-n", type=_positive_int(2), required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sequences", help="list canonical side words of the orbits")
    common(p, formats=("text", "json"))
    cap(p)
    p.set_defaults(func=cmd_sequences)

    p = sub.add_parser("construct", help="solve one orbit from its side word")
    common(p, period=False, formats=("text", "json"))
    p.add_argument("--word", type=_word, required=True, help="comma-separated side labels, e.g. 1,2,3")
    p.add_argument("--svg", help="write an SVG figure here")
    tolerances(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("gallery", help="solve and draw every orbit of a period")
    common(p, formats=("text", "json"))
    cap(p)
    p.add_argument("--svg", help="write an SVG figure here")
    p.add_argument("--layout", choices=("grid", "overlay"), default="grid")
    tolerances(p)
    p.set_defaults(func=cmd_gallery)

    p = sub.add_parser("verify", help="compare the formula with brute force for n up to max-n")
    common(p, period=False)
    cap(p)
    p.add_argument("--max-n", type=_positive_int(3), required=True)
    p.add_argument("--min-n", type=_positive_int(3), default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit", help="check which orbit words are realised geometrically")
    p.add_argument("-k", type=_positive_int(1), action="append", required=True,
                   help="repeatable; polygon has 2k+1 sides")
    p.add_argument("--max-n", type=_positive_int(3), required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
