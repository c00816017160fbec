"""Command line: one command per reproduced table or theorem.

Exit codes: 0 everything matches, 1 a mismatch or an open case, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import __version__, bounds, reference
from .catalog import CatalogError, load_catalog, validate_catalog
from .census import MAX_N, MIN_N, run_pipeline, table_csv
from .cycles import square_table
from .fp import ClassifierConfig, derive_x2_y3_witness
from .words import format_word

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
DEFAULT_N_MAX = 16
MIN_MAX_COSETS = 1000
ORACLE_ALIASES = {
    "census": bounds.CENSUS,
    "census-bound": bounds.CENSUS,
    "dykema": bounds.DYKEMA,
    "dykema-bound": bounds.DYKEMA,
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n_values: tuple[int, ...]
    catalog: str | None
    max_cosets: int
    cache_dir: str | None
    format: str
    jobs: int

    def echo(self) -> dict:
        return {
            "command": self.command,
            "n": list(self.n_values),
            "catalog": self.catalog,
            "max_cosets": self.max_cosets,
            "cache_dir": self.cache_dir,
            "format": self.format,
            "jobs": self.jobs,
        }


def parse_n(text: str | None, extended: bool) -> tuple[int, ...]:
    """``"16"``, ``"4-16"`` or ``"4,8,12"``; only even values in range."""
    if text is None:
        return tuple(range(MIN_N, DEFAULT_N_MAX + 1, 2))
    vals: list[int] = []
    try:
        for part in text.split(","):
            if "-" in part:
                lo, hi = (int(x) for x in part.split("-", 1))
                vals += [v for v in range(lo, hi + 1) if v % 2 == 0]
            else:
                vals.append(int(part))
    except ValueError:
        raise UsageError(f"cannot read --n {text!r}") from None
    for v in vals:
        if v % 2 or not MIN_N <= v <= MAX_N:
            raise UsageError(f"n must be even and within {MIN_N}..{MAX_N}, got {v}")
        if v > DEFAULT_N_MAX and not extended:
            raise UsageError(f"n = {v} is an extended run; add --extended")
    if not vals:
        raise UsageError("empty --n range")
    return tuple(sorted(set(vals)))


def _emit(out, fmt: str, doc: dict, text: str, table: str | None = None) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    elif fmt == "csv" and table is not None:
        out.write(table)
    else:
        out.write(text.rstrip("\n") + "\n")


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


# -- commands --------------------------------------------------------------------------


def _load(cfg: RunConfig, err):
    try:
        return load_catalog(cfg.catalog)
    except (CatalogError, OSError) as exc:
        err.write(f"catalog rejected: {exc}\n")
        return None


def cmd_table1(cfg: RunConfig, witnesses: bool, out, err) -> int:
    cat = _load(cfg, err)
    if cat is None:
        return EXIT_MISMATCH
    rows = square_table(ClassifierConfig(max_cosets=cfg.max_cosets))
    survivors = [r.row for r in rows if not r.eliminated]
    items = []
    for r in rows:
        d = {"row": r.row, "relation": format_word(r.relation), "verdict": r.verdict.label(),
             "eliminated": r.eliminated}
        if witnesses and not r.eliminated:
            x, y, form = derive_x2_y3_witness(r.row)
            d["witness"] = {"x": format_word(x), "y": format_word(y), "support": form}
        items.append(d)
    ok = len(rows) == 36 and tuple(survivors) == reference.SQUARE_SURVIVORS
    doc = {"config": cfg.echo(), "catalog_version": cat.version, "rows": items,
           "eliminated": len(rows) - len(survivors), "surviving": survivors, "matches_reference": ok}
    lines = [f"{d['row']:>2}  {d['relation']:<24} {d['verdict']}" for d in items]
    lines.append(f"{len(rows)} relations, {len(rows) - len(survivors)} eliminated, "
                 f"{len(survivors)} surviving: {', '.join(map(str, survivors))}")
    if witnesses:
        lines.append("x^2 = y^3 substitutions:")
        lines += [f"  row {d['row']}: x = {d['witness']['x']}, y = {d['witness']['y']}, "
                  f"supp(alpha) = {d['witness']['support']}" for d in items if "witness" in d]
    table = _csv([["row", "relation", "verdict", "witness_x", "witness_y", "support"]]
                 + [[d["row"], d["relation"], d["verdict"]]
                    + ([d["witness"]["x"], d["witness"]["y"], d["witness"]["support"]] if "witness" in d else ["", "", ""])
                    for d in items])
    _emit(out, cfg.format, doc, "\n".join(lines), table)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_catalog_verify(cfg: RunConfig, out, err, classify_all: bool = False) -> int:
    cat = _load(cfg, err)
    if cat is None:
        return EXIT_MISMATCH
    res = validate_catalog(cat, ClassifierConfig(max_cosets=cfg.max_cosets), jobs=cfg.jobs,
                           classify_all=classify_all)
    firm = [v for v in res if not v.provisional]
    prov = [v for v in res if v.provisional]
    failed = [v for v in firm if v.passed is False]
    doc = {"config": cfg.echo(), "catalog_version": cat.version,
           "entries": [v.to_json() for v in firm], "provisional": [v.to_json() for v in prov],
           "failed": [v.name for v in failed]}

    def line(v):
        status = {True: "pass", False: "FAIL", None: "n/a"}[v.passed]
        e = v.expected
        comp = f"{v.total}/{'-' if v.eliminated is None else v.eliminated}/{'-' if v.surviving is None else v.surviving}"
        want = "/".join("-" if x is None else str(x) for x in (e.total, e.eliminated, e.surviving))
        return f"{status:<4}  {v.name:<26} computed {comp:<22} published {want:<14} {v.note}".rstrip()

    lines = [f"catalog {cat.version[:16]}"] + [line(v) for v in firm]
    if prov:
        lines += ["provisional:"] + [line(v) for v in prov]
    lines.append(f"{len(firm) - len(failed)} of {len(firm)} entries agree with the published counts")
    head = ["name", "provisional", "mode", "total", "eliminated", "surviving",
            "expected_total", "expected_eliminated", "expected_surviving", "passed"]
    table = _csv([head] + [[v.name, v.provisional, v.mode, v.total, v.eliminated, v.surviving,
                            v.expected.total, v.expected.eliminated, v.expected.surviving, v.passed]
                           for v in res])
    _emit(out, cfg.format, doc, "\n".join(lines), table)
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_census(cfg: RunConfig, out, err) -> int:
    cat = _load(cfg, err)
    if cat is None:
        return EXIT_MISMATCH
    reports = [run_pipeline(n, cat.patterns(), cache_dir=cfg.cache_dir, jobs=cfg.jobs) for n in cfg.n_values]
    mismatches = []
    cols = []
    for r in reports:
        i = reference.CENSUS_SIZES.index(r.n)
        want = {"Total": reference.CENSUS_TOTALS[i], "L_n": reference.LADDER_PRISM_COUNTS[i],
                "M_n": reference.LADDER_MOEBIUS_COUNTS[i], "Remains": reference.REMAINS_COUNTS[i]}
        want.update({name: c[i] for name, c in reference.FILTER_COUNTS})
        got = {"Total": r.total, "L_n": r.ladder_prism, "M_n": r.ladder_moebius, "Remains": len(r.survivors)}
        got.update(r.removed)
        mismatches += [f"n={r.n} {k}: {got.get(k)} != {v}" for k, v in want.items() if got.get(k) != v]
        if not r.conserved():
            mismatches.append(f"n={r.n}: removal counts do not add up to the total")
        cols.append({"n": r.n, "total": r.total, "removed": r.removed, "L_n": r.ladder_prism,
                     "M_n": r.ladder_moebius, "remains": len(r.survivors),
                     "survivors_graph6": [g.graph6() for g in r.survivors]})
    doc = {"config": cfg.echo(), "catalog_version": cat.version, "columns": cols, "mismatches": mismatches}
    table = table_csv(reports)
    text = table.replace(",", "\t") + f"catalog {cat.version[:16]}\n"
    text += "\n".join(mismatches) if mismatches else "all counts agree with the published table"
    if cfg.format == "csv":
        table = f"# catalog {cat.version}\n# config {json.dumps(cfg.echo(), sort_keys=True)}\n" + table
    _emit(out, cfg.format, doc, text, table)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_bounds(cfg: RunConfig, disabled, reading: str, out, err) -> int:
    cat = _load(cfg, err)
    if cat is None:
        return EXIT_MISMATCH
    trails = bounds.all_trails(disabled, reading)
    search = bounds.search_unit_order8(ban_k23=True)
    control = bounds.search_unit_order8(ban_k23=False)
    open_trails = [t for t in trails if t.verdict != "infeasible"]
    ok = not open_trails and not search.completions and bool(control.completions)
    doc = {"config": dict(cfg.echo(), disabled_oracles=sorted(disabled), dykema_reading=reading),
           "catalog_version": cat.version,
           "trails": [t.to_json() for t in trails],
           "unit_order8_search": {"completions": len(search.completions), "log": search.log},
           "negative_control": {"completions": len(control.completions), "log": control.log},
           "open": [f"{t.mode} n={t.n}" for t in open_trails]}
    lines = [t.text() for t in trails]
    lines.append(f"unit n=8 completion search: {len(search.completions)} completions ({search.log_text()})")
    lines.append(f"negative control without the K_2,3 ban: {len(control.completions)} completions")
    if open_trails:
        lines.append("open: " + ", ".join(doc["open"]))
    else:
        lines.append("zero divisors need |supp| >= 10 and units |supp| >= 9 when |supp(alpha)| = 3")
    table = _csv([["mode", "n", "verdict", "blocked_by"]]
                 + [[t.mode, t.n, t.verdict, " ".join(t.blocked_by)] for t in trails])
    _emit(out, cfg.format, doc, "\n\n".join(lines[:len(trails)]) + "\n\n" + "\n".join(lines[len(trails):]), table)
    return EXIT_OK if ok else EXIT_MISMATCH


# -- entry point -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kapsupp", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "csv", "json"), default="text")
        sp.add_argument("--max-cosets", type=int, default=100_000)
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--catalog", default=None, help="catalog JSON (default: bundled)")
        sp.add_argument("--cache-dir", default=None)
        sp.add_argument("--n", default=None, help="even sizes, e.g. 16, 4-16 or 6,10")
        sp.add_argument("--extended", action="store_true", help="allow n = 18 and 20")

    sp = sub.add_parser("table1", help="relations of a square and their verdicts")
    common(sp)
    sp.add_argument("--witnesses", action="store_true", help="add x^2 = y^3 substitutions")
    sp = sub.add_parser("catalog-verify", help="case counts of every catalog entry")
    common(sp)
    sp.add_argument("--classify-all", action="store_true",
                    help="classify every case even when the total already disagrees")
    sp = sub.add_parser("census", help="cubic triangle-free census through the filter rows")
    common(sp)
    sp = sub.add_parser("bounds", help="counting arguments for small supports")
    common(sp)
    sp.add_argument("--no-oracle", action="append", default=[], metavar="NAME",
                    help="withhold an external bound (census, dykema); repeatable")
    sp.add_argument("--dykema-reading", choices=(bounds.DYKEMA_AS_APPLIED, bounds.DYKEMA_LITERAL),
                    default=bounds.DYKEMA_AS_APPLIED)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.max_cosets < MIN_MAX_COSETS:
            raise UsageError(f"--max-cosets must be at least {MIN_MAX_COSETS}")
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        n_values = parse_n(args.n, args.extended) if args.command == "census" else ()
        cfg = RunConfig(args.command, n_values, args.catalog, args.max_cosets, args.cache_dir,
                        args.format, args.jobs)
        if args.command == "table1":
            return cmd_table1(cfg, args.witnesses, out, err)
        if args.command == "catalog-verify":
            return cmd_catalog_verify(cfg, out, err, args.classify_all)
        if args.command == "census":
            return cmd_census(cfg, out, err)
        disabled = set()
        for name in args.no_oracle:
            if name not in ORACLE_ALIASES:
                raise UsageError(f"unknown oracle {name!r}; choose from {', '.join(sorted(ORACLE_ALIASES))}")
            disabled.add(ORACLE_ALIASES[name])
        return cmd_bounds(cfg, frozenset(disabled), args.dykema_reading, out, err)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
