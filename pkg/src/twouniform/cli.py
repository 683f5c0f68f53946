"""Command-line front end: ``catalog``, ``verify``, ``export`` and ``km``.

Exit codes: 0 all checks pass, 1 an orbit bound is violated, 2 bad
arguments or I/O failure, 3 an internal invariant broke (with a witness).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .catalog import BOUNDS, all_tilings, build_Km, catalog, dumps, g_orbit_count, h_orbit_count, validate_tiling
from .lattice import SublatticeMatrix, enumerate_sublattices
from .symmetry import automorphism_group, quotient_group_orbits, verify_claim1, vertex_orbit_count
from .torus_map import CSV_COLUMNS, OrbitReport, is_polyhedral, quotient, report_json, to_dot, to_off

EXIT_OK, EXIT_VIOLATION, EXIT_IO, EXIT_INTERNAL = 0, 1, 2, 3


class InvariantBreach(RuntimeError):
    """An internal consistency check failed; the message is the witness."""


@dataclass
class RunConfig:
    tilings: list[int]
    max_index: int = 6
    out: Path = Path("reports")
    json: bool = True
    csv: bool = True
    dot: bool = False
    off: bool = False
    seed: int = 0
    jobs: int = 1
    claim_samples: int = 100
    exports: list[tuple[str, str]] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.tilings:
            raise ValueError("tiling selection is empty")
        if self.max_index < 1:
            raise ValueError("max-index must be at least 1")
        for i in self.tilings:
            if not 1 <= i <= 20:
                raise ValueError(f"tiling {i} is not in 1..20")


def parse_selection(text: str) -> list[int]:
    """``"1..20"``, ``"3,4,12"`` or a mix such as ``"1..3,15"``."""
    out: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..")
            out.update(range(int(lo), int(hi) + 1))
        else:
            out.add(int(part))
    return sorted(out)


# -- work items ------------------------------------------------------------------


def analyse(i: int, m: SublatticeMatrix) -> tuple[OrbitReport, str, str]:
    """Build one quotient and judge it; also returns its DOT and OFF text."""
    t = catalog(i)
    x = quotient(t, m)
    if x.euler_characteristic != 0:
        raise InvariantBreach(f"K{i} {m}: V-E+F = {x.euler_characteristic}")
    if x.V != m.index * len(t.sites):
        raise InvariantBreach(f"K{i} {m}: V = {x.V}, expected {m.index * len(t.sites)}")
    poly, _why = is_polyhedral(x)
    group = automorphism_group(x)
    orbits, _ = vertex_orbit_count(x, group)
    if poly:
        q, _ = quotient_group_orbits(t, m)
        if not 2 <= orbits <= q:
            raise InvariantBreach(f"K{i} {m}: Aut orbits {orbits} vs G/Gamma orbits {q}")
    rep = OrbitReport.judge(i, m, x, poly, len(group), orbits)
    name = f"K{i}_{m.a}_{m.b}_{m.d}"
    return rep, to_dot(x, name), to_off(x, t)


def _analyse_star(args):
    rep, dot, off = analyse(*args)
    return rep, dot, off


def sweep(cfg: RunConfig) -> list[tuple[OrbitReport, str, str]]:
    items = [(i, m) for i in cfg.tilings for n in range(1, cfg.max_index + 1) for m in enumerate_sublattices(n)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_analyse_star, items, chunksize=4))
    else:
        results = [analyse(i, m) for i, m in items]
    results.sort(key=lambda r: (r[0].tiling, r[0].index, r[0].sublattice))
    return results


def csv_text(reports: list[OrbitReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow(r.csv_row())
    return buf.getvalue()


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


# -- commands ---------------------------------------------------------------------


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.dump is not None:
        sys.stdout.write(dumps(catalog(args.dump)))
        return EXIT_OK
    header = f"{'id':>3}  {'types':<28} {'sites':>5} {'edges':>5} {'h':>3} {'g':>3} {'bound':>5}  valid"
    print(header)
    for t in all_tilings():
        h, _ = h_orbit_count(t)
        g, _ = g_orbit_count(t)
        ok = "yes" if validate_tiling(t).ok else "NO"
        print(f"{t.id:>3}  {t.type_pair_label:<28} {len(t.sites):>5} {len(t.edges):>5} "
              f"{h:>3} {g:>3} {BOUNDS[t.id - 1]:>5}  {ok}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        cfg = RunConfig(
            tilings=parse_selection(args.tilings),
            max_index=args.max_index,
            out=Path(args.out),
            json=args.json or not (args.json or args.csv),
            csv=args.csv or not (args.json or args.csv),
            dot=args.dot,
            off=args.off,
            seed=args.seed,
            jobs=args.jobs,
        )
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        cfg.out.mkdir(parents=True, exist_ok=True)
        if not os.access(cfg.out, os.W_OK):
            raise PermissionError(f"{cfg.out} is not writable")
    except OSError as exc:
        print(f"cannot write to {cfg.out}: {exc}", file=sys.stderr)
        return EXIT_IO

    bad_tilings = [t.id for t in (catalog(i) for i in cfg.tilings) if not validate_tiling(t).ok]
    if bad_tilings:
        print(f"internal: catalog entries fail validation: {bad_tilings}", file=sys.stderr)
        return EXIT_INTERNAL
    claim = verify_claim1(cfg.claim_samples, cfg.seed, cfg.tilings)
    if not claim.ok:
        print(f"internal: conjugation identity fails: {claim.failures[0]}", file=sys.stderr)
        return EXIT_INTERNAL
    try:
        results = sweep(cfg)
    except InvariantBreach as exc:
        print(f"internal: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    reports = [r for r, _, _ in results]
    try:
        if cfg.json:
            _write(cfg.out / "report.json", report_json(reports))
        if cfg.csv:
            _write(cfg.out / "report.csv", csv_text(reports))
        for rep, dot, off in results:
            stem = f"K{rep.tiling}_{'_'.join(map(str, rep.sublattice))}"
            if cfg.dot:
                _write(cfg.out / "dot" / f"{stem}.dot", dot)
            if cfg.off:
                _write(cfg.out / "off" / f"{stem}.off", off)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO

    failed = [r for r in reports if r.verdict == "fail"]
    n_poly = sum(r.polyhedral for r in reports)
    print(f"{len(reports)} quotients, {n_poly} polyhedral, {len(failed)} violate the bound")
    first = {}
    for r in reports:
        if r.polyhedral:
            first.setdefault(r.tiling, r.index)
    print("smallest polyhedral index: " + " ".join(f"K{i}:{first.get(i, '-')}" for i in cfg.tilings))
    for r in failed:
        print(f"  K{r.tiling} lattice {' '.join(map(str, r.sublattice))}: m = {r.m} > bound {r.bound}"
              if r.m > r.bound else
              f"  K{r.tiling} lattice {' '.join(map(str, r.sublattice))}: m = {r.m}, expected 2")
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    try:
        m = SublatticeMatrix.parse(args.lattice)
        i = int(args.tiling)
        t = catalog(i)
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_IO
    formats = [f.strip() for f in args.formats.split(",") if f.strip()]
    rep, dot, off = analyse(i, m)
    stem = f"K{i}_{m.a}_{m.b}_{m.d}"
    texts = {"dot": dot, "off": off, "json": report_json([rep]), "tiling": dumps(t)}
    out = Path(args.out)
    try:
        for f in formats:
            if f not in texts:
                print(f"unknown format {f!r}", file=sys.stderr)
                return EXIT_IO
            _write(out / f"{stem}.{f}", texts[f])
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(json.dumps({"files": [str(out / f"{stem}.{f}") for f in formats]}))
    return EXIT_OK


def cmd_km(args: argparse.Namespace) -> int:
    try:
        patch = build_Km(args.m, args.radius)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    census = patch.interior_types()
    print(f"K_{args.m} patch radius {args.radius}: {len(patch.vertices)} vertices, {len(patch.faces)} faces")
    for vt, n in census.items():
        print(f"  {str(vt):<14} {n}")
    print(f"interior types: {len(census)}")
    print(f"column run: {patch.column_run()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twouniform", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="list the 20 tilings")
    c.add_argument("--dump", type=int, metavar="I", help="print the exact text form of K_I")
    c.set_defaults(func=cmd_catalog)

    v = sub.add_parser("verify", help="sweep sublattices and check the orbit bounds")
    v.add_argument("--tilings", default="1..20")
    v.add_argument("--max-index", type=int, default=6)
    v.add_argument("--out", default="reports")
    v.add_argument("--json", action="store_true")
    v.add_argument("--csv", action="store_true")
    v.add_argument("--dot", action="store_true")
    v.add_argument("--off", action="store_true")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="write one quotient as DOT/OFF/JSON")
    e.add_argument("--tiling", required=True)
    e.add_argument("--lattice", required=True, help="HNF entries a,b,d")
    e.add_argument("--formats", default="dot,off,json")
    e.add_argument("--out", default=".")
    e.set_defaults(func=cmd_export)

    k = sub.add_parser("km", help="vertex-type census of a K_m patch")
    k.add_argument("--m", type=int, required=True)
    k.add_argument("--radius", type=int, required=True)
    k.set_defaults(func=cmd_km)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
