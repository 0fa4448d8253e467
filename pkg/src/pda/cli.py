"""Command-line front end: parse -> disks -> words -> algebra -> invariants.

Exit codes: 0 success, 1 parse/usage error, 2 invariant violation.
Identical inputs and flags produce byte-identical output.
"""

from __future__ import annotations

import itertools
import json
import sys
from dataclasses import dataclass
from typing import Optional

import click

from .algebra import FreeMfDGA
from .build import assemble_pda
from .diagram import DiagramError, LagrangianDiagram
from .disks import DiskLimits, enumerate_disks
from .invariants import (
    augmentation_tree,
    augmentations,
    bilinearized_complex,
    poincare_polynomial,
    polynomial_str,
    spectral_polynomial,
    spectral_sequence,
    torsion_report,
)
from .moves import MoveError, MoveSpec, double_point_phi, verify_triple_point
from .words import generate_words

SCHEMA_VERSION = 1

EXIT_PARSE = 1
EXIT_INVARIANT = 2


@dataclass
class Loaded:
    dga: FreeMfDGA
    diagram: Optional[LagrangianDiagram] = None
    disk_set: object = None


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load(path: str, ring: Optional[str], max_multiplicity: int) -> Loaded:
    """Read a diagram or presentation JSON file and build its algebra."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        _fail(EXIT_PARSE, f"cannot read {path}: {exc}")
    try:
        if "components" in data:
            if ring is not None:
                data.setdefault("options", {})["grading"] = ring
            d = LagrangianDiagram.from_json(data)
            limits = DiskLimits(max_face_multiplicity=max_multiplicity)
            disk_set = enumerate_disks(d, limits)
            if disk_set.truncated:
                click.echo(
                    "warning: disk search truncated; results are incomplete "
                    "(try a smaller --max-multiplicity)",
                    err=True,
                )
            return Loaded(assemble_pda(d, limits, disk_set=disk_set), d, disk_set)
        if "generators" in data:
            dga = FreeMfDGA.from_json(data)
            if ring is not None:
                dga.grading = ring
            return Loaded(dga)
    except (DiagramError, ValueError, KeyError) as exc:
        _fail(EXIT_PARSE, f"{path}: {exc}")
    _fail(EXIT_PARSE, f"{path}: neither a diagram nor a presentation file")


def _emit(report: dict, fmt: str, table_lines) -> None:
    if fmt == "json":
        report = {"schema_version": SCHEMA_VERSION, **report}
        click.echo(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in table_lines:
            click.echo(line)


def _check(dga: FreeMfDGA) -> list:
    return dga.check_square_zero() + dga.check_degree()


ring_option = click.option(
    "--ring", type=click.Choice(["z", "z2", "z2r"]), default=None,
    help="Override the grading ring declared by the input.")
mult_option = click.option(
    "--max-multiplicity", type=int, default=4, show_default=True,
    help="Face multiplicity limit for disk enumeration.")
fmt_option = click.option(
    "--format", "fmt", type=click.Choice(["table", "json"]),
    default="table", show_default=True)
level_option = click.option(
    "--level", type=int, default=None,
    help="Filtration level (defaults to the top level).")


@click.group()
def main() -> None:
    """Filtered DGA invariants of partitioned Legendrian links."""


@main.command()
@click.argument("path")
@ring_option
@mult_option
@fmt_option
def compute(path, ring, max_multiplicity, fmt):
    """Generators, differential table, and consistency checks."""
    loaded = _load(path, ring, max_multiplicity)
    dga = loaded.dga
    errors = _check(dga)
    gens = sorted(dga.generators, key=lambda g: (g.level, g.symbol))
    report = {
        "name": dga.name,
        "grading": dga.grading,
        "generators": [
            {"symbol": g.symbol, "degree": g.degree, "level": g.level}
            for g in gens
        ],
        "differentials": {
            g.symbol: dga.render(dga.differentials.get(g.symbol, dga.zero()))
            for g in gens
        },
        "incomplete": dga.incomplete,
        "errors": errors,
    }
    lines = [f"generators: {len(gens)}  grading: {dga.grading}"]
    for g in gens:
        rhs = dga.render(dga.differentials.get(g.symbol, dga.zero()))
        lines.append(f"  {g.symbol}  deg {g.degree}  level {g.level}  d = {rhs}")
    lines.append("checks: " + ("ok" if not errors else "; ".join(errors)))
    _emit(report, fmt, lines)
    if errors:
        sys.exit(EXIT_INVARIANT)


@main.command()
@click.argument("path")
@ring_option
@mult_option
@fmt_option
@click.option("--torsion-bound", type=int, default=3, show_default=True,
              help="Word-length bound for vanishing witnesses.")
def invariants(path, ring, max_multiplicity, fmt, torsion_bound):
    """Torsion, per-level augmentation counts, tree, and polynomials."""
    loaded = _load(path, ring, max_multiplicity)
    dga = loaded.dga
    errors = _check(dga)
    if errors:
        _fail(EXIT_INVARIANT, "; ".join(errors))
    torsion = torsion_report(dga, bound=torsion_bound)
    tree = augmentation_tree(dga)
    augs_per_level = {
        lvl: [sorted(a.key()) for a in augmentations(dga, lvl)]
        for lvl in range(1, dga.max_level + 1)
    }
    top = dga.max_level
    top_augs = augmentations(dga, top)
    polys = {}
    for i, el in enumerate(top_augs):
        for j, er in enumerate(top_augs):
            cx = bilinearized_complex(dga, el, er, top)
            polys[f"{i},{j}"] = polynomial_str(poincare_polynomial(cx), ["t"])
    spec_polys = {}
    for i, el in enumerate(top_augs):
        for j, er in enumerate(top_augs):
            cx = bilinearized_complex(dga, el, er, top)
            pages = spectral_sequence(cx)
            spec_polys[f"{i},{j}"] = polynomial_str(
                spectral_polynomial(pages), ["t", "x", "y"]
            )
    report = {
        "name": dga.name,
        "torsion": {
            "tau_aug": torsion["tau_aug"],
            "vanishing_level": torsion["vanishing_level"],
            "levels": {str(k): v for k, v in torsion["levels"].items()},
        },
        "augmentations": {str(k): v for k, v in augs_per_level.items()},
        "tree": tree.to_json(),
        "poincare": polys,
        "spectral": spec_polys,
    }
    lines = [
        f"tau_aug: {torsion['tau_aug']}",
        f"vanishing level: {torsion['vanishing_level']}",
    ]
    for lvl in sorted(augs_per_level):
        lines.append(f"level {lvl}: {len(augs_per_level[lvl])} augmentation(s)")
    lines.append(f"tree: {len(tree.vertices)} vertices, {len(tree.edges)} edges")
    for key in sorted(polys):
        lines.append(f"P[{key}] = {polys[key]}")
    for key in sorted(spec_polys):
        lines.append(f"Pspec[{key}] = {spec_polys[key]}")
    _emit(report, fmt, lines)


@main.command()
@click.argument("path")
@ring_option
@mult_option
@fmt_option
@level_option
def augs(path, ring, max_multiplicity, fmt, level):
    """Augmentations of one filtration level."""
    loaded = _load(path, ring, max_multiplicity)
    dga = loaded.dga
    lvl = level if level is not None else dga.max_level
    found = augmentations(dga, lvl)
    report = {
        "name": dga.name,
        "level": lvl,
        "augmentations": [sorted(a.key()) for a in found],
    }
    lines = [f"level {lvl}: {len(found)} augmentation(s)"]
    for a in found:
        ones = ", ".join(sorted(a.key())) or "(all zero)"
        lines.append(f"  1 on: {ones}")
    _emit(report, fmt, lines)


@main.command()
@click.argument("path")
@ring_option
@mult_option
@fmt_option
def tree(path, ring, max_multiplicity, fmt):
    """Augmentation tree: homotopy classes per level linked by restriction."""
    loaded = _load(path, ring, max_multiplicity)
    t = augmentation_tree(loaded.dga)
    report = {"name": loaded.dga.name, "tree": t.to_json()}
    lines = [f"{len(t.vertices)} vertices, {len(t.edges)} edges"]
    for lvl, cid in t.vertices:
        size = len(t.members[(lvl, cid)])
        lines.append(f"  level {lvl} class {cid}: {size} augmentation(s)")
    for child, parent in t.edges:
        lines.append(f"  {list(child)} -> {list(parent)}")
    _emit(report, fmt, lines)


@main.command()
@click.argument("path")
@ring_option
@mult_option
@fmt_option
@level_option
def poincare(path, ring, max_multiplicity, fmt, level):
    """Bilinearized Poincare polynomials for every augmentation pair."""
    loaded = _load(path, ring, max_multiplicity)
    dga = loaded.dga
    lvl = level if level is not None else dga.max_level
    found = augmentations(dga, lvl)
    polys = {}
    for (i, el), (j, er) in itertools.product(enumerate(found), repeat=2):
        cx = bilinearized_complex(dga, el, er, lvl)
        polys[f"{i},{j}"] = polynomial_str(poincare_polynomial(cx), ["t"])
    report = {"name": dga.name, "level": lvl, "poincare": polys}
    lines = [f"level {lvl}: {len(found)} augmentation(s)"]
    for key in sorted(polys):
        lines.append(f"  P[{key}] = {polys[key]}")
    _emit(report, fmt, lines)


@main.command("list-generators")
@click.argument("path")
@ring_option
@mult_option
@fmt_option
def list_generators(path, ring, max_multiplicity, fmt):
    """Table of generators: word, length, grading, pieces."""
    loaded = _load(path, ring, max_multiplicity)
    rows = []
    if loaded.diagram is not None:
        for w in generate_words(loaded.diagram):
            rows.append({
                "symbol": w.symbol,
                "word": list(w.chords),
                "length": w.length,
                "grading": w.grading,
                "pieces": list(w.pieces),
            })
    else:
        for g in loaded.dga.generators:
            rows.append({
                "symbol": g.symbol,
                "word": list(g.word) if g.word else [g.symbol],
                "length": g.level,
                "grading": g.degree,
                "pieces": [],
            })
    rows.sort(key=lambda r: (r["length"], r["symbol"]))
    report = {"generators": rows}
    lines = [
        f"{r['symbol']}  length {r['length']}  grading {r['grading']}"
        + (f"  pieces {r['pieces']}" if r["pieces"] else "")
        for r in rows
    ]
    _emit(report, fmt, lines)


@main.command("dump-disks")
@click.argument("path")
@mult_option
@fmt_option
def dump_disks(path, max_multiplicity, fmt):
    """One line per enumerated disk: boundary corners and exponent vector."""
    loaded = _load(path, None, max_multiplicity)
    if loaded.diagram is None:
        _fail(EXIT_PARSE, "dump-disks needs a diagram input")
    disks = sorted(
        loaded.disk_set.disks, key=lambda k: (len(k.corners), k.corners)
    )
    rows = []
    for disk in disks:
        boundary = " ".join(
            f"{c}{'+' if s == 1 else '-'}" for c, s in disk.corners
        )
        rows.append({
            "boundary": boundary,
            "t_exponents": list(disk.t_exponents),
        })
    report = {
        "disks": rows,
        "truncated": loaded.disk_set.truncated,
    }
    lines = [f"{r['boundary']}  T^{r['t_exponents']}" for r in rows]
    lines.append(f"total: {len(rows)}  truncated: {loaded.disk_set.truncated}")
    _emit(report, fmt, lines)


@main.command("verify-move")
@click.argument("minus_path")
@click.argument("plus_path")
@click.argument("spec_path")
@mult_option
@fmt_option
def verify_move(minus_path, plus_path, spec_path, max_multiplicity, fmt):
    """Check a diagram-move pair: triple-point chain map or stabilized map."""
    try:
        spec = MoveSpec.load(spec_path)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        _fail(EXIT_PARSE, f"cannot read move spec {spec_path}: {exc}")
    minus = _load(minus_path, None, max_multiplicity)
    plus = _load(plus_path, None, max_multiplicity)
    try:
        if spec.move_type in ("I", "II"):
            if minus.diagram is None:
                _fail(EXIT_PARSE, "triple-point verification needs diagrams")
            report = verify_triple_point(minus.dga, plus.dga, minus.diagram, spec)
        elif spec.move_type == "double":
            report, _, _ = double_point_phi(minus.dga, plus.dga, spec)
        else:
            _fail(EXIT_PARSE, f"unknown move type {spec.move_type!r}")
    except MoveError as exc:
        _fail(EXIT_PARSE, str(exc))
    out = {
        "move_type": spec.move_type,
        "ok": report.ok,
        "stages": report.stages,
        "errors": report.errors,
        "phi": dict(sorted(report.phi.items())),
    }
    lines = [f"move type {spec.move_type}: {'PASS' if report.ok else 'FAIL'}"]
    lines += [f"  {s}" for s in report.stages]
    lines += [f"  error: {e}" for e in report.errors]
    lines += [f"  Phi {s} = {img}" for s, img in sorted(report.phi.items())]
    _emit(out, fmt, lines)
    if not report.ok:
        sys.exit(EXIT_INVARIANT)


if __name__ == "__main__":
    main()
