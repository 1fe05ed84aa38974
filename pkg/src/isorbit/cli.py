"""Batch front end: read generator and domain files, write the orbit partition.

Generator file (JSON, UTF-8, plain decimal integers, no floats):

    {"n": 2, "generators": [
        {"type": "translation", "v": [1, 1]},
        {"type": "negation", "signs": [-1, -1]},
        {"type": "permutation", "perm": [1, 0]}]}

Domain file (JSON), either explicit points or an axis-aligned box:

    {"points": [[0, 0], [1, 0]]}
    {"box": {"min": [0, 0], "max": [1, 1]}}

A box can also be given inline as --box "0..1,0..1" (one lo..hi range per
axis). Output is JSON (partition plus stage-1 diagnostics) or TSV (one
"point TAB label" line per point, coordinates comma-separated), identical
byte for byte across reruns and thread counts.

Exit status: 0 on success, 1 on any error (a machine-readable JSON error
object is printed on stderr), 2 on bad command lines (argparse), 3 when
--oracle-check found a disagreement.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import (
    BoxTooLargeError,
    DimensionMismatchError,
    InputError,
    InvalidDomainError,
    InvalidRotationError,
    IsorbitError,
    NotAtomicError,
    StageCacheMismatchError,
)
from .gf2 import Gf2Basis
from .isometry import GeneratingSet, Isometry, Point, SignedPermutation, validate_atomic
from .labeling import DEFAULT_CLOSURE_CAP, OrbitLabeling
from .lattice import LatticeBasis
from .oracle import DEFAULT_BOX_CAP, stabilized_bfs_orbits
from .permgroup import DEFAULT_MAX_DIMENSION, PermGroup
from .pipeline import Stage1, compute_labeling, run_stage1
from .quotient import build_pseudoinverse

DEFAULT_MAX_PADDING = 6


@dataclass
class RunConfig:
    """Everything one batch invocation needs; mirrors the CLI flags."""

    gens_path: str
    domain_path: str | None = None
    box: str | None = None
    mode: str = "group"
    threads: int = 1
    output_path: str | None = None
    format: str = "json"
    oracle_check: bool = False
    max_padding: int = DEFAULT_MAX_PADDING
    stage1_cache: str | None = None
    max_dimension: int = DEFAULT_MAX_DIMENSION
    closure_cap: int = DEFAULT_CLOSURE_CAP
    box_cap: int = DEFAULT_BOX_CAP


def _int_vector(value, where: str, name: str) -> list[int]:
    if not isinstance(value, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise InputError(f"{where}: {name} must be a list of integers")
    return value


def parse_generators(text: str) -> GeneratingSet:
    """Parse and validate a generator document into a GeneratingSet."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(
            f"generator file: {e.msg} at line {e.lineno} column {e.colno}") from e
    if not isinstance(doc, dict) or "n" not in doc or "generators" not in doc:
        raise InputError('generator file must be {"n": ..., "generators": [...]}')
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    entries = doc["generators"]
    if not isinstance(entries, list):
        raise InputError("generators must be a list")
    return validate_atomic(
        [_parse_generator(entry, idx, n) for idx, entry in enumerate(entries)], n)


def _parse_generator(entry, idx: int, n: int) -> Isometry:
    where = f"generator {idx}"
    if not isinstance(entry, dict) or "type" not in entry:
        raise InputError(f"{where}: expected an object with a 'type' field")
    kind = entry["type"]
    try:
        if kind == "translation":
            v = _int_vector(entry.get("v"), where, "v")
            if len(v) != n:
                raise DimensionMismatchError(
                    f"{where}: v has length {len(v)}, expected {n}")
            return Isometry.translation(v)
        if kind == "negation":
            signs = _int_vector(entry.get("signs"), where, "signs")
            if len(signs) != n:
                raise DimensionMismatchError(
                    f"{where}: signs has length {len(signs)}, expected {n}")
            return Isometry.rotation(SignedPermutation.negation(signs))
        if kind == "permutation":
            perm = _int_vector(entry.get("perm"), where, "perm")
            if len(perm) != n:
                raise DimensionMismatchError(
                    f"{where}: perm has length {len(perm)}, expected {n}")
            return Isometry.rotation(SignedPermutation.permutation(perm))
    except InvalidRotationError as e:
        raise InvalidRotationError(f"{where}: {e}") from e
    raise NotAtomicError(
        f"{where}: unknown type {kind!r}; "
        f"must be translation, negation or permutation")


def expand_box(lo: Sequence[int], hi: Sequence[int], box_cap: int) -> list[Point]:
    if len(lo) != len(hi):
        raise InputError(f"box min has length {len(lo)}, max has length {len(hi)}")
    size = 1
    for a, b in zip(lo, hi):
        if a > b:
            raise InvalidDomainError(f"box min {a} exceeds max {b}")
        size *= b - a + 1
        if size > box_cap:
            raise BoxTooLargeError(f"box exceeds the cap of {box_cap} points")
    return [tuple(p) for p in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi)))]


def parse_domain(text: str, box_cap: int = DEFAULT_BOX_CAP) -> list[Point]:
    """Parse a domain document into a deduplicated, sorted point list."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(
            f"domain file: {e.msg} at line {e.lineno} column {e.colno}") from e
    if not isinstance(doc, dict) or ("points" in doc) == ("box" in doc):
        raise InputError('domain file must contain exactly one of "points" or "box"')
    if "points" in doc:
        pts = doc["points"]
        if not isinstance(pts, list):
            raise InputError("points must be a list of integer vectors")
        out = set()
        for idx, p in enumerate(pts):
            out.add(tuple(_int_vector(p, f"point {idx}", "coordinates")))
        return sorted(out)
    box = doc["box"]
    if not isinstance(box, dict) or "min" not in box or "max" not in box:
        raise InputError('box must be {"min": [...], "max": [...]}')
    lo = _int_vector(box["min"], "box", "min")
    hi = _int_vector(box["max"], "box", "max")
    return expand_box(lo, hi, box_cap)


def parse_box_spec(spec: str, box_cap: int = DEFAULT_BOX_CAP) -> list[Point]:
    """Expand an inline box spec like "0..1,-2..3" into its points."""
    lo, hi = [], []
    for axis in spec.split(","):
        parts = axis.split("..")
        if len(parts) != 2:
            raise InputError(f"bad box axis {axis!r}; expected lo..hi")
        try:
            lo.append(int(parts[0]))
            hi.append(int(parts[1]))
        except ValueError as e:
            raise InputError(f"bad box axis {axis!r}: {e}") from e
    return expand_box(lo, hi, box_cap)


def render_json(stage1: Stage1, labeling: OrbitLabeling) -> str:
    classes = [
        {"label": list(label), "members": [list(p) for p in labeling.classes[label]]}
        for label in sorted(labeling.classes)
    ]
    doc = {
        "n": stage1.gens.n,
        "rank_m": stage1.basis.m,
        "basis_rows": [list(r) for r in stage1.basis.hnf_rows],
        "rotation_order": stage1.rotation_order,
        "classes": classes,
    }
    return json.dumps(doc, indent=2) + "\n"


def render_tsv(labeling: OrbitLabeling) -> str:
    lines = [
        ",".join(map(str, x)) + "\t" + ",".join(map(str, labeling.labels[x]))
        for x in sorted(labeling.labels)
    ]
    return "".join(line + "\n" for line in lines)


def _gens_doc(gens: GeneratingSet) -> list[dict]:
    """Canonical JSON encoding of a generating set, for cache fingerprints."""
    doc = []
    for g in gens.translations:
        doc.append({"type": "translation", "v": list(g.v)})
    for g in gens.negations:
        doc.append({"type": "negation", "signs": list(g.r.signs)})
    for g in gens.permutations:
        doc.append({"type": "permutation", "perm": list(g.r.perm)})
    return doc


def _stage1_with_cache(config: RunConfig, gens: GeneratingSet) -> Stage1:
    if not config.stage1_cache:
        return run_stage1(gens, config.mode, config.max_dimension)
    path = Path(config.stage1_cache)
    if path.exists():
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise InputError(f"stage-1 cache: {e.msg} at line {e.lineno}") from e
        if doc.get("generators") != _gens_doc(gens) or doc.get("n") != gens.n:
            raise StageCacheMismatchError(
                f"stage-1 cache {path} was built for a different generating set")
        basis = LatticeBasis(gens.n, tuple(tuple(r) for r in doc["basis_rows"]))
        return Stage1(
            gens,
            Gf2Basis(gens.n, tuple(doc["negation_basis"])),
            PermGroup(gens.n, tuple(tuple(p) for p in doc["perm_elements"])),
            basis,
            build_pseudoinverse(basis),
        )
    stage1 = run_stage1(gens, config.mode, config.max_dimension)
    cache_doc = {
        "n": gens.n,
        "generators": _gens_doc(gens),
        "negation_basis": list(stage1.neg_basis.rows),
        "perm_elements": [list(p) for p in stage1.perm_group.elements],
        "basis_rows": [list(r) for r in stage1.basis.hnf_rows],
    }
    path.write_text(json.dumps(cache_doc, indent=2) + "\n", encoding="utf-8")
    return stage1


def _emit_error(code: str, message: str, **extra) -> None:
    obj = {"error": code, "message": message}
    obj.update(extra)
    print(json.dumps(obj), file=sys.stderr)


def run(config: RunConfig) -> int:
    """Execute one batch run; returns the process exit status."""
    try:
        gens = parse_generators(Path(config.gens_path).read_text(encoding="utf-8"))
        if (config.domain_path is None) == (config.box is None):
            raise InputError("exactly one of a domain file or a box spec is required")
        if config.domain_path is not None:
            points = parse_domain(
                Path(config.domain_path).read_text(encoding="utf-8"), config.box_cap)
        else:
            points = parse_box_spec(config.box, config.box_cap)
        for idx, p in enumerate(points):
            if len(p) != gens.n:
                raise DimensionMismatchError(
                    f"domain point {idx} has dimension {len(p)}, expected {gens.n}")
        stage1 = _stage1_with_cache(config, gens)
        labeling = compute_labeling(
            stage1, points, config.mode, config.threads, config.closure_cap)
        text = render_json(stage1, labeling) if config.format == "json" else render_tsv(labeling)
        if config.output_path:
            Path(config.output_path).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        if config.oracle_check:
            reference, _pad = stabilized_bfs_orbits(
                gens, points, config.max_padding, config.box_cap)
            if reference != labeling.partition():
                _emit_error(
                    "OracleMismatch",
                    "reference partition disagrees with the pipeline",
                    pipeline=_partition_doc(labeling.partition()),
                    reference=_partition_doc(reference),
                )
                return 3
    except IsorbitError as e:
        _emit_error(e.code, str(e))
        return 1
    except OSError as e:
        _emit_error("IOError", str(e))
        return 1
    return 0


def _partition_doc(partition) -> list[list[list[int]]]:
    return sorted([list(p) for p in sorted(cls)] for cls in partition)


def _threads_arg(value: str) -> int:
    if value == "auto":
        return os.cpu_count() or 1
    try:
        threads = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"threads must be a positive integer or 'auto', got {value!r}")
    if threads < 1:
        raise argparse.ArgumentTypeError("threads must be positive")
    return threads


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isorbit",
        description="Compute the orbit partition of a finite set of lattice "
        "points under the subgroup generated by atomic isometries.")
    parser.add_argument("--gens", required=True, metavar="FILE",
                        help="generator file (JSON)")
    domain = parser.add_mutually_exclusive_group(required=True)
    domain.add_argument("--domain", metavar="FILE", help="domain file (JSON)")
    domain.add_argument("--box", metavar="SPEC",
                        help='inline box, one lo..hi per axis, e.g. "0..1,0..1"')
    parser.add_argument("--mode", choices=("group", "generators"), default="group",
                        help="algorithm variant (default: group)")
    parser.add_argument("--threads", type=_threads_arg, default=1, metavar="N",
                        help="worker threads, or 'auto' (default: 1)")
    parser.add_argument("--output", metavar="FILE",
                        help="output path (default: stdout)")
    parser.add_argument("--format", choices=("json", "tsv"), default="json")
    parser.add_argument("--oracle-check", action="store_true",
                        help="cross-check against the padded-box reference")
    parser.add_argument("--max-padding", type=int, default=DEFAULT_MAX_PADDING,
                        metavar="K", help="padding limit for --oracle-check "
                        f"(default: {DEFAULT_MAX_PADDING})")
    parser.add_argument("--stage1-cache", metavar="FILE",
                        help="reuse (or create) a stage-1 cache for this generating set")
    parser.add_argument("--max-dimension", type=int, default=DEFAULT_MAX_DIMENSION,
                        metavar="N", help="permutation-closure dimension cap "
                        f"(default: {DEFAULT_MAX_DIMENSION})")
    parser.add_argument("--closure-cap", type=int, default=DEFAULT_CLOSURE_CAP,
                        metavar="N", help="class-closure size cap in generators mode "
                        f"(default: {DEFAULT_CLOSURE_CAP})")
    parser.add_argument("--box-cap", type=int, default=DEFAULT_BOX_CAP,
                        metavar="N", help="point-count cap for boxes "
                        f"(default: {DEFAULT_BOX_CAP})")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        gens_path=args.gens,
        domain_path=args.domain,
        box=args.box,
        mode=args.mode,
        threads=args.threads,
        output_path=args.output,
        format=args.format,
        oracle_check=args.oracle_check,
        max_padding=args.max_padding,
        stage1_cache=args.stage1_cache,
        max_dimension=args.max_dimension,
        closure_cap=args.closure_cap,
        box_cap=args.box_cap,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
