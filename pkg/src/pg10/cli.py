"""Command-line front end: reproducible batch runs with exact machine-readable reports.

Exit codes: 0 verified / success, 1 verification failure, 2 bad input,
corrupt checkpoint or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import __version__, canonical, gf2, incidence, search, tables, weightenum

OK = 0
VERIFICATION_FAILED = 1
BAD_INPUT = 2


@dataclass(frozen=True)
class RunConfig:
    command: str
    workers: int = 1
    output_path: str | None = None
    checkpoint_path: str | None = None
    trace_path: str | None = None
    strict_b_consistency: bool = False
    anchor_order: tuple[int, ...] = search.DEFAULT_ANCHOR_ORDER
    plane: str = "fano"
    anchor: int = 1
    input_path: str | None = None
    code_size: int | None = None

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        order = self.anchor_order
        if len(set(order)) != len(order) or any(a not in canonical.A_POINTS for a in order):
            raise ValueError("anchor order must be distinct word points")
        if order and order[0] != 1:
            raise ValueError("anchor order must begin with point 1")


def _write(config: RunConfig, text: str) -> None:
    if config.output_path:
        Path(config.output_path).write_text(text)
    else:
        sys.stdout.write(text)


def _load_plane(source: str) -> incidence.IncidenceStructure:
    if source == "fano":
        return incidence.fano_plane()
    if source.startswith("prime:"):
        return incidence.construct_plane_prime(int(source.split(":", 1)[1]))
    return incidence.from_text(Path(source).read_text())


def cmd_verify_plane(config: RunConfig) -> int:
    plane = _load_plane(config.plane)
    report = incidence.validate_projective_plane(plane)
    lines = [f"order {report.order}"]
    lines += [f"{name} violations: {count}" for name, count in report.counts().items()]
    lines.append("valid" if report.ok else "INVALID")
    _write(config, "\n".join(lines) + "\n")
    return OK if report.ok else VERIFICATION_FAILED


def cmd_enumerate_code(config: RunConfig) -> int:
    plane = _load_plane(config.plane)
    code = gf2.plane_code(plane)
    words = gf2.enumerate_codewords(code)
    _write(config, gf2.serialize_codewords(code, words))
    return OK


def cmd_weight_table(config: RunConfig) -> int:
    system = weightenum.build_pg10_system()
    enum = weightenum.solve_weight_distribution(system, weightenum.STANDARD_PINS)
    _write(config, weightenum.weight_table_csv(enum))
    expected = tables.expected_weight_table()
    for i in range(enum.length + 1):
        if enum[i] != expected[i]:
            print(
                f"mismatch at weight {i}: solved {enum[i]}, published {expected[i]}",
                file=sys.stderr,
            )
            return VERIFICATION_FAILED
    return OK


def cmd_macwilliams(config: RunConfig) -> int:
    if not config.input_path:
        print("macwilliams requires --input CSV", file=sys.stderr)
        return BAD_INPUT
    enum = weightenum.parse_weight_table_csv(Path(config.input_path).read_text())
    size = config.code_size if config.code_size is not None else enum.total()
    try:
        out = weightenum.macwilliams_transform(enum, size)
    except (weightenum.NonIntegralResult, ValueError) as exc:
        print(f"transform failed: {exc}", file=sys.stderr)
        return VERIFICATION_FAILED
    _write(config, weightenum.weight_table_csv(out))
    return OK


def cmd_verify_tables(config: RunConfig) -> int:
    diffs = canonical.verify_tau_tables()
    lines = [f"cells checked: {5 * 75}", f"diffs: {len(diffs)}"]
    lines += [
        f"generator {d.generator} point {d.point}: derived {d.derived}, published {d.published}"
        for d in diffs
    ]
    _write(config, "\n".join(lines) + "\n")
    return OK if not diffs else VERIFICATION_FAILED


def cmd_six_sets(config: RunConfig) -> int:
    sets = search.generate_six_sets(config.anchor)
    _write(config, "\n".join(" ".join(str(p) for p in s) for s in sets) + "\n")
    return OK


def cmd_orbits(config: RunConfig) -> int:
    s = canonical.build_canonical_structure()
    first = search.generate_six_sets(1, s)
    bundles = search.enumerate_k6(first, anchor=1)
    orbits = search.orbit_partition(bundles, canonical.group_G1(s))
    lines = ["orbit,size,representative"]
    for i, orbit in enumerate(orbits):
        rep = "|".join(" ".join(str(p) for p in m) for m in orbit.representative.members)
        lines.append(f"{i},{orbit.size},{rep}")
    _write(config, "\n".join(lines) + "\n")
    return OK


def _read_checkpoint(path: Path, stages: int) -> dict[int, search.RepResult]:
    known: dict[int, search.RepResult] = {}
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        if not line.strip():
            continue
        try:
            row = json.loads(line)
            rep = row["rep"]
            counts = tuple(row["counts"])
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ValueError(f"checkpoint line {lineno} is corrupt: {exc}") from exc
        if not isinstance(rep, int) or rep < 0:
            raise ValueError(f"checkpoint line {lineno}: bad representative index {rep!r}")
        if len(counts) != stages or not all(isinstance(c, int) and c >= 0 for c in counts):
            raise ValueError(f"checkpoint line {lineno}: bad stage counts {counts!r}")
        if rep in known and known[rep].counts != counts:
            raise ValueError(f"checkpoint line {lineno}: conflicting entries for rep {rep}")
        known[rep] = search.RepResult(rep, counts)
    return known


def _stage_labels(stages: int) -> list[str]:
    if stages == len(search.STAGE_LABELS):
        return list(search.STAGE_LABELS)
    return [f"depth{k + 2}" for k in range(stages)]


def cmd_search_a15(config: RunConfig) -> int:
    stages = len(config.anchor_order) - 1
    known: dict[int, search.RepResult] = {}
    ckpt_path = Path(config.checkpoint_path) if config.checkpoint_path else None
    if ckpt_path and ckpt_path.exists():
        try:
            known = _read_checkpoint(ckpt_path, stages)
        except ValueError as exc:
            print(f"checkpoint error: {exc}", file=sys.stderr)
            return BAD_INPUT

    ckpt_file = ckpt_path.open("a") if ckpt_path else None

    def on_result(res: search.RepResult) -> None:
        if ckpt_file:
            ckpt_file.write(json.dumps({"rep": res.rep_index, "counts": list(res.counts)}) + "\n")
            ckpt_file.flush()

    start = time.monotonic()
    try:
        report = search.full_search(
            workers=config.workers,
            strict_b_consistency=config.strict_b_consistency,
            anchor_order=config.anchor_order,
            known_results=known,
            on_result=on_result,
        )
    except ValueError as exc:
        print(f"search error: {exc}", file=sys.stderr)
        return BAD_INPUT
    finally:
        if ckpt_file:
            ckpt_file.close()
    elapsed_ms = round((time.monotonic() - start) * 1000)

    outcome = report.outcome
    labels = _stage_labels(stages)
    per_stage = dict(zip(labels, outcome.stage_totals()))
    per_stage["distinct_U"] = outcome.distinct_u
    doc = {
        "version": __version__,
        "config": {
            "command": "search-a15",
            "strict_b_consistency": config.strict_b_consistency,
            "anchor_order": list(config.anchor_order),
        },
        "six_set_count": report.six_set_count,
        "k6_count": report.k6_count,
        "orbit_count": report.orbit_count,
        "per_stage_counts": per_stage,
        "a15_verified": outcome.a15_verified,
        "wall_time": f"{elapsed_ms // 1000}.{elapsed_ms % 1000:03d}",
    }
    _write(config, json.dumps(doc, indent=2, sort_keys=True) + "\n")

    if config.trace_path:
        rows = ["rep_index,orbit_size," + ",".join(labels)]
        for rep in outcome.per_rep:
            counts = ",".join(str(c) for c in rep.counts)
            rows.append(f"{rep.rep_index},{report.orbit_sizes[rep.rep_index]},{counts}")
        Path(config.trace_path).write_text("\n".join(rows) + "\n")

    verified = (
        report.six_set_count == 344
        and report.k6_count == 42496
        and report.orbit_count == 1021
        and outcome.a15_verified
    )
    return OK if verified else VERIFICATION_FAILED


_HANDLERS = {
    "verify-plane": cmd_verify_plane,
    "enumerate-code": cmd_enumerate_code,
    "weight-table": cmd_weight_table,
    "macwilliams": cmd_macwilliams,
    "verify-tables": cmd_verify_tables,
    "search-a15": cmd_search_a15,
    "six-sets": cmd_six_sets,
    "orbits": cmd_orbits,
}


def _parse_anchor_order(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.replace(",", " ").split())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pg10",
        description="Exact verification of the order-10 plane's code machinery",
    )
    parser.add_argument("--version", action="version", version=f"pg10 {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-o", "--output", default=None, help="write output here instead of stdout")
        return p

    p = add("verify-plane", "validate a projective plane structure")
    p.add_argument("--plane", default="fano", help="fano, prime:P, or a serialized plane file")

    p = add("enumerate-code", "list all codewords of a plane's GF(2) code")
    p.add_argument("--plane", default="fano", help="fano, prime:P, or a serialized plane file")

    add("weight-table", "solve and emit the order-10 weight distribution as CSV")

    p = add("macwilliams", "transform a weight-distribution CSV to its dual")
    p.add_argument("--input", required=True, help="CSV of i,A_i rows")
    p.add_argument("--code-size", type=int, default=None, help="|C|; defaults to the coefficient total")

    add("verify-tables", "diff derived group-action tables against the published ones")

    p = add("search-a15", "run the full weight-15 exclusion search")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--checkpoint", default=None, help="JSON-lines checkpoint, resumed if present")
    p.add_argument("--trace", default=None, help="write a per-representative CSV trace here")
    p.add_argument("--strict-b-consistency", action="store_true",
                   help="also require balanced heavy-line intersections across each new bundle")
    p.add_argument("--anchor-order", default="1,10,15,11,14",
                   help="comma-separated extension anchors, starting at 1")

    p = add("six-sets", "emit all six-sets for one anchor point")
    p.add_argument("--anchor", type=int, default=1)

    add("orbits", "emit the orbit partition of the K6 bundles through point 1")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    kwargs = {
        "command": args.command,
        "output_path": getattr(args, "output", None),
    }
    if args.command in ("verify-plane", "enumerate-code"):
        kwargs["plane"] = args.plane
    if args.command == "macwilliams":
        kwargs["input_path"] = args.input
        kwargs["code_size"] = args.code_size
    if args.command == "six-sets":
        kwargs["anchor"] = args.anchor
    if args.command == "search-a15":
        kwargs["workers"] = args.workers
        kwargs["checkpoint_path"] = args.checkpoint
        kwargs["trace_path"] = args.trace
        kwargs["strict_b_consistency"] = args.strict_b_consistency
        kwargs["anchor_order"] = _parse_anchor_order(args.anchor_order)
    return RunConfig(**kwargs)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
    except ValueError as exc:
        print(f"bad configuration: {exc}", file=sys.stderr)
        return BAD_INPUT
    try:
        return _HANDLERS[config.command](config)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
