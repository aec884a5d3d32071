"""Command-line front end.

Subcommands: measure, entropy, rank, additivity pair|decompose, dynamics.
Output is a deterministic text table (default) or a JSON envelope carrying
full-precision values.  Exit codes: 0 = computed (findings such as an
infeasible cardinality are still 0), 1 = input error, 2 = usage error.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from . import analysis, dynamics, ingest
from .errors import InputError
from .model import ObjectSet, WeakOrder, tie_partition


class _UsageError(Exception):
    pass


@dataclass(frozen=True)
class OutputEnvelope:
    """What an invocation emits: the chosen format and precision plus the
    operation's payload."""

    format: str
    precision: int
    command: str
    payload: dict

    def render(self, table_text: str) -> str:
        if self.format == "json":
            return json.dumps(
                {
                    "format": self.format,
                    "precision": self.precision,
                    "command": self.command,
                    "payload": self.payload,
                },
                indent=2,
            )
        return table_text


def _fmt(value: float, precision: int) -> str:
    text = f"{value:.{precision}f}"
    if text.startswith("-") and float(text) == 0.0:
        text = text[1:]
    return text


def _table(headers, rows, align):
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = []
    for cells in [headers, *rows]:
        parts = [
            cell.ljust(w) if a == "l" else cell.rjust(w)
            for cell, w, a in zip(cells, widths, align)
        ]
        lines.append("  ".join(parts).rstrip())
    return "\n".join(lines)


def _kv_block(pairs, indent=""):
    width = max(len(key) for key, _ in pairs)
    return "\n".join(f"{indent}{key.ljust(width)}  {value}" for key, value in pairs)


def _envelope(args, command, payload):
    return OutputEnvelope(
        format=args.format, precision=args.precision, command=command, payload=payload
    )


def _load_sources(args):
    if args.rankings:
        records = ingest.load_rankings(args.rankings)
    else:
        table = ingest.load_measurement_table(args.partitions)
        records = [
            (rater, ingest.group_measurements(table, rater, args.tolerance))
            for rater in table.raters
        ]
    if args.rater is not None:
        matches = [(r, s) for r, s in records if r == args.rater]
        if not matches:
            known = ", ".join(r for r, _ in records)
            raise InputError(f"unknown rater {args.rater!r}; available: {known}")
        records = matches
    return records


def _metrics_payload(rater, m):
    return {
        "rater": rater,
        "source_kind": m.source_kind,
        "n": m.n,
        "cardinality": m.cardinality,
        "knowledge": m.knowledge,
        "ignorance": m.ignorance,
        "entropy": m.entropy,
        "complement_residual": m.complement_residual,
        "entropy_residual": m.entropy_residual,
    }


def _cmd_measure(args):
    records = [analysis.rater_record(r, s) for r, s in _load_sources(args)]
    p = args.precision
    rows = [
        [
            rec.rater_id,
            rec.metrics.source_kind,
            str(rec.metrics.n),
            str(rec.metrics.cardinality),
            _fmt(rec.metrics.knowledge, p),
            _fmt(rec.metrics.ignorance, p),
            _fmt(rec.metrics.entropy, p),
        ]
        for rec in records
    ]
    text = _table(
        ["rater", "source", "n", "cardinality", "knowledge", "ignorance", "entropy"],
        rows,
        "llrrrrr",
    )
    payload = {"raters": [_metrics_payload(r.rater_id, r.metrics) for r in records]}
    return _envelope(args, "measure", payload).render(text)


def _cmd_entropy(args):
    records = [analysis.rater_record(r, s) for r, s in _load_sources(args)]
    p = args.precision
    rows = [
        [
            rec.rater_id,
            rec.metrics.source_kind,
            str(rec.metrics.n),
            str(rec.metrics.cardinality),
            _fmt(rec.metrics.entropy, p),
        ]
        for rec in records
    ]
    lowest = min(records, key=lambda rec: (rec.metrics.entropy, rec.rater_id))
    text = _table(
        ["rater", "source", "n", "cardinality", "entropy"], rows, "llrrr"
    )
    text += (
        f"\n\nlowest entropy: {lowest.rater_id}"
        f" ({_fmt(lowest.metrics.entropy, p)})"
    )
    payload = {
        "raters": [
            {
                "rater": rec.rater_id,
                "source_kind": rec.metrics.source_kind,
                "n": rec.metrics.n,
                "cardinality": rec.metrics.cardinality,
                "entropy": rec.metrics.entropy,
            }
            for rec in records
        ],
        "lowest_entropy": {
            "rater": lowest.rater_id,
            "entropy": lowest.metrics.entropy,
        },
    }
    return _envelope(args, "entropy", payload).render(text)


def _cmd_rank(args):
    records = [analysis.rater_record(r, s) for r, s in _load_sources(args)]
    ranked = analysis.rank_raters(records)
    p = args.precision
    rows = [
        [
            str(i),
            rec.rater_id,
            str(rec.metrics.cardinality),
            _fmt(rec.metrics.knowledge, p),
            _fmt(rec.metrics.entropy, p),
        ]
        for i, rec in enumerate(ranked, 1)
    ]
    text = _table(["rank", "rater", "cardinality", "knowledge", "entropy"], rows, "rlrrr")
    payload = {
        "ranking": [
            dict(rank=i, **_metrics_payload(rec.rater_id, rec.metrics))
            for i, rec in enumerate(ranked, 1)
        ]
    }
    return _envelope(args, "rank", payload).render(text)


def _cmd_additivity_pair(args):
    if len(args.k) != 2:
        raise _UsageError("give --k exactly twice")
    report = analysis.pairwise_additivity_check(args.k[0], args.k[1], args.n)
    p = args.precision
    pairs = [
        ("objects", str(report.n)),
        ("knowledge values", ", ".join(_fmt(k, p) for k in report.k_values)),
        ("knowledge sum", _fmt(report.k_sum, p)),
        ("implied cardinality", _fmt(report.implied_cardinality, p)),
        ("feasible range", f"[{report.n}, {report.n * report.n}]"),
        ("verdict", "FEASIBLE" if report.feasible else "INFEASIBLE"),
    ]
    payload = {
        "n": report.n,
        "k_values": list(report.k_values),
        "k_sum": report.k_sum,
        "implied_cardinality": report.implied_cardinality,
        "feasible": report.feasible,
    }
    return _envelope(args, "additivity pair", payload).render(_kv_block(pairs))


def _single_partition(args):
    records = _load_sources(args)
    if len(records) != 1:
        known = ", ".join(r for r, _ in records)
        raise InputError(
            f"decompose needs exactly one rater; pick one with --rater "
            f"(available: {known})"
        )
    rater, source = records[0]
    if isinstance(source, WeakOrder):
        source = tie_partition(source)
    return rater, source


def _cmd_additivity_decompose(args):
    if len(args.block) < 2:
        raise _UsageError("give --block at least twice")
    rater, partition = _single_partition(args)
    blocks = []
    for raw in args.block:
        members = tuple(token.strip() for token in raw.split(",") if token.strip())
        blocks.append(ObjectSet(members))
    report = analysis.decomposition_check(partition, blocks)
    contrast = analysis.additivity_contrast_report(partition, blocks)
    p = args.precision
    labels = [",".join(block.members) for block in blocks]

    knowledge_pairs = [
        ("rater", rater),
        ("objects", str(report.n)),
        ("whole knowledge", _fmt(report.k_whole, p)),
    ]
    knowledge_pairs += [
        (f"knowledge of {label}", _fmt(k, p))
        for label, k in zip(labels, report.k_values)
    ]
    knowledge_pairs += [
        ("block sum", _fmt(report.k_sum, p)),
        ("gap (sum - whole)", _fmt(report.gap, p)),
        ("implied cardinality", _fmt(report.implied_cardinality, p)),
        ("feasible range", f"[{report.n}, {report.n * report.n}]"),
        ("verdict", "FEASIBLE" if report.feasible else "INFEASIBLE"),
    ]

    entropy_pairs = [("whole", _fmt(contrast.knowledge_entropy_whole, p))]
    entropy_pairs += [
        (f"entropy of {label}", _fmt(s, p))
        for label, s in zip(labels, contrast.knowledge_entropy_blocks)
    ]
    entropy_pairs += [
        ("block sum", _fmt(contrast.knowledge_entropy_block_sum, p)),
        ("gap (sum - whole)", _fmt(contrast.knowledge_entropy_gap, p)),
        ("additive over blocks", "no" if contrast.knowledge_entropy_gap_nonzero else "yes"),
    ]

    shannon_pairs = [
        ("whole", _fmt(contrast.shannon_whole, p)),
        ("between blocks", _fmt(contrast.shannon_between_blocks, p)),
    ]
    shannon_pairs += [
        (f"within {label}", _fmt(h, p))
        for label, h in zip(labels, contrast.shannon_within_blocks)
    ]
    shannon_pairs += [
        ("between + weighted within", _fmt(contrast.shannon_weighted_blocks, p)),
        ("gap (whole - recombined)", _fmt(contrast.shannon_gap, p)),
        ("blocks align with classes", "yes" if contrast.blocks_align_with_classes else "no"),
    ]

    text = "\n".join(
        [
            "knowledge decomposition",
            _kv_block(knowledge_pairs, indent="  "),
            "",
            "knowledge entropy",
            _kv_block(entropy_pairs, indent="  "),
            "",
            "shannon entropy of class sizes",
            _kv_block(shannon_pairs, indent="  "),
        ]
    )
    payload = {
        "rater": rater,
        "blocks": [list(block.members) for block in blocks],
        "decomposition": {
            "n": report.n,
            "k_values": list(report.k_values),
            "k_sum": report.k_sum,
            "k_whole": report.k_whole,
            "gap": report.gap,
            "implied_cardinality": report.implied_cardinality,
            "feasible": report.feasible,
        },
        "contrast": {
            "knowledge_entropy_whole": contrast.knowledge_entropy_whole,
            "knowledge_entropy_blocks": list(contrast.knowledge_entropy_blocks),
            "knowledge_entropy_block_sum": contrast.knowledge_entropy_block_sum,
            "knowledge_entropy_gap": contrast.knowledge_entropy_gap,
            "knowledge_entropy_gap_nonzero": contrast.knowledge_entropy_gap_nonzero,
            "shannon_whole": contrast.shannon_whole,
            "shannon_between_blocks": contrast.shannon_between_blocks,
            "shannon_within_blocks": list(contrast.shannon_within_blocks),
            "shannon_weighted_blocks": contrast.shannon_weighted_blocks,
            "shannon_gap": contrast.shannon_gap,
            "blocks_align_with_classes": contrast.blocks_align_with_classes,
        },
    }
    return _envelope(args, "additivity decompose", payload).render(text)


def _cmd_dynamics(args):
    model = dynamics.calibrate(args.u0, args.u1, args.kind)
    p = args.precision
    pairs = [
        ("kind", model.kind),
        ("uncertainty range", f"[{_fmt(model.u_min, p)}, {_fmt(model.u_max, p)}]"),
        ("slope", _fmt(model.slope, p)),
        ("intercept", _fmt(model.intercept, p)),
    ]
    at_variable = []
    for v in args.at_v:
        u = model.predict_uncertainty(v)
        pairs.append((f"uncertainty at {model.kind}={_fmt(v, p)}", _fmt(u, p)))
        at_variable.append({"variable": v, "uncertainty": u})
    at_uncertainty = []
    for u in args.at_u:
        v = model.infer_variable(u)
        pairs.append((f"{model.kind} at uncertainty={_fmt(u, p)}", _fmt(v, p)))
        at_uncertainty.append({"uncertainty": u, "variable": v})
    payload = {
        "kind": model.kind,
        "slope": model.slope,
        "intercept": model.intercept,
        "u_min": model.u_min,
        "u_max": model.u_max,
        "at_variable": at_variable,
        "at_uncertainty": at_uncertainty,
    }
    return _envelope(args, "dynamics", payload).render(_kv_block(pairs))


def _add_output_options(parser):
    parser.add_argument(
        "--format",
        choices=("table", "json"),
        default="table",
        help="output as an aligned table or a machine-readable JSON envelope",
    )
    parser.add_argument(
        "--precision",
        type=int,
        default=4,
        help="decimal places in table output (default 4)",
    )


def _add_source_options(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--rankings",
        metavar="PATH",
        help="rankings file: one 'rater_id: <ranking>' per line",
    )
    group.add_argument(
        "--partitions",
        metavar="PATH",
        help="measurement table whose columns induce partitions",
    )
    parser.add_argument("--rater", help="restrict to one rater")
    parser.add_argument(
        "--tolerance",
        type=float,
        default=0.0,
        help="grouping tolerance for measurement values (default 0)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discern",
        description="Knowledge, ignorance, and knowledge-entropy measures "
        "from equivalence judgments and ties-permitted rankings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    measure = sub.add_parser(
        "measure", help="knowledge, ignorance, and entropy per rater"
    )
    _add_source_options(measure)
    _add_output_options(measure)

    entropy = sub.add_parser(
        "entropy", help="knowledge entropy per rater and the lowest-entropy rater"
    )
    _add_source_options(entropy)
    _add_output_options(entropy)

    rank = sub.add_parser("rank", help="raters ordered by descending knowledge")
    _add_source_options(rank)
    _add_output_options(rank)

    additivity = sub.add_parser(
        "additivity", help="sub-additivity checks of the knowledge measure"
    )
    addsub = additivity.add_subparsers(dest="subcommand", required=True)
    pair = addsub.add_parser(
        "pair", help="is a summed knowledge level realizable by one partition?"
    )
    pair.add_argument("--n", type=int, required=True, help="object count")
    pair.add_argument(
        "--k",
        type=float,
        action="append",
        required=True,
        help="knowledge level in [0, 1]; give exactly twice",
    )
    _add_output_options(pair)
    decompose = addsub.add_parser(
        "decompose", help="whole-set knowledge versus the sum over blocks"
    )
    _add_source_options(decompose)
    decompose.add_argument(
        "--block",
        action="append",
        required=True,
        metavar="IDS",
        help="comma-separated block members; repeat once per block",
    )
    _add_output_options(decompose)

    dyn = sub.add_parser(
        "dynamics", help="calibrate the log-linear uncertainty model and query it"
    )
    dyn.add_argument(
        "--kind",
        choices=(dynamics.KNOWLEDGE, dynamics.IGNORANCE),
        required=True,
        help="which variable drives the uncertainty",
    )
    dyn.add_argument("--u0", type=float, required=True, help="uncertainty at variable 0")
    dyn.add_argument("--u1", type=float, required=True, help="uncertainty at variable 1")
    dyn.add_argument(
        "--at-v",
        dest="at_v",
        type=float,
        action="append",
        default=[],
        metavar="VALUE",
        help="predict the uncertainty at this variable value; repeatable",
    )
    dyn.add_argument(
        "--at-u",
        dest="at_u",
        type=float,
        action="append",
        default=[],
        metavar="VALUE",
        help="infer the variable at this uncertainty; repeatable",
    )
    _add_output_options(dyn)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.precision < 0:
        print("usage error: --precision must be non-negative", file=sys.stderr)
        return 2
    if args.command == "additivity":
        handler = (
            _cmd_additivity_pair if args.subcommand == "pair" else _cmd_additivity_decompose
        )
    else:
        handler = {
            "measure": _cmd_measure,
            "entropy": _cmd_entropy,
            "rank": _cmd_rank,
            "dynamics": _cmd_dynamics,
        }[args.command]
    try:
        output = handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
