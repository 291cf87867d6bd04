"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import warnings
from contextlib import contextmanager

from . import canon, learner, nnbridge, sufficiency
from .errors import MechLearnError, WidthMismatch
from .patterns import MAX_WIDTH, enumerate_patterns, load_dataset, parse_pattern
from .xform import evaluate, parse_xform, to_text, truth_table

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _shape(text: str) -> list[int]:
    try:
        shape = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad shape {text!r}") from None
    try:
        return nnbridge.check_shape(shape)
    except MechLearnError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _width(text: str) -> int:
    try:
        w = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad width {text!r}") from None
    if not 1 <= w <= MAX_WIDTH:
        raise argparse.ArgumentTypeError(f"width must be in 1..{MAX_WIDTH}")
    return w


def _nonneg_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v >= 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _pos_float(text: str) -> float:
    v = _nonneg_float(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    g = common.add_argument_group("global options")
    g.add_argument("--width", type=_width, help="pattern width (required where not implied)")
    g.add_argument("--seed", type=int, default=0, help="single source of randomness")
    g.add_argument("--output", default="-", help="output path, '-' for stdout")
    g.add_argument("--format", choices=("json", "table"), default="json")

    parser = _Parser(prog="mechlearn", description="Mechanical learning laboratory.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate an X-form on a pattern")
    p.add_argument("xform")
    p.add_argument("pattern")

    p = sub.add_parser("canon", parents=[common], help="canonical minimal-DNF X-form")
    p.add_argument("xform")

    p = sub.add_parser("tt", parents=[common], help="truth table of an X-form")
    p.add_argument("xform")

    p = sub.add_parser("suff", parents=[common], help="data sufficiency report")
    p.add_argument("dataset", help="dataset path, '-' for stdin")
    p.add_argument("--class", dest="hclass", default="all",
                   help="all | dnf:K | list:F1;F2;... (default: all)")
    p.add_argument("--target", help="target X-form; omit to count only")
    p.add_argument("--witnesses", type=_nonneg_int, default=sufficiency.DEFAULT_WITNESS_LIMIT)

    p = sub.add_parser("learn", parents=[common], help="run the interval learner")
    p.add_argument("dataset")
    p.add_argument("--class", dest="hclass", default="all")
    p.add_argument("--order", choices=("given", "lex", "seeded"), default="given")

    p = sub.add_parser("nn-trace", parents=[common], help="X-form trajectory of a training net")
    p.add_argument("dataset")
    p.add_argument("--shape", type=_shape, required=True, help="comma-separated, e.g. 2,3,1")
    p.add_argument("--lr", type=_nonneg_float, default=0.5)
    p.add_argument("--epochs", type=_nonneg_int, default=1000)
    p.add_argument("--init-scale", type=_pos_float, default=0.1)
    p.add_argument("--net-out", help="write the final net as JSON to this path")
    return parser


@contextmanager
def _open_out(path, default):
    if path in (None, "-"):
        yield default
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _read_dataset(path: str, width, stdin):
    try:
        if path == "-":
            return load_dataset(stdin, width)
        with open(path, encoding="utf-8") as fh:
            return load_dataset(fh, width)
    except ValueError as exc:
        # only raised for an empty stream without --width
        raise UsageError(f"mechlearn: error: {exc}; pass --width") from None


def _check_width(d, width):
    if width is not None and d.width != width:
        raise WidthMismatch(width, d.width)


def _emit_records(out, records, fmt, columns=None):
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
        return
    records = list(records)
    columns = columns or (list(records[0]) if records else [])
    cells = [[_cell(r.get(c)) for c in columns] for r in records]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    for row in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "; ".join(map(str, v)) if v else "-"
    return str(v)


def cmd_eval(args, out, stdin):
    p = parse_pattern(args.pattern)
    if args.width is not None and args.width != p.width:
        raise WidthMismatch(args.width, p.width)
    f = parse_xform(args.xform, p.width)
    out.write(f"{int(evaluate(f, p))}\n")


def _require_width(args):
    if args.width is None:
        raise UsageError(f"mechlearn {args.command}: error: --width is required")
    return args.width


def cmd_canon(args, out, stdin):
    width = _require_width(args)
    f = parse_xform(args.xform, width)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        out.write(to_text(canon.canonicalize(f, width)) + "\n")


def cmd_tt(args, out, stdin):
    width = _require_width(args)
    t = truth_table(parse_xform(args.xform, width), width)
    records = [{"pattern": str(p), "value": int(v)}
               for p, v in zip(enumerate_patterns(width), t.outputs)]
    _emit_records(out, records, args.format)


def cmd_suff(args, out, stdin):
    d = _read_dataset(args.dataset, args.width, stdin)
    _check_width(d, args.width)
    c = sufficiency.parse_class_spec(args.hclass, d.width)
    if args.target is None:
        report = sufficiency.consistent_count(c, d, args.witnesses)
    else:
        target = parse_xform(args.target, d.width)
        report = sufficiency.is_sufficient(c, d, target, args.witnesses)
    rec = report.to_record()
    if args.format == "json":
        out.write(json.dumps(rec) + "\n")
    else:
        for k, v in rec.items():
            out.write(f"{k:<18}{_cell(v)}\n")


def cmd_learn(args, out, stdin):
    d = _read_dataset(args.dataset, args.width, stdin)
    _check_width(d, args.width)
    c = sufficiency.parse_class_spec(args.hclass, d.width)
    samples = list(d)
    if args.order == "lex":
        samples = d.sorted_samples()
    elif args.order == "seeded":
        samples = d.sorted_samples()
        random.Random(args.seed).shuffle(samples)
    result = learner.run_to_convergence(learner.new_machine(d.width, c), samples)
    m = result.machine
    records = [ev.to_record() for ev in result.trace]
    status = {"status": result.status, "steps": len(result.trace), "gap": m.gap,
              "lower": to_text(m.lower), "upper": to_text(m.upper)}
    if args.format == "json":
        _emit_records(out, records, "json")
        out.write(json.dumps(status) + "\n")
    else:
        _emit_records(out, records, "table",
                      ["step", "pattern", "label", "lower", "upper", "gap"])
        out.write(f"status: {result.status} (gap {m.gap})\n")


def cmd_nn_trace(args, out, stdin):
    d = _read_dataset(args.dataset, args.width, stdin)
    _check_width(d, args.width)
    cfg = nnbridge.TrainConfig(learning_rate=args.lr, epochs=args.epochs,
                               seed=args.seed, init_scale=args.init_scale)
    traj = nnbridge.trace_training(args.shape, d, cfg)
    _emit_records(out, [e.to_record() for e in traj.entries], args.format,
                  ["epoch", "table", "xform", "size"])
    if args.net_out:
        with open(args.net_out, "w", encoding="utf-8") as fh:
            fh.write(nnbridge.dumps_net(traj.net) + "\n")


COMMANDS = {
    "eval": cmd_eval,
    "canon": cmd_canon,
    "tt": cmd_tt,
    "suff": cmd_suff,
    "learn": cmd_learn,
    "nn-trace": cmd_nn_trace,
}


def main(argv=None, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help
            return int(exc.code or 0)
        with _open_out(args.output, stdout) as out:
            COMMANDS[args.command](args, out, stdin)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except MechLearnError as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
