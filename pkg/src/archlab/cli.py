"""``archlab`` command line: simulate, classify, check and sweep.

Exit codes: 0 ok/pass, 1 property failure, 2 input error, 3 hypotheses not met.
"""

import argparse
import json
import os
import sys

from .archetypes import classify
from .circuit import NeuroCircuit, simulate
from .circuitfile import format_input_string, load_circuit, parse_input_string
from .errors import ArchlabError
from .grid import parse_grid, sweep
from .numeric import rat_format
from .properties import PropertyId, Status, default_family, verify_bounded

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_HYPOTHESES = 3


def _bits(seq):
    return "".join("1" if b else "0" for b in reversed(seq))


def _bound(args):
    if args.max_len is not None:
        return args.max_len
    env = os.environ.get("ARCHLAB_MAX_LEN")
    return int(env) if env else None


def _seq_to_string(ctx, seq):
    if isinstance(ctx, NeuroCircuit):
        width, first = ctx.suppl_input, len(ctx.neurons)
    else:
        width, first = ctx.width, 0
    inps = [{first + j: b for j, b in enumerate(step)} for step in seq]
    return format_input_string(inps, width, first)


def format_verdict(v, ctx):
    """One-line verdict; FAIL bit strings are chronological like the input."""
    if v.status is Status.PASS:
        return f"PASS {v.prop.value} checked={v.checked_count}"
    if v.status is Status.HYPOTHESES_NOT_MET:
        return f"HYPOTHESES-NOT-MET {v.prop.value}: {v.hypothesis}"
    cex = v.counterexample
    expected = "-" if cex.expected is None else _bits(cex.expected)
    t = "-" if cex.time is None else str(cex.time)
    return (
        f"FAIL {v.prop.value} checked={v.checked_count} "
        f"input={_seq_to_string(ctx, cex.inputs) or '(empty)'} neuron={cex.neuron_id} "
        f"t={t} expected={expected} actual={_bits(cex.actual)} detail={cex.detail}"
    )


def cmd_simulate(args, out):
    c = load_circuit(args.circuit)
    if args.input_file is not None:
        with open(args.input_file, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = args.input or ""
    inps = parse_input_string(text, c.suppl_input, len(c.neurons))
    trace = simulate(c, inps)
    if args.format == "csv":
        ids = range(len(c.neurons))
        out.write(",".join(["t"] + [f"y{i}" for i in ids] + [f"p{i}" for i in ids]) + "\n")
        for r in trace:
            cells = [str(r.t)] + [str(int(b)) for b in r.outputs]
            cells += [rat_format(p) for p in r.potentials]
            out.write(",".join(cells) + "\n")
    else:
        for r in trace:
            rec = {
                "t": r.t,
                "outputs": [int(b) for b in r.outputs],
                "potentials": [rat_format(p) for p in r.potentials],
            }
            out.write(json.dumps(rec, separators=(",", ":")) + "\n")
    return EXIT_OK


def cmd_classify(args, out):
    kinds = sorted(k.value for k in classify(load_circuit(args.circuit)))
    out.write("\n".join(kinds or ["none"]) + "\n")
    return EXIT_OK


def _family(prop, args):
    return default_family(prop, _bound(args))


def cmd_check(args, out):
    c = load_circuit(args.circuit)
    prop = PropertyId.parse(args.property)
    if args.random is not None:
        v = verify_bounded(prop, c, _family(prop, args), mode="random",
                           count=args.random, seed=args.seed, jobs=args.jobs)
    else:
        v = verify_bounded(prop, c, _family(prop, args), jobs=args.jobs)
    out.write(format_verdict(v, c) + "\n")
    return {Status.PASS: EXIT_OK, Status.FAIL: EXIT_FAIL,
            Status.HYPOTHESES_NOT_MET: EXIT_HYPOTHESES}[v.status]


def cmd_sweep(args, out):
    prop = PropertyId.parse(args.property)
    grid = None
    if args.grid is not None:
        with open(args.grid, "rb") as fh:
            try:
                grid = parse_grid(json.loads(fh.read()))
            except (json.JSONDecodeError, UnicodeDecodeError) as exc:
                raise ArchlabError(f"grid file: {exc}") from None
    rows = sweep(prop, grid, _family(prop, args), jobs=args.jobs)
    failed = False
    for row in rows:
        params = " ".join(f"{k}={v}" for k, v in row.params.items())
        if row.verdict is None:
            out.write(f"{params}\tINVALID\t-\t{row.error}\n")
            continue
        v = row.verdict
        failed |= v.status is Status.FAIL
        extra = v.hypothesis or ""
        out.write(f"{params}\t{v.status.value}\t{v.checked_count}\t{extra}".rstrip("\t") + "\n")
    counts = {}
    for row in rows:
        counts[row.status] = counts.get(row.status, 0) + 1
    summary = " ".join(f"{k}={counts[k]}" for k in sorted(counts))
    out.write(f"# {prop.value} points={len(rows)} {summary}\n")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="archlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="emit a trace of a circuit on an input string")
    p.add_argument("--circuit", required=True)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", help="chronological steps, e.g. 101 or 11;10")
    src.add_argument("--input-file")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("classify", help="list the archetypes a circuit matches")
    p.add_argument("--circuit", required=True)
    p.set_defaults(func=cmd_classify)

    names = [q.value for q in PropertyId]
    p = sub.add_parser("check", help="bounded check of one property on a circuit")
    p.add_argument("--circuit", required=True)
    p.add_argument("--property", required=True, metavar="NAME", help=", ".join(names))
    p.add_argument("--max-len", type=int)
    p.add_argument("--random", type=int, metavar="K", help="check K seeded random draws")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="check a property over a parameter grid")
    p.add_argument("--grid")
    p.add_argument("--property", required=True, metavar="NAME", help=", ".join(names))
    p.add_argument("--max-len", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ValueError, OSError) as exc:
        err.write(f"archlab: error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
