"""Command-line front end for experiments.

Subcommands generate reference waveforms, synthesize hyperspace vectors
and superpositions, build the universe, apply gates (with the symbolic
oracle checked against the numeric output on every run), and compare
trace files. All outputs are deterministic functions of the arguments;
plot emission is data-only (CSV/JSON consumable by any plotting tool).

Exit codes: 0 success, 2 usage error, 3 decode/oracle mismatch (including
``compare`` divergence), 4 I/O or parse failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys as _sys
from pathlib import Path

from .analysis import decode_superposition, universe_stats
from .errors import (
    DecodeError,
    NoiseLogicError,
    OracleMismatchError,
    TraceParseError,
)
from .gates import (
    apply_not,
    xnor_pair,
    xnor_targeted,
    xor_pair,
    xor_targeted,
)
from .hyperspace import BitString, realize, synthesize, universe
from .oracle import ProductTerm, SymbolicSuperposition
from .reference import (
    MAX_NOISE_BITS,
    generate_reference_system,
    read_trace,
    write_trace,
)

DEFAULT_SEED = 42
DEFAULT_T = 128
#: Overrides the default seed when ``--seed`` is not given.
SEED_ENV_VAR = "NOISELOGIC_SEED"
#: Engine decode is attempted only up to this width.
DECODE_M_LIMIT = 12


class UsageError(Exception):
    pass


def _resolve_seed(arg_seed: int | None) -> int:
    if arg_seed is not None:
        return arg_seed
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw, 0)
    except ValueError:
        raise UsageError(f"{SEED_ENV_VAR}={raw!r} is not an integer")


def _resolve_m(m: int | None, default: int | None = None) -> int:
    if m is None:
        if default is None:
            raise UsageError("bit width is needed; pass --m or use binary literals")
        m = default
    if not 1 <= m <= MAX_NOISE_BITS:
        raise UsageError(f"--m must be in 1..{MAX_NOISE_BITS}, got {m}")
    return m


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write(args, trace, name: str) -> None:
    path = _out_dir(args) / f"{name}.{args.format}"
    write_trace(trace, path, args.format)
    print(f"wrote {path}")


def _parse_operand(expr: str, width: int | None) -> list[tuple[int, str]]:
    """Split ``k*s1+s2+...`` into (multiplicity, literal) entries."""
    entries = []
    for part in expr.split("+"):
        part = part.strip()
        if not part:
            raise UsageError(f"empty term in operand {expr!r}")
        if "*" in part:
            k_text, literal = part.split("*", 1)
            try:
                coeff = int(k_text.strip())
            except ValueError:
                raise UsageError(f"bad multiplicity in term {part!r}")
        else:
            coeff, literal = 1, part
        entries.append((coeff, literal.strip()))
    return entries


def _infer_width(operands: list[list[tuple[int, str]]], m: int | None) -> int:
    widths = {m} if m is not None else set()
    for entries in operands:
        for _, literal in entries:
            if literal and all(c in "01" for c in literal) and not literal.startswith("0b"):
                widths.add(len(literal))
    widths.discard(None)
    if not widths:
        raise UsageError("cannot infer bit width; pass --m or use binary literals")
    if len(widths) > 1:
        raise UsageError(f"conflicting bit widths {sorted(widths)}")
    return _resolve_m(widths.pop())


def _operand_superposition(entries: list[tuple[int, str]], width: int) -> SymbolicSuperposition:
    terms = []
    for coeff, literal in entries:
        s = BitString.parse(literal, width)
        terms.append((s.to_term(), coeff))
    return SymbolicSuperposition.from_terms(width, terms)


def _parse_targets(text: str, m: int) -> list[int]:
    try:
        targets = sorted({int(p) for p in text.split(",") if p.strip()})
    except ValueError:
        raise UsageError(f"--targets expects comma-separated integers, got {text!r}")
    if not targets:
        raise UsageError("--targets must name at least one noise-bit")
    bad = [i for i in targets if not 1 <= i <= m]
    if bad:
        raise UsageError(f"target bits {bad} outside 1..{m}")
    return targets


# --- subcommands -------------------------------------------------------------


def cmd_refs(args) -> int:
    m = _resolve_m(args.m, default=4)
    sys = generate_reference_system(m, args.t, _resolve_seed(args.seed))
    for i in range(1, m + 1):
        _write(args, sys.high(i), f"ref_high_{i:02d}")
    _write(args, sys.low, "ref_low")
    return 0


def cmd_synth(args) -> int:
    operands = [_parse_operand(s, args.m) for s in args.strings]
    width = _infer_width(operands, args.m)
    sys = generate_reference_system(width, args.t, _resolve_seed(args.seed))
    traces = []
    for entries in operands:
        if len(entries) != 1 or entries[0][0] != 1:
            raise UsageError("synth takes plain bit strings; use --superpose for sums")
        s = BitString.parse(entries[0][1], width)
        trace = synthesize(sys, s)
        traces.append(trace)
        _write(args, trace, f"synth_{s.text}")
    if args.superpose:
        total = traces[0]
        for tr in traces[1:]:
            total = total + tr
        _write(args, total.with_label("superposition"), "superposition")
    return 0


def cmd_universe(args) -> int:
    m = _resolve_m(args.m, default=4)
    sys = generate_reference_system(m, args.t, _resolve_seed(args.seed))
    u = universe(sys)
    _write(args, u, "universe")
    stats = universe_stats(sys, u)
    payload = json.dumps(stats.as_dict())
    stats_path = _out_dir(args) / "universe_stats.json"
    stats_path.write_text(payload + "\n")
    print(f"wrote {stats_path}")
    print(payload)
    return 0


def _gate_prediction(args, state: SymbolicSuperposition, width: int):
    """Numeric output and symbolic prediction for one gate invocation."""
    kind = args.kind
    sys = generate_reference_system(width, args.t, _resolve_seed(args.seed))
    x = realize(sys, state)

    if kind == "not":
        targets = _parse_targets(args.targets, width)
        out = apply_not(sys, targets, x)
        predicted = state * ProductTerm.from_indices(width, targets)
        return sys, out, predicted

    if args.target is not None:
        # targeted XOR/XNOR against a single noise-bit value
        i, p = args.target, args.value
        if p is None:
            raise UsageError("--target requires --value 0|1")
        if not 1 <= i <= width:
            raise UsageError(f"--target {i} outside 1..{width}")
        value_term = (
            ProductTerm.from_indices(width, [i]) if p == 1 else ProductTerm.zeros(width)
        )
        if kind == "xor":
            out = xor_targeted(sys, x, i, p)
            predicted = state * value_term
        else:
            out = xnor_targeted(sys, x, i, p)
            predicted = state * value_term * ProductTerm.from_indices(width, [i])
        return sys, out, predicted

    if args.b is None:
        raise UsageError(f"gate {kind} needs --b, or --target/--value for targeted form")
    other = _operand_superposition(_parse_operand(args.b, width), width)
    xb = realize(sys, other)
    if len(state) > 1 and len(other) > 1:
        print("note: superposition-by-superposition product; outside tabulated gate semantics")
    if kind == "xor":
        out = xor_pair(x, xb)
        predicted = state * other
    else:
        out = xnor_pair(sys, x, xb)
        predicted = state * other * ProductTerm.ones(width)
    return sys, out, predicted


def cmd_gate(args) -> int:
    a_expr = args.input if args.kind == "not" else args.a
    if a_expr is None:
        flag = "--input" if args.kind == "not" else "--a"
        raise UsageError(f"gate {args.kind} needs {flag}")
    operand_entries = [_parse_operand(a_expr, args.m)]
    if args.kind != "not" and args.b is not None:
        operand_entries.append(_parse_operand(args.b, args.m))
    width = _infer_width(operand_entries, args.m)
    state = _operand_superposition(operand_entries[0], width)

    sys, out, predicted = _gate_prediction(args, state, width)
    _write(args, out.with_label(f"gate_{args.kind}"), f"gate_{args.kind}")

    decoded = None
    if width <= DECODE_M_LIMIT:
        try:
            decoded = decode_superposition(sys, out)
            print(f"engine: {decoded.format()}")
        except DecodeError as exc:
            print(f"engine: decode failed ({exc})")
    else:
        print(f"engine: decode skipped (M={width} exceeds decode cap {DECODE_M_LIMIT})")
    print(f"oracle: {predicted.format()}")

    if realize(sys, predicted) != out:
        raise OracleMismatchError(
            "numeric gate output disagrees with the symbolic prediction"
        )
    if decoded is not None and decoded != predicted:
        raise OracleMismatchError("decoded output disagrees with the symbolic prediction")
    return 0


def cmd_compare(args) -> int:
    a = read_trace(args.file_a)
    b = read_trace(args.file_b)
    if a.t != b.t:
        print(f"lengths differ: {a.t} != {b.t}")
        return 3
    if a == b:
        print(f"identical over {a.t} clocks")
        return 0
    diverge = int((a.samples != b.samples).argmax())
    print(
        f"first divergence at clock {diverge}: "
        f"{a.samples[diverge]} != {b.samples[diverge]}"
    )
    return 3


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=None, help="noise-bit count (1..62)")
    common.add_argument(
        "--t", type=int, default=DEFAULT_T, help=f"clock cycles (default {DEFAULT_T})"
    )
    common.add_argument(
        "--seed",
        type=lambda s: int(s, 0),
        default=None,
        help=f"generator seed (default {DEFAULT_SEED}; ${SEED_ENV_VAR} overrides)",
    )
    common.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="trace file format"
    )
    common.add_argument("--out", default=".", help="output directory")

    parser = argparse.ArgumentParser(
        prog="noiselogic",
        description="Deterministic simulator for squeezed noise-based logic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("refs", parents=[common], help="write the reference waveforms")
    p.set_defaults(func=cmd_refs)

    p = sub.add_parser("synth", parents=[common], help="synthesize hyperspace vectors")
    p.add_argument("strings", nargs="+", metavar="BITS", help="bit strings to synthesize")
    p.add_argument("--superpose", action="store_true", help="also write the sum")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("universe", parents=[common], help="factored universe + statistics")
    p.set_defaults(func=cmd_universe)

    p = sub.add_parser("gate", parents=[common], help="apply a gate and verify it")
    p.add_argument("kind", choices=("not", "xor", "xnor"))
    p.add_argument("--input", help="input operand for NOT (k*s1+s2+... syntax)")
    p.add_argument("--targets", help="comma-separated noise-bits for NOT")
    p.add_argument("--a", help="first operand for XOR/XNOR")
    p.add_argument("--b", help="second operand for pairwise XOR/XNOR")
    p.add_argument("--target", type=int, help="noise-bit for targeted XOR/XNOR")
    p.add_argument("--value", type=int, choices=(0, 1), help="bit value for --target")
    p.set_defaults(func=cmd_gate)

    p = sub.add_parser("compare", help="sample-wise comparison of two trace files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "gate" and args.kind == "not" and not args.targets:
            raise UsageError("gate not needs --targets")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 2
    except OracleMismatchError as exc:
        print(f"oracle mismatch: {exc}", file=_sys.stderr)
        return 3
    except TraceParseError as exc:
        print(f"parse error: {exc}", file=_sys.stderr)
        return 4
    except OSError as exc:
        print(f"i/o error: {exc}", file=_sys.stderr)
        return 4
    except NoiseLogicError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
