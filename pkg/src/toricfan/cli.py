"""Command-line front end.

Exit codes: 0 success, 1 domain error (invalid fan, non-ample heights,
...), 2 usage or file-parse error.  All numeric output is exact; fans
and polytopes use the line-oriented text formats of their modules.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import classify, fan, polytope, render
from .stabilize import bound as stabilize_bound
from .stabilize import stabilize as run_stabilize
from .stabilize import xj_fan
from .errors import ClockwiseFan, ParseError, ToricError


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _emit(text: str, out_path):
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_fan(path: str) -> fan.Fan2D:
    return fan.parse_fan(_read(path))


def _step_line(s: fan.BlowupStep) -> str:
    return (
        f"blowup ({s.left[0]},{s.left[1]})+({s.right[0]},{s.right[1]})"
        f" -> ({s.inserted[0]},{s.inserted[1]})"
    )


def cmd_validate(args):
    f = _load_fan(args.fan)
    _emit(fan.serialize_fan(f), args.output)
    return 0


def cmd_blowup(args):
    f = _load_fan(args.fan)
    g, step = fan.blow_up(f, args.index)
    sys.stderr.write(_step_line(step) + "\n")
    _emit(fan.serialize_fan(g), args.output)
    return 0


def cmd_blowdown(args):
    f = _load_fan(args.fan)
    g, step = fan.blow_down(f, args.index)
    sys.stderr.write(f"removed ({step.inserted[0]},{step.inserted[1]})\n")
    _emit(fan.serialize_fan(g), args.output)
    return 0


def cmd_classify(args):
    f = _load_fan(args.fan)
    if len(f) == 3:
        _emit("projective plane: blow up once (F_1 = Bl(P2)) before classifying\n", args.output)
        return 0
    report = classify.iteration_invariants(f)
    lines = [
        "minimal_models: " + ", ".join(str(tag) for tag, _ in report.minimal_models),
        f"n_min: {report.n_min}",
        f"l: {report.l}",
        f"l0: {report.l0}",
    ]
    if report.l_witnesses_disagree:
        lines.append("note: blow-down witnesses disagree on l; the maximum is reported")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_stabilize(args):
    f = _load_fan(args.fan)
    seq, j = run_stabilize(f)
    if len(f) == 3:
        bound_text = "n/a (projective plane)"
    else:
        b = stabilize_bound(f)
        assert len(seq.steps) <= b
        bound_text = str(b)
    lines = [_step_line(s) for s in seq.steps]
    lines += [f"lands_on: X_{j}", f"steps: {len(seq.steps)}", f"bound: {bound_text}"]
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_xj(args):
    _emit(fan.serialize_fan(xj_fan(args.j)), args.output)
    return 0


def cmd_deltaj(args):
    _emit(polytope.serialize_polytope(polytope.delta_j(args.j)), args.output)
    return 0


def cmd_obstruction(args):
    if args.heights or args.fan:
        if not (args.heights and args.fan):
            raise ParseError("--fan and --heights must be given together")
        f = _load_fan(args.fan)
        p = polytope.polytope_from_heights(f, polytope.parse_heights(_read(args.heights)))
    elif args.polytope:
        p = polytope.parse_polytope(_read(args.polytope))
    else:
        raise ParseError("give a polytope file, or --fan with --heights")
    _emit(polytope.format_report(polytope.obstruction(p)), args.output)
    return 0


def cmd_render(args):
    text = _read(args.file)
    obj = None
    if args.kind in ("fan", "auto"):
        try:
            obj = fan.parse_fan(text)
        except ToricError:
            if args.kind == "fan":
                raise
    if obj is None:
        obj = polytope.parse_polytope(text)
    if isinstance(obj, fan.Fan2D):
        out = render.fan_ascii(obj) if args.format == "ascii" else render.fan_svg(obj)
    else:
        out = render.polytope_ascii(obj) if args.format == "ascii" else render.polytope_svg(obj)
    _emit(out, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricfan",
        description="exact lattice-fan toolkit for smooth complete toric surfaces",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("-o", "--output", help="write to a file instead of stdout")
        return p

    p = add("validate", cmd_validate, help="validate a fan file and echo its canonical form")
    p.add_argument("fan")
    p = add("blowup", cmd_blowup, help="blow up the cone at the given adjacent-pair index")
    p.add_argument("index", type=int)
    p.add_argument("fan")
    p = add("blowdown", cmd_blowdown, help="blow down the ray at the given index")
    p.add_argument("index", type=int)
    p.add_argument("fan")
    p = add("classify", cmd_classify, help="minimal models and the invariants n, l, l0")
    p.add_argument("fan")
    p = add("stabilize", cmd_stabilize, help="blow-up sequence landing on a reference surface X_j")
    p.add_argument("fan")
    p = add("xj", cmd_xj, help="emit the fan of the reference surface X_j")
    p.add_argument("j", type=int)
    p = add("deltaj", cmd_deltaj, help="emit the symmetric moment polytope of X_j")
    p.add_argument("j", type=int)
    p = add("obstruction", cmd_obstruction, help="obstruction coefficients of a polarization")
    p.add_argument("polytope", nargs="?")
    p.add_argument("--fan")
    p.add_argument("--heights")
    p = add("render", cmd_render, help="draw a fan or polytope file")
    p.add_argument("file")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--kind", choices=("auto", "fan", "polytope"), default="auto")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"ParseError: {exc}\n")
        return 2
    except ClockwiseFan as exc:
        sys.stderr.write(f"ClockwiseFan: {exc} (hint: reverse ray order)\n")
        return 1
    except ToricError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
