"""Command-line front end.

    tambara eval --op norm --from 3 --to 9 --x "t_3 - 3"
    tambara dress --q 3 --N 4 --level 4 --x "t_4 - t_2 - 2"
    tambara kernel --q 3 --N 12
    tambara catalog --theorem finite-fields --N 12 > gens.json
    tambara saturate --N 12 --gens gens.json
    tambara verify --theorem finite-fields --q 3 --N 12

Output is JSON (keys in ascending numeric order) unless ``--format text``.
Exit status: 0 success, 1 failed verification, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import burnside as bs
from .burnside import BurnsideElement, LevelError
from .catalog import THEOREMS, VERIFIABLE, CatalogError, GeneratorSet, generator_catalog, verify_theorem
from .dress import ExtensionSpec, dress
from .ideals import TambaraIdeal, saturate, trace_ideal_finite_field


class InputError(Exception):
    """Anything wrong with what the user passed in; maps to exit status 2."""


def _dump(obj) -> str:
    return json.dumps(obj)


def _read_source(text: str) -> str:
    if text == "-":
        return sys.stdin.read()
    if text.startswith("@"):
        try:
            with open(text[1:], encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise InputError(str(exc)) from exc
    return text


def _element(text: str, N: int | None, M: int | None, default_N: int | None = None) -> BurnsideElement:
    """An element given as JSON, or as an expression like ``3t_9 - 8t_3 - 3``.

    JSON carries its own group order; ``default_N`` only fills in for expressions.
    """
    text = _read_source(text).strip()
    if text.startswith("{"):
        try:
            x = BurnsideElement.from_json(json.loads(text))
        except (ValueError, LevelError) as exc:
            raise InputError(f"bad element JSON: {exc}") from exc
        if M is not None and x.M != M:
            raise InputError(f"element lives at level {x.M}, expected {M}")
        if N is not None and x.N != N:
            raise InputError(f"element lives over C_{x.N}, expected C_{N}")
        return x
    if M is None:
        raise InputError("an expression needs its level (--level or --from)")
    try:
        if N is None:
            N = default_N if default_N is not None else M
        return BurnsideElement.parse(N, M, text)
    except (ValueError, LevelError) as exc:
        raise InputError(str(exc)) from exc


def _spec(args) -> ExtensionSpec:
    try:
        if args.shape == "finite":
            return ExtensionSpec.finite(args.q, args.N)
        if args.shape == "Zp":
            return ExtensionSpec.zp(args.q, args.p, args.depth)
        return ExtensionSpec.zhat(args.q, args.depth)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _ideal_text(ideal: TambaraIdeal) -> str:
    lines = [f"C_{ideal.N}"]
    for M, lat in ideal.levels.items():
        elems = []
        for v in lat.basis:
            x = BurnsideElement.from_vector(ideal.N, M, v)
            # display only: lead with a positive top coefficient
            elems.append(str(-x if x.coeffs[-1][1] < 0 else x))
        lines.append(f"  level {M}: " + (", ".join(elems) if elems else "0"))
    return "\n".join(lines)


# -- subcommands -----------------------------------------------------------------

def cmd_eval(args) -> tuple[int, str]:
    default_N = max(v for v in (args.from_, args.to, 1) if v)
    x = _element(args.x, args.N, args.from_, default_N)
    try:
        if args.op == "card":
            result = bs.card(x)
            return 0, (str(result) if args.format == "text" else _dump({"card": result}))
        if args.op == "mul":
            if args.y is None:
                raise InputError("mul needs --y")
            y = _element(args.y, x.N, x.M)
            out = bs.mul(x, y)
        else:
            if args.to is None:
                raise InputError(f"{args.op} needs --to")
            if args.op == "res":
                out = bs.restrict(x, args.to)
            elif args.op == "tr":
                out = bs.transfer(x, args.to)
            else:
                out = bs.norm(x, args.to, direct=args.direct)
    except LevelError as exc:
        raise InputError(str(exc)) from exc
    return 0, (str(out) if args.format == "text" else _dump(out.to_json()))


def cmd_dress(args) -> tuple[int, str]:
    spec = _spec(args)
    x = _element(args.x, spec.modulus, args.level)
    try:
        img = dress(x, spec)
    except LevelError as exc:
        raise InputError(str(exc)) from exc
    return 0, (str(img) if args.format == "text" else _dump(img.to_json()))


def cmd_kernel(args) -> tuple[int, str]:
    ideal = trace_ideal_finite_field(_spec(args))
    return 0, (_ideal_text(ideal) if args.format == "text" else _dump(ideal.to_json()))


def _load_gens(text: str, N: int | None) -> GeneratorSet:
    try:
        obj = json.loads(_read_source(text))
    except json.JSONDecodeError as exc:
        raise InputError(f"generators are not valid JSON: {exc}") from exc
    try:
        if isinstance(obj, list):
            gens = tuple(BurnsideElement.from_json(g) for g in obj)
            if N is None:
                if not gens:
                    raise InputError("an empty generator list needs --N")
                N = gens[0].N
            return GeneratorSet(N, gens)
        gs = GeneratorSet.from_json(obj)
    except (ValueError, LevelError, TypeError) as exc:
        raise InputError(str(exc)) from exc
    if N is not None and gs.N != N:
        raise InputError(f"generators live over C_{gs.N}, --N says {N}")
    return gs


def cmd_saturate(args) -> tuple[int, str]:
    source = args.gens
    if source != "-" and not source.startswith("@") and source.lstrip()[:1] not in ("[", "{"):
        source = "@" + source  # a plain path
    gens = _load_gens(source, args.N)
    ideal = saturate(gens.N, gens)
    return 0, (_ideal_text(ideal) if args.format == "text" else _dump(ideal.to_json()))


def _theorem_params(args) -> dict:
    params = {}
    for name in ("q", "N", "n", "p", "depth", "tau", "pi", "tau_E", "two_part"):
        val = getattr(args, name, None)
        if val is not None:
            params[name] = val
    if args.r is not None:
        try:
            Fraction(args.r)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational {args.r!r}") from exc
        params["r"] = args.r
    if args.literal:
        params["literal"] = True
    return params


def cmd_catalog(args) -> tuple[int, str]:
    try:
        gens = generator_catalog(args.theorem, **_theorem_params(args))
    except (CatalogError, ValueError, LevelError) as exc:
        raise InputError(str(exc)) from exc
    if args.format == "text":
        return 0, "\n".join(f"level {g.M}: {g}" for g in gens) or "(no generators)"
    return 0, _dump(gens.to_json())


def cmd_verify(args) -> tuple[int, str]:
    try:
        report = verify_theorem(args.theorem, **_theorem_params(args))
    except (CatalogError, ValueError, LevelError) as exc:
        raise InputError(str(exc)) from exc
    code = 0 if report.ok else 1
    if args.format == "text":
        lines = [f"{args.theorem} over C_{report.N}: {'OK' if report.ok else 'FAILED'}"]
        for lv in report.levels:
            mark = "ok" if lv.equal else f"MISMATCH witness {list(lv.witness)}"
            lines.append(f"  level {lv.M}: rank {lv.computed.rank} {mark}")
        for name, ok in report.checks:
            lines.append(f"  {'ok' if ok else 'FAILED'}: {name}")
        return code, "\n".join(lines)
    return code, _dump(report.to_json())


# -- parser --------------------------------------------------------------------

def _add_spec_args(p):
    p.add_argument("--q", type=int, default=3, help="odd prime power (default 3)")
    p.add_argument("--shape", choices=("finite", "Zp", "Zhat"), default="finite")
    p.add_argument("--N", type=int, help="degree of the finite extension")
    p.add_argument("--p", type=int, help="prime for Zp truncations")
    p.add_argument("--depth", type=int, help="truncation depth for Zp / Zhat")


def _add_theorem_args(p):
    p.add_argument("--theorem", required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--n", type=int, help="exponent for C_(2^n), or Zhat truncation n")
    p.add_argument("--p", type=int)
    p.add_argument("--depth", type=int)
    p.add_argument("--tau", type=int)
    p.add_argument("--r", help="rational discriminant for c2-rational, e.g. 7/2")
    p.add_argument("--pi", type=int)
    p.add_argument("--tau-E", dest="tau_E", type=int)
    p.add_argument("--two-part", dest="two_part")
    p.add_argument("--literal", action="store_true", help="Zhat: odd primes p < n only")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tambara", description=__doc__.split("\n")[0])
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="apply a structure map to a Burnside element")
    p.add_argument("--op", choices=("mul", "res", "tr", "norm", "card"), required=True)
    p.add_argument("--x", required=True, help="element: JSON, expression, @file or -")
    p.add_argument("--y", help="second factor for mul")
    p.add_argument("--N", type=int, help="group order (default: largest level given)")
    p.add_argument("--from", "--level", dest="from_", type=int, help="level of an expression")
    p.add_argument("--to", type=int, help="target level for res/tr/norm")
    p.add_argument("--direct", action="store_true", help="norm in one step, not a prime chain")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("dress", help="image of an element in GW")
    _add_spec_args(p)
    p.add_argument("--level", type=int)
    p.add_argument("--x", required=True)
    p.set_defaults(func=cmd_dress)

    p = sub.add_parser("kernel", help="Dress kernel at every level")
    _add_spec_args(p)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("saturate", help="Tambara ideal generated by elements")
    p.add_argument("--N", type=int)
    p.add_argument("--gens", required=True, help="JSON file, @file, - for stdin, or inline JSON")
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("catalog", help=f"generators of a theorem ({', '.join(THEOREMS)})")
    _add_theorem_args(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help=f"check a theorem ({', '.join(VERIFIABLE)})")
    _add_theorem_args(p)
    p.set_defaults(func=cmd_verify)

    for sp in sub.choices.values():
        sp.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return 2
    print(text, file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
