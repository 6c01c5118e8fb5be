"""Batch command-line interface.

Every subcommand is a pure transformation: elements travel in the JSON
interchange format (a file path or `-` for stdin), scalars print as exact
text, and identical invocations produce byte-identical output.

Exit codes: 0 success, 1 invalid element data, 2 domain error (e.g. a
non-torsion element where finite order is required), 3 parse/usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .dyadic import Dyadic
from .dynamics import (
    DEFAULT_CAP,
    InfiniteOrder,
    TorsionCertificate,
    Undetermined,
    certificate,
    estimate_rotation_number,
    exact_rotation_number,
    orbit_of_zero,
)
from .element import CircleElement, pseudo_rotation, random_element
from .errors import DomainError, DyadicParseError, InvalidElementError
from . import centralizer as cent
from . import conjugacy as conj
from . import ktheory as kth

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="tcircle", description=__doc__, add_help=True)
    top = parser.add_subparsers(dest="group", required=True)

    def sub(group, name, **kw):
        p = group.add_parser(name, **kw)
        p.add_argument("--json", action="store_true", help="emit JSON output")
        return p

    el = top.add_parser("el", help="element arithmetic").add_subparsers(dest="cmd", required=True)
    p = sub(el, "gamma", help="standard finite-order element")
    p.add_argument("q", type=int)
    p = sub(el, "compose", help="composition A o B")
    p.add_argument("a")
    p.add_argument("b")
    p = sub(el, "inv", help="inverse element")
    p.add_argument("a")
    p = sub(el, "pow", help="integer power")
    p.add_argument("a")
    p.add_argument("m", type=int)
    p = sub(el, "eval", help="apply the circle map to a dyadic point")
    p.add_argument("a")
    p.add_argument("x")
    p = sub(el, "random", help="seeded pseudo-random element")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--complexity", type=int, default=3)
    p = sub(el, "eq", help="exact equality of circle maps")
    p.add_argument("a")
    p.add_argument("b")

    dyn = top.add_parser("dyn", help="rotation numbers and orders").add_subparsers(dest="cmd", required=True)
    p = sub(dyn, "rot", help="rotation number (exact for torsion)")
    p.add_argument("a")
    p.add_argument("--estimate", type=int, metavar="N")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p = sub(dyn, "order", help="order of the element")
    p.add_argument("a")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    cj = top.add_parser("conj", help="conjugator synthesis").add_subparsers(dest="cmd", required=True)
    p = sub(cj, "to-gamma", help="conjugator onto the standard finite-order element")
    p.add_argument("a")
    p = sub(cj, "subgroups", help="conjugator between equal-order cyclic subgroups")
    p.add_argument("a")
    p.add_argument("b")

    ce = top.add_parser("cent", help="centralizer short exact sequence").add_subparsers(dest="cmd", required=True)
    p = sub(ce, "ctx", help="context data for the generator")
    p.add_argument("g")
    p = sub(ce, "check", help="does H commute with G?")
    p.add_argument("g")
    p.add_argument("h")
    p = sub(ce, "pi", help="project a centralizer element to the quotient")
    p.add_argument("g")
    p.add_argument("h")
    p = sub(ce, "lift", help="section: lift an element into the centralizer")
    p.add_argument("g")
    p.add_argument("h0")
    p = sub(ce, "defect", help="section multiplicativity defect exponent")
    p.add_argument("g")
    p.add_argument("h1")
    p.add_argument("h2")

    kt = top.add_parser("kth", help="rank calculators").add_subparsers(dest="cmd", required=True)
    p = sub(kt, "wh", help="rational Whitehead rank of a cyclic group")
    p.add_argument("k", type=int)
    p = sub(kt, "theta", help="top cyclotomic summand dimension")
    p.add_argument("k", type=int)
    p.add_argument("t", type=int)
    p = sub(kt, "fj", help="assembly-source dimension table in total degree N")
    p.add_argument("n", type=int)
    p.add_argument("--kmax", type=int, required=True)
    p = sub(kt, "growth", help="Whitehead ranks along the chain of 2-power orders")
    p.add_argument("j", type=int)
    p = sub(kt, "morphisms", help="finite-subgroup-category morphism count")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)

    return parser


class _ElementLoader:
    def __init__(self, stdin_text: str):
        self.stdin_text = stdin_text
        self.stdin_used = False

    def load(self, spec: str) -> CircleElement:
        if spec == "-":
            if self.stdin_used:
                raise UsageError("stdin (-) may be used for at most one element")
            self.stdin_used = True
            text = self.stdin_text
        else:
            try:
                with open(spec, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(f"cannot read element file {spec!r}: {exc}") from exc
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed element JSON: {exc}") from exc
        return CircleElement.from_json_dict(data)


def _scalar(args, plain: str, payload: dict) -> str:
    if args.json:
        return json.dumps(payload, separators=(",", ":")) + "\n"
    return plain + "\n"


def _cert(g: CircleElement, cap: int = DEFAULT_CAP) -> TorsionCertificate:
    return certificate(g, cap)


def _run(args, loader) -> str:
    group, cmd = args.group, args.cmd

    if group == "el":
        if cmd == "gamma":
            return pseudo_rotation(args.q).to_json() + "\n"
        if cmd == "compose":
            return (loader.load(args.a) * loader.load(args.b)).to_json() + "\n"
        if cmd == "inv":
            return loader.load(args.a).inverse().to_json() + "\n"
        if cmd == "pow":
            return (loader.load(args.a) ** args.m).to_json() + "\n"
        if cmd == "eval":
            g = loader.load(args.a)
            try:
                x = Dyadic.parse(args.x)
            except DyadicParseError as exc:
                raise UsageError(str(exc)) from exc
            return _scalar(args, str(g(x)), {"value": str(g(x))})
        if cmd == "random":
            return random_element(args.seed, args.complexity).to_json() + "\n"
        if cmd == "eq":
            equal = loader.load(args.a) == loader.load(args.b)
            return _scalar(args, "true" if equal else "false", {"equal": equal})

    if group == "dyn":
        g = loader.load(args.a)
        if cmd == "rot":
            if args.estimate is not None:
                est, bound = estimate_rotation_number(g, args.estimate)
                return _scalar(args, f"{est} {bound}", {"estimate": str(est), "bound": str(bound)})
            rho = exact_rotation_number(_cert(g, args.cap))
            return _scalar(args, str(rho), {"rotation": str(rho)})
        if cmd == "order":
            result = orbit_of_zero(g, args.cap)
            if isinstance(result, TorsionCertificate):
                return _scalar(args, str(result.q), {"order": result.q})
            if isinstance(result, InfiniteOrder):
                return _scalar(args, "infinite", {"order": "infinite"})
            return _scalar(args, f"unknown(cap={result.cap})", {"order": "unknown", "cap": result.cap})

    if group == "conj":
        if cmd == "to-gamma":
            return conj.conjugator_to_pseudo_rotation(_cert(loader.load(args.a))).to_json() + "\n"
        if cmd == "subgroups":
            c1 = _cert(loader.load(args.a))
            c2 = _cert(loader.load(args.b))
            return conj.subgroup_conjugator(c1, c2).to_json() + "\n"

    if group == "cent":
        ctx = cent.make_context(_cert(loader.load(args.g)))
        if cmd == "ctx":
            plain = f"q={ctx.q} p={ctx.p} s={ctx.s} a={ctx.a}"
            return _scalar(args, plain, {"q": ctx.q, "p": ctx.p, "s": ctx.s, "a": str(ctx.a)})
        if cmd == "check":
            ok = cent.is_in_centralizer(ctx, loader.load(args.h))
            return _scalar(args, "true" if ok else "false", {"commutes": ok})
        if cmd == "pi":
            return cent.project(ctx, loader.load(args.h)).to_json() + "\n"
        if cmd == "lift":
            return cent.section(ctx, loader.load(args.h0)).to_json() + "\n"
        if cmd == "defect":
            k = cent.section_defect(ctx, loader.load(args.h1), loader.load(args.h2))
            return _scalar(args, str(k), {"defect": k})

    if group == "kth":
        try:
            if cmd == "wh":
                v = kth.wh_rank(args.k)
                return _scalar(args, str(v), {"rank": v})
            if cmd == "theta":
                v = kth.theta_dim(args.k, args.t)
                return _scalar(args, str(v), {"dim": v})
            if cmd == "fj":
                table = kth.fj_source_table(args.n, k_max=args.kmax)
                if args.json:
                    return table.to_json() + "\n"
                color = os.environ.get("THOMPSON_CLI_COLOR", "") not in ("", "0")
                return table.to_text(color=color) + "\n"
            if cmd == "growth":
                ranks = kth.wh_growth_chain(args.j)
                return _scalar(args, " ".join(map(str, ranks)), {"ranks": ranks})
            if cmd == "morphisms":
                v = kth.subfin_morphism_count(args.k, args.l)
                return _scalar(args, str(v), {"count": v})
        except ValueError as exc:
            raise UsageError(str(exc)) from exc

    raise UsageError(f"unknown command {group} {cmd}")


def run_command(argv, stdin: str = ""):
    """Execute one subcommand; returns (exit_code, stdout, stderr)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        out = _run(args, _ElementLoader(stdin))
        return EXIT_OK, out, ""
    except UsageError as exc:
        return EXIT_USAGE, "", f"tcircle: {exc}\n"
    except InvalidElementError as exc:
        return EXIT_INVALID, "", f"tcircle: invalid element: {exc}\n"
    except DomainError as exc:
        return EXIT_DOMAIN, "", f"tcircle: {exc}\n"


def main() -> None:
    argv = sys.argv[1:]
    stdin_text = sys.stdin.read() if "-" in argv else ""
    code, out, err = run_command(argv, stdin_text)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    raise SystemExit(code)
