"""Command-line front end.

Every command reads one JSON document (``--input FILE``, default stdin) and
prints compact JSON.  Exit codes: 0 ok, 1 counterexample, 2 parse error,
3 dimension mismatch, 4 precondition violation, 5 internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import conjugation as cj
from . import oracle
from . import polars as pl
from . import support as sp
from .codec import decode_function, decode_scalar, decode_set, decode_vector, dumps, encode_scalar, encode_vector
from .errors import DimensionError, ParseError, TopicalError
from .functions import ProbeSet, boolean_domain, probes_for
from .scalar import Semifield, finite
from .semimodule import MAX_DIM, random_vector

LAMBDAS = tuple(finite(v) for v in (-2, -1, 1, 2))
COUPLINGS = ("phi", "psi", "theta_phi", "theta_psi", "reflected", "biconjugate")
POLAR_QUERIES = ("support", "polar", "barpolar", "bipolar")
SUPPORT_QUERIES = ("supp", "at_point", "at_point_xk", "subdiff", "reconstruct", "witness")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(dumps({"error": message}), file=sys.stderr)
        raise SystemExit(2)


def _read_input(path):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read input: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("input must be a JSON object")
    return doc


def _field(doc, key):
    if key not in doc:
        raise ParseError(f"input is missing {key!r}")
    return doc[key]


class _Run:
    def __init__(self, args):
        self.args = args
        self.sf = Semifield(args.semifield)
        self.doc = _read_input(args.input)
        if args.dim is not None and not 1 <= args.dim <= MAX_DIM:
            raise DimensionError(f"--dim must lie in 1..{MAX_DIM}")
        self.dim = args.dim

    def vec(self, key):
        v = decode_vector(_field(self.doc, key), self.sf, self.dim)
        if self.dim is None:
            self.dim = len(v)
        return v

    def scalar(self, key):
        return decode_scalar(_field(self.doc, key), self.sf)

    def function(self):
        f = decode_function(_field(self.doc, "function"), self.sf, self.dim)
        if self.dim is None:
            self.dim = f.dim
        elif f.dim != self.dim:
            raise DimensionError(f"function of dimension {f.dim}, expected {self.dim}")
        return f

    def set(self):
        G = decode_set(_field(self.doc, "set"), self.sf, self.dim)
        self.dim = G.dim
        return G

    def probes(self, f, extra=()) -> ProbeSet:
        """Whole domain in Boolean mode; otherwise a seeded, deterministic sample."""
        if self.sf is Semifield.BOOLEAN:
            return boolean_domain(self.dim)
        pts = list(extra)
        if self.args.probes:
            try:
                with open(self.args.probes, encoding="utf-8") as fh:
                    raw = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise ParseError(f"cannot read probes: {exc}") from None
            if not isinstance(raw, list):
                raise ParseError("probes file must hold a list of vectors")
            pts += [decode_vector(v, self.sf, self.dim) for v in raw]
        rng = random.Random(self.args.seed)
        pts += [random_vector(rng, self.dim) for _ in range(self.args.random_probes)]
        return probes_for(f, LAMBDAS, pts)

    def enc(self, v):
        return encode_scalar(v, self.sf)

    def estimate(self, est: cj.Estimate):
        out = {"value": self.enc(est.value), "exactness": est.exactness}
        if est.witness is not None:
            out["witness"] = encode_vector(est.witness, self.sf)
        return out


def cmd_eval(run: _Run):
    f = run.function()
    x = run.vec("x")
    return {"value": run.enc(f(x)), "exactness": cj.EXACT}


def cmd_conjugate(run: _Run):
    f = run.function()
    kind = run.args.coupling
    key = "x" if kind in ("reflected", "biconjugate") else "y"
    pt = run.vec(key)
    p = run.probes(f, [pt])
    if kind == "phi":
        est = cj.conjugate_phi(f, pt, p)
    elif kind == "psi":
        est = cj.conjugate_psi(f, pt, run.scalar("d"), p)
    elif kind == "theta_phi":
        est = cj.lower_conjugate_phi(f, pt, p)
    elif kind == "theta_psi":
        est = cj.lower_conjugate_psi(f, pt, run.scalar("d"), p)
    elif kind == "reflected":
        est = cj.conjugate_reflected(f, pt, p)
    else:
        est = cj.biconjugate_phi(f, pt, p)
    return run.estimate(est)


def cmd_polar(run: _Run):
    G = run.set()
    q = run.args.query
    if q == "bipolar":
        x = run.vec("x")
        if run.sf is Semifield.BOOLEAN:
            return {"member": x in pl.bipolar_set(G.points, boolean_domain(G.dim).points)}
        r = pl.bipolar_membership(x, G)
        out = {"member": r.member}
        if r.witness is not None:
            w = r.witness
            out["witness"] = {"y": encode_vector(w.y, run.sf), "sigma": run.enc(w.sigma),
                              "x_over_y": run.enc(w.x_over_y)}
        return out
    y = run.vec("y")
    if q == "support":
        return {"value": run.enc(pl.support_function(G, y)), "exactness": cj.EXACT}
    if q == "polar":
        return {"member": pl.polar_membership(y, G)}
    return {"member": pl.bar_polar_membership(y, G)}


def cmd_support(run: _Run):
    f = run.function()
    q = run.args.query
    if q == "witness":
        x0 = run.vec("x0")
        return {"y": encode_vector(sp.canonical_witness(f, x0), run.sf), "d": run.enc(f(x0))}
    if q == "reconstruct":
        x = run.vec("x")
        return {"value": run.enc(sp.supp_reconstruct(f, x, run.probes(f, [x]))), "exactness": cj.EXACT}
    y = run.vec("y")
    if q == "supp":
        return {"member": sp.supp_membership(f, y, run.probes(f, [y]))}
    x0 = run.vec("x0")
    p = run.probes(f, [x0, y])
    if q == "at_point":
        return {"member": sp.supp_at_point_X(f, x0, y, p)}
    if q == "at_point_xk":
        return {"member": sp.supp_at_point_XK(f, x0, y, run.scalar("d"), p)}
    return {"member": sp.phi_subdiff_membership(f, x0, y, p)}


def _theorems(names):
    if not names or names == ["all"]:
        return list(oracle.TheoremId)
    out = []
    for name in names:
        try:
            out.append(oracle.TheoremId(name))
        except ValueError:
            raise ParseError(f"unknown theorem id {name!r}") from None
    return out


def _check_n(args):
    if args.semifield != Semifield.BOOLEAN.value:
        raise ParseError("the exhaustive oracle runs in boolean mode only")
    if not 1 <= args.n <= oracle.MAX_N:
        raise DimensionError(f"--n must lie in 1..{oracle.MAX_N}")


def cmd_verify(args) -> int:
    _check_n(args)
    theorems = _theorems(args.theorem)
    failed = False
    for t in theorems:
        r = oracle.verify(t, args.n)
        failed |= not r.passed
        print(dumps(r.to_json()))
    return 1 if failed else 0


def cmd_census(args) -> int:
    _check_n(args)
    print(dumps(oracle.census(args.n)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--semifield", choices=[s.value for s in Semifield], default=Semifield.QMAX.value)
    common.add_argument("--dim", type=int, help="dimension, needed for constants and empty sets")
    common.add_argument("--seed", type=int, default=0, help="seed for random probes")
    common.add_argument("--input", help="JSON input file (default: stdin)")
    common.add_argument("--probes", help="JSON file with a list of extra probe vectors")
    common.add_argument("--random-probes", type=int, default=32, help="number of seeded random probes")

    parser = _Parser(prog="topical", description="Exact max-plus conjugation, polars and support sets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("eval", parents=[common], help="evaluate a function at x")
    c = sub.add_parser("conjugate", parents=[common], help="conjugates and biconjugate")
    c.add_argument("--coupling", choices=COUPLINGS, default="phi")
    p = sub.add_parser("polar", parents=[common], help="support function, polars, bipolar")
    p.add_argument("--query", choices=POLAR_QUERIES, default="polar")
    s = sub.add_parser("support", parents=[common], help="support sets and the phi-subdifferential")
    s.add_argument("--query", choices=SUPPORT_QUERIES, default="supp")
    for name, helptext in (("verify", "run the exhaustive Boolean oracle"), ("census", "count function classes")):
        v = sub.add_parser(name, help=helptext)
        v.add_argument("--semifield", choices=[s.value for s in Semifield], default=Semifield.BOOLEAN.value)
        v.add_argument("--n", type=int, default=2)
        if name == "verify":
            v.add_argument("--theorem", action="append", help="theorem id, repeatable, or 'all'")
    return parser


COMMANDS = {"eval": cmd_eval, "conjugate": cmd_conjugate, "polar": cmd_polar, "support": cmd_support}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "census":
            return cmd_census(args)
        print(dumps(COMMANDS[args.command](_Run(args))))
        return 0
    except TopicalError as exc:
        print(dumps({"error": str(exc), "type": type(exc).__name__}), file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
