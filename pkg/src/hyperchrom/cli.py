"""Command-line entry point: ``hyperchrom <command> ...``.

Inputs are ``p hg`` / ``p mg`` files, ``-`` for standard input, or a built-in
``fixture:<name>``.  Exit status: 0 success, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction

from . import analysis, constructions
from .chromatic import (
    INTERPOLATE_LIMIT,
    PARTITION_LIMIT,
    WHITNEY_LIMIT,
    chrom_interpolate,
    chrom_level,
    chrom_partition,
    chrom_poly,
    whitney_coeffs,
)
from .hypergraph import Hypergraph, ParseError, parse_hypergraph
from .independence import SimpleGraph, independence_poly
from .multigraph import Multigraph, parse_multigraph
from .orientations import orientation_counts
from .poly import IntPolynomial, PolynomialError, root_multiplicity, sturm_real_roots
from .tutte import tutte_dc, tutte_eval, tutte_subset

SEED_ENV = "HYPERCHROM_SEED"

FIXTURES = {
    "figure1b": constructions.figure1b,
    "theorem3": constructions.theorem3_instance,
    "k3": lambda: Multigraph(3, ((0, 1), (0, 2), (1, 2))),
    "double-edge": constructions.double_edge,
}


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# input handling


def _read(source: str) -> tuple[object, str]:
    """Return (parsed object, raw text used for the digest)."""
    if source.startswith("fixture:"):
        name = source.split(":", 1)[1]
        if name not in FIXTURES:
            raise InputError(f"unknown fixture {name!r}; choose from {', '.join(sorted(FIXTURES))}")
        return FIXTURES[name](), source
    text = sys.stdin.read() if source == "-" else open(source, encoding="utf-8").read()
    for raw in text.splitlines():
        tokens = raw.split()
        if not tokens or tokens[0] == "c" or raw.lstrip().startswith("c"):
            continue
        if tokens[:2] == ["p", "mg"]:
            return parse_multigraph(text), text
        break
    return parse_hypergraph(text), text


def as_hypergraph(obj) -> Hypergraph:
    if isinstance(obj, Multigraph):
        return obj.as_hypergraph()
    return obj


def as_multigraph(obj) -> Multigraph:
    if isinstance(obj, Multigraph):
        return obj
    if any(len(e) > 2 for e in obj.edges):
        raise InputError("this command needs a graph (edges of size <= 2)")
    return Multigraph(obj.n, tuple((e[0], e[-1]) for e in obj.edges))


def as_simple(obj) -> SimpleGraph:
    g = as_multigraph(obj)
    try:
        return SimpleGraph.from_multigraph(g)
    except ValueError as exc:
        raise InputError(f"this command needs a simple graph: {exc}") from exc


# ---------------------------------------------------------------------------
# output


class Reporter:
    def __init__(self, command: str, digest: str, as_json: bool):
        self.command = command
        self.digest = digest
        self.as_json = as_json
        self.start = time.perf_counter()
        self.failed = False

    def emit(self, text_lines: list[str], result) -> None:
        if self.as_json:
            record = {
                "command": self.command,
                "input-digest": self.digest,
                "result": result,
                "timing": round(time.perf_counter() - self.start, 6),
            }
            print(json.dumps(record, sort_keys=True))
        else:
            for line in text_lines:
                print(line)

    def check(self, res: analysis.CheckResult) -> None:
        self.failed |= not res.ok
        self.emit([res.line()], {"status": "ok" if res.ok else "FAIL", "check": res.check_id, "detail": res.detail})


def _digest(raw: str) -> str:
    return hashlib.sha256(raw.encode()).hexdigest()[:16]


def factored(p: IntPolynomial) -> str:
    """``λ^a (λ-1)^b ... * [cofactor]`` over integer roots ``-2..2``."""
    if p.is_zero():
        return "factored 0"
    parts = []
    rest = p
    for c in (0, 1, -1, 2, -2):
        k = root_multiplicity(rest, c)
        for _ in range(k):
            rest = rest.divmod_linear(c)[0]
        if k:
            base = "λ" if c == 0 else (f"(λ-{c})" if c > 0 else f"(λ+{-c})")
            parts.append(f"{base}^{k}")
    if rest != IntPolynomial([1]):
        parts.append(f"[{rest}]")
    return "factored " + " ".join(parts)


def _frac(x: Fraction) -> str:
    return str(x)


# ---------------------------------------------------------------------------
# commands


def cmd_chrom(args, rep: Reporter, obj) -> None:
    h = as_hypergraph(obj)
    algos = {
        "dc": lambda: chrom_poly(h),
        "interp": lambda: chrom_interpolate(h),
        "partition": lambda: chrom_partition(h),
        "level": lambda: chrom_level(h, args.vertex),
        "whitney": lambda: whitney_coeffs(h),
    }
    if args.algo == "level" and not 0 <= args.vertex < max(h.n, 1):
        raise InputError(f"vertex {args.vertex} out of range")
    p = algos[args.algo]()
    rep.emit([p.to_text(), factored(p)], {"poly": p.to_text(), "factored": factored(p)})
    if args.check_all:
        usable = ["dc"]
        if h.n <= INTERPOLATE_LIMIT:
            usable.append("interp")
        if h.n <= PARTITION_LIMIT:
            usable.append("partition")
        if h.n:
            usable.append("level")
        if h.m <= WHITNEY_LIMIT:
            usable.append("whitney")
        values = {name: algos[name]() for name in usable}
        bad = [name for name, q in values.items() if q != p]
        if bad:
            res = analysis.CheckResult(
                "check-all", False, " ".join(f"{k}={v.to_text()}" for k, v in values.items())
            )
        else:
            res = analysis.CheckResult("check-all", True, ",".join(usable))
        rep.check(res)


def cmd_tutte(args, rep: Reporter, obj) -> None:
    g = as_multigraph(obj)
    t = tutte_subset(g) if args.algo == "subset" else tutte_dc(g)
    rep.emit(t.to_lines(), {"terms": t.to_lines()})


def cmd_indep(args, rep: Reporter, obj) -> None:
    p = independence_poly(as_simple(obj))
    rep.emit([p.to_text()], {"poly": p.to_text()})


def cmd_construct(args, rep: Reporter) -> None:
    kind, params = args.kind, args.params
    try:
        if kind == "apex":
            h = constructions.h_apex(as_simple(_read(params[0])[0]))
        elif kind == "edge":
            h = constructions.h_edge(as_multigraph(_read(params[0])[0]))
        elif kind == "plus-k1":
            h = as_hypergraph(_read(params[0])[0]).plus_k1()
        elif kind == "family":
            h = constructions.family_st(int(params[0]), int(params[1]))
        elif kind == "complete":
            h = constructions.complete_hypergraph(int(params[0]))
        elif kind == "fixture":
            h = as_hypergraph(_read(f"fixture:{params[0]}")[0])
        else:
            raise InputError(f"unknown construction {kind!r}")
    except IndexError as exc:
        raise InputError(f"construction {kind!r} is missing arguments") from exc
    text = h.to_text()
    rep.emit(text.splitlines(), {"hypergraph": text})


def cmd_orient(args, rep: Reporter, obj) -> None:
    g = as_multigraph(obj)
    acyclic, cyclic = orientation_counts(g)
    t = tutte_dc(g)
    t20, t02 = tutte_eval(t, 2, 0), tutte_eval(t, 0, 2)
    lines = [f"acyclic {acyclic}", f"totally-cyclic {cyclic}", f"T(2,0)={t20}", f"T(0,2)={t02}"]
    rep.emit(lines, {"acyclic": acyclic, "totally_cyclic": cyclic, "T(2,0)": str(t20), "T(0,2)": str(t02)})
    if acyclic != t20 or cyclic != t02:
        rep.check(analysis.CheckResult("orient", False, "orientation counts disagree with Tutte values"))


def cmd_roots(args, rep: Reporter, obj) -> None:
    p = obj if isinstance(obj, IntPolynomial) else chrom_poly(as_hypergraph(obj))
    if p.is_zero():
        rep.emit([p.to_text(), "roots undefined for the zero polynomial"], {"poly": p.to_text(), "roots": None})
        return
    roots = sturm_real_roots(p, args.precision_bits)
    real = sum(r.multiplicity for r in roots)
    lines = [p.to_text(), f"degree {p.degree} real {real}"]
    payload = []
    for r in roots:
        if r.exact is not None:
            lines.append(f"root {_frac(r.lo)} mult {r.multiplicity}")
        else:
            lines.append(f"root [{_frac(r.lo)}, {_frac(r.hi)}] mult {r.multiplicity}")
        payload.append({"lo": str(r.lo), "hi": str(r.hi), "multiplicity": r.multiplicity})
    rep.emit(lines, {"poly": p.to_text(), "degree": p.degree, "real": real, "roots": payload})


def cmd_coeffs(args, rep: Reporter, obj) -> None:
    h = as_hypergraph(obj)
    p = whitney_coeffs(h)
    lines = [p.to_text()]
    result = {"poly": p.to_text()}
    if h.edges and all(len(e) >= 2 for e in h.edges):
        pat = analysis.coefficient_pattern(h)
        lines.append(
            f"pattern gap={pat.gap_ok} alternating={pat.alternating} log-concave={pat.log_concave}"
        )
        result["pattern"] = {
            "gap": pat.gap_ok,
            "alternating": pat.alternating,
            "log_concave": pat.log_concave,
            "asserted": pat.asserted,
        }
        rep.emit(lines, result)
        rep.check(analysis.CheckResult("patterns", pat.ok, f"asserted={','.join(pat.asserted) or 'none'}"))
    else:
        rep.emit(lines, result)


def _single_checks(name: str, obj, precision_bits: int):
    if name == "thm1":
        yield analysis.verify_thm1(as_simple(obj))
    elif name == "thm2":
        yield analysis.verify_thm2(as_multigraph(obj))
    elif name == "cor2":
        g = as_multigraph(obj)
        yield analysis.verify_cor2(g)
        yield analysis.verify_stanley(g)
    elif name == "thm3":
        h = as_hypergraph(obj)
        r = analysis.lambda_sq_check(h)
        yield analysis.CheckResult(
            "thm3", not r.violated, f"hypothesis={r.hypothesis_holds} divisible={r.divisible}"
        )
    elif name == "thm4":
        h = as_hypergraph(obj)
        yield from analysis.check_thm4_all_separations(h)
    elif name == "recursions":
        if isinstance(obj, Multigraph):
            yield from analysis.verify_prop10(obj)
            for i in range(obj.m):
                yield analysis.verify_edge_recursion(obj, i)
        h = as_hypergraph(obj)
        yield analysis.verify_cor7(h)
        for e in h.edges:
            yield analysis.verify_add_identify(h.remove(()), e)
    elif name == "patterns":
        pat = analysis.coefficient_pattern(as_hypergraph(obj))
        yield analysis.CheckResult("patterns", pat.ok, f"coeffs={list(pat.coeffs)}")
    elif name == "roots":
        c = analysis.real_root_census(as_hypergraph(obj), precision_bits)
        yield analysis.CheckResult("roots", True, f"degree={c.degree} real={c.real_count}")


def cmd_verify(args, rep: Reporter) -> None:
    if args.sweep:
        checks = analysis.SWEEPS[args.name](args.seed)
    else:
        if args.input is None:
            raise InputError("verify needs --input or --sweep")
        obj, _ = _read(args.input)
        checks = _single_checks(args.name, obj, args.precision_bits)
    for res in checks:
        rep.check(res)


# ---------------------------------------------------------------------------


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return analysis.DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{SEED_ENV} must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON object per report line")
    common.add_argument("--seed", type=int, default=None, help=f"random seed (default ${SEED_ENV})")
    common.add_argument("--precision-bits", type=int, default=32, help="root isolation width 2^-bits")

    parser = argparse.ArgumentParser(prog="hyperchrom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chrom", parents=[common], help="chromatic polynomial of a hypergraph")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--algo", choices=["dc", "interp", "partition", "level", "whitney"], default="dc")
    p.add_argument("--vertex", type=int, default=0, help="pivot vertex for --algo level")
    p.add_argument("--check-all", action="store_true", help="run every applicable algorithm and compare")

    p = sub.add_parser("tutte", parents=[common], help="Tutte polynomial of a multigraph")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--algo", choices=["dc", "subset"], default="dc")

    p = sub.add_parser("indep", parents=[common], help="independence polynomial of a simple graph")
    p.add_argument("input", nargs="?", default="-")

    p = sub.add_parser("construct", parents=[common], help="emit a constructed hypergraph")
    p.add_argument("kind", choices=["apex", "edge", "plus-k1", "family", "complete", "fixture"])
    p.add_argument("params", nargs="*")

    p = sub.add_parser("orient", parents=[common], help="orientation counts vs Tutte values")
    p.add_argument("input", nargs="?", default="-")

    p = sub.add_parser("roots", parents=[common], help="real-root isolation of P(H) or a poly line")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--poly", help="isolate roots of this 'poly <deg> c0 ...' instead")

    p = sub.add_parser("verify", parents=[common], help="run identity and criterion checks")
    p.add_argument("name", choices=sorted(analysis.SWEEPS))
    p.add_argument("--input")
    p.add_argument("--sweep", action="store_true")

    p = sub.add_parser("coeffs", parents=[common], help="subgraph-expansion coefficients and patterns")
    p.add_argument("input", nargs="?", default="-")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed is None:
            args.seed = _default_seed()
        if args.precision_bits < 1:
            raise InputError("--precision-bits must be positive")
        if args.command == "construct":
            rep = Reporter("construct", _digest(" ".join([args.kind, *args.params])), args.json)
            cmd_construct(args, rep)
        elif args.command == "verify":
            source = args.input if not args.sweep else f"sweep:{args.name}:{args.seed}"
            rep = Reporter("verify", _digest(source or ""), args.json)
            cmd_verify(args, rep)
        elif args.command == "roots" and args.poly:
            rep = Reporter("roots", _digest(args.poly), args.json)
            cmd_roots(args, rep, IntPolynomial.from_text(args.poly))
        else:
            obj, raw = _read(args.input)
            rep = Reporter(args.command, _digest(raw), args.json)
            handler = {
                "chrom": cmd_chrom,
                "tutte": cmd_tutte,
                "indep": cmd_indep,
                "orient": cmd_orient,
                "roots": cmd_roots,
                "coeffs": cmd_coeffs,
            }[args.command]
            handler(args, rep, obj)
    except BrokenPipeError:
        # reader went away (e.g. piped into head); stay quiet
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0
    except ParseError as exc:
        print(f"hyperchrom: parse error: {exc}", file=sys.stderr)
        return 2
    except (InputError, PolynomialError, OSError, ValueError) as exc:
        print(f"hyperchrom: error: {exc}", file=sys.stderr)
        return 2
    return 1 if rep.failed else 0


if __name__ == "__main__":
    sys.exit(main())
