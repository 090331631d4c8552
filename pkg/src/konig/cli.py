"""Command-line front end.

Every command prints one JSON record on standard output. Vertex labels,
edge ids, colors, factor and permutation entries are all 1-based. Exit codes:
0 on success, 1 when a precondition fails (the record names the error), 2 on
malformed input files or arguments.
"""

from __future__ import annotations

import argparse
import enum
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from . import coloring, factorization, formats, instances, matrix
from .errors import InternalInvariantViolation, KonigError, NotDivisible, ParseError
from .graph import BipartiteMultigraph, GeneralGraph, as_bipartite, components, two_coloring


class Status(enum.Enum):
    OK = 0
    PRECONDITION_FAILED = 1
    PARSE_ERROR = 2

    @property
    def label(self) -> str:
        return {0: "Ok", 1: "PreconditionFailed", 2: "ParseError"}[self.value]


@dataclass
class CommandResult:
    status: Status
    payload: dict = field(default_factory=dict)
    diagnostics: str = ""
    output: str | None = None
    text: str | None = None  # gen emits a graph/matrix file instead of JSON

    @property
    def exit_code(self) -> int:
        return self.status.value

    def render(self) -> str:
        if self.text is not None and self.status is Status.OK:
            return self.text
        return json.dumps({"status": self.status.label, **self.payload}, separators=(",", ":")) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise ParseError(message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_bipartite(path: str) -> BipartiteMultigraph:
    g = formats.parse_graph(_read(path))
    if isinstance(g, GeneralGraph):
        g, _ = as_bipartite(g)
    return g


def _ensure(ok: bool, reason: str | None) -> None:
    if not ok:
        raise InternalInvariantViolation(f"output failed verification: {reason}")


def _witness_record(w) -> dict:
    return {"length": len(w.edges),
            "vertices": [v + 1 for v in w.vertices],
            "edges": [e + 1 for e in w.edges]}


def cmd_check(args) -> dict:
    g = formats.parse_graph(_read(args.file))
    out: dict = {}
    if isinstance(g, GeneralGraph):
        result = two_coloring(g)
        out["format"] = "graph"
        out["bipartite"] = result.is_bipartite
        if not result.is_bipartite:
            out["witness"] = _witness_record(result.witness)
            return out
        out["classes"] = [c + 1 for c in result.classes]
        g, _ = as_bipartite(g)
    else:
        out["format"] = "bipartite"
        out["bipartite"] = True
    out.update(n_left=g.n_left, n_right=g.n_right, m=g.m,
               max_degree=g.max_degree(), regular_degree=g.regular_degree(),
               components=len(components(g)))
    return out


def cmd_color(args) -> dict:
    g = _load_bipartite(args.file)
    k = g.max_degree() if args.k is None else args.k
    if args.engine == "regularize":
        c = factorization.color_via_regularization(g, k)
    else:
        c = coloring.color_edges(g, k)
    _ensure(*coloring.verify_coloring(g, c))
    return {"k": k, "engine": args.engine, "colors_used": c.colors_used(),
            "assignments": [[e + 1, col + 1] for e, col in sorted(c.assignment.items())]}


def _factorize(g: BipartiteMultigraph, engine: str) -> factorization.Factorization:
    if engine == "pow2":
        return factorization.power_of_two_factorization(g)
    return factorization.one_factorization(g)


def _factors_record(fz: factorization.Factorization) -> list[list[int]]:
    return [[e + 1 for e in sorted(f.edges)] for f in fz.factors]


def cmd_factorize(args) -> dict:
    g = _load_bipartite(args.file)
    fz = _factorize(g, args.engine)
    _ensure(*factorization.verify_factorization(g, fz))
    return {"k": fz.degree, "engine": args.engine, "factors": _factors_record(fz)}


def cmd_matching(args) -> dict:
    g = _load_bipartite(args.file)
    if args.engine == "pow2":
        fz = factorization.power_of_two_factorization(g)
        f = fz.factors[0]
    else:
        f = factorization.perfect_matching(g)
    _ensure(factorization.is_factor(g, f), "not a perfect matching")
    return {"engine": args.engine, "edges": [e + 1 for e in sorted(f.edges)],
            "pairs": [[g.edges[e][0] + 1, g.edges[e][1] + 1] for e in sorted(f.edges)]}


def cmd_factor(args) -> dict:
    g = _load_bipartite(args.file)
    if args.mu is None:
        f = factorization.factor_of_degree(g, args.d)
    else:
        se = factorization.split_degree(g, args.mu)
        if args.d % args.mu:
            raise NotDivisible(f"mu={args.mu} does not divide d={args.d}")
        f = factorization.merge_factor(se, factorization.factor_of_degree(se.split, args.d // args.mu))
    _ensure(factorization.is_factor(g, f), f"not a factor of degree {f.degree}")
    rest = factorization.complement(g, f)
    _ensure(factorization.is_factor(g, rest), "complement is not a factor")
    return {"d": f.degree, "edges": [e + 1 for e in sorted(f.edges)],
            "complement_degree": rest.degree}


def cmd_decompose(args) -> dict:
    m = formats.parse_matrix(_read(args.file))
    d = matrix.decompose_into_permutations(m)
    _ensure(*matrix.verify_decomposition(m, d))
    return d.as_record()


def cmd_member(args) -> dict:
    m = formats.parse_matrix(_read(args.file))
    p = matrix.nonzero_member(m)
    _ensure(all(m[i, k] > 0 for i, k in enumerate(p)), "selected a zero entry")
    return {"permutation": [k + 1 for k in p],
            "entries": [str(m[i, k]) for i, k in enumerate(p)]}


def cmd_support_decompose(args) -> dict:
    m = formats.parse_matrix(_read(args.file))
    d = matrix.support_decomposition(m)
    _ensure(*matrix.verify_decomposition(m, d))
    return {"k": len(d), **d.as_record()}


def cmd_count_members(args) -> dict:
    m = formats.parse_matrix(_read(args.file))
    return {"n": m.n, "nonzero_members": matrix.count_nonzero_members_bruteforce(m)}


_GEN_PARAMS = {
    "regular": ("n", "k"),
    "bounded": ("n_left", "n_right", "max_deg", "edge_count"),
    "matrix": ("n", "s"),
}


def _parse_params(kind: str, items: list[str]) -> dict[str, int]:
    wanted = _GEN_PARAMS[kind]
    params: dict[str, int] = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or key not in wanted:
            raise ParseError(f"--params for {kind} takes {', '.join(k + '=<int>' for k in wanted)}")
        try:
            params[key] = int(value)
        except ValueError:
            raise ParseError(f"parameter {key} must be an integer") from None
    missing = [k for k in wanted if k not in params]
    if missing:
        raise ParseError(f"missing parameters: {', '.join(missing)}")
    return params


def cmd_gen(args) -> dict:
    p = _parse_params(args.kind, args.params)
    if args.kind == "regular":
        text = formats.format_graph(instances.random_regular_bipartite(p["n"], p["k"], args.seed))
    elif args.kind == "bounded":
        text = formats.format_graph(instances.random_bounded_degree_bipartite(
            p["n_left"], p["n_right"], p["max_deg"], p["edge_count"], args.seed))
    else:
        text = formats.format_matrix(instances.random_equal_line_sum_matrix(p["n"], p["s"], args.seed))
    return {"kind": args.kind, "seed": args.seed, "text": text}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="konig", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func: Callable, help: str, file: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--output", help="write the record to this file instead of stdout")
        if file:
            p.add_argument("file")
        return p

    add("check", cmd_check, "bipartiteness (with odd-walk witness) and regularity")
    p = add("color", cmd_color, "proper edge coloring with k colors")
    p.add_argument("--k", type=int, help="number of colors (default: max degree)")
    p.add_argument("--engine", choices=("alternating", "regularize"), default="alternating")
    for name, func, help in (("factorize", cmd_factorize, "split a regular graph into perfect matchings"),
                             ("matching", cmd_matching, "one perfect matching of a regular graph")):
        p = add(name, func, help)
        p.add_argument("--engine", choices=("coloring", "pow2"), default="coloring")
    p = add("factor", cmd_factor, "factor of degree d of a regular graph")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mu", type=int, help="go through the split graph with mu copies per vertex")
    add("decompose", cmd_decompose, "sum of permutation matrices")
    add("member", cmd_member, "a permutation picking only positive entries")
    add("support-decompose", cmd_support_decompose, "permutations covering each nonzero cell once")
    add("count-members", cmd_count_members, "brute-force count of nonzero determinant members")
    p = add("gen", cmd_gen, "seeded random instance", file=False)
    p.add_argument("--kind", choices=tuple(_GEN_PARAMS), required=True)
    p.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE")
    p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv: list[str]) -> CommandResult:
    command = None
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        payload = args.func(args)
    except ParseError as exc:
        return CommandResult(Status.PARSE_ERROR, {"command": command, "error": exc.name,
                                                  "message": str(exc)}, str(exc))
    except KonigError as exc:
        return CommandResult(Status.PRECONDITION_FAILED,
                             {"command": command, "error": exc.name, "message": str(exc)}, str(exc))
    text = payload.pop("text", None)
    return CommandResult(Status.OK, {"command": command, **payload}, output=args.output, text=text)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    result = run(argv)
    if result.diagnostics:
        print(f"konig: {result.diagnostics}", file=sys.stderr)
    if result.output:
        Path(result.output).write_text(result.render())
    else:
        sys.stdout.write(result.render())
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
