"""Plain-text graph and matrix files.

Graph files::

    bipartite <n_left> <n_right> <m>
    e <left> <right>        # m lines, 1-based

    graph <n> <m>
    e <u> <v>               # m lines, 1-based

Matrix files::

    matrix <n>
    <n whitespace separated entries>   # n lines; integers or p/q

Lines starting with ``#`` and blank lines are ignored. Counts are checked.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import KonigError, ParseError
from .graph import BipartiteMultigraph, GeneralGraph
from .matrix import ExactMatrix


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            out.append((no, stripped.split()))
    return out


def _count(token: str, no: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"line {no}: expected a count, got {token!r}") from None
    if value < 0:
        raise ParseError(f"line {no}: negative count {value}")
    return value


def parse_graph(text: str) -> BipartiteMultigraph | GeneralGraph:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty graph file")
    no, head = lines[0]
    if head[0] == "bipartite" and len(head) == 4:
        nl, nr, m = (_count(t, no) for t in head[1:])
    elif head[0] == "graph" and len(head) == 3:
        nl, m = (_count(t, no) for t in head[1:])
        nr = None
    else:
        raise ParseError(f"line {no}: expected 'bipartite <n_left> <n_right> <m>' or 'graph <n> <m>'")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges, file has {len(body)} edge lines")
    edges = []
    for no, tokens in body:
        if len(tokens) != 3 or tokens[0] != "e":
            raise ParseError(f"line {no}: expected 'e <u> <v>'")
        u, v = _count(tokens[1], no), _count(tokens[2], no)
        if u < 1 or v < 1:
            raise ParseError(f"line {no}: vertex labels are 1-based")
        edges.append((u - 1, v - 1))
    try:
        if nr is None:
            return GeneralGraph(nl, edges)
        return BipartiteMultigraph(nl, nr, edges)
    except KonigError as exc:
        raise ParseError(str(exc)) from None


def format_graph(g: BipartiteMultigraph | GeneralGraph) -> str:
    if isinstance(g, BipartiteMultigraph):
        head = f"bipartite {g.n_left} {g.n_right} {g.m}"
    else:
        head = f"graph {g.n_vertices} {len(g.edges)}"
    return "\n".join([head] + [f"e {u + 1} {v + 1}" for u, v in g.edges]) + "\n"


_ENTRY = re.compile(r"-?\d+(/\d+)?")


def parse_matrix(text: str) -> ExactMatrix:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty matrix file")
    no, head = lines[0]
    if head[0] != "matrix" or len(head) != 2:
        raise ParseError(f"line {no}: expected 'matrix <n>'")
    n = _count(head[1], no)
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"header declares {n} rows, file has {len(body)}")
    rows = []
    for no, tokens in body:
        if len(tokens) != n:
            raise ParseError(f"line {no}: expected {n} entries, got {len(tokens)}")
        bad = [t for t in tokens if not _ENTRY.fullmatch(t)]
        if bad:
            raise ParseError(f"line {no}: entry {bad[0]!r} is not an integer or p/q rational")
        try:
            rows.append([Fraction(t) for t in tokens])
        except ZeroDivisionError:
            raise ParseError(f"line {no}: zero denominator") from None
    return ExactMatrix(rows)


def format_matrix(m: ExactMatrix) -> str:
    return "\n".join([f"matrix {m.n}"] + [" ".join(str(x) for x in row) for row in m.rows]) + "\n"


def format_dot(g: BipartiteMultigraph) -> str:
    """Edge dump in DOT syntax, vertices labelled A1.. and B1.."""
    lines = ["graph G {"]
    lines += [f"  A{u + 1} -- B{v + 1};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
