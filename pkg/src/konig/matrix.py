"""Square nonnegative matrices as bipartite multigraphs.

Row ``i`` is Left vertex ``i``, column ``k`` is Right vertex ``k`` and an
integer entry ``a`` becomes ``a`` parallel edges. Permutations are 0-based
tuples ``p`` with ``p[i]`` the column chosen in row ``i``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    IrregularSupport,
    NegativeEntry,
    NonIntegerEntry,
    TooLarge,
    UnequalLineSums,
    ZeroSum,
)
from .factorization import one_factorization, perfect_matching
from .graph import BipartiteMultigraph

Number = Union[int, Fraction, str]
Permutation = tuple[int, ...]

BRUTE_FORCE_LIMIT = 8

_COUNTEREXAMPLE_NOTE = (
    "nonnegative entries are required: [[0,0,1],[0,0,1],[1,1,-1]] has equal line "
    "sums 1 yet every member of its determinant vanishes"
)


@dataclass(frozen=True)
class ExactMatrix:
    """Square matrix of exact rationals."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable[Number]]):
        stored = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(stored)
        for i, row in enumerate(stored):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
        object.__setattr__(self, "rows", stored)

    @classmethod
    def zeros(cls, n: int) -> ExactMatrix:
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls([[int(i == k) for k in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ik: tuple[int, int]) -> Fraction:
        i, k = ik
        return self.rows[i][k]

    def row_sums(self) -> list[Fraction]:
        return [sum(row, Fraction(0)) for row in self.rows]

    def column_sums(self) -> list[Fraction]:
        return [sum(col, Fraction(0)) for col in zip(*self.rows)] if self.rows else []

    def support(self) -> ExactMatrix:
        return ExactMatrix([[int(x != 0) for x in row] for row in self.rows])

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for row in self.rows for x in row)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self.rows]


def _check_nonnegative(m: ExactMatrix) -> None:
    for i, row in enumerate(m.rows):
        for k, x in enumerate(row):
            if x < 0:
                raise NegativeEntry(f"entry ({i + 1},{k + 1}) = {x} is negative; {_COUNTEREXAMPLE_NOTE}")


def _check_integer(m: ExactMatrix) -> None:
    for i, row in enumerate(m.rows):
        for k, x in enumerate(row):
            if x.denominator != 1:
                raise NonIntegerEntry(f"entry ({i + 1},{k + 1}) = {x} is not an integer")


def _common_line_sum(m: ExactMatrix) -> Fraction:
    sums = set(m.row_sums()) | set(m.column_sums())
    if len(sums) > 1:
        raise UnequalLineSums(
            f"row sums {[str(s) for s in m.row_sums()]} and column sums "
            f"{[str(s) for s in m.column_sums()]} are not all equal")
    return sums.pop() if sums else Fraction(0)


def graph_from_matrix(m: ExactMatrix) -> BipartiteMultigraph:
    """``a[i][k]`` parallel edges between row ``i`` and column ``k``, row-major."""
    _check_nonnegative(m)
    _check_integer(m)
    edges = [(i, k) for i, row in enumerate(m.rows) for k, x in enumerate(row)
             for _ in range(int(x))]
    return BipartiteMultigraph(m.n, m.n, edges)


def normalize_rational(m: ExactMatrix) -> tuple[ExactMatrix, int]:
    """Scale by the lcm of all denominators to get an integer matrix."""
    _check_nonnegative(m)
    scale = math.lcm(*(x.denominator for row in m.rows for x in row)) if m.n else 1
    return ExactMatrix([[x * scale for x in row] for row in m.rows]), scale


def nonzero_member(m: ExactMatrix) -> Permutation:
    """A permutation selecting only positive entries.

    Such a permutation exists whenever the entries are nonnegative and all
    row and column sums share one positive value.

    Raises:
        NegativeEntry: If an entry is negative.
        UnequalLineSums: If the line sums differ.
        ZeroSum: If the common line sum is zero.
    """
    _check_nonnegative(m)
    s = _common_line_sum(m)
    if m.n == 0:
        return ()
    if s == 0:
        raise ZeroSum("all line sums are zero")
    scaled, _ = normalize_rational(m)
    g = graph_from_matrix(scaled)
    sigma = [-1] * m.n
    for e in perfect_matching(g).edges:
        i, k = g.edges[e]
        sigma[i] = k
    return tuple(sigma)


@dataclass(frozen=True)
class PermutationDecomposition:
    """Permutations together with the entry each one consumes in every row.

    ``mode`` is ``"sum"`` when the permutation matrices add up to the matrix
    and ``"support"`` when they cover each nonzero cell exactly once.
    """

    parts: tuple[Permutation, ...]
    certificate: tuple[tuple[Fraction, ...], ...]
    mode: str

    def __len__(self) -> int:
        return len(self.parts)

    def sum_matrix(self, n: int) -> ExactMatrix:
        acc = [[0] * n for _ in range(n)]
        for p in self.parts:
            for i, k in enumerate(p):
                acc[i][k] += 1
        return ExactMatrix(acc)

    def as_record(self) -> dict:
        return {"s": len(self.parts), "permutations": [[k + 1 for k in p] for p in self.parts]}


def _permutations_from_graph(g: BipartiteMultigraph) -> list[Permutation]:
    out = []
    for f in one_factorization(g).factors:
        sigma = [-1] * g.n_left
        for e in f.edges:
            i, k = g.edges[e]
            sigma[i] = k
        out.append(tuple(sigma))
    return out


def decompose_into_permutations(m: ExactMatrix) -> PermutationDecomposition:
    """Write an integer matrix with equal line sums ``s`` as a sum of ``s``
    permutation matrices (repeats allowed).

    Raises:
        NegativeEntry, NonIntegerEntry, UnequalLineSums
    """
    _check_nonnegative(m)
    _check_integer(m)
    _common_line_sum(m)
    parts = _permutations_from_graph(graph_from_matrix(m))
    cert = tuple(tuple(m[i, k] for i, k in enumerate(p)) for p in parts)
    return PermutationDecomposition(tuple(parts), cert, "sum")


def support_decomposition(m: ExactMatrix) -> PermutationDecomposition:
    """``k`` permutations covering each nonzero cell exactly once.

    Needs exactly ``k`` nonzero cells in every row and column. Entry values,
    signs included, are irrelevant.
    """
    counts = [sum(1 for x in row if x != 0) for row in m.rows]
    counts += [sum(1 for x in col if x != 0) for col in zip(*m.rows)]
    if len(set(counts)) > 1:
        raise IrregularSupport(f"nonzero counts per row/column are {counts}, not all equal")
    parts = _permutations_from_graph(graph_from_matrix(m.support()))
    cert = tuple(tuple(m[i, k] for i, k in enumerate(p)) for p in parts)
    return PermutationDecomposition(tuple(parts), cert, "support")


def verify_decomposition(m: ExactMatrix, d: PermutationDecomposition) -> tuple[bool, str | None]:
    n = m.n
    for p in d.parts:
        if sorted(p) != list(range(n)):
            return False, f"{p} is not a permutation of 0..{n - 1}"
    if d.mode == "sum":
        if d.sum_matrix(n) != m:
            return False, "permutation matrices do not sum to the input"
        return True, None
    used = d.sum_matrix(n)
    for i in range(n):
        for k in range(n):
            want = int(m[i, k] != 0)
            if used[i, k] != want:
                return False, f"cell ({i + 1},{k + 1}) covered {used[i, k]} times, expected {want}"
    return True, None


def count_nonzero_members_bruteforce(m: ExactMatrix) -> int:
    """Number of permutations whose selected entries are all nonzero.

    Enumerates all ``n!`` permutations, so ``n`` is capped.
    """
    if m.n > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"n={m.n} exceeds the brute-force limit {BRUTE_FORCE_LIMIT}")
    rows = m.rows
    return sum(1 for p in itertools.permutations(range(m.n))
               if all(rows[i][k] != 0 for i, k in enumerate(p)))


def permutation_matrix(p: Sequence[int]) -> ExactMatrix:
    n = len(p)
    return ExactMatrix([[int(p[i] == k) for k in range(n)] for i in range(n)])
