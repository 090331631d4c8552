"""Named fixtures and seeded random instance generators.

Generators draw from ``random.Random(seed)`` only, so a seed and parameter
set always reproduce the same instance.

Fixture numbering:

* ``cube``: vertices of {0,1}^3 read as 3-bit numbers. Left holds the
  even-parity corners 000, 011, 101, 110 and Right the odd ones 001, 010,
  100, 111, both in increasing numeric order. Edges are listed per Left
  corner, flipping bit 0, 1, 2 in turn.
* ``petersen``: outer 5-cycle 0..4, spokes ``i -- i+5``, inner pentagram
  ``5+i -- 5+(i+2)%5``.
* ``k33``: Left ``i`` to Right ``j`` for all ``i, j`` in row-major order.
* ``path2``: A1 - B1 - A2.
* ``four_cycle``: A1 B1 A2 B2 A1.
"""

from __future__ import annotations

import random

from .errors import Infeasible, UnknownFixture
from .graph import BipartiteMultigraph, GeneralGraph
from .matrix import ExactMatrix

FIXTURES = ("cube", "petersen", "k33", "koenig_counterexample_matrix", "path2", "four_cycle")

_EVEN = [0b000, 0b011, 0b101, 0b110]
_ODD = [0b001, 0b010, 0b100, 0b111]


def cube_general() -> GeneralGraph:
    """The cube as a plain graph on corners 0..7 (corner = 3-bit number)."""
    return GeneralGraph(8, [(x, x ^ (1 << b)) for x in range(8) for b in range(3) if x < x ^ (1 << b)])


def cube() -> BipartiteMultigraph:
    edges = [(i, _ODD.index(x ^ (1 << b))) for i, x in enumerate(_EVEN) for b in range(3)]
    return BipartiteMultigraph(4, 4, edges)


def petersen() -> GeneralGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return GeneralGraph(10, outer + spokes + inner)


def complete_bipartite(n: int) -> BipartiteMultigraph:
    return BipartiteMultigraph(n, n, [(i, j) for i in range(n) for j in range(n)])


def fixture(name: str):
    """Canonical instance by name; see the module docstring for numbering."""
    if name == "cube":
        return cube()
    if name == "petersen":
        return petersen()
    if name == "k33":
        return complete_bipartite(3)
    if name == "koenig_counterexample_matrix":
        return ExactMatrix([[0, 0, 1], [0, 0, 1], [1, 1, -1]])
    if name == "path2":
        return BipartiteMultigraph(2, 1, [(0, 0), (1, 0)])
    if name == "four_cycle":
        return BipartiteMultigraph(2, 2, [(0, 0), (1, 0), (1, 1), (0, 1)])
    raise UnknownFixture(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")


def _permutation(rng: random.Random, n: int) -> list[int]:
    p = list(range(n))
    rng.shuffle(p)
    return p


def random_regular_bipartite(n: int, k: int, seed: int) -> BipartiteMultigraph:
    """Union of ``k`` independent uniform permutations on ``n + n`` vertices."""
    rng = random.Random(seed)
    edges = []
    for _ in range(k):
        p = _permutation(rng, n)
        edges += [(i, p[i]) for i in range(n)]
    return BipartiteMultigraph(n, n, edges)


def random_bounded_degree_bipartite(n_left: int, n_right: int, max_deg: int,
                                    edge_count: int, seed: int) -> BipartiteMultigraph:
    """Random multigraph with ``edge_count`` edges and every degree ``<= max_deg``.

    Endpoints are drawn uniformly and redrawn while saturated.

    Raises:
        Infeasible: If the degree bound cannot hold ``edge_count`` edges.
    """
    capacity = min(n_left, n_right) * max_deg
    if edge_count < 0 or edge_count > capacity:
        raise Infeasible(
            f"{edge_count} edges do not fit sides ({n_left}, {n_right}) with max degree {max_deg}")
    rng = random.Random(seed)
    left = [0] * n_left
    right = [0] * n_right
    edges = []
    for _ in range(edge_count):
        u = rng.randrange(n_left)
        while left[u] >= max_deg:
            u = rng.randrange(n_left)
        v = rng.randrange(n_right)
        while right[v] >= max_deg:
            v = rng.randrange(n_right)
        left[u] += 1
        right[v] += 1
        edges.append((u, v))
    return BipartiteMultigraph(n_left, n_right, edges)


def random_equal_line_sum_matrix(n: int, s: int, seed: int) -> ExactMatrix:
    """Sum of ``s`` random ``n x n`` permutation matrices."""
    rng = random.Random(seed)
    acc = [[0] * n for _ in range(n)]
    for _ in range(s):
        for i, k in enumerate(_permutation(rng, n)):
            acc[i][k] += 1
    return ExactMatrix(acc)


def random_regular_support(n: int, k: int, seed: int, max_tries: int = 10_000) -> ExactMatrix:
    """0/1 matrix with exactly ``k`` ones per line: ``k`` cell-disjoint random permutations.

    Each permutation is redrawn until it avoids the cells already used. The
    free cells always form an ``(n-j)``-regular pattern after ``j`` draws, so
    a valid permutation exists.
    """
    if not 0 <= k <= n:
        raise Infeasible(f"cannot place {k} disjoint permutations in {n}x{n}")
    rng = random.Random(seed)
    acc = [[0] * n for _ in range(n)]
    for _ in range(k):
        for _ in range(max_tries):
            p = _permutation(rng, n)
            if all(acc[i][p[i]] == 0 for i in range(n)):
                break
        else:
            raise Infeasible(f"no disjoint permutation found in {max_tries} draws")
        for i in range(n):
            acc[i][p[i]] = 1
    return ExactMatrix(acc)
