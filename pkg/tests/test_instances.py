import pytest

from konig.errors import Infeasible, UnknownFixture
from konig.graph import BipartiteMultigraph, GeneralGraph, two_coloring
from konig.instances import (
    FIXTURES,
    fixture,
    random_bounded_degree_bipartite,
    random_equal_line_sum_matrix,
    random_regular_bipartite,
    random_regular_support,
)
from konig.matrix import ExactMatrix


def test_fixture_shapes():
    cube = fixture("cube")
    assert isinstance(cube, BipartiteMultigraph) and cube.n_vertices == 8 and cube.m == 12
    petersen = fixture("petersen")
    assert isinstance(petersen, GeneralGraph)
    assert petersen.n_vertices == 10 and len(petersen.edges) == 15
    assert not two_coloring(petersen).is_bipartite
    deg = [0] * 10
    for u, v in petersen.edges:
        deg[u] += 1
        deg[v] += 1
    assert set(deg) == {3}
    assert fixture("koenig_counterexample_matrix") == ExactMatrix([[0, 0, 1], [0, 0, 1], [1, 1, -1]])
    assert fixture("k33").regular_degree() == 3
    assert fixture("path2").max_degree() == 2
    assert fixture("four_cycle").regular_degree() == 2
    assert len(FIXTURES) == 6


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        fixture("dodecahedron")


def test_regular_generator():
    assert random_regular_bipartite(5, 0, 1).m == 0
    assert random_regular_bipartite(1, 4, 1).edges == ((0, 0),) * 4
    g = random_regular_bipartite(6, 3, 42)
    assert g.regular_degree() == 3


def test_bounded_generator():
    g = random_bounded_degree_bipartite(2, 2, 1, 2, 9)
    assert g.regular_degree() == 1
    g = random_bounded_degree_bipartite(3, 3, 2, 6, 9)
    assert g.max_degree() <= 2
    with pytest.raises(Infeasible):
        random_bounded_degree_bipartite(3, 3, 2, 7, 9)


def test_matrix_generator():
    assert random_equal_line_sum_matrix(3, 0, 1) == ExactMatrix.zeros(3)
    assert random_equal_line_sum_matrix(1, 4, 1) == ExactMatrix([[4]])
    m = random_equal_line_sum_matrix(4, 3, 7)
    assert set(m.row_sums()) | set(m.column_sums()) == {3}


def test_support_generator():
    m = random_regular_support(5, 3, 2)
    assert all(x in (0, 1) for row in m.rows for x in row)
    assert set(m.row_sums()) | set(m.column_sums()) == {3}
    assert random_regular_support(4, 4, 0) == ExactMatrix([[1] * 4] * 4)


@pytest.mark.parametrize("make", [
    lambda s: random_regular_bipartite(7, 3, s),
    lambda s: random_bounded_degree_bipartite(6, 5, 3, 12, s),
    lambda s: random_equal_line_sum_matrix(5, 4, s),
    lambda s: random_regular_support(5, 2, s),
])
def test_generators_are_deterministic(make):
    assert make(123) == make(123)
    assert any(make(123) != make(s) for s in range(124, 130))
