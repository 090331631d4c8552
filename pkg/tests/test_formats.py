from fractions import Fraction

import pytest

from konig.errors import ParseError
from konig.formats import format_dot, format_graph, format_matrix, parse_graph, parse_matrix
from konig.graph import BipartiteMultigraph, GeneralGraph
from konig.instances import cube, petersen
from konig.matrix import ExactMatrix


def test_bipartite_round_trip():
    g = cube()
    text = format_graph(g)
    assert text.splitlines()[0] == "bipartite 4 4 12"
    assert text.splitlines()[1:4] == ["e 1 1", "e 1 2", "e 1 3"]  # 000 -> 001, 010, 100
    assert parse_graph(text) == g


def test_general_round_trip():
    g = petersen()
    assert parse_graph(format_graph(g)) == g


def test_comments_and_blank_lines():
    g = parse_graph("# a double edge\nbipartite 1 1 2\n\ne 1 1\n# again\ne 1 1\n")
    assert isinstance(g, BipartiteMultigraph) and g.m == 2


@pytest.mark.parametrize("text", [
    "",
    "bipartite 1 1 2\ne 1 1\n",
    "bipartite 1 1 1\ne 1 1\ne 1 1\n",
    "bipartite 1 1 1\ne 0 1\n",
    "bipartite 1 1 1\ne 2 1\n",
    "bipartite 1 1 1\nedge 1 1\n",
    "graph 2 1\ne 1 1\n",
    "graph 2\n",
    "graph x 0\n",
])
def test_graph_parse_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text)


def test_matrix_round_trip():
    m = ExactMatrix([["1/3", "2/3"], ["2/3", "-1/3"]])
    text = format_matrix(m)
    assert text == "matrix 2\n1/3 2/3\n2/3 -1/3\n"
    assert parse_matrix(text) == m
    assert parse_matrix(text)[1, 1] == Fraction(-1, 3)


@pytest.mark.parametrize("text", [
    "matrix 2\n1 0\n",
    "matrix 2\n1 0\n0\n",
    "matrix 1\n0.5\n",
    "matrix 1\n1/0\n",
    "mat 1\n1\n",
])
def test_matrix_parse_errors(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_dot():
    assert format_dot(BipartiteMultigraph(1, 2, [(0, 1)])) == "graph G {\n  A1 -- B2;\n}\n"


def test_general_graph_type():
    assert isinstance(parse_graph("graph 3 0\n"), GeneralGraph)
