import io

import pytest

from irrbound import generators
from irrbound.edgelist import format_edge_list, parse_edge_list, read_edge_list
from irrbound.errors import DuplicateEdgeError, ParseError, SelfLoopError, VertexOutOfRangeError


def parse(text):
    return parse_edge_list(io.StringIO(text))


def test_comments_blank_lines_and_trailing_whitespace():
    g = parse("# yoke\n\n3 2   \n0 1\t\n# mid comment\n1 2  \n")
    assert (g.n, g.edges) == (3, ((0, 1), (1, 2)))


def test_empty_graph():
    g = parse("0 0\n")
    assert (g.n, g.m) == (0, 0)


@pytest.mark.parametrize("g", [
    generators.yoke(7, 5),
    generators.path(1),
    generators.complete_bipartite(2, 3),
    generators.random_graph(15, 0.4, 7),
])
def test_round_trip(g):
    text = format_edge_list(g, comment="fixture\nsecond line")
    assert text.startswith("# fixture\n# second line\n")
    assert parse(text) == g


def test_read_from_file(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text(format_edge_list(generators.cycle(5)))
    with p.open() as fh:
        assert read_edge_list(fh) == generators.cycle(5)


@pytest.mark.parametrize("text,line", [
    ("3 2\n0 1\n", 2),
    ("3 1\n0 1\n1 2\n", 3),
    ("3\n", 1),
    ("3 x\n", 1),
    ("2 1\n0 1 5\n", 2),
    ("# only comments\n", 1),
    ("-1 0\n", 1),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_validation_errors_pass_through():
    with pytest.raises(SelfLoopError):
        parse("2 1\n1 1\n")
    with pytest.raises(DuplicateEdgeError):
        parse("2 2\n0 1\n1 0\n")
    with pytest.raises(VertexOutOfRangeError):
        parse("2 1\n0 2\n")
