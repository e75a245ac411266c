from pytest import raises

from hlab.core import GroundSet, downward_closure
from hlab.error import HlabSyntaxError
from hlab.instances import FIGURE1_EDGES, Graph
from hlab.language.location import SourceLocation
from hlab.language.parser import parse_cnf, parse_family, parse_graph
from hlab.language.source import Source

FIGURE1_FILE = "p edge 8 12\n" + "".join(
    "e {} {}\n".format(u, v) for u, v in FIGURE1_EDGES
)


def test_parses_a_path():
    # type: () -> None
    graph = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n")
    assert graph == Graph(3, [(0, 1), (1, 2)])
    assert graph.neighbors(1) == [0, 2]


def test_skips_comments_and_keeps_file_order():
    # type: () -> None
    graph = parse_graph("c a comment\np edge 3 2\ne 3 2\nc another\ne 1 2\n")
    assert graph.edges == ((1, 2), (0, 1))


def test_parses_the_figure1_file(figure1):
    # type: (Graph) -> None
    graph = parse_graph(FIGURE1_FILE)
    assert graph.n == 8
    assert graph.m == 12
    assert graph == figure1


def test_rejects_loops():
    # type: () -> None
    with raises(HlabSyntaxError) as excinfo:
        parse_graph("p edge 1 1\ne 1 1\n")
    assert excinfo.value.location == SourceLocation(line=2, column=3)
    assert "Loop at vertex 1." in excinfo.value.message


def test_rejects_malformed_graph_lines():
    # type: () -> None
    with raises(HlabSyntaxError) as excinfo:
        parse_graph("p edge 3 1\ne 1\n")
    assert 'Expected "e <u> <v>".' in excinfo.value.message

    with raises(HlabSyntaxError) as excinfo:
        parse_graph("p edge 3 1\ne 1 x\n")
    assert 'Expected an integer, found "x".' in excinfo.value.message

    with raises(HlabSyntaxError) as excinfo:
        parse_graph("p cnf 3 1\n")
    assert 'Expected "p edge <count> <count>".' in excinfo.value.message

    with raises(HlabSyntaxError) as excinfo:
        parse_graph("q 1 2\n")
    assert 'Unexpected line starting with "q".' in excinfo.value.message


def test_rejects_bad_edges():
    # type: () -> None
    with raises(HlabSyntaxError) as excinfo:
        parse_graph("p edge 3 1\ne 1 4\n")
    assert "Vertex 4 is out of range 1..3." in excinfo.value.message

    with raises(HlabSyntaxError) as excinfo:
        parse_graph("p edge 3 2\ne 1 2\ne 2 1\n")
    assert "Duplicate edge 2 1." in excinfo.value.message

    with raises(HlabSyntaxError) as excinfo:
        parse_graph("p edge 3 3\ne 1 2\ne 2 3\n")
    assert "Expected 3 edges, found 2." in excinfo.value.message

    with raises(HlabSyntaxError) as excinfo:
        parse_graph("e 1 2\n")
    assert "Edge before the problem line." in excinfo.value.message

    with raises(HlabSyntaxError) as excinfo:
        parse_graph("")
    assert "Missing problem line." in excinfo.value.message


def test_syntax_errors_name_their_source():
    # type: () -> None
    with raises(HlabSyntaxError) as excinfo:
        parse_graph(Source("p edge 2 1\ne 1 3\n", "bad.col"))
    assert excinfo.value.message.startswith("Syntax Error bad.col (2:5)")


def test_parses_cnf():
    # type: () -> None
    formula = parse_cnf("p cnf 2 2\n1 0\n-1 2 0\n")
    assert formula.num_vars == 2
    assert formula.clauses == ((1,), (-1, 2))


def test_cnf_clauses_may_span_lines_and_stop_at_percent():
    # type: () -> None
    formula = parse_cnf("c sample\np cnf 3 2\n1 -2\n3 0 2 0\n%\n0\n")
    assert formula.clauses == ((1, -2, 3), (2,))


def test_cnf_removes_duplicate_literals():
    # type: () -> None
    formula = parse_cnf("p cnf 2 1\n1 1 -2 0\n")
    assert formula.clauses == ((1, -2),)


def test_rejects_bad_cnf():
    # type: () -> None
    with raises(HlabSyntaxError) as excinfo:
        parse_cnf("p cnf 2 2\n1 0\n0\n")
    assert "Empty clause." in excinfo.value.message

    with raises(HlabSyntaxError) as excinfo:
        parse_cnf("p cnf 2 1\n1 2\n")
    assert "Clause is missing its terminating 0." in excinfo.value.message

    with raises(HlabSyntaxError) as excinfo:
        parse_cnf("p cnf 2 1\n1 3 0\n")
    assert "Literal 3 is out of range for 2 variables." in excinfo.value.message

    with raises(HlabSyntaxError) as excinfo:
        parse_cnf("p cnf 2\n1 0\n")
    assert 'Expected "p cnf <count> <count>".' in excinfo.value.message

    with raises(HlabSyntaxError) as excinfo:
        parse_cnf("p cnf 2 2\n1 0\n")
    assert "Expected 2 clauses, found 1." in excinfo.value.message


def test_parses_a_family_as_its_closure():
    # type: () -> None
    family = parse_family("ground 3\nset 0 2\nset 1\n")
    ground = GroundSet(3)
    assert family == downward_closure(ground, [0b101, 0b010])
    assert sorted(family.members) == [0, 1, 2, 4, 5]


def test_family_without_sets_is_the_empty_set_only():
    # type: () -> None
    family = parse_family("ground 2\n")
    assert family.members == frozenset([0])


def test_rejects_bad_families():
    # type: () -> None
    with raises(HlabSyntaxError) as excinfo:
        parse_family("ground 2\nset 0 2\n")
    assert "Element 2 is out of range 0..1." in excinfo.value.message

    with raises(HlabSyntaxError) as excinfo:
        parse_family("set 0\n")
    assert "Set before the ground line." in excinfo.value.message

    with raises(HlabSyntaxError) as excinfo:
        parse_family("ground 2\nground 2\n")
    assert "Duplicate ground line." in excinfo.value.message

    with raises(HlabSyntaxError) as excinfo:
        parse_family("c nothing here\n")
    assert "Missing ground line." in excinfo.value.message
