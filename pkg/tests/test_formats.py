import pytest
from hypothesis import given, settings, strategies as st

from certdisp.dispersal import Dispersal
from certdisp.formats import (Instance, ParseError, parse_dispersal, parse_instance,
                              serialize_dispersal, serialize_instance, write_atomic)
from certdisp.generate import generate_instance
from certdisp.graph import Graph, RequestSet


def test_parse_p3():
    inst = parse_instance("p 3 2 1\ne 0 1\ne 1 2\nr 0 2\n")
    assert inst.graph == Graph.from_edges(3, [(0, 1), (1, 2)])
    assert inst.requests == RequestSet.from_pairs([(0, 2)])


def test_parse_empty_requests_and_comments():
    inst = parse_instance("c hello\np 2 1 0\nc mid\ne 1 0\n")
    assert len(inst.requests) == 0
    assert inst.comments == ("hello", "mid")
    assert serialize_instance(inst) == "c hello\nc mid\np 2 1 0\ne 0 1\n"


@pytest.mark.parametrize("text, fragment", [
    ("p 3 1 0\ne 0 0\n", "line 2: self-loop"),
    ("p 3 2 0\ne 0 1\ne 1 0\n", "line 3: duplicate edge"),
    ("p 3 1 0\ne 0 3\n", "out of range"),
    ("p 3 1 2\ne 0 1\nr 0 2\nr 2 0\n", "duplicate request"),
    ("p 3 0 1\nr 1 1\n", "self-request"),
    ("e 0 1\n", "before the 'p' header"),
    ("p 3 1 0\ne 0 x\n", "non-integer"),
    ("p 3 2 0\ne 0 1\n", "promises 2 edges"),
    ("p 3 1 0\ne 0 1\nq 1 2\n", "unknown record"),
    ("", "missing 'p' header"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_instance(text)


def test_dispersal_round_trip_and_errors():
    d = Dispersal(4, {3: frozenset({(2, 3)}), 0: frozenset({(1, 2), (0, 1)})})
    text = serialize_dispersal(d)
    assert text == "d 0 2\ne 0 1\ne 1 2\nd 3 1\ne 2 3\n"
    assert parse_dispersal(text, 4) == d
    assert parse_dispersal("", 4) == Dispersal.empty(4)
    with pytest.raises(ParseError, match="missing 1 edge"):
        parse_dispersal("d 0 2\ne 0 1\n", 4)
    with pytest.raises(ParseError, match="outside"):
        parse_dispersal("e 0 1\n", 4)
    with pytest.raises(ParseError, match="listed twice"):
        parse_dispersal("d 0 1\ne 0 1\nd 0 1\ne 1 2\n", 4)


@settings(max_examples=80, deadline=None)
@given(kind=st.sampled_from(["tree-graph", "tree-request", "star-request"]),
       n=st.integers(4, 20), seed=st.integers(0, 10**6))
def test_instance_round_trip(kind, n, seed):
    inst = generate_instance(kind, n, seed, delta=2 if kind != "tree-graph" else None)
    text = serialize_instance(inst)
    again = parse_instance(text)
    assert again == inst
    assert serialize_instance(again) == text


def test_write_atomic(tmp_path):
    target = tmp_path / "x.txt"
    write_atomic(target, "one\n")
    write_atomic(target, "two\n")
    assert target.read_text() == "two\n"
    assert [p.name for p in tmp_path.iterdir()] == ["x.txt"]


def test_instance_equality_ignores_comments():
    a = Instance(Graph.from_edges(2, [(0, 1)]), RequestSet.from_pairs([(0, 1)]), ("x",))
    b = Instance(Graph.from_edges(2, [(0, 1)]), RequestSet.from_pairs([(0, 1)]))
    assert a == b
