import pytest
from hypothesis import given, strategies as st

from ecx.canon import enumerate_graphs
from ecx.graph import SimpleGraph, complete_graph, empty_graph
from ecx.graph6 import Graph6Error, encode_graph6, parse_graph6, read_graph6


def test_known_strings():
    # K3: header chr(63+3)='B', bits 111 padded to 111000 = 56 -> chr(119) 'w'
    assert parse_graph6("Bw") == complete_graph(3)
    # K4: header 'C', bits 111111 = 63 -> chr(126) '~'
    assert parse_graph6("C~") == complete_graph(4)
    assert encode_graph6(empty_graph(1)) == "@"
    assert encode_graph6(empty_graph(0)) == "?"


def test_header_prefix_and_newline():
    assert parse_graph6(">>graph6<<Bw\n") == complete_graph(3)


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x01", "C~~", "Bx", "~~~~"])
def test_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_read_graph6_reports_line():
    with pytest.raises(Graph6Error, match="line 2"):
        list(read_graph6(["Bw\n", "Bww\n"]))


def test_roundtrip_enumerated():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            s = encode_graph6(g)
            assert parse_graph6(s) == g
            assert encode_graph6(parse_graph6(s)) == s


@st.composite
def labeled_graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@given(labeled_graphs())
def test_roundtrip_labeled(g):
    s = encode_graph6(g)
    assert parse_graph6(s) == g
    assert encode_graph6(parse_graph6(s)) == s
