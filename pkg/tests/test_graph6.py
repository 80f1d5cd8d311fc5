"""graph6 encoding: hand-encoded examples, round trips, error positions."""

import random

import pytest

from conftest import make_random_graph
from spectra_verify import (
    Graph,
    Graph6Error,
    UnsupportedSizeError,
    complete_graph,
    iter_graph6_file,
    parse_graph6,
    path_graph,
    to_graph6,
    write_graph6_file,
)

# Hand-encoded per the format definition:
#  K3: n=3 -> 'B'; bits 111 padded to 111000 = 56, 56+63=119='w'
#  K2: n=2 -> 'A'; bit 1 padded to 100000 = 32, 32+63=95='_'
#  two isolated vertices: bit 0 -> 63 = '?'
#  one vertex: just the size byte 64 = '@'


def test_hand_encoded_examples():
    assert parse_graph6("Bw") == complete_graph(3)
    assert parse_graph6("A?") == Graph.empty(2)
    assert parse_graph6("@") == Graph.empty(1)
    assert parse_graph6("?") == Graph.empty(0)
    assert to_graph6(complete_graph(3)) == "Bw"
    assert to_graph6(complete_graph(2)) == "A_"
    assert to_graph6(Graph.empty(1)) == "@"


def test_header_prefix_tolerated():
    assert parse_graph6(">>graph6<<Bw") == complete_graph(3)


def test_round_trip_random_graphs():
    rng = random.Random(61)
    for _ in range(500):
        g = make_random_graph(rng, rng.randrange(0, 63))
        assert parse_graph6(to_graph6(g)) == g


def test_string_round_trip():
    rng = random.Random(67)
    for _ in range(200):
        s = to_graph6(make_random_graph(rng, rng.randrange(0, 30)))
        assert to_graph6(parse_graph6(s)) == s


def test_empty_string_rejected():
    with pytest.raises(Graph6Error) as info:
        parse_graph6("")
    assert info.value.position == 0


def test_bad_size_byte_position():
    with pytest.raises(Graph6Error) as info:
        parse_graph6("\x1fAA")
    assert info.value.position == 0


def test_wrong_length_reported():
    with pytest.raises(Graph6Error):
        parse_graph6("B")  # n=3 needs one edge byte
    with pytest.raises(Graph6Error):
        parse_graph6("Bww")


def test_edge_byte_out_of_range():
    with pytest.raises(Graph6Error) as info:
        parse_graph6("B\x7f")
    assert info.value.position == 1


def test_nonzero_padding_rejected():
    # n=2 has one adjacency bit; the low five bits are padding
    with pytest.raises(Graph6Error):
        parse_graph6("A@")  # 64-63=1: lowest padding bit set


def test_long_form_rejected():
    with pytest.raises(UnsupportedSizeError):
        parse_graph6("~??")
    with pytest.raises(UnsupportedSizeError):
        to_graph6(Graph.empty(63))


def test_file_round_trip(tmp_path):
    rng = random.Random(71)
    graphs = [make_random_graph(rng, rng.randrange(0, 20)) for _ in range(40)]
    path = tmp_path / "graphs.g6"
    assert write_graph6_file(path, graphs) == 40
    text = path.read_text()
    assert text.endswith("\n")
    assert list(iter_graph6_file(path)) == graphs


def test_file_header_and_blank_lines_skipped(tmp_path):
    path = tmp_path / "with_header.g6"
    path.write_text(">>graph6<<\nBw\n\nA_\n")
    assert list(iter_graph6_file(path)) == [complete_graph(3), complete_graph(2)]


def test_path_graph_column_order():
    # P3 has edges {0,1} and {1,2}: bits x(0,1)=1, x(0,2)=0, x(1,2)=1
    # -> 101 padded to 101000 = 40, 40+63=103='g'
    assert to_graph6(path_graph(3)) == "Bg"
