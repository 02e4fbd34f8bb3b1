import random

import pytest

from hamfree.graph import Graph, complete, empty, random_graph
from hamfree.graph6 import HeaderError, SizeError, TruncatedError, from_graph6, to_graph6


def reference_graph6(n, edges):
    """Straight transcription of the format: size byte(s), then upper-triangle bits column-wise."""
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    es = {frozenset(e) for e in edges}
    bitstr = "".join("1" if frozenset((i, j)) in es else "0" for j in range(1, n) for i in range(j))
    bitstr += "0" * (-len(bitstr) % 6)
    return head + "".join(chr(int(bitstr[k:k + 6], 2) + 63) for k in range(0, len(bitstr), 6))


def test_reference_values():
    assert reference_graph6(2, [(0, 1)]) == "A_"
    assert reference_graph6(2, []) == "A?"
    assert reference_graph6(1, []) == "@"


def test_small_examples():
    K2 = from_graph6("A_")
    assert (K2.n, K2.m) == (2, 1)
    E2 = from_graph6("A?")
    assert (E2.n, E2.m) == (2, 0)
    assert to_graph6(complete(2)) == "A_"
    assert to_graph6(empty(1)) == "@"


@pytest.mark.parametrize("n", [1, 2, 5, 13, 62, 63, 64])
def test_encoder_matches_reference(n):
    rng = random.Random(n)
    for _ in range(5):
        G = random_graph(n, 0.4, rng)
        assert to_graph6(G) == reference_graph6(n, G.edges())


def test_round_trip_random():
    rng = random.Random(7)
    for _ in range(500):
        G = random_graph(rng.randint(1, 64), rng.random(), rng)
        assert from_graph6(to_graph6(G)) == G


def test_round_trip_enumerated(graphs_upto7):
    for G in graphs_upto7:
        s = to_graph6(G)
        assert to_graph6(from_graph6(s)) == s


def test_trailing_newline_tolerated():
    assert from_graph6("A_\n") == complete(2)


@pytest.mark.parametrize(
    "text, exc",
    [
        ("", HeaderError),
        ("\x01", HeaderError),
        ("~?", HeaderError),
        ("~??@", HeaderError),  # long prefix used for n=1
        ("~?@A" + "?" * 400, SizeError),  # n = 65
        ("~~??????", SizeError),
        ("?", SizeError),  # n = 0
        ("D", TruncatedError),
        ("A_?", TruncatedError),
        ("A`", TruncatedError),  # padding bit set
        ("B\x7f", TruncatedError),
    ],
)
def test_parse_errors_are_distinct(text, exc):
    with pytest.raises(exc):
        from_graph6(text)


def test_error_kinds_do_not_overlap():
    assert not issubclass(HeaderError, TruncatedError)
    assert not issubclass(TruncatedError, SizeError)
    assert not issubclass(SizeError, HeaderError)


def test_to_graph6_rejects_empty_vertex_set():
    with pytest.raises(ValueError):
        to_graph6(Graph(0, ()))
