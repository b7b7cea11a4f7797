# general imports
import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

# l2switch imports
from ..common import *

@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i+1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [pair for pair, bit in zip(pairs, bits) if bit])

def test_basic_queries():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert g.order == 5
    assert g.num_edges == 5
    assert g.is_regular()
    assert g.neighbours(0) == [1, 4]
    assert g.count_in(0, [1, 2, 3]) == 1
    assert g.column(2, (1, 3, 0)) == (1, 1, 0)
    assert g.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]

def test_code_is_lexicographic():
    # the (0, 1) entry is the most significant bit
    assert Graph.from_edges(3, [(0, 1)]).code == 0b100
    assert Graph.from_edges(3, [(1, 2)]).code == 0b001
    assert Graph.from_edges(3, [(1, 2)]) < Graph.from_edges(3, [(0, 1)])
    assert Graph.from_edges(3, [(0, 1)]).bitstring == '100'

def test_hex():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    print(g.to_hex())
    assert g.to_hex() == '21'
    assert Graph.from_hex(4, '21') == g

@settings(max_examples=50, deadline=None)
@given(graphs())
def test_encodings(g):
    assert Graph.from_code(g.order, g.code) == g
    assert Graph.from_graph6(g.to_graph6()) == g
    assert Graph.from_matrix(g.to_numpy()) == g
    assert Graph.from_row_strings(g.row_strings()) == g

@settings(max_examples=30, deadline=None)
@given(graphs())
def test_graph6_matches_networkx(g):
    assert g.to_graph6() == nx.to_graph6_bytes(g.to_networkx(), header=False).decode().strip()
    assert nx.is_isomorphic(g.to_networkx(), Graph.from_graph6(g.to_graph6()).to_networkx())

@settings(max_examples=30, deadline=None)
@given(graphs())
def test_complement(g):
    h = g.complement()
    assert h.complement() == g
    assert g.num_edges + h.num_edges == g.order*(g.order-1)//2

def test_permuted():
    # vertex i of the result is vertex p[i] of the original
    g = Graph.from_edges(3, [(0, 1)])
    h = g.permuted([2, 0, 1])
    assert h.edges() == [(1, 2)]
    assert (h.to_numpy() == g.to_numpy()[[2, 0, 1]][:, [2, 0, 1]]).all()

def test_induced():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    h = g.induced([4, 0, 2])
    assert h.edges() == [(0, 1)]

def test_constructors():
    assert Graph.empty(4).num_edges == 0
    assert Graph.complete(4).num_edges == 6
    assert Graph.complete(4).complement() == Graph.empty(4)

def test_invalid_graphs():
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(DomainError):
        Graph(2, [0b10, 0b00])
    with pytest.raises(DomainError):
        Graph.from_matrix([[0, 2], [2, 0]])
    with pytest.raises(DimensionError):
        Graph.from_matrix([[0, 1, 0]])
    with pytest.raises(DimensionError):
        Graph(3, [0, 0])

def test_oversized_codes():
    # order 4 has six pairs
    assert Graph.from_code(4, 0b111111) == Graph.complete(4)
    with pytest.raises(DomainError):
        Graph.from_code(4, 1 << 6)
    with pytest.raises(DomainError):
        Graph.from_code(3, -1)
    with pytest.raises(DomainError):
        Graph.from_hex(4, '40')
    with pytest.raises(DomainError):
        Graph.from_hex(4, 'xyz')
