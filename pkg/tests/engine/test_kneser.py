# general imports
import pytest

# l2switch imports
from ..common import *
from l2switch.engine.kneser import GFTwoSpace, subspaces, rref, unit

@pytest.mark.parametrize('n,k,count', [
    (3, 1, 7),
    (3, 2, 7),
    (4, 1, 15),
    (4, 2, 35),
    (4, 3, 15),
    (5, 2, 155)
])
def test_subspace_counts(n, k, count):
    spaces = subspaces(n, k)
    assert len(spaces) == count
    assert len(set(spaces)) == count
    assert all(space.dim == k for space in spaces)

def test_rref():
    assert rref([0b11, 0b01]) == (0b10, 0b01)
    assert rref([0b11, 0b11]) == (0b11,)
    assert rref([0]) == ()

def test_spaces():
    plane = GFTwoSpace(4, [unit(1), unit(2), unit(3)])
    line = GFTwoSpace(4, [unit(1) | unit(2), unit(3)])
    other = GFTwoSpace(4, [unit(4), unit(1) | unit(2)])
    assert plane.dim == 3
    assert len(plane.elements()) == 8
    assert plane.contains(line)
    assert not line.contains(plane)
    assert not line.meets_trivially(other)
    assert line.intersection(other) == GFTwoSpace(4, [unit(1) | unit(2)])
    assert GFTwoSpace(4, [unit(4), unit(2)]).meets_trivially(GFTwoSpace(4, [unit(1), unit(3)]))
    assert GFTwoSpace.span_of(4, line, unit(4)).dim == 3
    with pytest.raises(DomainError):
        GFTwoSpace(2, [0b100])

def test_kneser_graphs():
    g = gen_kneser2(4, 2)
    # a line of PG(3, 2) is skew to 16 of the other 34
    assert g.order == 35
    assert g.is_regular() and g.degree(0) == 16
    assert gen_kneser2(3, 2) == Graph.empty(7)

def test_kneser_errors():
    with pytest.raises(DomainError):
        gen_kneser2(4, 1)
    with pytest.raises(DomainError):
        gen_kneser2(2, 3)
    with pytest.raises(CapacityError):
        gen_kneser2(7, 2)
    with pytest.raises(DomainError):
        find_kneser_fano_instance(3, 3)

def test_kneser_fano_instance():
    instance = find_kneser_fano_instance(4, 2)
    assert instance.is_valid()
    # seven lines of one plane pairwise meet
    assert instance.b == Graph.empty(7)

    g = instance.host
    mate = apply(instance)
    assert mate != g
    assert verify_R_cospectral(g, mate)
    assert not is_isomorphic(g, mate)

def test_kneser_fano_instance_larger():
    # sigma is a point outside the plane
    instance = find_kneser_fano_instance(5, 3)
    assert instance.is_valid()
    labels = [instance.host.labels[v] for v in instance.vertices]
    assert all(space.contains(GFTwoSpace(5, [unit(4)])) for space in labels)
