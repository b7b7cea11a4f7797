# general imports
import pytest

# l2switch imports
from ..common import *
from l2switch.engine import METHODS, named_family, toggle_blocks, default_rule
from l2switch.engine.named import sun_B, family1_B, family2_B, cube_fixed_B, cube_table, cube_B
from l2switch.engine.prose import shift_pairs, fano_outside, cube_outside

NAMED = [('sun', 3), ('sun', 5), ('sun', 9), ('family1', 5), ('family1', 7),
         ('family2', 5), ('family2', 6), ('family2', 8), ('six', None), ('cor44a', None),
         ('cor44b', None), ('cor44c', None), ('example52', None), ('fano_cycle', None),
         ('fano_figure', None)]

@pytest.mark.parametrize('method,m', NAMED)
def test_named_admissible(method, m):
    family = named_family(method, m)
    b = build_named_B(method, m)
    assert b.order == family.size
    assert is_admissible_B(build(family), b)

def test_six_is_figure_set():
    left, _, _, vertices = FIGURE_PAIRS['six']()
    assert sun_B(3) == left.induced(vertices)

def test_named_errors():
    with pytest.raises(DomainError):
        sun_B(4)
    with pytest.raises(DomainError):
        family1_B(1)
    with pytest.raises(DomainError):
        family2_B(3)
    with pytest.raises(DomainError):
        build_named_B('bogus')
    with pytest.raises(DomainError):
        build_named_B('cube')
    with pytest.raises(DomainError):
        cube_B(41)
    with pytest.raises(DomainError):
        toggle_blocks(sun_B(3), [(1, 1)])

def test_cube_sets():
    r = build('cube')
    assert len(cube_table()) == 35
    for k in range(1, 6):
        b = cube_fixed_B(k)
        assert switched_B(r, b) == b
    for b in cube_table():
        assert is_admissible_B(r, b)
    assert cube_fixed_B(2).num_edges == 12
    assert cube_fixed_B(3).num_edges == 4
    assert cube_fixed_B(5).num_edges == 12

def test_methods_table():
    assert set(METHODS) >= {'sun', 'six', 'cube', 'fano_figure', 'twelve'}
    assert named_family('sun', 7) == SwitchingFamily.circulant(7)
    assert named_family('cube', 3) == SwitchingFamily.cube()
    assert default_rule(SwitchingFamily.parse('gm4')) == 'gm'
    assert default_rule(SwitchingFamily.circulant(4)) == 'blocks'
    assert default_rule(SwitchingFamily.fano()) == 'fano'

def test_shift_pairs():
    assert shift_pairs((1, 0, 0, 1, 1, 0), 3) == (0, 1, 1, 0, 1, 0)
    assert shift_pairs((1, 1, 0, 0, 1, 1), 3) == (1, 1, 0, 0, 1, 1)
    with pytest.raises(DomainError):
        shift_pairs((1, 0, 0, 0, 1, 1), 3)

def test_fano_outside():
    geom = fano_geometry()
    line = subset_column(geom.lines[2], 7)
    assert fano_outside(line) == subset_column(geom.ovals[2], 7)
    rest = subset_column(set(range(7)) - geom.lines[2], 7)
    assert fano_outside(rest) == subset_column(set(range(7)) - geom.ovals[2], 7)
    assert fano_outside((1,)*7) == (1,)*7
    with pytest.raises(DomainError):
        fano_outside(subset_column({0, 1}, 7))

def test_cube_outside():
    geom = cube_geometry()
    for plane in geom.planes:
        col = subset_column(plane, 8)
        assert cube_outside(col) == subset_column(geom.image_of_plane(plane), 8)
    with pytest.raises(DomainError):
        cube_outside(subset_column({0, 1, 2}, 8))

def test_prose_rule_errors():
    host, instance = gen_planted('circulant:4', build_named_B('example52'), 3, seed=1)
    with pytest.raises(DomainError):
        prose_switch(instance, rule='bogus')
    with pytest.raises(DomainError):
        prose_switch(instance, rule='fano')
    with pytest.raises(DomainError):
        prose_switch(instance, rule='sun')
    with pytest.raises(DomainError):
        prose_switch(instance, rule='gm')
