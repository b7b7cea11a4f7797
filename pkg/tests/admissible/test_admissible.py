# general imports
import numpy as np
import pytest

# l2switch imports
from ..common import *
from l2switch.admissible import (enumerate_V, image_map, image_of_column, predicted_V, conjugate,
                                 BlockGrid, block_transform, block_transform_inverse,
                                 enumerate_B_bruteforce, enumerate_B_patched, complement_block,
                                 require_admissible_B, closes_fully)
from l2switch.engine.named import sun_B

def pytest_generate_tests(metafunc):
    pytest_family_params(metafunc)

def expected_v_count(family):
    family = SwitchingFamily.parse(family)
    if family.tag == 'gm4':
        return 8
    elif family.is_circulant:
        return 2**(family.m+1)
    else:
        return 16

def test_v_count(family):
    v_set = enumerate_V(build(family))
    print(f'{family}: {len(v_set)} columns')
    assert len(v_set) == expected_v_count(family)
    assert v_set == sorted(v_set)

def test_v_matches_closed_form(family):
    assert image_map(build(family)) == predicted_V(family)

def test_v_examples():
    r8 = build('circulant:4')
    assert image_of_column(r8, (1, 0, 0, 1, 1, 0, 0, 1)) == (0, 1, 1, 0, 0, 1, 1, 0)
    assert image_of_column(r8, (1, 1, 0, 0, 1, 1, 1, 1)) == (1, 1, 0, 0, 1, 1, 1, 1)
    with pytest.raises(AdmissibilityError):
        image_of_column(r8, (1, 1, 1, 0, 0, 0, 0, 0))
    with pytest.raises(DimensionError):
        image_of_column(r8, (1, 0))

    # a face of the cube moves under PI
    rc = build('cube')
    face = (0, 1, 0, 1, 1, 0, 1, 0)
    assert image_of_column(rc, face) == (1, 0, 0, 1, 0, 1, 1, 0)

def test_conjugate_sun():
    b = sun_B(3)
    out = conjugate(build('circulant:3'), b)
    assert out is not None
    assert Graph.from_matrix(out) == require_admissible_B(build('circulant:3'), b)

def test_not_admissible():
    # a single edge between two pairs is not admissible for R_6
    b = Graph.from_edges(6, [(0, 2)])
    assert conjugate(build('circulant:3'), b) is None
    with pytest.raises(AdmissibilityError):
        require_admissible_B(build('circulant:3'), b)

@pytest.mark.parametrize('m', [2, 3, 4])
def test_block_transform_matches_conjugation(m):
    r = build(SwitchingFamily.circulant(m))
    for b in enumerate_B_patched(m, full=True)[::7]:
        grid = block_transform(BlockGrid.from_graph(b))
        assert grid is not None
        assert grid.to_graph() == switched_B(r, b)
        assert block_transform_inverse(grid).to_graph() == b

@pytest.mark.parametrize('m', [2, 3])
def test_patched_equals_bruteforce(m):
    r = build(SwitchingFamily.circulant(m))
    brute = enumerate_B_bruteforce(r)
    patched = enumerate_B_patched(m, full=True)
    print(f'm={m}: {len(brute)} matrices')
    assert brute == patched
    assert all(is_admissible_B(r, b) for b in brute)

def test_eight_vertex_patched():
    b_set = enumerate_B_patched(4, full=True)
    assert len(b_set) == 3584

def test_patched_closure():
    # closed under complementing block pairs and the whole graph
    b_set = set(enumerate_B_patched(3, full=True))
    for b in b_set:
        assert b.complement() in b_set
        assert complement_block(b, 0, 2) in b_set

def test_normalized_subset():
    full = set(enumerate_B_patched(4, full=True))
    normalized = enumerate_B_patched(4, full=False)
    assert set(normalized) <= full
    assert all(not np.any(BlockGrid.from_graph(b).block(0, 0)) for b in normalized)

def test_gm4_bruteforce():
    # the GM switching sets on four vertices are exactly the regular graphs
    b_set = enumerate_B_bruteforce(build('gm4'))
    print(f'gm4: {len(b_set)} matrices')
    assert b_set
    assert all(b.is_regular() for b in b_set)
    regular = [Graph.from_code(4, code) for code in range(64) if Graph.from_code(4, code).is_regular()]
    assert sorted(regular) == b_set

def test_fano_bruteforce():
    r = build('fano')
    b_set = enumerate_B_bruteforce(r)
    assert Graph.empty(7) in b_set
    assert build_named_B('fano_cycle') in b_set
    assert build_named_B('fano_figure') in b_set

def test_capacity():
    with pytest.raises(CapacityError):
        enumerate_B_patched(9, full=False)
    with pytest.raises(DomainError):
        enumerate_B_patched(1)
    with pytest.raises(CapacityError):
        enumerate_B_bruteforce(build('circulant:5'))

@slow
def test_eight_vertex_bruteforce():
    r = build('circulant:4')
    brute = enumerate_B_bruteforce(r, workers=4)
    assert len(brute) == 3584
    assert brute == enumerate_B_patched(4, full=True)

def test_closes_fully():
    assert closes_fully(5)
    assert not closes_fully(6)
    assert not closes_fully(3, full=False)

@slow
def test_twelve_vertex_patched(capsys):
    # too many members for the full closure, one per orbit instead
    b_set = enumerate_B_patched(6, full=True, workers=4)
    assert 'not materialized' in capsys.readouterr().out
    assert b_set == enumerate_B_patched(6, full=False, workers=4)
    assert all(not np.any(BlockGrid.from_graph(b).block(k, k)) for b in b_set for k in range(6))
    r = build('circulant:6')
    assert all(is_admissible_B(r, b) for b in b_set[::97])

@slow
def test_cube_bruteforce():
    b_set = enumerate_B_bruteforce(build('cube'), workers=4)
    assert len(b_set) == 1504

def test_catalog_files(tmp_path):
    catalog = AdmissibleCatalog.build('circulant:3')
    catalog.write_b(tmp_path / 'b.txt')
    catalog.write_v(tmp_path / 'v.txt')
    other = AdmissibleCatalog.read(tmp_path / 'b.txt', tmp_path / 'v.txt')
    assert other.family == catalog.family
    assert other.b_set == catalog.b_set
    assert other.v_set == catalog.v_set
    assert not other.normalized

def test_catalog_prefix_codes():
    catalog = AdmissibleCatalog.build('circulant:3')
    codes = catalog.prefix_codes((0, 2, 4))
    assert all(b.induced((0, 2, 4)).code in codes for b in catalog.b_set)
    normalized = AdmissibleCatalog.build('circulant:3', full=False)
    with pytest.raises(DomainError):
        normalized.prefix_codes((0, 1))
