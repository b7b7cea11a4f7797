# general imports
import pytest

# l2switch imports
from ..common import *
from l2switch.equivalence import (stated_generators, conjugating_perms, group_closure, is_closed,
                                  block_normalize, complement_normalize, Canonicalizer)
from l2switch.admissible import enumerate_B_patched, complement_block
from l2switch.engine.named import sun_B

def pytest_generate_tests(metafunc):
    pytest_family_params(metafunc, families=['gm4', 'circulant:3', 'circulant:4', 'fano', 'cube'])

def test_symmetry_pairs(family):
    r = build(family)
    pairs = symmetry_pairs(family)
    print(f'{family}: {len(pairs)} symmetry pairs')
    assert pairs
    assert all(pair.holds_for(r) for pair in pairs)
    assert is_closed(pairs)
    assert all(pair.inverse() in pairs for pair in pairs)
    for gen in stated_generators(family):
        assert gen in pairs

def test_conjugating_perms_form_group(family):
    perms = conjugating_perms(family)
    assert group_closure(perms) == sorted(perms)

def test_conjugation_preserves_admissibility():
    r = build('circulant:3')
    b_set = enumerate_B_patched(3, full=True)
    for p in conjugating_perms('circulant:3'):
        for b in b_set[::5]:
            assert is_admissible_B(r, b.permuted(p))

def test_six_vertex_classes():
    b_set = enumerate_B_patched(3, full=True)
    found = classes(b_set, 'circulant:3')
    for elem in found:
        print(elem)
    assert len(found) == 4
    assert sum(elem.members for elem in found) == len(b_set)
    assert [elem.canonical.code for elem in found] == sorted(elem.canonical.code for elem in found)

def test_canonical_invariance():
    family = SwitchingFamily.circulant(3)
    b_set = enumerate_B_patched(3, full=True)
    perms = conjugating_perms(family)
    for b in b_set[::3]:
        canon = orbit_canonical(b, family)
        assert orbit_canonical(b.complement(), family) == canon
        assert orbit_canonical(complement_block(b, 0, 1), family) == canon
        for p in perms[::4]:
            assert orbit_canonical(b.permuted(p), family) == canon

def test_sun_variants_share_a_class():
    # swapping inside the first pair gives the other irreducible labelling
    b = sun_B(3)
    assert orbit_canonical(b, 'circulant:3') == orbit_canonical(b.permuted((1, 0, 2, 3, 4, 5)), 'circulant:3')

def test_canonical_rejects_inadmissible():
    with pytest.raises(AdmissibilityError):
        orbit_canonical(Graph.from_edges(6, [(0, 2)]), 'circulant:3')

def test_normal_forms():
    b = Graph.complete(6)
    assert not block_normalize(b).has_edge(0, 1)
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    assert complement_normalize(g) == g.complement()
    assert complement_normalize(g.complement()) == g.complement()

def test_custom_perms():
    # with the identity only, classes come from complementation alone
    b_set = enumerate_B_patched(2, full=True)
    found = classes(b_set, 'circulant:2', perms=[tuple(range(4))])
    assert sum(elem.members for elem in found) == len(b_set)
    assert len(found) >= len(classes(b_set, 'circulant:2'))

@slow
def test_cube_classes():
    catalog = AdmissibleCatalog.build('cube', workers=4)
    assert catalog.b_count == 1504
    assert len(classes(catalog.b_set, 'cube')) == 40
