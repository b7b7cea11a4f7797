# general imports
import pytest

# l2switch imports
from ..common import *
from l2switch.admissible import enumerate_B_patched
from l2switch.engine.named import sun_B
from l2switch.reduce import Factor, factor_candidates, split_certificates, ReductionSearch, DEFAULT_DEPTH

def class_reps(family, workers=1):
    # every class has a member with normalized blocks
    catalog = AdmissibleCatalog.build(family, workers=workers, full=False)
    return [elem.canonical for elem in classes(catalog.b_set, family)]

def irreducible_count(family, workers=1):
    reps = class_reps(family, workers=workers)
    certs = reduce_all(reps, family, workers=workers)
    for cert in certs:
        if cert is not None:
            assert cert.verify(), cert.problems()
    return sum(1 for cert in certs if cert is None)

def test_candidates():
    assert len(factor_candidates('gm4')) == 0
    assert len(factor_candidates('circulant:2')) == 0
    for family in ('circulant:3', 'circulant:4', 'fano'):
        cands = factor_candidates(family)
        print(f'{family}: {len(cands)} candidates')
        assert len(cands) > 0
        n = SwitchingFamily.parse(family).size
        for factor in cands:
            assert factor.largest_block() < n

def test_six_vertex_candidate():
    # diag(R_4, I_2) on the first two pairs
    factor = Factor([('GM4', (0, 1, 2, 3))], 6)
    assert factor.largest_block() == 4
    assert factor.to_text() == 'GM4:0,1,2,3'
    assert Factor.from_text(factor.to_text(), 6) == factor

def test_factor_text_errors():
    with pytest.raises(DomainError):
        Factor.from_text('GM4:0,1,2', 6)
    with pytest.raises(DomainError):
        Factor.from_text('GM4', 6)
    with pytest.raises(DomainError):
        Factor.from_text('GM4:a,b,c,d', 6)

def test_example_eight_vertex():
    b = build_named_B('example52')
    cert = is_reducible(b, 'circulant:4')
    assert cert is not None
    print(cert.to_text())
    assert cert.depth == 2
    assert cert.verify()

def test_sun_six_irreducible():
    assert is_reducible(sun_B(3), 'circulant:3') is None

@slow
def test_sun_ten_irreducible():
    assert is_reducible(sun_B(5), 'circulant:5', depth=6) is None

def test_fano_coclique():
    cert = is_reducible(Graph.empty(7), 'fano')
    assert cert is not None
    assert cert.depth == 2
    assert cert.verify()
    assert all(step == Graph.empty(7) for step in cert.intermediate_bs)

def test_certificate_text():
    cert = is_reducible(build_named_B('example52'), 'circulant:4')
    text = cert.to_text()
    other = FactorizationCertificate.from_text(text)
    assert other.to_text() == text
    assert other.verify()
    assert split_certificates(text + text) == [text, text]

def test_certificate_tampered():
    cert = is_reducible(build_named_B('example52'), 'circulant:4')
    lines = cert.to_text().splitlines()
    bad = [line for line in lines if not line.startswith('factor')] + [lines[3]]
    tampered = FactorizationCertificate.from_text('\n'.join(bad))
    assert not tampered.verify()

    swapped = FactorizationCertificate(cert.family, cert.b, cert.factors,
                                       tuple(reversed(cert.column_permutation)), cert.intermediate_bs)
    assert not swapped.verify()

def test_certificate_parse_errors():
    with pytest.raises(DomainError):
        FactorizationCertificate.from_text('family circulant:3\n')
    with pytest.raises(DomainError):
        FactorizationCertificate.from_text('bogus line\n')

def test_search_rejects_inadmissible():
    with pytest.raises(AdmissibilityError):
        is_reducible(Graph.from_edges(6, [(0, 2)]), 'circulant:3')
    with pytest.raises(DomainError):
        ReductionSearch('circulant:3', depth=0)

def test_six_vertex_class_count():
    # exactly one irreducible class on six vertices
    assert irreducible_count('circulant:3') == 1

def test_six_vertex_criterion_examples():
    assert six_vertex_criterion(Graph.empty(6))
    assert not six_vertex_criterion(sun_B(3))
    with pytest.raises(DimensionError):
        six_vertex_criterion(Graph.empty(8))
    with pytest.raises(AdmissibilityError):
        six_vertex_criterion(Graph.from_edges(6, [(0, 2)]))

def test_six_vertex_criterion_agrees():
    b_set = enumerate_B_patched(3, full=True)
    if not SLOW:
        b_set = class_reps('circulant:3')
    for b in b_set:
        assert six_vertex_criterion(b) == (is_reducible(b, 'circulant:3') is not None), b.to_hex()

def test_reduce_all_order():
    b_list = [sun_B(3), Graph.empty(6), Graph.complete(6)]
    certs = reduce_all(b_list, 'circulant:3')
    assert certs[0] is None
    assert certs[1] is not None and certs[1].b == Graph.empty(6)
    assert certs[2] is not None and certs[2].b == Graph.complete(6)

def test_default_depth():
    assert DEFAULT_DEPTH == 6

@slow
def test_eight_vertex_all_reducible():
    assert irreducible_count('circulant:4', workers=4) == 0

@slow
def test_ten_vertex_irreducible_classes():
    assert irreducible_count('circulant:5', workers=4) == 3

@slow
def test_fano_irreducible_classes():
    assert irreducible_count('fano', workers=4) == 2

@slow
def test_cube_all_reducible():
    assert irreducible_count('cube', workers=4) == 0

@slow
def test_twelve_vertex_irreducible_classes():
    from l2switch.engine.named import twelve_vertex_B
    assert len(twelve_vertex_B(workers=8)) == 18
