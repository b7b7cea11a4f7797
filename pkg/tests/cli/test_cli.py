# general imports
import pytest

# l2switch imports
from ..common import *
from l2switch.cli.main import main, make_parser
from l2switch.cli.formats import read_class_table, read_graph, read_graphs, format_graph, parse_graphs

def write_graph(path, g, fmt='graph6'):
    path.write_text(format_graph(g, fmt))
    return str(path)

def test_catalog(capsys):
    assert main(['catalog', '--family', 'fano']) == 0
    out = capsys.readouterr().out
    print(out)
    assert out.splitlines()[0].split() == ['-1', '1', '1', '0', '1', '0', '0']

def test_bad_family(capsys):
    assert main(['catalog', '--family', 'bogus']) == 2
    assert capsys.readouterr().err.startswith('error:')

def test_capacity_exit_code(capsys):
    assert main(['kneser', '7', '2']) == 3

def test_verify_same_graph(tmp_path, capsys):
    g = write_graph(tmp_path / 'g.g6', Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)]))
    assert main(['verify', g, g]) == 0
    out = capsys.readouterr().out
    assert 'cospectral: yes' in out
    assert 'isomorphic: yes' in out

def test_verify_figure_pair(tmp_path, capsys):
    left, right, _, _ = FIGURE_PAIRS['six']()
    a = write_graph(tmp_path / 'a.txt', left, fmt='edges')
    b = write_graph(tmp_path / 'b.txt', right, fmt='edges')
    assert main(['verify', a, b]) == 0
    out = capsys.readouterr().out
    assert 'R-cospectral: yes' in out
    assert 'isomorphic: no' in out

def test_kneser_switch(tmp_path):
    out = tmp_path / 'kneser.g6'
    assert main(['kneser', '4', '2', '--switch', '-o', str(out)]) == 0
    text = out.read_text()
    assert '# R-cospectral: yes' in text
    assert '# isomorphic: no' in text
    g, mate = read_graphs(out)
    assert g.order == mate.order == 35
    assert verify_R_cospectral(g, mate)

def test_pipeline(tmp_path, capsys):
    catalog_dir = tmp_path / 'catalog'
    assert main(['enumerate', '--family', 'circulant:3', '--check-counts', '-o', str(catalog_dir)]) == 0
    assert (catalog_dir / 'v.txt').exists()

    table = tmp_path / 'classes.tsv'
    assert main(['classify', str(catalog_dir / 'b.txt'), '--check-counts', '-o', str(table)]) == 0
    family, rows = read_class_table(table)
    assert family == SwitchingFamily.circulant(3)
    assert len(rows) == 4
    assert all(row.irreducible is None for row in rows)

    reduced = tmp_path / 'reduced.tsv'
    certs = tmp_path / 'certs.txt'
    assert main(['reduce', str(table), '--certificates', str(certs), '--check-counts', '-o', str(reduced)]) == 0
    _, rows = read_class_table(reduced)
    assert sum(1 for row in rows if row.irreducible) == 1

    capsys.readouterr()
    assert main(['verify-certificate', str(certs)]) == 0
    assert '3 of 3 certificates verified' in capsys.readouterr().out

def test_check_counts_mismatch(tmp_path, capsys):
    # a normalized catalog has fewer classes than the full one
    catalog_dir = tmp_path / 'catalog'
    assert main(['enumerate', '--family', 'circulant:3', '--normalized', '-o', str(catalog_dir)]) == 0
    b_file = catalog_dir / 'b.txt'
    lines = b_file.read_text().splitlines()
    header = [line for line in lines if line.startswith('#') and not line.startswith('# count')]
    body = [line for line in lines if not line.startswith('#')]
    b_file.write_text('\n'.join(header + body[:1]) + '\n')
    assert main(['classify', str(b_file), '--check-counts']) == 5
    assert 'expected 4, got 1' in capsys.readouterr().err

def test_plant_and_switch(tmp_path):
    host_file = tmp_path / 'host.g6'
    assert main(['plant', '--family', 'circulant:5', '--method', 'sun', '--index', '5',
                 '--outside', '9', '--seed', '3', '-o', str(host_file)]) == 0
    first = host_file.read_text().splitlines()[0]
    assert first.startswith('# instance ')
    vertices = first[len('# instance '):].split()
    host = read_graph(host_file)

    mate_file = tmp_path / 'mate.g6'
    assert main(['switch', str(host_file), '--family', 'circulant:5', '--vertices', ','.join(vertices),
                 '--prose', '--rule', 'sun', '-o', str(mate_file)]) == 0
    mate = read_graph(mate_file)
    assert verify_R_cospectral(host, mate)

def test_find(tmp_path):
    host, planted = gen_planted('circulant:3', build_named_B('six'), 8, seed=2)
    host_file = write_graph(tmp_path / 'host.g6', host)
    out = tmp_path / 'found.txt'
    assert main(['find', host_file, '--family', 'circulant:3', '-o', str(out)]) == 0
    found = [frozenset(int(v) for v in line.split()) for line in out.read_text().splitlines()]
    assert frozenset(planted.vertices) in found

def test_switch_rejects_invalid(tmp_path, capsys):
    g = write_graph(tmp_path / 'g.g6', Graph.from_edges(6, [(0, 2)]))
    assert main(['switch', g, '--family', 'circulant:3', '--vertices', '0,1,2,3,4,5']) == 4

def test_plant_needs_b(capsys):
    assert main(['plant', '--family', 'fano']) == 2

def test_parse_graphs_errors():
    with pytest.raises(DomainError):
        parse_graphs('n 3\n0 5\n')
    with pytest.raises(DomainError):
        parse_graphs('n x\n')
    assert parse_graphs('# nothing\n\n') == []

def test_run_config():
    cfg = RunConfig('reduce', family='C3')
    assert cfg.family == SwitchingFamily.circulant(3)
    assert (cfg.depth, cfg.workers, cfg.seed, cfg.fmt) == (6, 1, 0, 'graph6')
    with pytest.raises(DomainError):
        RunConfig('reduce', depth=0)
    with pytest.raises(DomainError):
        RunConfig('find', workers=0)
    with pytest.raises(DomainError):
        RunConfig('find', limit=0)
    with pytest.raises(DomainError):
        RunConfig('verify', fmt='dot')
    with pytest.raises(DomainError):
        RunConfig('catalog').require_family()

def run_pipeline(out_dir, workers):
    out_dir.mkdir()
    common = ['--workers', str(workers)]
    assert main(['enumerate', '--family', 'circulant:3', '-o', str(out_dir / 'catalog')] + common) == 0
    assert main(['classify', str(out_dir / 'catalog' / 'b.txt'), '-o', str(out_dir / 'classes.tsv')] + common) == 0
    assert main(['reduce', str(out_dir / 'classes.tsv'), '--certificates', str(out_dir / 'certs.txt'),
                 '-o', str(out_dir / 'reduced.tsv')] + common) == 0
    names = ['catalog/b.txt', 'catalog/v.txt', 'classes.tsv', 'reduced.tsv', 'certs.txt']
    return {name: (out_dir / name).read_bytes() for name in names}

def test_worker_count_keeps_bytes(tmp_path):
    single = run_pipeline(tmp_path / 'one', 1)
    many = run_pipeline(tmp_path / 'eight', 8)
    assert single == many
    assert single['certs.txt']

def test_common_options():
    parser = make_parser()
    args = parser.parse_args(['find', 'g.g6', '--family', 'fano', '--seed', '7', '--depth', '3', '--check-paper'])
    assert (args.seed, args.depth, args.check_counts) == (7, 3, True)
    args = parser.parse_args(['classify', 'b.txt', '--check-counts'])
    assert args.check_counts
    assert (args.seed, args.depth) == (0, None)

def test_pipeline_with_long_flag(tmp_path):
    catalog_dir = tmp_path / 'catalog'
    assert main(['enumerate', '--family', 'circulant:3', '--check-paper', '--seed', '5',
                 '-o', str(catalog_dir)]) == 0
    table = tmp_path / 'classes.tsv'
    assert main(['classify', str(catalog_dir / 'b.txt'), '--depth', '2', '-o', str(table)]) == 0
    assert main(['reduce', str(table), '--depth', '2', '--seed', '1']) == 0

@pytest.mark.parametrize('command', ['classify', 'reduce', 'verify-certificate', 'find'])
def test_missing_input(tmp_path, command, capsys):
    argv = [command, str(tmp_path / 'missing.txt')]
    if command == 'find':
        argv += ['--family', 'fano']
    assert main(argv) == 2
    assert 'does not exist' in capsys.readouterr().err

def test_unwritable_output(tmp_path, capsys):
    blocker = tmp_path / 'file'
    blocker.write_text('')
    assert main(['enumerate', '--family', 'circulant:2', '-o', str(blocker / 'catalog')]) == 2
    assert capsys.readouterr().err.startswith('error:')
