import logging
import sys
from argparse import ArgumentParser
from pathlib import Path

from l2switch.admissible.catalog import AdmissibleCatalog
from l2switch.catalog.families import build
from l2switch.cli.formats import (ClassRow, format_graph, format_graphs, read_class_table,
                                  read_graph, write_class_table)
from l2switch.config import RunConfig
from l2switch.engine.detect import find_switching_sets
from l2switch.engine.instance import SwitchingInstance
from l2switch.engine.iso import MAX_ISO_ORDER, is_isomorphic
from l2switch.engine.kneser import find_kneser_fano_instance, gen_kneser2
from l2switch.engine.named import METHODS, build_named_B
from l2switch.engine.planted import gen_planted
from l2switch.engine.prose import prose_switch
from l2switch.engine.spectral import spectrum_key, verify_R_cospectral
from l2switch.engine.switch import apply
from l2switch.equivalence.canonical import classes
from l2switch.errors import DomainError, CountCheckError, SwitchingError
from l2switch.graph import Graph
from l2switch.reduce.certificate import FactorizationCertificate, split_certificates
from l2switch.reduce.search import reduce_all
from l2switch.util import warn

# counts that --check-counts asserts, keyed by (quantity, family)
EXPECTED = {
    ('columns', 'fano'): 16,
    ('columns', 'cube'): 16,
    ('switching sets', 'circulant:4'): 3584,
    ('switching sets', 'cube'): 1504,
    ('classes', 'circulant:3'): 4,
    ('classes', 'cube'): 40,
    ('irreducible classes', 'circulant:3'): 1,
    ('irreducible classes', 'circulant:4'): 0,
    ('irreducible classes', 'circulant:5'): 3,
    ('irreducible classes', 'circulant:6'): 18,
    ('irreducible classes', 'fano'): 2,
    ('irreducible classes', 'cube'): 0
}

def expected_count(what, family):
    if what == 'columns' and family.is_circulant:
        return 2**(family.m+1)
    return EXPECTED.get((what, str(family)))

def check_counts(cfg, what, family, actual):
    if not cfg.check_counts:
        return
    expected = expected_count(what, family)
    if expected is None:
        logging.debug(f'No reference count of {what} for {family}.')
        return
    if expected != actual:
        raise CountCheckError(f'{what} of {family}', expected, actual)
    logging.debug(f'{what} of {family}: {actual} as expected.')

def emit(cfg, text):
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        cfg.out.write_text(text)

def parse_vertices(text):
    try:
        return [int(elem) for elem in text.split(',') if elem.strip()]
    except ValueError:
        raise DomainError(f'Invalid vertex list {text!r}.')

# commands

def cmd_catalog(cfg, args):
    family = cfg.require_family()
    rows = build(family).m.tolist()
    width = max(len(str(elem)) for row in rows for elem in row)
    emit(cfg, ''.join(' '.join(str(elem).rjust(width) for elem in row) + '\n' for row in rows))

def cmd_enumerate(cfg, args):
    family = cfg.require_family()
    catalog = AdmissibleCatalog.build(family, method=args.method, workers=cfg.workers,
                                      full=not args.normalized, progress=cfg.verbose)
    check_counts(cfg, 'columns', family, catalog.v_count)
    if not catalog.normalized:
        check_counts(cfg, 'switching sets', family, catalog.b_count)
    elif cfg.check_counts:
        warn('The switching-set count of a normalized catalog is not checked.')

    if cfg.out is None:
        print(f'{family}: {catalog.v_count} columns, {catalog.b_count} switching sets')
        return
    cfg.out.mkdir(parents=True, exist_ok=True)
    catalog.write_b(cfg.out / 'b.txt')
    catalog.write_v(cfg.out / 'v.txt')
    print(f'Wrote {catalog.b_count} switching sets and {catalog.v_count} columns to {cfg.out}.')

def cmd_classify(cfg, args):
    catalog = AdmissibleCatalog.read(cfg.inputs[0])
    family = catalog.family
    rows = [ClassRow(cls.canonical, cls.members) for cls in classes(catalog.b_set, family)]
    check_counts(cfg, 'classes', family, len(rows))
    write_table(cfg, family, rows)

def cmd_reduce(cfg, args):
    family, rows = read_class_table(cfg.inputs[0])
    certs = reduce_all([row.b for row in rows], family, depth=cfg.depth, workers=cfg.workers,
                       progress=cfg.verbose)
    for row, cert in zip(rows, certs):
        row.irreducible = cert is None
    check_counts(cfg, 'irreducible classes', family, sum(1 for row in rows if row.irreducible))

    if args.certificates is not None:
        Path(args.certificates).write_text(''.join(cert.to_text() for cert in certs if cert is not None))
    write_table(cfg, family, rows)

def write_table(cfg, family, rows):
    if cfg.out is None:
        for row in rows:
            print(row.to_text())
    else:
        write_class_table(cfg.out, family, rows)

def cmd_verify_certificate(cfg, args):
    text = cfg.inputs[0].read_text()
    blocks = split_certificates(text)
    failed = 0
    for k, block in enumerate(blocks):
        cert = FactorizationCertificate.from_text(block, source=f'{cfg.inputs[0]}#{k+1}')
        issues = cert.problems()
        if issues:
            failed += 1
            print(f'certificate {k+1} ({cert.b.to_hex()}): ' + '; '.join(issues))
    print(f'{len(blocks)-failed} of {len(blocks)} certificates verified')
    if failed:
        raise SwitchingError(f'{failed} certificates failed to verify.')

def cmd_find(cfg, args):
    family = cfg.require_family()
    g = read_graph(cfg.inputs[0])
    found = find_switching_sets(g, family, limit=cfg.limit, time_budget=cfg.time_budget,
                                workers=cfg.workers)
    emit(cfg, ''.join(' '.join(str(v) for v in inst.vertices) + '\n' for inst in found))

def cmd_switch(cfg, args):
    family = cfg.require_family()
    g = read_graph(cfg.inputs[0])
    instance = SwitchingInstance(g, family, parse_vertices(args.vertices))
    result = apply(instance)
    if args.prose:
        if prose_switch(instance, rule=args.rule) != result:
            raise SwitchingError('Edge rewrite and matrix conjugation disagree.')
        logging.debug('Edge rewrite agrees with matrix conjugation.')
    emit(cfg, format_graph(result, cfg.fmt))

def verdict_lines(g, h):
    pg, cg = spectrum_key(g)
    ph, ch = spectrum_key(h)
    lines = [f'char poly 1: {pg}',
             f'char poly 2: {ph}',
             f'complement char poly 1: {cg}',
             f'complement char poly 2: {ch}',
             f'cospectral: {"yes" if pg == ph else "no"}',
             f'R-cospectral: {"yes" if verify_R_cospectral(g, h) else "no"}']
    if g.order <= MAX_ISO_ORDER:
        lines.append(f'isomorphic: {"yes" if is_isomorphic(g, h) else "no"}')
    return lines

def cmd_verify(cfg, args):
    g = read_graph(cfg.inputs[0])
    h = read_graph(cfg.inputs[1])
    if g.order != h.order:
        raise DomainError(f'Graphs have orders {g.order} and {h.order}.')
    emit(cfg, '\n'.join(verdict_lines(g, h)) + '\n')

def cmd_kneser(cfg, args):
    g = gen_kneser2(args.n, args.k)
    graphs = [g]
    comments = [f'# K2({args.n},{args.k}): {g.order} vertices, {g.num_edges} edges']
    if args.switch:
        instance = find_kneser_fano_instance(args.n, args.k, g=g)
        mate = apply(instance)
        graphs.append(mate)
        comments.append('# instance ' + ' '.join(str(v) for v in instance.vertices))
        comments.extend('# ' + line for line in verdict_lines(g, mate))
    emit(cfg, '\n'.join(comments) + '\n' + format_graphs(graphs, cfg.fmt))

def cmd_plant(cfg, args):
    family = cfg.require_family()
    if args.b is not None:
        b = Graph.from_hex(family.size, args.b)
    else:
        b = build_named_B(args.method, args.index)
    host, instance = gen_planted(family, b, args.outside, seed=cfg.seed, density=args.density)
    text = '# instance ' + ' '.join(str(v) for v in instance.vertices) + '\n'
    emit(cfg, text + format_graph(host, cfg.fmt))

COMMANDS = {
    'catalog': cmd_catalog,
    'enumerate': cmd_enumerate,
    'classify': cmd_classify,
    'reduce': cmd_reduce,
    'verify-certificate': cmd_verify_certificate,
    'find': cmd_find,
    'switch': cmd_switch,
    'verify': cmd_verify,
    'kneser': cmd_kneser,
    'plant': cmd_plant
}

def make_parser():
    parser = ArgumentParser(prog='l2switch', description='Level-2 switching methods for R-cospectral graphs.')
    parser.add_argument('-v', '--verbose', action='store_true')
    sub = parser.add_subparsers(dest='command', required=True)

    def add(name, inputs=0, family=False, out=True):
        p = sub.add_parser(name)
        if inputs:
            p.add_argument('inputs', nargs=inputs)
        if family:
            p.add_argument('--family', required=True)
        if out:
            p.add_argument('-o', '--out')
        p.add_argument('--workers', type=int, default=1)
        p.add_argument('--seed', type=int, default=0)
        p.add_argument('--depth', type=int)
        p.add_argument('--check-counts', '--check-paper', dest='check_counts', action='store_true')
        p.add_argument('--format', choices=['graph6', 'edges'], default='graph6')
        return p

    add('catalog', family=True)

    p = add('enumerate', family=True)
    p.add_argument('--method', choices=['brute', 'patched'])
    p.add_argument('--normalized', action='store_true')

    add('classify', inputs=1)

    p = add('reduce', inputs=1)
    p.add_argument('--certificates')

    add('verify-certificate', inputs=1, out=False)

    p = add('find', inputs=1, family=True)
    p.add_argument('--limit', type=int)
    p.add_argument('--time-budget', type=float)

    p = add('switch', inputs=1, family=True)
    p.add_argument('--vertices', required=True)
    p.add_argument('--prose', action='store_true')
    p.add_argument('--rule')

    add('verify', inputs=2)

    p = add('kneser')
    p.add_argument('n', type=int)
    p.add_argument('k', type=int)
    p.add_argument('--switch', action='store_true')

    p = add('plant', family=True)
    p.add_argument('--method', choices=sorted(METHODS))
    p.add_argument('--index', type=int)
    p.add_argument('--b')
    p.add_argument('--outside', type=int, default=10)
    p.add_argument('--density', type=float, default=0.5)

    return parser

def report(err):
    print(f'error: {err}', file=sys.stderr)
    return err.exit_code

def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG)

    try:
        cfg = RunConfig.from_args(args)
        if args.command == 'plant' and args.b is None and args.method is None:
            raise DomainError('plant needs --method or --b.')
        COMMANDS[args.command](cfg, args)
    except OSError as err:
        return report(DomainError(f'{err.filename}: {err.strerror}.'))
    except SwitchingError as err:
        return report(err)
    return 0

if __name__ == '__main__':
    sys.exit(main())
