""" Text formats of the command-line tools: graph files (graph6 or edge
lists) and class tables. """

from pathlib import Path

import networkx as nx

from l2switch.admissible.catalog import read_header_line
from l2switch.catalog.families import SwitchingFamily
from l2switch.errors import DomainError
from l2switch.graph import Graph

CLASS_FORMAT_VERSION = 'l2switch-classes-1'

# graph files

def _parse_edge_block(lines, path):
    # 'n <order>' followed by 'u v' lines
    tokens = lines[0][1].split()
    if len(tokens) != 2 or tokens[0] != 'n':
        raise DomainError(f'{path}:{lines[0][0]}: expected "n <order>", got {lines[0][1]!r}.')
    try:
        order = int(tokens[1])
    except ValueError:
        raise DomainError(f'{path}:{lines[0][0]}: invalid order {tokens[1]!r}.')
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        try:
            u, v = (int(elem) for elem in parts)
        except ValueError:
            raise DomainError(f'{path}:{lineno}: expected "u v", got {line!r}.')
        if not (0 <= u < order and 0 <= v < order) or u == v:
            raise DomainError(f'{path}:{lineno}: edge ({u}, {v}) is invalid for order {order}.')
        edges.append((u, v))
    return Graph.from_edges(order, edges)

def parse_graphs(text, path='<input>'):
    """ Graphs from graph6 lines or from edge-list blocks; '#' lines and
    blank lines are skipped. """

    lines = [(k, line.strip()) for k, line in enumerate(text.splitlines(), 1)]
    lines = [(k, line) for k, line in lines if line and not line.startswith('#')]
    if not lines:
        return []

    if lines[0][1].startswith('n '):
        blocks = []
        for k, line in lines:
            if line.startswith('n '):
                blocks.append([])
            blocks[-1].append((k, line))
        return [_parse_edge_block(block, path) for block in blocks]

    retval = []
    for k, line in lines:
        try:
            retval.append(Graph.from_graph6(line))
        except (nx.NetworkXError, ValueError) as err:
            raise DomainError(f'{path}:{k}: cannot parse graph6 {line!r}: {err}')
    return retval

def read_graphs(path):
    path = Path(path)
    if not path.exists():
        raise DomainError(f'No such file: {path}.')
    return parse_graphs(path.read_text(), path=path)

def read_graph(path):
    graphs = read_graphs(path)
    if len(graphs) != 1:
        raise DomainError(f'{path}: expected one graph, found {len(graphs)}.')
    return graphs[0]

def format_graph(g, fmt='graph6'):
    if fmt == 'graph6':
        return g.to_graph6() + '\n'
    lines = [f'n {g.order}'] + [f'{u} {v}' for u, v in g.edges()]
    return '\n'.join(lines) + '\n'

def format_graphs(graphs, fmt='graph6'):
    return ''.join(format_graph(g, fmt) for g in graphs)

# class tables

class ClassRow:
    def __init__(self, b, size, irreducible=None):
        # save settings
        self.b = b
        self.size = size
        self.irreducible = irreducible

    def to_text(self):
        flag = {None: '-', True: 'irreducible', False: 'reducible'}[self.irreducible]
        return f'{self.b.order}\t{self.b.to_hex()}\t{self.size}\t{flag}'

def write_class_table(path, family, rows):
    with open(path, 'w') as f:
        f.write(f'# {CLASS_FORMAT_VERSION}\n')
        f.write(f'# family {family}\n')
        f.write(f'# count {len(rows)}\n')
        for row in rows:
            f.write(row.to_text() + '\n')

def read_class_table(path):
    """ Returns (family, rows). """

    header = {}
    rows = []
    with open(path, 'r') as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line:
                continue
            if line.startswith('#'):
                read_header_line(line, header)
                continue
            parts = line.split('\t')
            if len(parts) != 4:
                raise DomainError(f'{path}:{lineno}: expected 4 tab-separated fields, got {len(parts)}.')
            try:
                b = Graph.from_hex(int(parts[0]), parts[1])
                size = int(parts[2])
            except ValueError:
                raise DomainError(f'{path}:{lineno}: cannot parse {line!r}.')
            flag = {'-': None, 'irreducible': True, 'reducible': False}.get(parts[3])
            if flag is None and parts[3] != '-':
                raise DomainError(f'{path}:{lineno}: unknown flag {parts[3]!r}.')
            rows.append(ClassRow(b, size, flag))

    if 'family' not in header:
        raise DomainError(f'{path}: missing family header.')
    if 'count' in header and int(header['count']) != len(rows):
        raise DomainError(f'{path}: header count {header["count"]} but {len(rows)} rows.')
    return SwitchingFamily.parse(header['family']), rows
