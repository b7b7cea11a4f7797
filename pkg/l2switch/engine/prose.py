""" Edge-rewrite descriptions of the switching methods.  They work on the
host graph directly and never form Q^T A Q, so comparing them with
engine.switch.apply checks the matrix side against the combinatorial one. """

import logging
from functools import lru_cache

import numpy as np

from l2switch.admissible.blocks import BlockGrid, block_transform
from l2switch.admissible.vectors import switched_B
from l2switch.catalog.families import build
from l2switch.catalog.geometry import cube_geometry, fano_geometry
from l2switch.errors import DomainError
from l2switch.engine.named import (FANO_CYCLE_EDGES, FANO_FIGURE_EDGES, FANO_FIGURE_IMAGE_EDGES,
                                   cube_fixed_B)
from l2switch.engine.switch import apply_gm
from l2switch.graph import Graph

CIRCULANT_RULES = ('sun', 'family1', 'family2', 'blocks')
RULES = CIRCULANT_RULES + ('gm', 'fano', 'cube')

def default_rule(family):
    if family.tag == 'gm4':
        return 'gm'
    elif family.is_circulant:
        return 'blocks'
    else:
        return family.tag

def _rewrite(host, vertices, new_b, columns):
    # host with the induced graph on vertices replaced by new_b and the
    # listed outside vertices given new columns towards vertices
    rows = list(host.rows)
    for a, u in enumerate(vertices):
        for b, w in enumerate(vertices):
            if a != b:
                rows[u] &= ~(1 << w)
                if new_b.has_edge(a, b):
                    rows[u] |= 1 << w
    for v, col in columns.items():
        for a, u in enumerate(vertices):
            rows[v] &= ~(1 << u)
            rows[u] &= ~(1 << v)
            if col[a]:
                rows[v] |= 1 << u
                rows[u] |= 1 << v
    return Graph(host.order, rows)

def _subset_column(subset, size):
    return tuple(int(k in subset) for k in range(size))

def _support(col):
    return frozenset(k for k, elem in enumerate(col) if elem)

# circulant families

def shift_pairs(col, m):
    """ New column of an outside vertex with one neighbour in every pair: its
    adjacency to C_i becomes its former adjacency to C_(i+1).  Columns with
    0 or 2 neighbours in every pair are returned unchanged. """

    sums = [col[2*i] + col[2*i+1] for i in range(m)]
    if all(elem == 1 for elem in sums):
        return tuple(col[2*((i+1) % m) + e] for i in range(m) for e in (0, 1))
    if all(elem % 2 == 0 for elem in sums):
        return tuple(col)
    raise DomainError(f'Column {col} mixes odd and even pairs.')

def _offset_rule(rule, grid):
    """ Returns a function (i, k) -> new block (i, i+k) for 1 <= k <= m//2. """

    m = grid.m
    h = (m-1) // 2
    if rule in ('sun', 'family1') and m % 2 == 0:
        raise DomainError(f'Rule {rule!r} needs an odd number of pairs, got {m}.')
    if rule == 'family2' and m < 5:
        raise DomainError(f'Rule {rule!r} needs at least five pairs, got {m}.')

    def sun(i, k):
        if k == h:
            return grid.block(i, i+h+1)
        return grid.block(i, i+k)

    def family1(i, k):
        if k == h:
            return grid.block(i, i+h+1)
        return grid.block(i+1, i+k+1)

    def family2(i, k):
        if k == 1:
            return grid.block(i, i+2)
        elif k == 2:
            return grid.block(i+1, i+2)
        return grid.block(i, i+k)

    return {'sun': sun, 'family1': family1, 'family2': family2}[rule]

def circulant_inside(b, rule, m):
    grid = BlockGrid.from_graph(b)
    if rule == 'blocks':
        retval = block_transform(grid)
        if retval is None:
            raise DomainError(f'Block transform of {b.to_hex()} is not a graph.')
        return retval.to_graph()

    for i in range(m):
        if np.any(grid.block(i, i)):
            raise DomainError(f'Rule {rule!r} needs empty diagonal blocks; block {i} is not.')
    new_block = _offset_rule(rule, grid)
    out = np.zeros((2*m, 2*m), dtype=np.int64)
    for i in range(m):
        for k in range(1, m//2 + 1):
            j = (i+k) % m
            x = new_block(i, k)
            out[2*i:2*i+2, 2*j:2*j+2] = x
            out[2*j:2*j+2, 2*i:2*i+2] = x.T
    return Graph.from_matrix(out)

# Fano

@lru_cache(maxsize=None)
def fano_inside_table():
    """ Induced graphs on the seven points that Fano switching rewrites, with
    their images; the 7-cycle and the trivial graphs are fixed. """

    cycle = Graph.from_edges(7, FANO_CYCLE_EDGES)
    figure = Graph.from_edges(7, FANO_FIGURE_EDGES)
    image = Graph.from_edges(7, FANO_FIGURE_IMAGE_EDGES)

    retval = {}
    for k in range(7):
        p = [(i-k) % 7 for i in range(7)]
        for g in (Graph.empty(7), cycle):
            for elem in (g, g.complement()):
                retval[elem.permuted(p)] = elem.permuted(p)
        retval[figure.permuted(p)] = image.permuted(p)
        retval[figure.complement().permuted(p)] = image.complement().permuted(p)
    return retval

def fano_outside(col):
    """ Adjacent exactly to the line l_i becomes adjacent exactly to the oval
    O_i, and the same for complements. """

    geom = fano_geometry()
    support = _support(col)
    points = frozenset(geom.points)
    for line, oval in zip(geom.lines, geom.ovals):
        if support == line:
            return _subset_column(oval, 7)
        if support == points - line:
            return _subset_column(points - oval, 7)
    if support in (frozenset(), points):
        return tuple(col)
    raise DomainError(f'Column {col} is neither a line nor a line complement.')

def fano_inside(b):
    table = fano_inside_table()
    if b not in table:
        raise DomainError(f'Fano rewrite does not cover {b.to_hex()}.')
    return table[b]

# Cube

@lru_cache(maxsize=None)
def cube_fixed_graphs():
    retval = set()
    for k in range(1, 6):
        b = cube_fixed_B(k)
        retval.update((b, b.complement()))
    return frozenset(retval)

def cube_outside(col):
    """ Faces move under PI, opposite-edge planes go to their complement and
    the tetrahedra stay. """

    geom = cube_geometry()
    support = _support(col)
    if support in (frozenset(), frozenset(geom.points)):
        return tuple(col)
    if support not in geom.kinds:
        raise DomainError(f'Column {col} is not a plane of the cube.')
    return _subset_column(geom.image_of_plane(support), 8)

def cube_inside(b, family):
    if b in cube_fixed_graphs():
        return b
    retval = switched_B(build(family), b)
    if retval is None:
        raise DomainError(f'{b.to_hex()} is not a cube switching set.')
    return retval

def prose_switch(instance, rule=None):
    """ The switched host graph, computed from the edge-rewrite description
    of the given rule (by default the one that fits the family). """

    family = instance.family
    if rule is None:
        rule = default_rule(family)
    if rule not in RULES:
        raise DomainError(f'Unknown rule {rule!r}; expected one of {RULES}.')

    if rule == 'gm':
        if family.tag != 'gm4':
            raise DomainError(f'Rule {rule!r} does not apply to {family}.')
        return apply_gm(instance.host, [instance.vertices])

    columns = instance.columns()
    if rule in CIRCULANT_RULES:
        if not family.is_circulant:
            raise DomainError(f'Rule {rule!r} does not apply to {family}.')
        m = family.m
        new_b = circulant_inside(instance.b, rule, m)
        new_cols = {v: shift_pairs(col, m) for v, col in columns.items()}
    elif rule == 'fano':
        if family.tag != 'fano':
            raise DomainError(f'Rule {rule!r} does not apply to {family}.')
        new_b = fano_inside(instance.b)
        new_cols = {v: fano_outside(col) for v, col in columns.items()}
    else:
        if family.tag != 'cube':
            raise DomainError(f'Rule {rule!r} does not apply to {family}.')
        new_b = cube_inside(instance.b, family)
        new_cols = {v: cube_outside(col) for v, col in columns.items()}

    changed = {v: col for v, col in new_cols.items() if col != columns[v]}
    logging.debug(f'{rule}: {len(changed)} outside vertices move, inside '
                  f'{"fixed" if new_b == instance.b else "rewritten"}.')
    return _rewrite(instance.host, instance.vertices, new_b, changed)
