import logging
from functools import lru_cache

import numpy as np

from l2switch.admissible.blocks import BlockGrid
from l2switch.admissible.enumerate import complement_block
from l2switch.catalog.families import SwitchingFamily
from l2switch.catalog.geometry import cube_geometry
from l2switch.errors import DomainError
from l2switch.files import get_cube_table
from l2switch.graph import Graph

O = np.zeros((2, 2), dtype=np.int64)
I = np.eye(2, dtype=np.int64)
J = np.ones((2, 2), dtype=np.int64)
N = np.array([[0, 0], [1, 1]], dtype=np.int64)

# method -> (family, combinatorial rule used by engine.prose)
METHODS = {
    'sun': ('circulant', 'sun'),
    'family1': ('circulant', 'family1'),
    'family2': ('circulant', 'family2'),
    'six': ('circulant:3', 'sun'),
    'cor44a': ('circulant:5', 'sun'),
    'cor44b': ('circulant:5', 'family1'),
    'cor44c': ('circulant:5', 'family2'),
    'example52': ('circulant:4', 'blocks'),
    'twelve': ('circulant:6', 'blocks'),
    'fano_cycle': ('fano', 'fano'),
    'fano_figure': ('fano', 'fano'),
    'cube': ('cube', 'cube')
}

def block_circulant(offsets, m):
    """ Graph whose block (i, i+k) is offsets[k] (missing offsets are O);
    blocks below the diagonal are the transposes. """

    blocks = [[O]*m for _ in range(m)]
    for i in range(m):
        for k in range(1, m):
            blocks[i][(i+k) % m] = offsets.get(k, O)
    for i in range(m):
        for j in range(m):
            if not np.array_equal(blocks[i][j], blocks[j][i].T):
                raise DomainError(f'Offsets do not give a symmetric matrix at block ({i}, {j}).')
    return BlockGrid.from_blocks(blocks).to_graph()

def sun_B(m):
    if m < 3 or m % 2 == 0:
        raise DomainError(f'Sun graph switching needs odd m >= 3, got {m}.')
    h = (m-1) // 2
    return block_circulant({h: N, h+1: N.T}, m)

def family1_B(m):
    if m < 3 or m % 2 == 0:
        raise DomainError(f'The first infinite family needs odd m >= 3, got {m}.')
    h = (m-1) // 2
    offsets = {k: I for k in range(1, m)}
    offsets[h] = N
    offsets[h+1] = N.T
    return block_circulant(offsets, m)

def family2_B(m):
    if m < 5:
        raise DomainError(f'The second infinite family needs m >= 5, got {m}.')
    return block_circulant({1: N, 2: N.T, m-2: N, m-1: N.T}, m)

def toggle_blocks(b, blocks):
    # complement the listed off-diagonal block pairs (i, j)
    for i, j in blocks:
        if i == j:
            raise DomainError(f'Block ({i}, {j}) is on the diagonal.')
        b = complement_block(b, i, j)
    return b

# Fano: the 7-cycle and the figure's switching set (vertices 0..6 stand for v1..v7)
FANO_CYCLE_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0))
FANO_FIGURE_EDGES = ((3, 2), (3, 4), (5, 0), (5, 2), (5, 4), (6, 0), (6, 1), (6, 2), (6, 3), (6, 5))
FANO_FIGURE_IMAGE_EDGES = ((3, 2), (3, 4), (1, 2), (1, 4), (1, 6), (0, 1), (0, 3), (0, 4), (0, 5), (0, 6))

def cube_fixed_B(index):
    """ The five switching sets on the cube that Cube switching leaves in
    place: empty, the cube itself, the antipodal matching, the eight-edge
    graph, and the latter two together. """

    geom = cube_geometry()
    matching = [(u, geom.antipode(u)) for u in geom.points if u < geom.antipode(u)]
    eight = [(0, 7), (0, 6), (1, 7), (1, 6), (2, 5), (2, 4), (3, 5), (3, 4)]
    edges = {
        1: [],
        2: geom.edges(),
        3: matching,
        4: eight,
        5: eight + matching
    }[index]
    return Graph.from_edges(8, edges)

@lru_cache(maxsize=None)
def cube_table():
    # B_6 .. B_40, one graph per line as eight row strings
    retval = []
    with open(get_cube_table(), 'r') as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            rows = line.split()
            if len(rows) != 8:
                raise DomainError(f'{get_cube_table()}:{lineno}: expected 8 rows, got {len(rows)}.')
            retval.append(Graph.from_row_strings(rows))
    return tuple(retval)

def cube_B(index):
    if 1 <= index <= 5:
        return cube_fixed_B(index)
    table = cube_table()
    if 6 <= index < 6 + len(table):
        return table[index-6]
    raise DomainError(f'Cube switching sets are numbered 1..{5+len(table)}, got {index}.')

@lru_cache(maxsize=None)
def twelve_vertex_B(workers=1):
    """ Representatives of the irreducible classes on twelve vertices,
    obtained from the patched enumeration, the class quotient and the
    reduction search.  Takes a long time. """

    from l2switch.admissible.catalog import AdmissibleCatalog
    from l2switch.equivalence.canonical import classes
    from l2switch.reduce.search import reduce_all

    family = SwitchingFamily.circulant(6)
    catalog = AdmissibleCatalog.build(family, workers=workers, full=False)
    reps = [cls.canonical for cls in classes(catalog.b_set, family)]
    certs = reduce_all(reps, family, workers=workers)
    retval = tuple(rep for rep, cert in zip(reps, certs) if cert is None)
    logging.debug(f'{len(retval)} irreducible classes among {len(reps)} on twelve vertices.')
    return retval

def build_named_B(method, m=None):
    """ Switching sets of the named constructions.  m is the pair count for the
    circulant families and the index for 'cube' (1..40) and 'twelve'
    (1..18). """

    if method not in METHODS:
        raise DomainError(f'Unknown switching method {method!r}; expected one of {sorted(METHODS)}.')

    if method == 'sun':
        return sun_B(m)
    elif method == 'family1':
        return family1_B(m)
    elif method == 'family2':
        return family2_B(m)
    elif method == 'six':
        return sun_B(3)
    elif method == 'cor44a':
        # sun with J between consecutive pairs
        return toggle_blocks(sun_B(5), [(i, (i+1) % 5) for i in range(5)])
    elif method == 'cor44b':
        return family1_B(5)
    elif method == 'cor44c':
        # second family with J - N^T two pairs ahead
        return toggle_blocks(family2_B(5), [(i, (i+2) % 5) for i in range(5)])
    elif method == 'example52':
        first = (0, 0, 1, 0, 0, 0, 1, 0)
        return Graph.from_matrix([[first[(c-r) % 8] for c in range(8)] for r in range(8)])
    elif method == 'twelve':
        reps = twelve_vertex_B()
        if m is None or not (1 <= m <= len(reps)):
            raise DomainError(f'Twelve-vertex sets are numbered 1..{len(reps)}, got {m}.')
        return reps[m-1]
    elif method == 'fano_cycle':
        return Graph.from_edges(7, FANO_CYCLE_EDGES)
    elif method == 'fano_figure':
        return Graph.from_edges(7, FANO_FIGURE_EDGES)
    else:
        if m is None:
            raise DomainError('Cube switching sets need an index 1..40.')
        return cube_B(m)

def named_family(method, m=None):
    family, _ = METHODS[method]
    if family == 'circulant':
        return SwitchingFamily.circulant(m)
    return SwitchingFamily.parse(family)

def named_rule(method):
    return METHODS[method][1]
