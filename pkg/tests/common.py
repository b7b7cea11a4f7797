from pathlib import Path

import pytest

from l2switch import *
from l2switch.catalog.geometry import cube_geometry, fano_geometry
from l2switch.engine.named import FANO_FIGURE_EDGES, FANO_FIGURE_IMAGE_EDGES
from l2switch.util import slow_enabled

TEST_DIR = Path(__file__).resolve().parent

SLOW = slow_enabled()
slow = pytest.mark.skipif(not SLOW, reason='set L2SWITCH_SLOW=1 to run long enumerations')

def get_file(path):
    return Path(TEST_DIR, path)

def get_files(*args):
    return [get_file(path) for path in args]

def pytest_family_params(metafunc, families=None):
    if families is None:
        families = ['gm4', 'circulant:2', 'circulant:3', 'circulant:4', 'circulant:5',
                    'circulant:6', 'fano', 'cube']

    if 'family' in metafunc.fixturenames:
        metafunc.parametrize('family', families)

def with_outside(b, columns):
    """ Switching set b on vertices 0..n-1 followed by one outside vertex per
    column (outside vertices pairwise non-adjacent). """

    n = b.order
    edges = list(b.edges())
    for k, col in enumerate(columns):
        edges.extend((n+k, u) for u in range(n) if col[u])
    return Graph.from_edges(n + len(columns), edges)

def subset_column(subset, n):
    return tuple(int(k in subset) for k in range(n))

# figure pairs: (left, right, family, switching set of left)

def six_vertex_pair():
    left_b = Graph.from_edges(6, [(1, 3), (1, 2), (1, 5), (3, 4), (3, 5), (5, 0)])
    right_b = Graph.from_edges(6, [(1, 3), (1, 4), (1, 5), (3, 0), (3, 5), (5, 2)])
    left = with_outside(left_b, [subset_column({0, 1}, 6), subset_column({1, 2, 4}, 6)])
    right = with_outside(right_b, [subset_column({0, 1}, 6), subset_column({0, 2, 5}, 6)])
    return left, right, 'circulant:3', tuple(range(6))

def fano_pair():
    geom = fano_geometry()
    left_b = Graph.from_edges(7, FANO_FIGURE_EDGES)
    right_b = Graph.from_edges(7, FANO_FIGURE_IMAGE_EDGES)
    left = with_outside(left_b, [subset_column(geom.lines[0], 7)])
    right = with_outside(right_b, [subset_column(geom.ovals[0], 7)])
    return left, right, 'fano', tuple(range(7))

def cube_pair():
    q3 = Graph.from_edges(8, cube_geometry().edges())
    left = with_outside(q3, [subset_column({0, 1, 2, 3}, 8), subset_column({1, 2, 5, 6}, 8)])
    right = with_outside(q3, [subset_column({4, 5, 6, 7}, 8), subset_column({1, 3, 4, 6}, 8)])
    return left, right, 'cube', tuple(range(8))

FIGURE_PAIRS = {
    'six': six_vertex_pair,
    'fano': fano_pair,
    'cube': cube_pair
}
