import logging
from functools import lru_cache

import numpy as np

from l2switch.catalog.families import SwitchingFamily, build
from l2switch.catalog.geometry import fano_geometry, cube_geometry
from l2switch.errors import AdmissibilityError, CapacityError, DimensionError
from l2switch.graph import Graph

# brute force over 2^n columns
MAX_V_SIZE = 16

def all_01_vectors(n):
    # row k holds the bits of k, most significant first
    codes = np.arange(1 << n, dtype=np.int64)
    shifts = np.arange(n-1, -1, -1, dtype=np.int64)
    return (codes[:, None] >> shifts[None, :]) & 1

@lru_cache(maxsize=None)
def _admissible_table(r):
    n = r.size
    if n > MAX_V_SIZE:
        raise CapacityError('enumerate_V', n, MAX_V_SIZE)

    x = all_01_vectors(n)
    # row k of x @ M is (M^T v)^T for the k-th vector v
    y = x @ r.numpy()
    ok = np.all((y == 0) | (y == 2), axis=1)
    logging.debug(f'{int(ok.sum())} admissible columns out of {len(x)} for {r}')

    retval = {}
    for vec, img in zip(x[ok], y[ok] // 2):
        retval[tuple(int(e) for e in vec)] = tuple(int(e) for e in img)
    return retval

def enumerate_V(r):
    """ All 01-vectors v such that R^T v is again a 01-vector, sorted. """
    return sorted(_admissible_table(r).keys())

def image_map(r):
    return dict(sorted(_admissible_table(r).items()))

def image_of_column(r, v):
    v = tuple(int(elem) for elem in v)
    if len(v) != r.size:
        raise DimensionError(f'Column of length {len(v)} does not match size {r.size}.')
    table = _admissible_table(r)
    if v not in table:
        raise AdmissibilityError(f'Column {v} is not admissible for {r}.')
    return table[v]

def v_matrix(r):
    # admissible columns side by side, shape (n, |V|)
    return np.array(enumerate_V(r), dtype=np.int64).T.copy()

def predicted_V(family):
    """ Closed-form description of the admissible columns and their images:
    for circulant families the pair sums must share one parity (odd columns
    move one pair to the left, even ones stay); for Fano the lines map to
    the ovals; for the cube the planes follow the face/edge/tetra rule. """

    if isinstance(family, str):
        family = SwitchingFamily.parse(family)
    retval = {}

    if family.tag == 'gm4':
        # same as a circulant with two pairs up to relabelling: 0, 1 and weight two (complemented)
        for code in range(16):
            v = tuple((code >> (3-k)) & 1 for k in range(4))
            if sum(v) in {0, 4}:
                retval[v] = v
            elif sum(v) == 2:
                retval[v] = tuple(1-e for e in v)
    elif family.tag == 'circulant':
        m = family.m
        n = 2*m
        for code in range(1 << n):
            v = tuple((code >> (n-1-k)) & 1 for k in range(n))
            parities = {(v[2*i] + v[2*i+1]) % 2 for i in range(m)}
            if len(parities) != 1:
                continue
            if parities == {1}:
                retval[v] = v[2:] + v[:2]
            else:
                retval[v] = v
    elif family.tag == 'fano':
        geom = fano_geometry()
        n = 7

        def vec(s):
            return tuple(1 if k in s else 0 for k in range(n))

        everything = frozenset(range(n))
        retval[vec(())] = vec(())
        retval[vec(everything)] = vec(everything)
        for line, oval in zip(geom.lines, geom.ovals):
            retval[vec(line)] = vec(oval)
            retval[vec(everything - line)] = vec(everything - oval)
    else:
        geom = cube_geometry()
        n = 8

        def vec(s):
            return tuple(1 if k in s else 0 for k in range(n))

        retval[vec(())] = vec(())
        retval[vec(range(n))] = vec(range(n))
        for plane in geom.planes:
            retval[vec(plane)] = vec(geom.image_of_plane(plane))

    return dict(sorted(retval.items()))

def conjugate(r, b):
    """ R^T B R as an integer numpy array, or None if it is not integral. """

    m = r.numpy()
    a = b.to_numpy() if isinstance(b, Graph) else np.asarray(b, dtype=np.int64)
    if a.shape != m.shape:
        raise DimensionError(f'Matrix of shape {a.shape} does not match size {r.size}.')
    prod = m.T @ a @ m
    if np.any(prod % 4 != 0):
        return None
    return prod // 4

def is_adjacency(a):
    a = np.asarray(a)
    return (a.ndim == 2 and a.shape[0] == a.shape[1] and bool(np.all((a == 0) | (a == 1)))
            and bool(np.all(a == a.T)) and not np.any(np.diag(a)))

def switched_B(r, b):
    """ Returns R^T B R as a Graph if B is admissible, otherwise None. """
    prod = conjugate(r, b)
    if prod is None or not is_adjacency(prod):
        return None
    return Graph.from_matrix(prod)

def is_admissible_B(r, b):
    return switched_B(r, b) is not None

def require_admissible_B(r, b):
    retval = switched_B(r, b)
    if retval is None:
        raise AdmissibilityError(f'Graph {b.to_hex()} is not an admissible switching set for {r}.')
    return retval
