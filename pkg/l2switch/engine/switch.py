import logging
from math import lcm

import numpy as np

from l2switch.errors import AdmissibilityError, ConditionError, DomainError, PlacementError
from l2switch.graph import Graph
from l2switch.linalg.matrix import IntMatrix

def conjugate_host(g, q, scale):
    """ Adjacency Q^T A Q of g for Q = q / scale, with q an integer matrix
    of the host's order.  The division must be exact and give an adjacency
    matrix. """

    a = g.to_matrix()
    q = q if isinstance(q, IntMatrix) else IntMatrix(q)
    prod = q.T @ a @ q
    try:
        prod = prod.exact_div(scale*scale)
    except AdmissibilityError:
        raise AdmissibilityError(f'Conjugation is not integral (scale {scale}).')
    try:
        return Graph.from_matrix(prod)
    except DomainError as err:
        raise AdmissibilityError(f'Conjugation is not an adjacency matrix: {err}')

def apply(instance):
    """ Switches the host graph: A' = Q^T A Q with Q = diag(R, I) placed on
    the ordered switching set.  Only the rows and columns of the switching
    set change; W stays as it is. """

    host = instance.host
    s = list(instance.vertices)
    d = instance.outside()
    m = instance.r.numpy()
    a = host.to_numpy()

    new = a.copy()
    # R^T B R, scaled by four
    inner = m.T @ a[np.ix_(s, s)] @ m
    if np.any(inner % 4):
        raise AdmissibilityError(f'R^T B R is not integral for {instance}.')
    new[np.ix_(s, s)] = inner // 4
    if d:
        # R^T V, scaled by two
        cross = m.T @ a[np.ix_(s, d)]
        if np.any(cross % 2):
            raise AdmissibilityError(f'R^T V is not integral for {instance}.')
        new[np.ix_(s, d)] = cross // 2
        new[np.ix_(d, s)] = (cross // 2).T

    try:
        retval = Graph.from_matrix(new)
    except DomainError as err:
        raise AdmissibilityError(f'Switching {instance} does not give a graph: {err}')
    logging.debug(f'Switched {instance}: {host.num_edges} -> {retval.num_edges} edges.')
    return retval

def _check_cells(g, cells):
    seen = set()
    for cell in cells:
        for v in cell:
            if not (0 <= v < g.order):
                raise PlacementError(f'Vertex {v} is out of range for order {g.order}.')
            if v in seen:
                raise PlacementError(f'Vertex {v} is in more than one cell.')
            seen.add(v)
    return [v for v in range(g.order) if v not in seen]

def _swap(rows, v, cell):
    for w in cell:
        rows[v] ^= 1 << w
        rows[w] ^= 1 << v

def apply_gm(g, cells):
    """ GM-switching: every vertex of C_i has the same number of neighbours
    in C_j, and every outside vertex has 0, half or all of its neighbours in
    C_i.  Outside vertices with exactly half swap their adjacencies to C_i. """

    cells = [tuple(cell) for cell in cells]
    for cell in cells:
        if len(cell) < 2 or len(cell) % 2:
            raise DomainError(f'GM cells must have even size at least 2, got {cell}.')
    outside = _check_cells(g, cells)

    for i, ci in enumerate(cells):
        for j, cj in enumerate(cells):
            counts = {u: g.count_in(u, cj) for u in ci}
            if len(set(counts.values())) > 1:
                detail = ', '.join(f'{u}: {k}' for u, k in counts.items())
                raise ConditionError('(i)', f'vertices of C_{i+1} have different numbers of neighbours in C_{j+1} ({detail})')

    rows = list(g.rows)
    for v in outside:
        for i, ci in enumerate(cells):
            k = g.count_in(v, ci)
            half = len(ci) // 2
            if k not in (0, half, len(ci)):
                raise ConditionError('(ii)', f'vertex {v} has {k} neighbours in C_{i+1}, expected 0, {half} or {len(ci)}')
            if k == half:
                _swap(rows, v, ci)
    return Graph(g.order, rows)

def gm_matrix(n, cells):
    """ Returns (q, scale) with q / scale = diag(2/|C_i| J - I, ..., I). """

    cells = [tuple(cell) for cell in cells]
    scale = lcm(*(len(cell)//2 for cell in cells)) if cells else 1
    rows = [[scale if i == j else 0 for j in range(n)] for i in range(n)]
    for cell in cells:
        val = 2*scale // len(cell)
        for u in cell:
            for w in cell:
                rows[u][w] = val - (scale if u == w else 0)
    return IntMatrix(rows), scale

def apply_wqh(g, cells):
    """ WQH-switching on pairs (C_i^(1), C_i^(2)) of equal size.  Outside
    vertices adjacent to all of one half and none of the other swap their
    adjacencies to the union; vertices with equal counts stay. """

    cells = [(tuple(c1), tuple(c2)) for c1, c2 in cells]
    outside = _check_cells(g, [c1 + c2 for c1, c2 in cells])

    for i, (c1, c2) in enumerate(cells):
        if len(c1) != len(c2) or not c1:
            raise ConditionError('(i)', f'halves of cell {i+1} have sizes {len(c1)} and {len(c2)}')

    for i, (ci1, ci2) in enumerate(cells):
        for j, (cj1, cj2) in enumerate(cells):
            diffs = {}
            for u in ci1:
                diffs[u] = g.count_in(u, cj1) - g.count_in(u, cj2)
            for u in ci2:
                diffs[u] = g.count_in(u, cj2) - g.count_in(u, cj1)
            if len(set(diffs.values())) > 1:
                detail = ', '.join(f'{u}: {k}' for u, k in diffs.items())
                raise ConditionError('(ii)', f'signed differences of cell {i+1} towards cell {j+1} differ ({detail})')

    rows = list(g.rows)
    for v in outside:
        for i, (c1, c2) in enumerate(cells):
            k1 = g.count_in(v, c1)
            k2 = g.count_in(v, c2)
            if (k1, k2) in ((len(c1), 0), (0, len(c2))):
                _swap(rows, v, c1 + c2)
            elif k1 != k2:
                raise ConditionError('(iii)', f'vertex {v} has {k1} and {k2} neighbours in the halves of cell {i+1}')
    return Graph(g.order, rows)

def wqh_matrix(n, cells):
    """ Returns (q, scale) for diag(R_1, ..., R_t, I) with
    R_i = [[I - J/s, J/s], [J/s, I - J/s]] and s the half size. """

    cells = [(tuple(c1), tuple(c2)) for c1, c2 in cells]
    scale = lcm(*(len(c1) for c1, _ in cells)) if cells else 1
    rows = [[scale if i == j else 0 for j in range(n)] for i in range(n)]
    for c1, c2 in cells:
        val = scale // len(c1)
        for half, other in ((c1, c2), (c2, c1)):
            for u in half:
                for w in half:
                    rows[u][w] = (scale if u == w else 0) - val
                for w in other:
                    rows[u][w] = val
    return IntMatrix(rows), scale
