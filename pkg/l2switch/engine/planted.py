import logging

import numpy as np

from l2switch.admissible.vectors import enumerate_V, require_admissible_B
from l2switch.catalog.families import SwitchingFamily, build
from l2switch.engine.instance import SwitchingInstance
from l2switch.errors import AdmissibilityError, DimensionError
from l2switch.graph import Graph

def gen_planted(family, b, outside_profile, seed=0, density=0.5, shuffle=True):
    """ Host graph with a planted switching set.

    outside_profile is either a list of columns (one per outside vertex,
    each an admissible column for the family) or a count of outside
    vertices whose columns are drawn from the admissible ones.  Edges
    between outside vertices are random with the given density.  With
    shuffle the host vertices are relabelled by a random permutation.
    Returns (host, instance). """

    if isinstance(family, str):
        family = SwitchingFamily.parse(family)
    r = build(family)
    n = family.size
    if b.order != n:
        raise DimensionError(f'{family} needs a switching set on {n} vertices, got {b.order}.')
    require_admissible_B(r, b)

    rng = np.random.default_rng(seed)
    v_set = enumerate_V(r)
    if isinstance(outside_profile, int):
        picks = rng.integers(len(v_set), size=outside_profile)
        columns = [v_set[k] for k in picks]
    else:
        columns = [tuple(int(e) for e in col) for col in outside_profile]
        allowed = set(v_set)
        for k, col in enumerate(columns):
            if len(col) != n:
                raise DimensionError(f'Column {k} has length {len(col)}, expected {n}.')
            if col not in allowed:
                raise AdmissibilityError(f'Column {k} = {col} is not admissible for {family}.')

    d = len(columns)
    total = n + d
    a = np.zeros((total, total), dtype=np.int64)
    a[:n, :n] = b.to_numpy()
    if d:
        v = np.array(columns, dtype=np.int64).T
        a[:n, n:] = v
        a[n:, :n] = v.T
        w = np.triu((rng.random((d, d)) < density).astype(np.int64), 1)
        a[n:, n:] = w + w.T

    if shuffle:
        # host vertex i is planted vertex perm[i]
        perm = rng.permutation(total)
        a = a[np.ix_(perm, perm)]
        position = np.argsort(perm)
        vertices = [int(position[k]) for k in range(n)]
    else:
        vertices = list(range(n))

    host = Graph.from_matrix(a)
    logging.debug(f'Planted {family} set on {vertices} in a host of order {total}.')
    return host, SwitchingInstance(host, family, vertices)
