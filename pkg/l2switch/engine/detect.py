import logging
import time

import numpy as np

from l2switch.admissible.vectors import enumerate_V, switched_B
from l2switch.catalog.families import SwitchingFamily, build
from l2switch.engine.instance import SwitchingInstance
from l2switch.equivalence.symmetry import conjugating_perms, group_closure
from l2switch.errors import CapacityError
from l2switch.parallel import run_tasks

MAX_HOST_ORDER = 64

def position_order(v_set, n):
    """ Greedy order of the switching-set positions: each step adds the
    position that keeps the number of distinct column prefixes smallest, so
    outside vertices are ruled out as early as possible.  Position 0 comes
    first. """

    order = [0]
    while len(order) < n:
        best = None
        for pos in range(n):
            if pos in order:
                continue
            count = len({tuple(v[p] for p in order + [pos]) for v in v_set})
            if best is None or count < best[0]:
                best = (count, pos)
        order.append(best[1])
    return order

def prefix_tables(v_set, order):
    # valid[t][x] is True iff x encodes the bits of some column at order[:t+1]
    retval = []
    for t in range(len(order)):
        table = np.zeros(1 << (t+1), dtype=bool)
        for v in v_set:
            x = 0
            for p in order[:t+1]:
                x = 2*x + v[p]
            table[x] = True
        retval.append(table)
    return retval

class SwitchingSetSearch:
    """ Depth-first search for ordered switching sets in a host graph.

    Positions of the switching set are filled in a fixed order.  Every
    vertex outside the partial set carries the bits of its adjacency to the
    chosen vertices; if these bits are no prefix of an admissible column the
    vertex has to end up inside the set, which bounds the number of such
    vertices by the free positions.  Each completed set is checked against
    the admissible switching sets and kept only if it is the smallest
    labelling in its orbit under the family's symmetries. """

    def __init__(self, host, family, catalog=None, limit=None, deadline=None):
        if isinstance(family, str):
            family = SwitchingFamily.parse(family)
        if host.order > MAX_HOST_ORDER:
            raise CapacityError('find_switching_sets', host.order, MAX_HOST_ORDER)

        # save settings
        self.host = host
        self.family = family
        self.catalog = catalog
        self.limit = limit
        self.deadline = deadline

        self.r = build(family)
        self.n = family.size
        v_set = enumerate_V(self.r)
        self.order = position_order(v_set, self.n)
        self.valid = prefix_tables(v_set, self.order)
        self.perms = group_closure(conjugating_perms(family))
        self.transitive = len({p[0] for p in self.perms}) == self.n

        self.adj = host.to_numpy()
        self.found = []
        self.timed_out = False

    def _done(self):
        if self.limit is not None and len(self.found) >= self.limit:
            return True
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.timed_out = True
            return True
        return False

    def _labels(self, chosen):
        labels = [0]*self.n
        for t, v in enumerate(chosen):
            labels[self.order[t]] = int(v)
        return tuple(labels)

    def _is_canonical(self, labels):
        return all(labels <= tuple(labels[p[i]] for i in range(self.n)) for p in self.perms)

    def _finish(self, chosen):
        labels = self._labels(chosen)
        if switched_B(self.r, self.host.induced(labels)) is None:
            return
        if not self._is_canonical(labels):
            return
        self.found.append(labels)

    def _candidates(self, chosen, prefix, free):
        t = len(chosen)
        cands = np.nonzero(free)[0]
        if t > 0 and self.transitive:
            cands = cands[cands > chosen[0]]
        if t > 0:
            bad = free & ~self.valid[t-1][prefix]
            slots = self.n - t
            nbad = int(bad.sum())
            if nbad > slots:
                return cands[:0], None
            if nbad == slots:
                cands = cands[bad[cands]]
        if len(cands) == 0:
            return cands, None

        # column prefixes after adding each candidate
        new = 2*prefix[None, :] + self.adj[cands]
        outside = np.repeat(free[None, :], len(cands), axis=0)
        outside[np.arange(len(cands)), cands] = False
        nbad = np.sum(outside & ~self.valid[t][new], axis=1)
        keep = nbad <= self.n - t - 1
        return cands[keep], new[keep]

    def _extend(self, chosen, prefix, free):
        if self._done():
            return
        if len(chosen) == self.n:
            self._finish(chosen)
            return

        cands, new = self._candidates(chosen, prefix, free)
        t = len(chosen)
        for c, row in zip(cands, new if new is not None else []):
            nxt = chosen + [int(c)]
            if self.catalog is not None:
                code = self.host.induced(nxt).code
                if code not in self.catalog.prefix_codes(self.order[:t+1]):
                    continue
            free[c] = False
            self._extend(nxt, row, free)
            free[c] = True
            if self._done():
                return

    def run(self, first=None):
        """ Vertex tuples of the canonical switching sets, optionally only
        those whose first position holds one of the given vertices. """

        self.found = []
        self.timed_out = False
        if self.host.order < self.n:
            return []

        free = np.ones(self.host.order, dtype=bool)
        prefix = np.zeros(self.host.order, dtype=np.int64)
        if first is None:
            self._extend([], prefix, free)
            return sorted(self.found)

        cands, new = self._candidates([], prefix, free)
        for c, row in zip(cands, new):
            if int(c) not in first:
                continue
            free[c] = False
            self._extend([int(c)], row, free)
            free[c] = True
            if self._done():
                break
        return sorted(self.found)

def _search_seed(seed, host, family, catalog, limit, deadline):
    search = SwitchingSetSearch(host, family, catalog=catalog, limit=limit, deadline=deadline)
    return search.run(first={seed})

def find_switching_sets(g, family, limit=None, time_budget=None, workers=1, catalog=None):
    """ Switching instances of the family in g, one per orbit of the
    family's symmetries, sorted by vertex tuple.  The candidates for the
    first position are searched independently; each is capped at limit and
    the merged list is cut to limit again.  time_budget is in seconds. """

    if isinstance(family, str):
        family = SwitchingFamily.parse(family)
    if g.order > MAX_HOST_ORDER:
        raise CapacityError('find_switching_sets', g.order, MAX_HOST_ORDER)

    deadline = None if time_budget is None else time.monotonic() + time_budget
    if g.order < family.size:
        return []

    seeds = list(range(g.order))
    chunks = run_tasks(_search_seed, seeds, workers=workers, desc=f'find {family}',
                       host=g, family=str(family), catalog=catalog, limit=limit, deadline=deadline)
    labels = sorted(elem for chunk in chunks for elem in chunk)
    if limit is not None:
        labels = labels[:limit]
    logging.debug(f'{len(labels)} {family} instances in a host of order {g.order}.')

    return [SwitchingInstance(g, family, elem) for elem in labels]
