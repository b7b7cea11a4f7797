import logging

import numpy as np

from l2switch.admissible.vectors import require_admissible_B, v_matrix
from l2switch.catalog.families import SwitchingFamily, build
from l2switch.errors import DomainError
from l2switch.graph import Graph
from l2switch.parallel import run_tasks
from l2switch.reduce.candidates import column_key, factor_candidates
from l2switch.reduce.certificate import FactorizationCertificate

DEFAULT_DEPTH = 6

def _normalize(q, k):
    # divide out common factors of two: q / 2^k is unchanged
    while k > 0 and not np.any(q % 2):
        q = q // 2
        k -= 1
    return q, k

class ReductionSearch:
    """ Iterative-deepening search for a sequence of candidate factors whose
    product is R up to a column permutation and whose every prefix keeps
    the switching set and all admissible outside columns integral.

    A search state is the prefix product Q, stored as an integer matrix q
    with Q = q / 2^k; the conjugated switching set and outside columns are
    functions of Q, so states reached along different paths are merged in
    a memo table that records the largest remaining depth already explored
    from them. """

    def __init__(self, family, depth=DEFAULT_DEPTH, candidates=None):
        if isinstance(family, str):
            family = SwitchingFamily.parse(family)

        # set defaults
        if candidates is None:
            candidates = factor_candidates(family)

        # validate input
        if depth < 1:
            raise DomainError(f'Depth bound must be at least 1, got {depth}.')

        # save settings
        self.family = family
        self.depth = depth
        self.candidates = candidates
        self.r = build(family)

        self.m = self.r.numpy()
        self.v0 = v_matrix(self.r)
        self.stack = candidates.stack
        self.stack_t = self.stack.transpose(0, 2, 1)

        self.memo = {}
        self.nodes = 0

    def run(self, b):
        require_admissible_B(self.r, b)
        n = self.family.size
        if len(self.candidates) == 0:
            return None

        self.memo = {}
        self.nodes = 0
        q0 = np.eye(n, dtype=np.int64)
        b0 = b.to_numpy()
        for bound in range(1, self.depth+1):
            found = self._dfs(q0, 0, b0, self.v0, bound, [])
            if found is not None:
                path, columns = found
                logging.debug(f'{b.to_hex()} reduces in {len(path)} steps ({self.nodes} nodes).')
                factors = [self.candidates.factors[idx] for idx, _ in path]
                steps = [Graph.from_matrix(elem) for _, elem in path]
                return FactorizationCertificate(self.family, b, factors, columns, steps)
        logging.debug(f'{b.to_hex()}: no factorization within depth {self.depth} ({self.nodes} nodes).')
        return None

    def _finish(self, q, k, b_cur):
        # does 2 Q^T R match a candidate up to the order of its columns?
        g = q.T @ self.m
        scale = 1 << k
        if np.any(g % scale):
            return None
        h = g // scale
        idx = self.candidates.by_columns.get(column_key(h))
        if idx is None:
            return None
        f = self.stack[idx]
        position = {tuple(int(e) for e in col): c for c, col in enumerate(f.T)}
        columns = tuple(position[tuple(int(e) for e in col)] for col in h.T)
        b_last = (f.T @ b_cur @ f) // 4
        return idx, b_last, columns

    def _dfs(self, q, k, b_cur, v_cur, remaining, path):
        self.nodes += 1

        last = self._finish(q, k, b_cur)
        if last is not None:
            idx, b_last, columns = last
            return path + [(idx, b_last)], columns
        if remaining < 2:
            return None

        key = (q.tobytes(), k)
        if self.memo.get(key, 0) >= remaining:
            return None
        self.memo[key] = remaining

        # conjugate the switching set by every candidate at once
        x = np.matmul(np.matmul(self.stack_t, b_cur), self.stack)
        ok = np.all((x == 0) | (x == 4), axis=(1, 2))
        ok &= ~np.any(np.diagonal(x, axis1=1, axis2=2), axis=1)

        for idx in np.nonzero(ok)[0]:
            f = self.stack[idx]
            v_next = f.T @ v_cur
            if not np.all((v_next == 0) | (v_next == 2)):
                continue
            q_next, k_next = _normalize(q @ f, k+1)
            b_next = x[idx] // 4
            found = self._dfs(q_next, k_next, b_next, v_next // 2, remaining-1, path + [(int(idx), b_next)])
            if found is not None:
                return found
        return None

def is_reducible(b, family, depth=DEFAULT_DEPTH, candidates=None):
    """ Returns a FactorizationCertificate if b reduces within the depth
    bound, otherwise None. """

    return ReductionSearch(family, depth=depth, candidates=candidates).run(b)

def _reduce_one(b, family, depth):
    cert = is_reducible(b, family, depth=depth)
    return None if cert is None else cert.to_text()

def reduce_all(b_list, family, depth=DEFAULT_DEPTH, workers=1, progress=False):
    """ Runs the search on every graph; each B is independent, so they are
    spread over the worker pool.  Returns certificates (or None) in input
    order. """

    if isinstance(family, str):
        family = SwitchingFamily.parse(family)

    texts = run_tasks(_reduce_one, list(b_list), workers=workers, desc=f'reduce {family}',
                      progress=progress, family=str(family), depth=depth)
    return [None if text is None else FactorizationCertificate.from_text(text) for text in texts]
