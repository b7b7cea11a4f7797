import logging

import numpy as np

from l2switch.admissible.blocks import (EVEN_BLOCKS, NORMALIZED_BLOCKS, BLOCK_TRANSPOSE,
                                        WINDOW_OK, window_entries)
from l2switch.admissible.vectors import all_01_vectors
from l2switch.errors import CapacityError, DomainError
from l2switch.graph import Graph
from l2switch.parallel import run_tasks, chunk_ranges
from l2switch.util import warn

# 2^28 candidates at size 8
MAX_BRUTE_SIZE = 8
MAX_PATCHED_M = 8
# the closure holds 2^(m(m-1)/2+1) members per normalized one
MAX_FULL_PATCHED_M = 5

def upper_positions(n):
    return [(i, j) for i in range(n) for j in range(i+1, n)]

def _entry_coefficients(m):
    """ Row e of the result gives entry (a, b), a <= b, of M^T E_p M for each
    upper-triangle position p = (i, j), where E_p = e_i e_j^T + e_j e_i^T.
    Diagonal entries come first so they prune earliest. """

    n = m.shape[0]
    positions = upper_positions(n)
    entries = [(a, a) for a in range(n)] + upper_positions(n)
    coeffs = np.zeros((len(entries), len(positions)), dtype=np.int64)
    for p, (i, j) in enumerate(positions):
        coeffs[:, p] = [m[i, a]*m[j, b] + m[j, a]*m[i, b] for a, b in entries]
    return coeffs, n

def _brute_chunk(task, coeffs, n, lo):
    start, stop = task
    hi = coeffs.shape[1] - lo
    x_lo = (all_01_vectors(lo) @ coeffs[:, hi:].T).T.astype(np.int16)
    shifts = np.arange(hi-1, -1, -1, dtype=np.int64)

    found = []
    for h in range(start, stop):
        bits = (h >> shifts) & 1
        base = coeffs[:, :hi] @ bits
        idx = np.arange(x_lo.shape[1])
        for e in range(coeffs.shape[0]):
            vals = x_lo[e, idx] + base[e]
            if e < n:
                idx = idx[vals == 0]
            else:
                idx = idx[(vals == 0) | (vals == 4)]
            if len(idx) == 0:
                break
        found.extend(int((h << lo) | l) for l in idx)
    return found

def enumerate_B_bruteforce(r, workers=1, progress=False):
    """ Every adjacency matrix B with R^T B R again an adjacency matrix,
    sorted by upper-triangle code.  The position bits are split into a high
    and a low half; the low half is tabulated once and filtered entry by
    entry for each high assignment. """

    n = r.size
    if n > MAX_BRUTE_SIZE:
        raise CapacityError('enumerate_B_bruteforce', n, MAX_BRUTE_SIZE)

    coeffs, _ = _entry_coefficients(r.numpy())
    total_bits = coeffs.shape[1]
    lo = (total_bits + 1) // 2
    hi = total_bits - lo
    logging.debug(f'Brute force over 2^{total_bits} symmetric matrices ({hi} high bits, {lo} low bits).')

    tasks = chunk_ranges(1 << hi, max(1, 4*workers) if workers > 1 else 1)
    chunks = run_tasks(_brute_chunk, tasks, workers=workers, desc='brute force',
                       progress=progress, coeffs=coeffs, n=n, lo=lo)
    codes = sorted(code for chunk in chunks for code in chunk)
    logging.debug(f'Found {len(codes)} admissible matrices.')
    return [Graph.from_code(n, code) for code in codes]

class PatchSearch:
    """ Depth-first assignment of the upper off-diagonal blocks of a circulant
    switching set, column of blocks by column of blocks.  Each window of four
    blocks is checked as soon as its last unknown block is assigned. """

    def __init__(self, m, options=None, diagonal=0):
        # set defaults
        if options is None:
            options = NORMALIZED_BLOCKS

        # save settings
        self.m = m
        self.options = tuple(options)
        self.diagonal = diagonal

        # unknown blocks ordered by (j, i)
        self.unknowns = sorted(((i, j) for i in range(m) for j in range(i+1, m)),
                               key=lambda ij: (ij[1], ij[0]))
        self.position = {ij: k for k, ij in enumerate(self.unknowns)}

        # windows (i, j) with i <= j, grouped by the last unknown they depend on
        self.checks = [[] for _ in self.unknowns]
        for i in range(m):
            for j in range(i, m):
                refs = [self._ref(i, j), self._ref(i, (j+1) % m),
                        self._ref((i+1) % m, j), self._ref((i+1) % m, (j+1) % m)]
                last = max((ref[0] for ref in refs if ref[0] is not None), default=None)
                if last is None:
                    continue
                self.checks[last].append((i == j, refs))

    def _ref(self, i, j):
        # (unknown position, transposed) or (None, None) for a diagonal block
        if i == j:
            return (None, None)
        if i < j:
            return (self.position[(i, j)], False)
        return (self.position[(j, i)], True)

    def _value(self, assign, ref):
        pos, transposed = ref
        if pos is None:
            return self.diagonal
        k = assign[pos]
        return BLOCK_TRANSPOSE[k] if transposed else k

    def _window_ok(self, assign, diagonal_window, refs):
        x, u, w, z = (self._value(assign, ref) for ref in refs)
        if not WINDOW_OK[x, u, w, z]:
            return False
        if diagonal_window:
            e = window_entries(EVEN_BLOCKS[x], EVEN_BLOCKS[u], EVEN_BLOCKS[w], EVEN_BLOCKS[z])
            if e[0, 0] != 0 or e[1, 1] != 0:
                return False
        return True

    def run(self, first_options=None):
        """ Yields complete assignments as dicts {(i, j): block index}. """

        assign = [None]*len(self.unknowns)
        if not self.unknowns:
            yield {}
            return

        def recurse(k):
            opts = first_options if (k == 0 and first_options is not None) else self.options
            for opt in opts:
                assign[k] = opt
                if all(self._window_ok(assign, diag, refs) for diag, refs in self.checks[k]):
                    if k == len(self.unknowns) - 1:
                        yield {ij: assign[pos] for ij, pos in self.position.items()}
                    else:
                        yield from recurse(k+1)
            assign[k] = None

        yield from recurse(0)

def _assignment_to_code(m, assign, diagonal):
    n = 2*m
    matrix = np.zeros((n, n), dtype=np.int64)
    for i in range(m):
        matrix[2*i:2*i+2, 2*i:2*i+2] = EVEN_BLOCKS[diagonal]
    for (i, j), k in assign.items():
        matrix[2*i:2*i+2, 2*j:2*j+2] = EVEN_BLOCKS[k]
        matrix[2*j:2*j+2, 2*i:2*i+2] = EVEN_BLOCKS[k].T
    return Graph.from_matrix(matrix).code

def _patch_chunk(first_option, m):
    search = PatchSearch(m)
    return [_assignment_to_code(m, assign, 0) for assign in search.run(first_options=[first_option])]

def closes_fully(m, full=True):
    # whether enumerate_B_patched returns the whole set for this m
    return full and m <= MAX_FULL_PATCHED_M

def enumerate_B_patched(m, full=True, workers=1, progress=False):
    """ Admissible switching sets for R_2m by patching 2x2 blocks together.

    The search fixes all diagonal blocks to O and every off-diagonal block to
    one of O, Z, N, N^T.  With full=True the result is closed under
    complementing any off-diagonal block pair and under full complementation,
    which gives the whole set; otherwise only the normalized members are
    returned, one per orbit of block complements and full complementation.
    Beyond MAX_FULL_PATCHED_M the closure is skipped even with full=True. """

    if m < 2:
        raise DomainError(f'Patched enumeration needs m >= 2, got {m}.')
    if m > MAX_PATCHED_M:
        raise CapacityError('enumerate_B_patched', m, MAX_PATCHED_M)
    if full and not closes_fully(m):
        warn(f'The full set for m={m} is not materialized; returning one member per '
             f'block-complement orbit.')
        full = False

    tasks = list(NORMALIZED_BLOCKS)
    chunks = run_tasks(_patch_chunk, tasks, workers=workers, desc='patching',
                       progress=progress, m=m)
    normalized = sorted(code for chunk in chunks for code in chunk)
    logging.debug(f'{len(normalized)} normalized members for m={m}.')

    n = 2*m
    if not full:
        return [Graph.from_code(n, code) for code in normalized]

    full_mask = (1 << (n*(n-1)//2)) - 1
    flips = block_flip_masks(m)
    codes = set()
    for code in normalized:
        for flip in flips:
            codes.add(code ^ flip)
            codes.add(code ^ flip ^ full_mask)
    logging.debug(f'{len(codes)} members after closure for m={m}.')
    return [Graph.from_code(n, code) for code in sorted(codes)]

def block_mask(m, i, j):
    # code bits of the four entries of block (i, j), i < j
    n = 2*m
    width = n*(n-1)//2
    retval = 0
    for a in (2*i, 2*i+1):
        for b in (2*j, 2*j+1):
            pos = a*n - a*(a+1)//2 + (b - a - 1)
            retval |= 1 << (width - 1 - pos)
    return retval

def block_flip_masks(m):
    # xor masks of all 2^(m(m-1)/2) combinations of off-diagonal block complements
    retval = [0]
    for i in range(m):
        for j in range(i+1, m):
            mask = block_mask(m, i, j)
            retval = retval + [elem ^ mask for elem in retval]
    return retval

def complement_block(g, i, j):
    """ Replaces B_ij and B_ji by their complements J - B_ij. """
    return Graph.from_code(g.order, g.code ^ block_mask(g.order // 2, min(i, j), max(i, j)))
