import logging
from functools import lru_cache

from l2switch.catalog.families import SwitchingFamily, build
from l2switch.errors import CapacityError
from l2switch.util import compose_perm, invert_perm

MAX_SYMMETRY_SIZE = 12

class SymmetryPair:
    """ Permutations p, p_prime with M[p[i]][p_prime[j]] = M[i][j], i.e.
    P^T R P' = R for the permutation matrices P, P' whose column i is the
    unit vector e_p[i]. """

    def __init__(self, p, p_prime):
        # save settings
        self.p = tuple(p)
        self.p_prime = tuple(p_prime)

    def compose(self, other):
        return SymmetryPair(compose_perm(self.p, other.p), compose_perm(self.p_prime, other.p_prime))

    def inverse(self):
        return SymmetryPair(invert_perm(self.p), invert_perm(self.p_prime))

    def holds_for(self, r):
        rows = r.m.tolist()
        n = len(rows)
        return all(rows[self.p[i]][self.p_prime[j]] == rows[i][j] for i in range(n) for j in range(n))

    def __eq__(self, other):
        return isinstance(other, SymmetryPair) and (self.p, self.p_prime) == (other.p, other.p_prime)

    def __hash__(self):
        return hash((self.p, self.p_prime))

    def __lt__(self, other):
        return (self.p, self.p_prime) < (other.p, other.p_prime)

    def __repr__(self):
        return f'SymmetryPair(p={self.p}, p_prime={self.p_prime})'

def _symmetry_search(rows):
    n = len(rows)
    values = sorted({elem for row in rows for elem in row})

    # masks[r][v]: columns c with rows[r][c] == v
    masks = [{v: sum(1 << c for c in range(n) if rows[r][c] == v) for v in values} for r in range(n)]
    full = (1 << n) - 1

    retval = []
    p = [None]*n
    used = [False]*n

    def recurse(i, cands):
        if i == n:
            p_prime = []
            for j in range(n):
                # columns of an orthogonal matrix are distinct, so one candidate remains
                c = cands[j]
                assert c & (c-1) == 0, 'Symmetry search left an ambiguous column.'
                p_prime.append(c.bit_length() - 1)
            if len(set(p_prime)) == n:
                retval.append(SymmetryPair(p, p_prime))
            return
        for r in range(n):
            if used[r]:
                continue
            new = [cands[j] & masks[r].get(rows[i][j], 0) for j in range(n)]
            if not all(new):
                continue
            used[r] = True
            p[i] = r
            recurse(i+1, new)
            used[r] = False
        p[i] = None

    recurse(0, [full]*n)
    return retval

@lru_cache(maxsize=None)
def _symmetry_pairs_cached(r):
    if r.size > MAX_SYMMETRY_SIZE:
        raise CapacityError('symmetry_pairs', r.size, MAX_SYMMETRY_SIZE)
    retval = sorted(_symmetry_search(r.m.tolist()))
    logging.debug(f'{len(retval)} symmetry pairs for {r}.')
    return tuple(retval)

def symmetry_pairs(r):
    """ All pairs (P, P') of permutations with P^T R P' = R, found by assigning
    the rows of P one at a time while tracking, for every column j, the set of
    columns that can still be its image. """

    if isinstance(r, (str, SwitchingFamily)):
        r = build(r)
    return list(_symmetry_pairs_cached(r))

def stated_generators(family):
    """ The symmetries named for each family: for circulant families the
    cyclic shift by one pair and the swap inside the first pair; for Fano the
    cyclic shift of the points. """

    if isinstance(family, str):
        family = SwitchingFamily.parse(family)
    n = family.size
    identity = tuple(range(n))

    if family.is_circulant:
        shift = tuple((i+2) % n for i in range(n))
        swap = (1, 0) + identity[2:]
        swap_prime = identity[:-2] + (n-1, n-2)
        return [SymmetryPair(shift, shift), SymmetryPair(swap, swap_prime)]
    elif family.tag == 'fano':
        shift = tuple((i+1) % n for i in range(n))
        return [SymmetryPair(shift, shift)]
    else:
        return [SymmetryPair(identity, identity)]

def is_closed(pairs):
    # closure of the set under composition
    pair_set = set(pairs)
    return all(a.compose(b) in pair_set for a in pairs for b in pairs)

def conjugating_perms(family):
    """ Distinct permutations p appearing in the symmetry pairs; conjugation
    B -> P^T B P by each of them preserves the admissible switching sets. """

    seen = []
    found = set()
    for pair in symmetry_pairs(family):
        if pair.p not in found:
            found.add(pair.p)
            seen.append(pair.p)
    return seen

def group_closure(perms):
    """ All products of the given permutations (breadth-first). """

    perms = [tuple(p) for p in perms]
    if not perms:
        return []
    n = len(perms[0])
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for q in frontier:
            for p in perms:
                r = compose_perm(p, q)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return sorted(seen)
