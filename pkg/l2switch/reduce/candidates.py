import logging
from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from l2switch.catalog.families import SwitchingFamily, build, compose_block_diagonal
from l2switch.catalog.geometry import fano_geometry
from l2switch.errors import DomainError
from l2switch.linalg.matrix import largest_block
from l2switch.util import cyclic_orders

class Factor:
    """ A decomposable level-2 matrix given by its nontrivial blocks: each
    part is (tag, placement) with entry (a, b) of the tagged matrix placed at
    (placement[a], placement[b]); all other indices carry the identity. """

    def __init__(self, parts, n):
        self.parts = tuple((tag, tuple(int(idx) for idx in placement)) for tag, placement in parts)
        self.n = n

    def numpy(self):
        retval = 2*np.eye(self.n, dtype=np.int64)
        for tag, placement in self.parts:
            block = build(SwitchingFamily.parse(tag)).numpy()
            idx = np.array(placement)
            retval[idx, :] = 0
            retval[:, idx] = 0
            retval[np.ix_(idx, idx)] = block
        return retval

    @property
    def matrix(self):
        # exact ScaledOrthogonal, validated on construction
        blocks = [build(SwitchingFamily.parse(tag)) for tag, _ in self.parts]
        placements = [placement for _, placement in self.parts]
        covered = {idx for placement in placements for idx in placement}
        rest = tuple(idx for idx in range(self.n) if idx not in covered)
        if rest:
            blocks.append(len(rest))
            placements.append(rest)
        return compose_block_diagonal(blocks, placements, n=self.n)

    def largest_block(self):
        return largest_block(self.matrix.m)

    def to_text(self):
        return ' '.join(f'{tag}:{",".join(str(idx) for idx in placement)}' for tag, placement in self.parts)

    @classmethod
    def from_text(cls, text, n):
        parts = []
        for token in text.split():
            tag, sep, body = token.partition(':')
            if not sep or not body:
                raise DomainError(f'Cannot parse factor part {token!r}.')
            try:
                placement = tuple(int(elem) for elem in body.split(','))
            except ValueError:
                raise DomainError(f'Cannot parse placement in {token!r}.')
            family = SwitchingFamily.parse(tag)
            if family.size != len(placement):
                raise DomainError(f'Factor part {token!r} needs {family.size} indices.')
            parts.append((family.factor_tag, placement))
        return cls(parts, n)

    def __eq__(self, other):
        return isinstance(other, Factor) and (self.parts, self.n) == (other.parts, other.n)

    def __hash__(self):
        return hash((self.parts, self.n))

    def __repr__(self):
        return f'Factor({self.to_text()!r}, n={self.n})'

def column_key(mat):
    # identifies a matrix up to a permutation of its columns
    return tuple(sorted(tuple(int(e) for e in col) for col in np.asarray(mat).T))

def _disjoint_collections(items, max_part):
    """ All nonempty collections of disjoint subsets of items, each of size
    2..max_part. """

    def gen(rest):
        if not rest:
            yield []
            return
        first, others = rest[0], rest[1:]
        # first unused
        yield from gen(others)
        # first in a part together with some of the others
        for size in range(1, min(max_part, len(rest))):
            for mates in combinations(others, size):
                remaining = [elem for elem in others if elem not in mates]
                for tail in gen(remaining):
                    yield [(first,) + mates] + tail

    return [coll for coll in gen(list(items)) if coll]

def _oriented_placements(pairs):
    # cyclic orders of the pairs (first fixed) and orientations (first pair fixed)
    for order in cyclic_orders(pairs):
        for flips in product((0, 1), repeat=len(order)-1):
            placement = []
            for (a, b), flip in zip(order, (0,) + flips):
                placement.extend((b, a) if flip else (a, b))
            yield tuple(placement)

def circulant_candidates(m):
    """ diag(R_2m1, ..., R_2md) on disjoint ordered tuples of whole pairs,
    each part smaller than the full set, identity on the unused pairs. """

    pairs = [(2*i, 2*i+1) for i in range(m)]
    retval = []
    for coll in _disjoint_collections(range(m), m-1):
        options = []
        for part in coll:
            tag = f'C{len(part)}'
            options.append([(tag, pl) for pl in _oriented_placements([pairs[i] for i in part])])
        for parts in product(*options):
            retval.append(Factor(parts, 2*m))
    return retval

def fano_candidates():
    """ GM on the seven complements of lines, and the six-vertex method on the
    three pairs left by the lines through a point. """

    geom = fano_geometry()
    retval = []
    for quad in geom.line_complements():
        retval.append(Factor([('GM4', tuple(sorted(quad)))], 7))
    for p in geom.points:
        for pl in _oriented_placements(geom.pencil_pairs(p)):
            retval.append(Factor([('C3', pl)], 7))
    return _dedupe(retval)

def cube_candidates():
    """ GM on any four points (alone or with GM on the other four), the
    six-vertex method on any three pairs, and Fano switching on any seven
    points in any labelling. """

    points = list(range(8))
    retval = []
    for quad in combinations(points, 4):
        retval.append(Factor([('GM4', quad)], 8))
    for quad in combinations(points, 4):
        if 0 in quad:
            other = tuple(elem for elem in points if elem not in quad)
            retval.append(Factor([('GM4', quad), ('GM4', other)], 8))
    for six in combinations(points, 6):
        for pairing in _pairings(list(six)):
            for pl in _oriented_placements(pairing):
                retval.append(Factor([('C3', pl)], 8))
    for seven in combinations(points, 7):
        for perm in permutations(seven):
            retval.append(Factor([('FANO', perm)], 8))
    return _dedupe(retval)

def _pairings(items):
    if not items:
        yield []
        return
    first = items[0]
    for k in range(1, len(items)):
        rest = items[1:k] + items[k+1:]
        for tail in _pairings(rest):
            yield [(first, items[k])] + tail

def _dedupe(factors):
    # keep the first factor for each distinct matrix
    seen = set()
    retval = []
    for factor in factors:
        key = factor.numpy().tobytes()
        if key not in seen:
            seen.add(key)
            retval.append(factor)
    return retval

class FactorCandidateSet:
    def __init__(self, family, factors):
        # save settings
        self.family = family
        self.factors = list(factors)

        n = family.size
        if self.factors:
            self.stack = np.stack([factor.numpy() for factor in self.factors])
        else:
            self.stack = np.zeros((0, n, n), dtype=np.int64)
        self.stack.flags.writeable = False

        # column multiset -> first candidate index
        self.by_columns = {}
        for k, mat in enumerate(self.stack):
            self.by_columns.setdefault(column_key(mat), k)

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

@lru_cache(maxsize=None)
def factor_candidates(family):
    if isinstance(family, str):
        family = SwitchingFamily.parse(family)

    if family.tag == 'gm4' or (family.is_circulant and family.m == 2):
        # four is the smallest size of a level-2 block
        factors = []
    elif family.is_circulant:
        factors = circulant_candidates(family.m)
    elif family.tag == 'fano':
        factors = fano_candidates()
    else:
        factors = cube_candidates()

    logging.debug(f'{len(factors)} factor candidates for {family}.')
    return FactorCandidateSet(family, factors)
