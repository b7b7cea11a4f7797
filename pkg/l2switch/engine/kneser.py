import logging
from functools import lru_cache
from itertools import combinations, permutations, product

from l2switch.catalog.families import SwitchingFamily
from l2switch.catalog.geometry import fano_geometry
from l2switch.engine.instance import SwitchingInstance
from l2switch.errors import CapacityError, DomainError
from l2switch.graph import Graph

MAX_KNESER_N = 6

def _top(v):
    return 1 << (v.bit_length() - 1)

def rref(vectors):
    """ Reduced row echelon basis of the span of the given vectors.  Vectors
    are ints whose bit i is the coordinate of e_(i+1); the pivot of a row is
    its highest set bit. """

    basis = []
    for v in vectors:
        v = int(v)
        for b in basis:
            if v & _top(b):
                v ^= b
        if v:
            t = _top(v)
            basis = [b ^ v if b & t else b for b in basis]
            basis.append(v)
            basis.sort(reverse=True)
    return tuple(basis)

class GFTwoSpace:
    """ A subspace of F_2^n given by its reduced echelon basis. """

    def __init__(self, n, basis):
        basis = rref(basis)
        if any(v >> n for v in basis):
            raise DomainError(f'Basis vectors {basis} do not fit in dimension {n}.')

        # save settings
        self.n = n
        self.basis = basis

    @classmethod
    def span_of(cls, n, *spaces_or_vectors):
        vectors = []
        for elem in spaces_or_vectors:
            if isinstance(elem, GFTwoSpace):
                vectors.extend(elem.basis)
            else:
                vectors.append(int(elem))
        return cls(n, vectors)

    @property
    def dim(self):
        return len(self.basis)

    def elements(self):
        retval = [0]
        for b in self.basis:
            retval = retval + [elem ^ b for elem in retval]
        return frozenset(retval)

    def meets_trivially(self, other):
        return GFTwoSpace(self.n, self.basis + other.basis).dim == self.dim + other.dim

    def intersection(self, other):
        common = self.elements() & other.elements()
        return GFTwoSpace(self.n, common)

    def contains(self, other):
        return GFTwoSpace(self.n, self.basis + other.basis).dim == self.dim

    def __eq__(self, other):
        return isinstance(other, GFTwoSpace) and (self.n, self.basis) == (other.n, other.basis)

    def __hash__(self):
        return hash((self.n, self.basis))

    def __repr__(self):
        rows = [format(v, f'0{self.n}b')[::-1] for v in self.basis]
        return f'GFTwoSpace(n={self.n}, basis={rows})'

def unit(i):
    # e_i for i >= 1
    return 1 << (i-1)

@lru_cache(maxsize=None)
def subspaces(n, k):
    """ All k-subspaces of F_2^n, one per echelon form: choose the pivot bits,
    then fill the lower non-pivot bits of every row freely. """

    if not (0 <= k <= n):
        raise DomainError(f'No {k}-subspaces in dimension {n}.')
    if n > MAX_KNESER_N:
        raise CapacityError('subspaces', n, MAX_KNESER_N)

    retval = []
    for pivots in combinations(range(n), k):
        free = [[p for p in range(pivot) if p not in pivots] for pivot in pivots]
        for choice in product(*(range(1 << len(f)) for f in free)):
            rows = []
            for pivot, f, c in zip(pivots, free, choice):
                v = 1 << pivot
                for t, p in enumerate(f):
                    if (c >> t) & 1:
                        v |= 1 << p
                rows.append(v)
            retval.append(GFTwoSpace(n, rows))
    return tuple(sorted(retval, key=lambda s: s.basis))

def gen_kneser2(n, k):
    """ The 2-Kneser graph: the k-subspaces of F_2^n, adjacent when they meet
    only in zero.  Vertex labels are the subspaces. """

    if k < 2:
        raise DomainError(f'2-Kneser graphs need k >= 2, got {k}.')
    if n < k:
        raise DomainError(f'Need n >= k, got n={n}, k={k}.')
    if n > MAX_KNESER_N:
        raise CapacityError('gen_kneser2', n, MAX_KNESER_N)

    spaces = subspaces(n, k)
    edges = [(a, b) for a, b in combinations(range(len(spaces)), 2)
             if spaces[a].meets_trivially(spaces[b])]
    logging.debug(f'K2({n},{k}): {len(spaces)} vertices, {len(edges)} edges.')
    return Graph.from_edges(len(spaces), edges, labels=spaces)

def fano_labelling(lines):
    """ Orders the seven lines of a projective plane so that every line
    {i, i+1, i+3} of the Fano plane becomes three lines through one point. """

    geom = fano_geometry()
    rest = list(lines[1:])
    for perm in permutations(rest):
        order = (lines[0],) + perm
        if all(_concurrent([order[p] for p in fano_line]) for fano_line in geom.lines):
            return order
    raise DomainError('Lines do not form a projective plane.')

def _concurrent(lines):
    a, b, c = lines
    common = a.intersection(b)
    return common.dim == 1 and c.contains(common)

def find_kneser_fano_instance(n, k, g=None):
    """ A Fano switching set in K2(n, k): for the plane pi = <e1, e2, e3> and
    sigma = <e4, ..., e_(k+1)> the seven vertices are <sigma, l> for the
    lines l of pi, labelled so that Fano lines go to pencils. """

    if n < k+1:
        raise DomainError(f'Need n >= k+1 for a plane and a disjoint (k-2)-space, got n={n}, k={k}.')
    if g is None:
        g = gen_kneser2(n, k)

    pi = GFTwoSpace(n, [unit(1), unit(2), unit(3)])
    sigma = GFTwoSpace(n, [unit(i) for i in range(4, k+2)])
    lines = tuple(space for space in subspaces(n, 2) if pi.contains(space))
    assert len(lines) == 7, 'A plane has seven lines.'

    order = fano_labelling(lines)
    index = {space: v for v, space in enumerate(g.labels)}
    vertices = [index[GFTwoSpace.span_of(n, sigma, line)] for line in order]
    return SwitchingInstance(g, SwitchingFamily.fano(), vertices)
