import logging

from l2switch.admissible.enumerate import block_mask
from l2switch.admissible.vectors import is_admissible_B
from l2switch.catalog.families import SwitchingFamily, build
from l2switch.equivalence.symmetry import conjugating_perms
from l2switch.errors import AdmissibilityError
from l2switch.graph import Graph

def block_normalize(g):
    """ Least member of the class of g under full complementation and
    complementation of off-diagonal block pairs: the (0, 1) entry and the
    top-left entry of every block above the diagonal are made zero. """

    n = g.order
    m = n // 2
    width = n*(n-1)//2
    code = g.code
    if g.has_edge(0, 1):
        code ^= (1 << width) - 1
    for i in range(m):
        for j in range(i+1, m):
            pos = 2*i*n - (2*i)*(2*i+1)//2 + (2*j - 2*i - 1)
            if (code >> (width - 1 - pos)) & 1:
                code ^= block_mask(m, i, j)
    return Graph.from_code(n, code)

def complement_normalize(g):
    # least of g and its complement
    h = g.complement()
    return h if h.code < g.code else g

class EquivalenceClass:
    def __init__(self, canonical, members=0, irreducible=None):
        # save settings
        self.canonical = canonical
        self.members = members
        self.irreducible = irreducible

    def __repr__(self):
        return (f'EquivalenceClass(canonical={self.canonical.to_hex()}, members={self.members}, '
                f'irreducible={self.irreducible})')

class Canonicalizer:
    """ Orbit canonical forms for one family.  The group is generated by
    conjugation with every symmetry permutation and by full complementation;
    for circulant families also by complementing off-diagonal block pairs.
    The canonical form is the least code over the orbit. """

    _shared = {}

    def __init__(self, family, perms=None):
        if isinstance(family, str):
            family = SwitchingFamily.parse(family)

        # set defaults
        if perms is None:
            perms = conjugating_perms(family)

        # save settings
        self.family = family
        self.perms = list(perms)
        self.r = build(family)
        if family.is_circulant:
            self.reduce = block_normalize
        else:
            self.reduce = complement_normalize

        self._memo = {}

    @classmethod
    def for_family(cls, family):
        # one shared instance (and memo table) per family
        if isinstance(family, str):
            family = SwitchingFamily.parse(family)
        if family not in cls._shared:
            cls._shared[family] = cls(family)
        return cls._shared[family]

    def orbit_images(self, b):
        return [self.reduce(b.permuted(p)) for p in self.perms]

    def canonical(self, b):
        key = self.reduce(b).code
        if key not in self._memo:
            images = self.orbit_images(b)
            best = min(images, key=lambda g: g.code)
            for img in images:
                self._memo[img.code] = best
        return self._memo[key]

    def key(self, b):
        return self.canonical(b).code

    def classes(self, b_set):
        """ Partition into orbits, sorted by canonical code. """

        counts = {}
        reps = {}
        for b in b_set:
            rep = self.canonical(b)
            counts[rep.code] = counts.get(rep.code, 0) + 1
            reps[rep.code] = rep
        logging.debug(f'{len(counts)} classes among {len(b_set)} members of {self.family}.')
        return [EquivalenceClass(reps[code], counts[code]) for code in sorted(counts)]

def orbit_canonical(b, family, check=True):
    canon = Canonicalizer.for_family(family)
    if check and not is_admissible_B(canon.r, b):
        raise AdmissibilityError(f'Graph {b.to_hex()} is not admissible for {canon.family}.')
    return canon.canonical(b)

def classes(b_set, family, perms=None):
    if perms is not None:
        return Canonicalizer(family, perms=perms).classes(b_set)
    return Canonicalizer.for_family(family).classes(b_set)
