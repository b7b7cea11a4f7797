from functools import lru_cache

from l2switch.errors import DomainError, PlacementError
from l2switch.linalg.matrix import IntMatrix, ScaledOrthogonal

# first row of 2*R_Fano; the matrix is circulant
FANO_ROW = (-1, 1, 1, 0, 1, 0, 0)

# 2*R_cube in the labelling of the cube figure (see catalog.geometry)
CUBE_ROWS = (
    (-1, 0, 1, 0, 1, 0, 1, 0),
    (0, -1, 0, 1, 0, 1, 0, 1),
    (1, 0, 0, -1, 1, 0, 0, 1),
    (0, 1, -1, 0, 0, 1, 1, 0),
    (1, 0, 0, 1, 0, -1, 1, 0),
    (0, 1, 1, 0, -1, 0, 0, 1),
    (1, 0, 1, 0, 0, 1, 0, -1),
    (0, 1, 0, 1, 1, 0, -1, 0)
)

class SwitchingFamily:
    """ One of the indecomposable level-2 families: 'gm4', 'circulant' (with a
    pair count m >= 2), 'fano' or 'cube'. """

    TAGS = ('gm4', 'circulant', 'fano', 'cube')

    def __init__(self, tag, m=None):
        tag = tag.lower()
        if tag not in self.TAGS:
            raise DomainError(f'Unknown switching family: {tag!r}.')
        if tag == 'circulant':
            if m is None or int(m) < 2:
                raise DomainError(f'Circulant family needs m >= 2, got {m}.')
            m = int(m)
        elif m is not None:
            raise DomainError(f'Family {tag} does not take a pair count.')

        # save settings
        self.tag = tag
        self.m = m

    @classmethod
    def parse(cls, text):
        # accepts 'gm4', 'fano', 'cube', 'circulant:5' and the factor tags 'GM4', 'C5', 'FANO', 'CUBE'
        text = text.strip()
        low = text.lower()
        if low.startswith('circulant'):
            _, _, arg = low.partition(':')
            if not arg:
                raise DomainError(f'Circulant family needs a pair count, e.g. circulant:4 (got {text!r}).')
            try:
                return cls('circulant', int(arg))
            except ValueError:
                raise DomainError(f'Invalid pair count in {text!r}.')
        if low.startswith('c') and low[1:].isdigit():
            return cls('circulant', int(low[1:]))
        return cls(low)

    @classmethod
    def gm4(cls):
        return cls('gm4')

    @classmethod
    def circulant(cls, m):
        return cls('circulant', m)

    @classmethod
    def fano(cls):
        return cls('fano')

    @classmethod
    def cube(cls):
        return cls('cube')

    @property
    def size(self):
        if self.tag == 'gm4':
            return 4
        elif self.tag == 'circulant':
            return 2*self.m
        elif self.tag == 'fano':
            return 7
        else:
            return 8

    @property
    def is_circulant(self):
        return self.tag == 'circulant'

    @property
    def factor_tag(self):
        # short form used in certificate files
        if self.tag == 'circulant':
            return f'C{self.m}'
        return self.tag.upper()

    def pairs(self):
        if not self.is_circulant:
            raise DomainError(f'Family {self} is not partitioned into pairs.')
        return [(2*i, 2*i+1) for i in range(self.m)]

    def __eq__(self, other):
        return isinstance(other, SwitchingFamily) and (self.tag, self.m) == (other.tag, other.m)

    def __hash__(self):
        return hash((self.tag, self.m))

    def __str__(self):
        if self.tag == 'circulant':
            return f'circulant:{self.m}'
        return self.tag

    def __repr__(self):
        return f'SwitchingFamily({str(self)!r})'

def gm4_rows():
    return [[-1 if i == j else 1 for j in range(4)] for i in range(4)]

def circulant_rows(m):
    # block (i, i) is J and block (i, i-1) is Y = 2I - J
    n = 2*m
    rows = [[0]*n for _ in range(n)]
    for i in range(m):
        for a in range(2):
            for b in range(2):
                rows[2*i+a][2*i+b] = 1
                j = (i-1) % m
                rows[2*i+a][2*j+b] += 1 if a == b else -1
    return rows

def fano_rows():
    return [[FANO_ROW[(c-r) % 7] for c in range(7)] for r in range(7)]

def cube_rows():
    return [list(row) for row in CUBE_ROWS]

@lru_cache(maxsize=None)
def build(family):
    """ Returns the scaled matrix 2R of the given family. """

    if isinstance(family, str):
        family = SwitchingFamily.parse(family)

    if family.tag == 'gm4':
        rows = gm4_rows()
    elif family.tag == 'circulant':
        rows = circulant_rows(family.m)
    elif family.tag == 'fano':
        rows = fano_rows()
    else:
        rows = cube_rows()

    return ScaledOrthogonal(rows, name=str(family))

def compose_block_diagonal(blocks, placements, n=None):
    """ Places each block on its index tuple: entry (a, b) of a block lands at
    (placement[a], placement[b]).  Blocks are ScaledOrthogonal, IntMatrix or
    an int k standing for the identity of size k (stored as 2I). """

    # set defaults
    if n is None:
        n = sum(len(placement) for placement in placements)

    if len(blocks) != len(placements):
        raise PlacementError(f'Got {len(blocks)} blocks but {len(placements)} placements.')

    rows = [[0]*n for _ in range(n)]
    covered = set()
    for block, placement in zip(blocks, placements):
        if isinstance(block, int):
            block = IntMatrix.identity(block, 2)
        elif isinstance(block, ScaledOrthogonal):
            block = block.m
        if block.nrows != len(placement) or not block.is_square:
            raise PlacementError(f'Block of shape {block.shape} does not fit placement {tuple(placement)}.')
        for idx in placement:
            if not (0 <= idx < n):
                raise PlacementError(f'Index {idx} is out of range for size {n}.')
            if idx in covered:
                raise PlacementError(f'Index {idx} is covered twice.')
            covered.add(idx)
        block_rows = block.tolist()
        for a, ia in enumerate(placement):
            for b, ib in enumerate(placement):
                rows[ia][ib] = block_rows[a][b]
    if len(covered) != n:
        missing = sorted(set(range(n)) - covered)
        raise PlacementError(f'Placement does not cover indices {missing}.')

    return ScaledOrthogonal(rows, strict=False)

def embed(block, placement, n):
    """ Single block on the given indices, identity elsewhere. """

    rest = [idx for idx in range(n) if idx not in set(placement)]
    blocks, placements = [block], [tuple(placement)]
    if rest:
        blocks.append(len(rest))
        placements.append(tuple(rest))
    return compose_block_diagonal(blocks, placements, n=n)
