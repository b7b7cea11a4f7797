from numbers import Integral

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from l2switch.errors import DimensionError, DomainError, AdmissibilityError

class IntMatrix:
    """ Immutable integer matrix with arbitrary-precision entries.  Entries are
    kept in a numpy object array so that products never overflow. """

    def __init__(self, rows):
        arr = np.array(rows, dtype=object)
        if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
            raise DimensionError(f'Expected a non-empty 2D array of integers, got shape {arr.shape}.')
        for elem in arr.flat:
            if not isinstance(elem, (Integral, np.integer)):
                raise DomainError(f'Matrix entry {elem!r} is not an integer.')

        # save settings
        self.arr = np.vectorize(int, otypes=[object])(arr)
        self.arr.flags.writeable = False

    @classmethod
    def identity(cls, n, scale=1):
        return cls([[scale if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        return cls([[0]*ncols for _ in range(nrows)])

    @classmethod
    def ones(cls, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        return cls([[1]*ncols for _ in range(nrows)])

    @property
    def shape(self):
        return self.arr.shape

    @property
    def nrows(self):
        return self.arr.shape[0]

    @property
    def ncols(self):
        return self.arr.shape[1]

    @property
    def is_square(self):
        return self.nrows == self.ncols

    @property
    def T(self):
        return IntMatrix(self.arr.T)

    def __getitem__(self, idx):
        return self.arr[idx]

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionError(f'Cannot multiply {self.shape} by {other.shape}.')
        return IntMatrix(self.arr.dot(other.arr))

    def __add__(self, other):
        self._check_same_shape(other)
        return IntMatrix(self.arr + other.arr)

    def __sub__(self, other):
        self._check_same_shape(other)
        return IntMatrix(self.arr - other.arr)

    def __neg__(self):
        return IntMatrix(-self.arr)

    def __mul__(self, scalar):
        return IntMatrix(self.arr * int(scalar))

    __rmul__ = __mul__

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError(f'Shape mismatch: {self.shape} vs {other.shape}.')

    def exact_div(self, k):
        # division that refuses to round
        if any(elem % k != 0 for elem in self.arr.flat):
            raise AdmissibilityError(f'Matrix is not divisible by {k}.')
        return IntMatrix(self.arr // k)

    def permuted(self, row_perm, col_perm=None):
        # new[i][j] = old[row_perm[i]][col_perm[j]]
        col_perm = row_perm if col_perm is None else col_perm
        return IntMatrix(self.arr[np.ix_(list(row_perm), list(col_perm))])

    def tolist(self):
        return [[int(elem) for elem in row] for row in self.arr]

    def to_numpy(self, dtype=np.int64):
        return np.array(self.tolist(), dtype=dtype)

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.tolist() == other.tolist()

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.tolist()))

    def __repr__(self):
        return f'IntMatrix({self.tolist()})'

    def __str__(self):
        width = max(len(str(elem)) for elem in self.arr.flat)
        return '\n'.join(' '.join(f'{elem:>{width}}' for elem in row) for row in self.tolist())

# 2x2 building blocks
I2 = IntMatrix([[1, 0], [0, 1]])
J2 = IntMatrix([[1, 1], [1, 1]])
O2 = IntMatrix([[0, 0], [0, 0]])
Y2 = IntMatrix([[1, -1], [-1, 1]])
Z2 = IntMatrix([[0, 1], [1, 0]])
N2 = IntMatrix([[0, 0], [1, 1]])

def is_level2_regular_orthogonal(m: IntMatrix):
    if not m.is_square:
        return False
    n = m.nrows
    if m @ m.T != IntMatrix.identity(n, 4):
        return False
    if any(sum(row) != 2 for row in m.tolist()):
        return False
    return any(elem % 2 != 0 for elem in m.arr.flat)

def indecomposable_blocks(m: IntMatrix):
    """ Connected components of the bipartite graph on rows and columns whose
    edges are the nonzero entries.  Returns index tuples sorted by their first
    element. """

    n = m.nrows
    pattern = (m.to_numpy() != 0)
    rows, cols = np.nonzero(pattern)
    data = np.ones(len(rows), dtype=np.int8)
    adj = csr_matrix((data, (rows, cols + n)), shape=(2*n, 2*n))
    _, labels = connected_components(adj, directed=False)

    blocks = {}
    for k in range(n):
        blocks.setdefault(labels[k], []).append(k)
    return sorted((tuple(block) for block in blocks.values()), key=lambda block: block[0])

def largest_block(m: IntMatrix):
    return max(len(block) for block in indecomposable_blocks(m))

class ScaledOrthogonal:
    """ Holds M = 2R for a regular orthogonal matrix R of level (at most) 2. """

    def __init__(self, m, name=None, strict=True):
        # validate input
        if not isinstance(m, IntMatrix):
            m = IntMatrix(m)
        if not m.is_square:
            raise DimensionError(f'Orthogonal matrix must be square, got {m.shape}.')
        n = m.nrows
        if m @ m.T != IntMatrix.identity(n, 4):
            raise DomainError(f'Matrix {name or ""} does not satisfy M M^T = 4I.')
        if any(sum(row) != 2 for row in m.tolist()):
            raise DomainError(f'Matrix {name or ""} does not have constant row sum 2.')
        if strict and not any(elem % 2 != 0 for elem in m.arr.flat):
            raise DomainError(f'Matrix {name or ""} has level 1.')

        # save settings
        self.m = m
        self.name = name

    @property
    def size(self):
        return self.m.nrows

    @property
    def is_level2(self):
        return any(elem % 2 != 0 for elem in self.m.arr.flat)

    def numpy(self):
        return self.m.to_numpy()

    def transpose(self):
        return ScaledOrthogonal(self.m.T, name=None if self.name is None else f'{self.name}^T',
                                strict=False)

    def blocks(self):
        return indecomposable_blocks(self.m)

    def __eq__(self, other):
        return isinstance(other, ScaledOrthogonal) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return f'ScaledOrthogonal(name={self.name!r}, size={self.size})'
