import numpy as np

from l2switch.errors import DimensionError, DomainError
from l2switch.graph import Graph

J = np.ones((2, 2), dtype=np.int64)
Y = np.array([[1, -1], [-1, 1]], dtype=np.int64)

# the eight 2x2 01-blocks with an even number of ones
EVEN_BLOCKS = tuple(np.array(elem, dtype=np.int64).reshape(2, 2) for elem in (
    (0, 0, 0, 0),
    (0, 1, 1, 0),
    (0, 0, 1, 1),
    (0, 1, 0, 1),
    (1, 1, 1, 1),
    (1, 0, 0, 1),
    (1, 1, 0, 0),
    (1, 0, 1, 0)
))
# O, Z, N and N^T: the representatives with a zero in the top-left corner
NORMALIZED_BLOCKS = (0, 1, 2, 3)
# index of J - X for each even block X
BLOCK_COMPLEMENT = (4, 5, 6, 7, 0, 1, 2, 3)

def block_index(x):
    for k, elem in enumerate(EVEN_BLOCKS):
        if np.array_equal(elem, x):
            return k
    return None

BLOCK_TRANSPOSE = tuple(block_index(elem.T) for elem in EVEN_BLOCKS)

def block_type(x):
    """ '0' for O/J, 'D' for I/Z, 'R' for N/J-N, 'C' for N^T/J-N^T, None if
    the number of ones is odd. """

    idx = block_index(np.asarray(x, dtype=np.int64))
    if idx is None:
        return None
    return '0DRC'[idx % 4]

def window_entries(x, u, w, z):
    """ 4B' for the window B_ij = x, B_i,j+1 = u, B_i+1,j = w, B_i+1,j+1 = z:
    J x J + J u Y + Y w J + Y z Y = aJ + bK + cL + dY. """

    a = int(x.sum())
    b = int(u[:, 0].sum() - u[:, 1].sum())
    c = int(w[0, :].sum() - w[1, :].sum())
    d = int(z[0, 0] - z[0, 1] - z[1, 0] + z[1, 1])
    return np.array([[a+b+c+d, a-b+c-d],
                     [a+b-c-d, a-b-c+d]], dtype=np.int64)

def _build_window_table():
    # ok[x, u, w, z] is True iff the window produces a 01-block
    retval = np.zeros((8, 8, 8, 8), dtype=bool)
    for x in range(8):
        for u in range(8):
            for w in range(8):
                for z in range(8):
                    e = window_entries(EVEN_BLOCKS[x], EVEN_BLOCKS[u], EVEN_BLOCKS[w], EVEN_BLOCKS[z])
                    retval[x, u, w, z] = bool(np.all((e == 0) | (e == 4)))
    return retval

WINDOW_OK = _build_window_table()

class BlockGrid:
    """ A 2m x 2m matrix viewed as an m x m grid of 2x2 blocks B_ij, with the
    pairs C_i = (2i, 2i+1). """

    def __init__(self, m, matrix):
        matrix = np.asarray(matrix, dtype=np.int64)
        if matrix.shape != (2*m, 2*m):
            raise DimensionError(f'Expected a {2*m}x{2*m} matrix, got {matrix.shape}.')

        # save settings
        self.m = m
        self.matrix = matrix
        self.matrix.flags.writeable = False

    @classmethod
    def from_blocks(cls, blocks):
        # blocks[i][j] is a 2x2 array-like
        m = len(blocks)
        matrix = np.zeros((2*m, 2*m), dtype=np.int64)
        for i in range(m):
            if len(blocks[i]) != m:
                raise DimensionError(f'Block row {i} has {len(blocks[i])} entries, expected {m}.')
            for j in range(m):
                matrix[2*i:2*i+2, 2*j:2*j+2] = np.asarray(blocks[i][j], dtype=np.int64)
        return cls(m, matrix)

    @classmethod
    def from_graph(cls, g):
        if g.order % 2 != 0:
            raise DimensionError(f'Graph of odd order {g.order} has no pair structure.')
        return cls(g.order // 2, g.to_numpy())

    @classmethod
    def from_indices(cls, m, indices):
        # indices[(i, j)] for i < j into EVEN_BLOCKS; diagonal blocks O
        matrix = np.zeros((2*m, 2*m), dtype=np.int64)
        for (i, j), k in indices.items():
            matrix[2*i:2*i+2, 2*j:2*j+2] = EVEN_BLOCKS[k]
            matrix[2*j:2*j+2, 2*i:2*i+2] = EVEN_BLOCKS[k].T
        return cls(m, matrix)

    def block(self, i, j):
        i %= self.m
        j %= self.m
        return self.matrix[2*i:2*i+2, 2*j:2*j+2]

    def types(self):
        # upper-triangle block types, row by row
        return [block_type(self.block(i, j)) for i in range(self.m) for j in range(i+1, self.m)]

    def is_well_formed(self):
        a = self.matrix
        if not np.all((a == 0) | (a == 1)) or not np.array_equal(a, a.T) or np.any(np.diag(a)):
            return False
        return all(int(self.block(i, j).sum()) % 2 == 0
                   for i in range(self.m) for j in range(self.m))

    def to_graph(self):
        return Graph.from_matrix(self.matrix)

    def __eq__(self, other):
        return isinstance(other, BlockGrid) and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(self.matrix.tobytes())

def _transform(grid, step):
    # step = +1 gives R^T B R, step = -1 gives R B R^T
    if not grid.is_well_formed():
        raise DomainError('Block grid must be a symmetric 01-matrix with zero diagonal and even blocks.')
    m = grid.m
    out = np.zeros((2*m, 2*m), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            total = (J @ grid.block(i, j) @ J
                     + J @ grid.block(i, j+step) @ Y
                     + Y @ grid.block(i+step, j) @ J
                     + Y @ grid.block(i+step, j+step) @ Y)
            if np.any(total % 4 != 0):
                return None
            out[2*i:2*i+2, 2*j:2*j+2] = total // 4
    if not (np.all((out == 0) | (out == 1)) and not np.any(np.diag(out))):
        return None
    return BlockGrid(m, out)

def block_transform(grid):
    """ B' = R_2m^T B R_2m computed block by block, or None when B' is not an
    adjacency matrix. """
    return _transform(grid, +1)

def block_transform_inverse(grid):
    return _transform(grid, -1)
