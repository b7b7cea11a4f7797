import networkx as nx
import numpy as np

from l2switch.errors import DomainError, DimensionError
from l2switch.linalg.matrix import IntMatrix

class Graph:
    """ Simple loopless graph stored as bit-packed adjacency rows: bit j of
    rows[i] is set iff i and j are adjacent. """

    def __init__(self, n, rows, labels=None):
        rows = tuple(int(row) for row in rows)
        if len(rows) != n:
            raise DimensionError(f'Expected {n} adjacency rows, got {len(rows)}.')
        for i, row in enumerate(rows):
            if row >> n:
                raise DomainError(f'Row {i} has bits beyond order {n}.')
            if (row >> i) & 1:
                raise DomainError(f'Vertex {i} has a loop.')
            for j in range(n):
                if ((row >> j) & 1) != ((rows[j] >> i) & 1):
                    raise DomainError(f'Adjacency is not symmetric at ({i}, {j}).')
        if labels is not None and len(labels) != n:
            raise DimensionError(f'Expected {n} labels, got {len(labels)}.')

        # save settings
        self.n = n
        self.rows = rows
        self.labels = None if labels is None else tuple(labels)

    @classmethod
    def _raw(cls, n, rows, labels=None):
        # skips validation; only for rows derived from an already valid graph
        retval = cls.__new__(cls)
        retval.n = n
        retval.rows = tuple(rows)
        retval.labels = labels
        return retval

    # constructors

    @classmethod
    def empty(cls, n):
        return cls(n, [0]*n)

    @classmethod
    def complete(cls, n):
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << i) for i in range(n)])

    @classmethod
    def from_edges(cls, n, edges, labels=None):
        rows = [0]*n
        for u, v in edges:
            if u == v:
                raise DomainError(f'Edge ({u}, {v}) is a loop.')
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels=labels)

    @classmethod
    def from_matrix(cls, a, labels=None):
        if isinstance(a, IntMatrix):
            a = a.tolist()
        a = np.asarray(a, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionError(f'Adjacency matrix must be square, got shape {a.shape}.')
        if not np.all((a == 0) | (a == 1)):
            raise DomainError('Adjacency matrix must be a 01-matrix.')
        n = a.shape[0]
        rows = []
        for i in range(n):
            row = 0
            for j in np.nonzero(a[i])[0]:
                row |= 1 << int(j)
            rows.append(row)
        return cls(n, rows, labels=labels)

    @classmethod
    def from_code(cls, n, code):
        # inverse of the code property
        width = n*(n-1)//2
        if code < 0 or code >> width:
            raise DomainError(f'Code {code:#x} does not fit the {width} pairs of order {n}.')
        rows = [0]*n
        pos = width - 1
        for i in range(n):
            for j in range(i+1, n):
                if (code >> pos) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                pos -= 1
        return cls._raw(n, rows)

    @classmethod
    def from_hex(cls, n, text):
        try:
            code = int(text, 16)
        except ValueError:
            raise DomainError(f'Invalid hex code {text!r}.')
        return cls.from_code(n, code)

    @classmethod
    def from_row_strings(cls, strings):
        # e.g. ['0110', '1001', ...]
        return cls.from_matrix([[int(ch) for ch in s] for s in strings])

    @classmethod
    def from_networkx(cls, g):
        nodes = sorted(g.nodes())
        index = {node: k for k, node in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in g.edges() if u != v]
        return cls.from_edges(len(nodes), edges, labels=nodes)

    @classmethod
    def from_graph6(cls, text):
        text = text.strip()
        if text.startswith('>>graph6<<'):
            text = text[len('>>graph6<<'):]
        return cls.from_networkx(nx.from_graph6_bytes(text.encode('ascii')))

    # basic queries

    @property
    def order(self):
        return self.n

    def has_edge(self, u, v):
        return bool((self.rows[u] >> v) & 1)

    def neighbours(self, v):
        row = self.rows[v]
        return [j for j in range(self.n) if (row >> j) & 1]

    def degree(self, v):
        return bin(self.rows[v]).count('1')

    def degrees(self):
        return [self.degree(v) for v in range(self.n)]

    def count_in(self, v, vertices):
        # number of neighbours of v among the given vertices
        return sum((self.rows[v] >> u) & 1 for u in vertices)

    def edges(self):
        return [(i, j) for i in range(self.n) for j in range(i+1, self.n) if (self.rows[i] >> j) & 1]

    @property
    def num_edges(self):
        return sum(self.degrees()) // 2

    def is_regular(self):
        return len(set(self.degrees())) <= 1

    # derived graphs

    def complement(self):
        full = (1 << self.n) - 1
        return Graph._raw(self.n, [(full & ~row) & ~(1 << i) for i, row in enumerate(self.rows)],
                         labels=self.labels)

    def permuted(self, p):
        """ Conjugation P^T A P: vertex i of the result is vertex p[i] of self. """
        rows = []
        for i in range(self.n):
            old = self.rows[p[i]]
            row = 0
            for j in range(self.n):
                if (old >> p[j]) & 1:
                    row |= 1 << j
            rows.append(row)
        return Graph._raw(self.n, rows)

    def induced(self, vertices):
        vertices = list(vertices)
        rows = []
        for u in vertices:
            old = self.rows[u]
            row = 0
            for j, v in enumerate(vertices):
                if (old >> v) & 1:
                    row |= 1 << j
            rows.append(row)
        return Graph._raw(len(vertices), rows)

    def column(self, v, vertices):
        # adjacency of v to an ordered vertex tuple
        return tuple((self.rows[v] >> u) & 1 for u in vertices)

    # encodings

    @property
    def code(self):
        """ Upper triangle read row by row; the (0, 1) entry is the most
        significant bit, so numeric order equals lexicographic order. """
        retval = 0
        for i in range(self.n):
            for j in range(i+1, self.n):
                retval = (retval << 1) | ((self.rows[i] >> j) & 1)
        return retval

    @property
    def bitstring(self):
        width = self.n*(self.n-1)//2
        return format(self.code, f'0{width}b') if width > 0 else ''

    def to_hex(self):
        width = max(1, -(-(self.n*(self.n-1)//2) // 4))
        return format(self.code, f'0{width}x')

    def to_matrix(self):
        return IntMatrix(self.to_numpy().tolist())

    def to_numpy(self, dtype=np.int64):
        retval = np.zeros((self.n, self.n), dtype=dtype)
        for i, row in enumerate(self.rows):
            for j in range(self.n):
                if (row >> j) & 1:
                    retval[i, j] = 1
        return retval

    def row_strings(self):
        return [''.join(str((row >> j) & 1) for j in range(self.n)) for row in self.rows]

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def to_graph6(self):
        return nx.to_graph6_bytes(self.to_networkx(), header=False).decode('ascii').strip()

    # comparisons

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __lt__(self, other):
        return (self.n, self.code) < (other.n, other.code)

    def __repr__(self):
        return f'Graph(n={self.n}, edges={self.edges()})'
