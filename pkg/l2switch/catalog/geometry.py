from functools import lru_cache
from itertools import combinations, product

from l2switch.util import invert_perm

class FanoGeometry:
    """ The Fano plane on points 0..6 with lines {i, i+1, i+3} and ovals
    {i+2, i+4, i+5} (indices mod 7). """

    def __init__(self):
        self.points = tuple(range(7))
        self.lines = tuple(frozenset((i+d) % 7 for d in (0, 1, 3)) for i in range(7))
        self.ovals = tuple(frozenset((i+d) % 7 for d in (2, 4, 5)) for i in range(7))

    def line_through(self, p, q):
        for line in self.lines:
            if p in line and q in line:
                return line
        raise ValueError(f'Points {p} and {q} do not span a line.')

    def pencil(self, p):
        # the three lines through p
        return [line for line in self.lines if p in line]

    def pencil_pairs(self, p):
        # lines through p with p removed, as sorted pairs
        return [tuple(sorted(line - {p})) for line in self.pencil(p)]

    def line_complements(self):
        return [frozenset(self.points) - line for line in self.lines]

    def shift(self, subset, k=1):
        return frozenset((elem+k) % 7 for elem in subset)

    def is_valid(self):
        # two points on exactly one line, two lines meet in exactly one point
        for p, q in combinations(self.points, 2):
            if sum(1 for line in self.lines if p in line and q in line) != 1:
                return False
        for l1, l2 in combinations(self.lines, 2):
            if len(l1 & l2) != 1:
                return False
        return True

class CubeGeometry:
    """ The cube as the affine space AG(3,2).  Point k carries the coordinate
    triple COORDS[k]; the planes are the 14 solution sets of a.x = b with a
    nonzero. """

    COORDS = (
        (0, 0, 0),
        (1, 1, 1),
        (1, 0, 1),
        (0, 1, 0),
        (1, 1, 0),
        (0, 0, 1),
        (0, 1, 1),
        (1, 0, 0)
    )

    # the automorphism of order six used by cube switching
    PI = (1, 0, 7, 6, 3, 2, 5, 4)

    def __init__(self):
        self.points = tuple(range(8))
        index = {coord: k for k, coord in enumerate(self.COORDS)}
        planes = []
        kinds = {}
        for a in product((0, 1), repeat=3):
            if not any(a):
                continue
            weight = sum(a)
            for b in (0, 1):
                plane = frozenset(index[x] for x in self.COORDS
                                  if sum(ai*xi for ai, xi in zip(a, x)) % 2 == b)
                planes.append(plane)
                kinds[plane] = {1: 'face', 2: 'edge', 3: 'tetra'}[weight]
        self.planes = tuple(sorted(planes, key=lambda plane: sorted(plane)))
        self.kinds = kinds

    def kind(self, plane):
        return self.kinds[frozenset(plane)]

    def faces(self):
        return [plane for plane in self.planes if self.kinds[plane] == 'face']

    def edges(self):
        # pairs of points at Hamming distance one
        return [(u, v) for u, v in combinations(self.points, 2)
                if sum(x != y for x, y in zip(self.COORDS[u], self.COORDS[v])) == 1]

    def antipode(self, u):
        target = tuple(1-x for x in self.COORDS[u])
        return self.COORDS.index(target)

    def apply_pi(self, subset):
        return frozenset(self.PI[elem] for elem in subset)

    def pi_inverse(self):
        return invert_perm(self.PI)

    def image_of_plane(self, plane):
        """ Faces move under PI, opposite-edge planes go to their complement
        and the two tetrahedral sets stay put. """

        plane = frozenset(plane)
        kind = self.kinds[plane]
        if kind == 'face':
            return self.apply_pi(plane)
        elif kind == 'edge':
            return frozenset(self.points) - plane
        else:
            return plane

@lru_cache(maxsize=None)
def fano_geometry():
    return FanoGeometry()

@lru_cache(maxsize=None)
def cube_geometry():
    return CubeGeometry()
