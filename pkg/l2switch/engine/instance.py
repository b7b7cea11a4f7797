from l2switch.admissible.vectors import enumerate_V, is_admissible_B
from l2switch.catalog.families import SwitchingFamily, build
from l2switch.errors import AdmissibilityError, DimensionError, PlacementError

class SwitchingInstance:
    """ A host graph with an ordered switching set: vertices[k] plays the role
    of row k of R.  For circulant families the cells are the consecutive
    pairs; for the other families every labelled vertex is its own cell. """

    def __init__(self, host, family, vertices, check=True):
        if isinstance(family, str):
            family = SwitchingFamily.parse(family)
        vertices = tuple(int(v) for v in vertices)

        # validate input
        if len(vertices) != family.size:
            raise DimensionError(f'{family} needs {family.size} vertices, got {len(vertices)}.')
        if len(set(vertices)) != len(vertices):
            raise PlacementError(f'Switching set {vertices} repeats a vertex.')
        if any(not (0 <= v < host.order) for v in vertices):
            raise PlacementError(f'Switching set {vertices} is out of range for order {host.order}.')

        # save settings
        self.host = host
        self.family = family
        self.vertices = vertices

        if check:
            self.validate()

    @property
    def r(self):
        return build(self.family)

    @property
    def cells(self):
        if self.family.is_circulant:
            return [self.vertices[2*i:2*i+2] for i in range(self.family.m)]
        return [(v,) for v in self.vertices]

    @property
    def b(self):
        return self.host.induced(self.vertices)

    def outside(self):
        inside = set(self.vertices)
        return [v for v in range(self.host.order) if v not in inside]

    def columns(self):
        return {u: self.host.column(u, self.vertices) for u in self.outside()}

    def problems(self):
        retval = []
        if not is_admissible_B(self.r, self.b):
            retval.append(f'induced graph {self.b.to_hex()} is not an admissible switching set')
        allowed = set(enumerate_V(self.r))
        for u, col in self.columns().items():
            if col not in allowed:
                retval.append(f'outside vertex {u} has column {"".join(map(str, col))}')
        return retval

    def is_valid(self):
        return not self.problems()

    def validate(self):
        issues = self.problems()
        if issues:
            raise AdmissibilityError(f'Invalid {self.family} instance on {self.vertices}: ' + '; '.join(issues[:3]))

    def key(self):
        return self.vertices

    def __eq__(self, other):
        return (isinstance(other, SwitchingInstance) and self.family == other.family
                and self.vertices == other.vertices and self.host == other.host)

    def __hash__(self):
        return hash((self.family, self.vertices))

    def __repr__(self):
        return f'SwitchingInstance(family={self.family}, vertices={self.vertices})'
