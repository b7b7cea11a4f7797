from itertools import combinations

from l2switch.admissible.vectors import require_admissible_B
from l2switch.catalog.families import SwitchingFamily, build
from l2switch.errors import DimensionError

def six_vertex_criterion(b):
    """ Reducibility test for the six-vertex method on pairs {0, 1}, {2, 3},
    {4, 5}: some union of two pairs induces a regular subgraph and both
    vertices of the third pair have an even number of neighbours in it. """

    if b.order != 6:
        raise DimensionError(f'Six-vertex criterion needs 6 vertices, got {b.order}.')
    family = SwitchingFamily.circulant(3)
    require_admissible_B(build(family), b)

    pairs = family.pairs()
    for first, second in combinations(range(3), 2):
        third = 3 - first - second
        union = pairs[first] + pairs[second]
        if not b.induced(union).is_regular():
            continue
        if all(b.count_in(v, union) % 2 == 0 for v in pairs[third]):
            return True
    return False
