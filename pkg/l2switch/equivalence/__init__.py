from .symmetry import (SymmetryPair, symmetry_pairs, stated_generators, conjugating_perms,
                       group_closure, is_closed)
from .canonical import (Canonicalizer, EquivalenceClass, orbit_canonical, classes,
                        block_normalize, complement_normalize)
