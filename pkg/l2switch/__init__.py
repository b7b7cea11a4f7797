from .errors import (SwitchingError, DimensionError, DomainError, CapacityError,
                     AdmissibilityError, PlacementError, ConditionError, CountCheckError)
from .graph import Graph
from .linalg import IntMatrix, ScaledOrthogonal, IntPolynomial, char_poly
from .catalog import SwitchingFamily, build
from .admissible import (AdmissibleCatalog, enumerate_V, switched_B, is_admissible_B,
                         enumerate_B_bruteforce, enumerate_B_patched)
from .equivalence import orbit_canonical, classes, symmetry_pairs
from .reduce import FactorizationCertificate, is_reducible, reduce_all, six_vertex_criterion
from .engine import (SwitchingInstance, apply, apply_gm, apply_wqh, prose_switch, build_named_B,
                     find_switching_sets, verify_R_cospectral, is_isomorphic, gen_kneser2,
                     find_kneser_fano_instance, gen_planted)
from .config import RunConfig
