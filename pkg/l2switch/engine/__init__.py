from .instance import SwitchingInstance
from .switch import apply, apply_gm, apply_wqh, gm_matrix, wqh_matrix, conjugate_host
from .prose import prose_switch, default_rule
from .named import build_named_B, named_family, named_rule, toggle_blocks, METHODS
from .detect import find_switching_sets, SwitchingSetSearch
from .spectral import verify_R_cospectral, is_cospectral
from .iso import is_isomorphic
from .kneser import GFTwoSpace, gen_kneser2, find_kneser_fano_instance
from .planted import gen_planted
