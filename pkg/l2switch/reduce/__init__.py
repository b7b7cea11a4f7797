from .candidates import Factor, FactorCandidateSet, factor_candidates, column_key
from .certificate import FactorizationCertificate, split_certificates
from .search import ReductionSearch, is_reducible, reduce_all, DEFAULT_DEPTH
from .criteria import six_vertex_criterion
