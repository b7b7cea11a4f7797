import logging

from l2switch.errors import DimensionError
from l2switch.linalg.poly import char_poly

def spectrum_key(g):
    # characteristic polynomials of the graph and of its complement
    return char_poly(g.to_matrix()), char_poly(g.complement().to_matrix())

def is_cospectral(g, h):
    if g.order != h.order:
        raise DimensionError(f'Cannot compare graphs of orders {g.order} and {h.order}.')
    return char_poly(g.to_matrix()) == char_poly(h.to_matrix())

def verify_R_cospectral(g, h):
    """ True iff A + rJ and A' + rJ are cospectral for every real r, which
    holds exactly when the graphs are cospectral and so are their
    complements. """

    if g.order != h.order:
        raise DimensionError(f'Cannot compare graphs of orders {g.order} and {h.order}.')
    if g == h:
        return True

    pg, cg = spectrum_key(g)
    ph, ch = spectrum_key(h)
    logging.debug(f'char polys: {pg} vs {ph}; complements: {cg} vs {ch}')
    return pg == ph and cg == ch
