import logging
from collections import Counter

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from l2switch.errors import CapacityError

MAX_ISO_ORDER = 64

def refine_colours(graphs):
    """ Colour refinement run on several graphs at once, so that equal
    colours mean the same thing in every graph.  Starts from the degrees and
    stops when no colour class splits. """

    colours = [[g.degree(v) for v in range(g.order)] for g in graphs]
    count = len({c for cols in colours for c in cols})
    while True:
        signatures = [[(cols[v], tuple(sorted(cols[w] for w in g.neighbours(v))))
                       for v in range(g.order)] for g, cols in zip(graphs, colours)]
        palette = {sig: k for k, sig in enumerate(sorted({s for sigs in signatures for s in sigs}))}
        colours = [[palette[s] for s in sigs] for sigs in signatures]
        if len(palette) == count:
            return colours
        count = len(palette)

def is_isomorphic(g, h):
    """ Exact isomorphism test: colour refinement rules out most
    non-isomorphic pairs, the rest is decided by VF2 matching restricted to
    vertices of equal colour. """

    for elem in (g, h):
        if elem.order > MAX_ISO_ORDER:
            raise CapacityError('is_isomorphic', elem.order, MAX_ISO_ORDER)
    if g.order != h.order or g.num_edges != h.num_edges:
        return False
    if g == h:
        return True

    cg, ch = refine_colours([g, h])
    if Counter(cg) != Counter(ch):
        logging.debug('Colour refinement separates the graphs.')
        return False

    gx = g.to_networkx()
    hx = h.to_networkx()
    nx.set_node_attributes(gx, dict(enumerate(cg)), 'colour')
    nx.set_node_attributes(hx, dict(enumerate(ch)), 'colour')
    matcher = GraphMatcher(gx, hx, node_match=lambda a, b: a['colour'] == b['colour'])
    return matcher.is_isomorphic()
