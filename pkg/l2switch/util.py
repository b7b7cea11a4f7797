import os
from itertools import permutations

def warn(s):
    print('WARNING: ' + str(s))

def slow_enabled():
    return os.environ.get('L2SWITCH_SLOW', '') not in {'', '0', 'false', 'no'}

def invert_perm(p):
    inv = [0]*len(p)
    for k, elem in enumerate(p):
        inv[elem] = k
    return tuple(inv)

def compose_perm(p, q):
    # (p o q)[i] = p[q[i]]
    return tuple(p[elem] for elem in q)

def cyclic_orders(items):
    # orderings of items up to rotation, first item fixed
    items = list(items)
    if len(items) <= 1:
        yield tuple(items)
        return
    for rest in permutations(items[1:]):
        yield (items[0],) + rest
