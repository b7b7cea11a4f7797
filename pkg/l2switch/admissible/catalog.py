import logging
from pathlib import Path

from l2switch.admissible.enumerate import enumerate_B_bruteforce, enumerate_B_patched, closes_fully
from l2switch.admissible.vectors import enumerate_V, image_map
from l2switch.catalog.families import SwitchingFamily, build
from l2switch.errors import DomainError
from l2switch.graph import Graph

FORMAT_VERSION = 'l2switch-catalog-1'

class AdmissibleCatalog:
    """ The admissible outside columns and switching-set graphs of one
    family.  When normalized is set, b_set only holds the members with
    diagonal blocks O and zero top-left corners in every block (circulant
    families). """

    def __init__(self, family, v_set, b_set, method, normalized=False):
        if isinstance(family, str):
            family = SwitchingFamily.parse(family)

        # save settings
        self.family = family
        self.v_set = [tuple(v) for v in v_set]
        self.b_set = list(b_set)
        self.method = method
        self.normalized = normalized

        self._codes = None
        self._prefixes = {}

    @classmethod
    def build(cls, family, method=None, workers=1, full=True, progress=False):
        if isinstance(family, str):
            family = SwitchingFamily.parse(family)

        # set defaults
        if method is None:
            method = 'patched' if family.is_circulant else 'brute'

        r = build(family)
        v_set = enumerate_V(r)
        if method == 'brute':
            b_set = enumerate_B_bruteforce(r, workers=workers, progress=progress)
            normalized = False
        elif method == 'patched':
            if not family.is_circulant:
                raise DomainError(f'Patched enumeration only applies to circulant families, not {family}.')
            b_set = enumerate_B_patched(family.m, full=full, workers=workers, progress=progress)
            normalized = not closes_fully(family.m, full)
        else:
            raise DomainError(f'Unknown enumeration method: {method!r}.')

        logging.debug(f'Catalog for {family}: {len(v_set)} columns, {len(b_set)} matrices ({method}).')
        return cls(family, v_set, b_set, method, normalized=normalized)

    @property
    def size(self):
        return self.family.size

    @property
    def v_count(self):
        return len(self.v_set)

    @property
    def b_count(self):
        return len(self.b_set)

    def images(self):
        return image_map(build(self.family))

    def codes(self):
        if self._codes is None:
            self._codes = frozenset(b.code for b in self.b_set)
        return self._codes

    def __contains__(self, b):
        return b.code in self.codes()

    def prefix_codes(self, positions):
        # codes of the subgraphs induced on the given ordered positions; needs a full catalog

        if self.normalized:
            raise DomainError('Prefix sets need a full catalog.')
        key = tuple(positions)
        if key not in self._prefixes:
            self._prefixes[key] = frozenset(b.induced(key).code for b in self.b_set)
        return self._prefixes[key]

    # text files

    def write_b(self, path):
        n = self.size
        with open(path, 'w') as f:
            f.write(f'# {FORMAT_VERSION}\n')
            f.write(f'# family {self.family}\n')
            f.write(f'# method {self.method}{" normalized" if self.normalized else ""}\n')
            f.write(f'# count {self.b_count}\n')
            for b in self.b_set:
                f.write(f'{n} {b.to_hex()}\n')

    def write_v(self, path):
        with open(path, 'w') as f:
            f.write(f'# {FORMAT_VERSION}\n')
            f.write(f'# family {self.family}\n')
            f.write(f'# count {self.v_count}\n')
            for v in self.v_set:
                f.write(''.join(str(elem) for elem in v) + '\n')

    @classmethod
    def read(cls, b_path, v_path=None):
        header, b_set = read_graph_list(b_path)
        if 'family' not in header:
            raise DomainError(f'{b_path}: missing family header.')
        family = SwitchingFamily.parse(header['family'])
        method_words = header.get('method', 'unknown').split()
        method = method_words[0]
        normalized = 'normalized' in method_words[1:]
        if v_path is not None:
            v_set = read_vector_list(v_path)
        else:
            v_set = enumerate_V(build(family))
        return cls(family, v_set, b_set, method, normalized=normalized)

def read_header_line(line, header):
    body = line[1:].strip()
    if body.startswith('l2switch-'):
        header['version'] = body
    else:
        key, _, val = body.partition(' ')
        header[key] = val.strip()

def read_graph_list(path):
    """ Reads '<order> <hex>' lines after '#' header lines.  Returns the header
    dict and the graphs; the header count, if present, is checked. """

    header = {}
    graphs = []
    with open(path, 'r') as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line:
                continue
            if line.startswith('#'):
                read_header_line(line, header)
                continue
            tokens = line.split()
            if len(tokens) < 2:
                raise DomainError(f'{path}:{lineno}: expected "<order> <hex>", got {line!r}.')
            try:
                graphs.append(Graph.from_hex(int(tokens[0]), tokens[1]))
            except ValueError:
                raise DomainError(f'{path}:{lineno}: cannot parse {line!r}.')
    if 'count' in header and int(header['count']) != len(graphs):
        raise DomainError(f'{Path(path).name}: header count {header["count"]} but {len(graphs)} entries.')
    return header, graphs

def read_vector_list(path):
    retval = []
    with open(path, 'r') as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            if set(line) - {'0', '1'}:
                raise DomainError(f'{path}:{lineno}: expected a 01-string, got {line!r}.')
            retval.append(tuple(int(ch) for ch in line))
    return retval
