from l2switch.admissible.vectors import enumerate_V
from l2switch.catalog.families import SwitchingFamily, build
from l2switch.errors import SwitchingError, DomainError
from l2switch.graph import Graph
from l2switch.linalg.matrix import IntMatrix
from l2switch.reduce.candidates import Factor

FORMAT_VERSION = 'l2switch-certificate-1'

class FactorizationCertificate:
    """ Witness that B reduces: factors R_1, ..., R_s (applied in that order)
    whose product is R up to the column permutation, together with the
    conjugated switching set after each prefix. """

    def __init__(self, family, b, factors, column_permutation, intermediate_bs):
        if isinstance(family, str):
            family = SwitchingFamily.parse(family)

        # save settings
        self.family = family
        self.b = b
        self.factors = list(factors)
        self.column_permutation = tuple(column_permutation)
        self.intermediate_bs = list(intermediate_bs)

    @property
    def depth(self):
        return len(self.factors)

    def problems(self):
        """ Re-checks everything with exact integer arithmetic and returns a
        list of violations (empty if the certificate holds). """

        n = self.family.size
        m = build(self.family).m
        b = self.b.to_matrix()
        vmat = IntMatrix([list(col) for col in zip(*enumerate_V(build(self.family)))])
        retval = []

        if len(self.intermediate_bs) != len(self.factors):
            retval.append(f'{len(self.factors)} factors but {len(self.intermediate_bs)} intermediate graphs')
        if sorted(self.column_permutation) != list(range(n)):
            retval.append(f'column permutation {self.column_permutation} is not a permutation of {n}')
            return retval

        prefix = IntMatrix.identity(n)
        for i, factor in enumerate(self.factors):
            try:
                mat = factor.matrix
            except SwitchingError as err:
                retval.append(f'factor {i}: {err}')
                return retval
            size = factor.largest_block()
            if size >= n:
                retval.append(f'factor {i}: largest block {size} is not smaller than {n}')
            prefix = prefix @ mat.m

            # (Q_1...Q_i)^T B (Q_1...Q_i) must be an adjacency matrix
            scale = 4**(i+1)
            conj = prefix.T @ b @ prefix
            try:
                conj = conj.exact_div(scale)
                step = Graph.from_matrix(conj)
            except SwitchingError as err:
                retval.append(f'step {i}: conjugated switching set is not an adjacency matrix ({err})')
                continue
            if i < len(self.intermediate_bs) and step != self.intermediate_bs[i]:
                retval.append(f'step {i}: recorded graph differs from the recomputed one')

            # and every admissible outside column must stay a 01-vector
            cols = prefix.T @ vmat
            try:
                cols = cols.exact_div(2**(i+1))
            except SwitchingError:
                retval.append(f'step {i}: an outside column is not integral')
                continue
            if any(elem not in (0, 1) for elem in cols.arr.flat):
                retval.append(f'step {i}: an outside column is not a 01-vector')

        # product of the factors is 2^(s-1) M up to the column permutation
        s = len(self.factors)
        if s == 0:
            retval.append('no factors')
            return retval
        prod = prefix.tolist()
        target = m.tolist()
        for j, c in enumerate(self.column_permutation):
            if any(prod[row][c] != (2**(s-1))*target[row][j] for row in range(n)):
                retval.append(f'column {c} of the product does not match column {j} of R')
                break
        return retval

    def verify(self):
        return not self.problems()

    # text format

    def to_text(self):
        lines = [f'# {FORMAT_VERSION}',
                 f'family {self.family}',
                 f'b {self.b.order} {self.b.to_hex()}']
        for factor in self.factors:
            lines.append(f'factor {factor.to_text()}')
        lines.append('columns ' + ','.join(str(elem) for elem in self.column_permutation))
        for step in self.intermediate_bs:
            lines.append(f'step {step.to_hex()}')
        return '\n'.join(lines) + '\n'

    @classmethod
    def from_text(cls, text, source='<certificate>'):
        family = None
        b = None
        factor_texts = []
        columns = None
        steps = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            key, _, rest = line.partition(' ')
            try:
                if key == 'family':
                    family = SwitchingFamily.parse(rest)
                elif key == 'b':
                    order, hex_code = rest.split()
                    b = Graph.from_hex(int(order), hex_code)
                elif key == 'factor':
                    factor_texts.append(rest)
                elif key == 'columns':
                    columns = tuple(int(elem) for elem in rest.split(','))
                elif key == 'step':
                    steps.append(rest.strip())
                else:
                    raise DomainError(f'unknown key {key!r}')
            except (ValueError, DomainError) as err:
                raise DomainError(f'{source}:{lineno}: {err}')
        if family is None or b is None or columns is None:
            raise DomainError(f'{source}: certificate needs family, b and columns lines.')
        n = family.size
        factors = [Factor.from_text(elem, n) for elem in factor_texts]
        intermediate = [Graph.from_hex(n, elem) for elem in steps]
        return cls(family, b, factors, columns, intermediate)

    def __repr__(self):
        return f'FactorizationCertificate(family={self.family}, depth={self.depth})'

def split_certificates(text):
    # a certificate file may hold several blocks, each starting with the version line
    blocks = []
    current = []
    for line in text.splitlines():
        if line.strip() == f'# {FORMAT_VERSION}' and current:
            blocks.append('\n'.join(current) + '\n')
            current = []
        current.append(line)
    if any(line.strip() for line in current):
        blocks.append('\n'.join(current) + '\n')
    return blocks
