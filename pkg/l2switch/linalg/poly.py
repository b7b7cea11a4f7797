from math import factorial

from l2switch.errors import DimensionError
from l2switch.linalg.matrix import IntMatrix

class IntPolynomial:
    def __init__(self, coeffs):
        # coefficients in ascending degree; trailing zeros are dropped
        coeffs = [int(elem) for elem in coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [0]

        # save settings
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        if self.coeffs == (0,):
            return -1
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1]

    @property
    def is_monic(self):
        return self.leading == 1

    def __call__(self, x):
        retval = 0
        for coeff in reversed(self.coeffs):
            retval = retval*x + coeff
        return retval

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f'IntPolynomial({list(self.coeffs)})'

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs)-1, -1, -1):
            coeff = self.coeffs[k]
            if coeff == 0:
                continue
            sign = '-' if coeff < 0 else '+'
            mag = abs(coeff)
            if k == 0:
                body = f'{mag}'
            else:
                power = 'x' if k == 1 else f'x^{k}'
                body = power if mag == 1 else f'{mag}*{power}'
            terms.append((sign, body))
        if not terms:
            return '0'
        first_sign, first_body = terms[0]
        retval = ('-' if first_sign == '-' else '') + first_body
        for sign, body in terms[1:]:
            retval += f' {sign} {body}'
        return retval

def det_bareiss(rows):
    """ Fraction-free determinant of a square list of integer rows. """

    a = [list(row) for row in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n-1):
        # pivot if needed
        if a[k][k] == 0:
            for i in range(k+1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k+1, n):
            for j in range(k+1, n):
                a[i][j] = (a[i][j]*a[k][k] - a[i][k]*a[k][j]) // prev
        prev = a[k][k]
    return sign*a[n-1][n-1]

def _check_square(a):
    if not isinstance(a, IntMatrix):
        a = IntMatrix(a)
    if not a.is_square:
        raise DimensionError(f'Characteristic polynomial needs a square matrix, got {a.shape}.')
    return a

def char_poly(a):
    """ det(xI - a) from exact determinant evaluations at x = 0..n followed by
    Newton interpolation over the falling-factorial basis. """

    a = _check_square(a)
    n = a.nrows
    rows = a.tolist()

    # evaluate det(xI - a) at n+1 integer points
    vals = []
    for x in range(n+1):
        shifted = [[(x if i == j else 0) - rows[i][j] for j in range(n)] for i in range(n)]
        vals.append(det_bareiss(shifted))

    # forward differences give coefficients in the falling-factorial basis
    diffs = []
    cur = vals
    for k in range(n+1):
        assert cur[0] % factorial(k) == 0, 'Interpolation produced a non-integral coefficient.'
        diffs.append(cur[0] // factorial(k))
        cur = [cur[i+1] - cur[i] for i in range(len(cur)-1)]

    # expand sum_k c_k x(x-1)...(x-k+1)
    coeffs = [0]*(n+1)
    falling = [1]
    for k, c in enumerate(diffs):
        for i, elem in enumerate(falling):
            coeffs[i] += c*elem
        # multiply by (x - k)
        nxt = [0]*(len(falling)+1)
        for i, elem in enumerate(falling):
            nxt[i+1] += elem
            nxt[i] -= k*elem
        falling = nxt

    return IntPolynomial(coeffs)

def _berkowitz(rows):
    # descending coefficients of det(xI - M)
    n = len(rows)
    if n == 0:
        return [1]
    if n == 1:
        return [1, -rows[0][0]]
    a = rows[0][0]
    r = rows[0][1:]
    c = [row[0] for row in rows[1:]]
    sub = [row[1:] for row in rows[1:]]
    q = _berkowitz(sub)

    # first column of the Toeplitz matrix: 1, -a, -R C, -R A C, ...
    col = [1, -a]
    vec = c
    for _ in range(n-1):
        col.append(-sum(x*y for x, y in zip(r, vec)))
        vec = [sum(sub[i][j]*vec[j] for j in range(n-1)) for i in range(n-1)]

    retval = [0]*(n+1)
    for j, qj in enumerate(q):
        for i in range(j, n+1):
            retval[i] += col[i-j]*qj
    return retval

def char_poly_berkowitz(a):
    a = _check_square(a)
    return IntPolynomial(list(reversed(_berkowitz(a.tolist()))))
