from .matrix import (IntMatrix, ScaledOrthogonal, is_level2_regular_orthogonal,
                     indecomposable_blocks, largest_block, I2, J2, O2, Y2, Z2, N2)
from .poly import IntPolynomial, char_poly, char_poly_berkowitz, det_bareiss
