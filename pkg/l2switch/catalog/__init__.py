from .families import (SwitchingFamily, build, compose_block_diagonal, embed, gm4_rows,
                       circulant_rows, fano_rows, cube_rows)
from .geometry import FanoGeometry, CubeGeometry, fano_geometry, cube_geometry
