from .vectors import (enumerate_V, image_map, image_of_column, predicted_V, v_matrix,
                      conjugate, switched_B, is_admissible_B, require_admissible_B, is_adjacency)
from .blocks import BlockGrid, block_transform, block_transform_inverse, block_type
from .enumerate import (enumerate_B_bruteforce, enumerate_B_patched, complement_block,
                        block_flip_masks, closes_fully)
from .catalog import AdmissibleCatalog
