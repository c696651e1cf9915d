"""Group-theoretic engine for the picture cube puzzle.

A board of m x n cubes is modelled as a matrix over S4 (or any finite group);
row and column rotations multiply whole lines on the right.  The package
decides solvability, solves by commutators, by a two-phase subgroup search
or optimally, and computes exact Cayley-graph distance statistics.
"""

from .cayley import (CayleyStats, DistanceTable, bfs_analyze, build_distance_table, decode,
                     encode, optimal_solve, verify_counts)
from .commutator import CommutatorRecipe, build_recipe_table, solve_local
from .group import (DOWN, LEFT, RIGHT, UP, GroupTable, Perm4, alternating_table,
                    cyclic_table, format_cycles, group_from_generators, parse_cycles, perm_parity,
                    s4_table)
from .puzzle import (Configuration, Move, PuzzleSpec, apply_move, apply_sequence, cube_spec,
                     enumerate_moves, invert_sequence, scramble_uniform_cube, scramble_walk)
from .solvability import (abelian_solve, is_product_form, is_solvable, order_of_H,
                          parity_matrix, parity_normalize)
from .subgroup import TwoPhaseSolver, build_subgroup, solve_two_phase

__version__ = "0.1.0"
