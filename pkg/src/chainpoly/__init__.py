"""Chain polynomials, flag h-vectors and interlacing for finite lattices."""

from .polynomials import (Poly, eulerian_A, eulerian_Aq, eulerian_B, interlaces,
                          is_interlacing_sequence, is_real_rooted, isolate_roots, sturm_count)
from .posets import (FinitePoset, FlagVector, GradedBoundedPoset, beta_flag, chain_polynomial,
                     h_of_bounded, h_polynomial)
from .lattices import (boolean_lattice, cube_face_lattice, partition_lattice, partition_lattice_B,
                       partition_lattice_D, subspace_lattice, uniform_flats, near_pencil_flats)
from .abindex import ABPolynomial, ab_index
from .matroids import Matroid, flats_lattice, parse_bases

__version__ = "0.1.0"
