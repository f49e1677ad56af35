"""Exact computations in the free bialgebra k<g,h>, its Lyndon/PBW machinery,
and a chain of quotient bialgebras and Hopf algebras built from it."""

from .errors import *  # noqa: F401,F403
from .scalars import GF, QQ, Scalar, binomial, is_prime, multinomial_partition_coefficient
from .words import (is_lyndon, lyndon_enumerate, lyndon_factorization, necklace_count,
                    standard_factorization)
from .free import (NcPoly, PbwVector, bracket, free_algebra, ls_element, nc_multiply, omega,
                   pbw_coordinates, pbw_expand, sh_prime, shuffle_poly, t_coproduct, t_counit, word)
from .presets import (BF, HFdB, TBar, TBarN, TBarNP, TBarNPD, TBarNPrime, TBarPm, TBarPmPrime,
                      AlgebraSpec, BFdB, BFdBnc, validate_spec)
from .fdb import (CPoly, FPoly, abelianization_check, bell_polynomial, check_L_iso, check_R_iso,
                  fdb_coproduct, ncfdb_coproduct)
from .quotients import (bf_embedding_check, bf_relations_check, check_overlap_ambiguities, get_algebra, normal_form, project_from_free,
                        omega_identities_check, q_antipode, q_coproduct, q_counit, q_multiply,
                        verify_bialgebra_axioms)
from .analysis import (INFINITE, GrowthTable, dimension, gk_estimate, graded_dimension,
                       growth_function, skew_primitives)
from .filtration import (FiltrationSpec, c_coefficients, filtration_check, gr_relations_check,
                         z_prime_coproduct_check)
from .parser import evaluate, parse, parse_element, to_source
