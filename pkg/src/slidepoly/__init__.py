"""Dual immaculate slide polynomials, their relatives, and the fillings that generate them."""
from .bases import BasisTag, basis_polynomial, leading_exponent, verify_basis_property
from .combinat import flat, lex_compare, parse_weak_composition, prepend_zeros, append_zeros, rev
from .descents import EMPTY, weak_descent_composition, weak_descent_composition_semistandard
from .expansion import (ExpansionResult, TriangularityError, expand_basis, expand_dis_to_yfslide,
                        expand_dis_to_yqk, expand_drev_to_fslide, expand_drev_to_qk, expand_qk_to_fslide,
                        expand_rdi_to_qs, expand_yqk_to_yfslide, generic_change_of_basis,
                        psi_class_bijection, verify_positivity, verify_stable_limit)
from .fillings import FamilyTag, Filling, enumerate_fillings, reading_word, standardize, validate
from .insertion import InsertionPair, rapture_inverse, verify_insertion_bijection, weak_insert
from .polynomial import Polynomial, reverse_variables, truncate_vars

__version__ = "0.1.0"
