"""Complete generalised Wronskians and the algebras they define."""

from .combinatorics import BracketContext, arity, context, degree_shift, enumerate_rows, standard_monomials
from .grammar import ParseError, format_poly, parse_poly
from .poly import GenPolynomial, degree_profile, derive
from .vandermonde import quasi_triangular_det, van_det, vanishing_certificate
from .wronskian import bracket, bracket_monomial, wronskian_matrix

__version__ = "0.1.0"
