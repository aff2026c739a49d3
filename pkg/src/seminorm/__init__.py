"""Seminormality, weak normality and weak subintegrality, computed exactly.

The monomial setting reduces these questions to lattice points, faces of
Newton polyhedra and subgroups of Z^n.  Curves and single ring elements are
handled with exact sparse polynomial arithmetic.
"""
from .curves import INDETERMINATE, PlaneCurveGerm, initial_form, is_ordinary_point, is_seminormal_at_origin
from .elements import (
    Root,
    SOSICertificate,
    WSICertificate,
    Witness,
    build_characteristic_poly,
    derivative_criterion,
    schanuel_matrix,
    swan_root_test,
    verify_sosi,
    verify_wsi_ideal,
    verify_wsi_ring,
    wsi_certificate_from_high_powers,
)
from .ideals import MonomialIdeal, contains, integral_closure, power, power_contains, ratliff_rush
from .lattice import IntegerLattice, carrier_face, facet_description, hermite_basis
from .monoids import (
    NATURALS,
    AffineMonoid,
    MonomialAlgebraContext,
    NumericalSemigroup,
    is_seminormal_monoid,
    ns_seminormalize,
    relative_seminormalization,
    relative_weak_normalization,
)
from .parsing import ParseError, parse_polynomial
from .poly import SparsePolynomial
from .valuations import MonomialValuation, i_greater, rees_valuations, samuel_estimate, samuel_value
from .weak import CharSpec, star_face, weak_closure_char0, weak_closure_charp, wsi_membership_oracle_char0

__version__ = "0.1.0"
