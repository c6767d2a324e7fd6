# import dependencies
from __future__ import annotations

import dataclasses
import logging
from typing import List, Tuple

import numpy as np

import config  # type: ignore
import exceptions  # type: ignore
import polynomials  # type: ignore
from set_kinds import Tri  # type: ignore
from weights import (  # type: ignore
    BoundarySamples,
    MultiPolynomial,
    Polynomial,
    Rational,
    Taylor,
    Weight,
    boundary_samples,
    taylor_coefficients,
)

logger = logging.getLogger( __name__ )

METHODS = ( "auto", "closed_form", "quadrature" )

# canonical factorization data w = B S w_e of a weight
@dataclasses.dataclass( frozen=True )
class FactorizationSummary:

    zeros_in_disc: Tuple[ Tuple[ complex, int ], ... ]
    zeros_on_circle: Tuple[ Tuple[ complex, int ], ... ]
    blaschke_finite: bool
    outer_value_mod: float # |w_e(0)|
    singular_part_present: Tri

    # total multiplicity of the zeros inside the open disc
    @property
    def blaschke_degree( self ) -> int:

        return sum( multiplicity for _, multiplicity in self.zeros_in_disc )

# invertibility of w in A(U), in C(T) and in H_inf
@dataclasses.dataclass( frozen=True )
class InvertibilityProfile:

    in_disc_algebra: Tri
    in_continuous_boundary: Tri
    in_H_inf: Tri

    # which of the three classification cases applies, None when undecided
    @property
    def case( self ) -> int | None:

        if self.in_disc_algebra is Tri.YES:

            return 1

        if self.in_continuous_boundary is Tri.YES and self.in_disc_algebra is Tri.NO:

            return 2

        if self.in_continuous_boundary is Tri.NO:

            return 3

        return None

# numerator coefficients of a polynomial or rational weight
def numerator( w: Weight ) -> np.ndarray:

    if isinstance( w, Polynomial ):

        return w.coeffs

    if isinstance( w, Rational ):

        return w.num

    raise exceptions.PreconditionError( f"{ w.kind } weight has no closed form numerator" )

# w(0)
def value_at_origin( w: Weight ) -> complex:

    if isinstance( w, MultiPolynomial ):

        return w.constant

    return complex( taylor_coefficients( w, 1 )[ 0 ] )

# mean of log|values|, rejecting vanishing samples
def _mean_log_modulus( values: np.ndarray ) -> float:

    moduli = np.abs( values )

    if not np.any( moduli ):

        raise exceptions.PreconditionError( "all boundary samples are zero" )

    if np.any( moduli == 0.0 ):

        raise exceptions.NumericalFailure( "weight vanishes on the quadrature grid, use the closed form" )

    return float( np.mean( np.log( moduli ) ) )

# trapezoid rule for the mean of log|w| on the circle of radius r, doubling the grid
# (only the new odd nodes are evaluated) until successive means agree
def _log_mean_quadrature( w: Weight, r: float ) -> float:

    tol = config.get_tolerances()

    if isinstance( w, BoundarySamples ):

        full = _mean_log_modulus( w.values )
        half = _mean_log_modulus( boundary_samples( w, w.grid_size // 2 ) )

        if abs( full - half ) > tol.quad_rel:

            raise exceptions.NumericalFailure(
                f"boundary samples do not resolve the geometric mean ( half-grid change { abs( full - half ):.3g} )"
            )

        return full

    size = tol.quad_start
    current = _mean_log_modulus( boundary_samples( w, size, r ) )

    while size < tol.quad_max_points:

        odd = r * np.exp( 1j * np.pi * ( 2 * np.arange( size ) + 1 ) / size )
        refined = 0.5 * ( current + _mean_log_modulus( w.evaluate( odd ) ) )
        size *= 2

        logger.debug( "quadrature at %d nodes: %.17g", size, refined )

        if abs( refined - current ) <= tol.quad_rel:

            return refined

        current = refined

    raise exceptions.NumericalFailure(
        f"geometric mean quadrature did not converge within { tol.quad_max_points } nodes, "
        "the weight likely has zeros on or near the circle"
    )

# log of the Jensen closed form for polynomial and rational weights
def _log_mean_closed_form( w: Weight, r: float ) -> float:

    num = numerator( w )

    if polynomials.is_zero( num ):

        raise exceptions.PreconditionError( "weight is identically zero" )

    value = polynomials.log_jensen( num, r )

    if isinstance( w, Rational ):

        value -= polynomials.log_jensen( w.den, r )

    return value

# exp of the mean of log|w| over the circle of radius r
def geometric_mean( w: Weight, circle_radius: float = 1.0, method: str = "auto" ) -> float:

    if not 0.0 < circle_radius <= 1.0:

        raise exceptions.PreconditionError( f"circle radius must lie in (0, 1], got { circle_radius }" )

    if method not in METHODS:

        raise exceptions.PreconditionError( f"unknown geometric mean method '{ method }'" )

    if isinstance( w, MultiPolynomial ):

        if circle_radius != 1.0:

            raise exceptions.PreconditionError( "torus geometric means are taken on the unit torus" )

        return torus_geometric_mean( w )

    if method != "quadrature" and w.is_rational:

        return float( np.exp( _log_mean_closed_form( w, circle_radius ) ) )

    if method == "closed_form":

        raise exceptions.PreconditionError( f"no closed form geometric mean for a { w.kind } weight" )

    if not w.is_analytic and circle_radius != 1.0:

        raise exceptions.PreconditionError( "boundary samples can only be averaged on the unit circle" )

    return float( np.exp( _log_mean_quadrature( w, circle_radius ) ) )

# lower and upper values for the geometric mean of a weight known up to a tail bound
def geometric_mean_bounds( w: Weight ) -> Tuple[ float, float ]:

    if not isinstance( w, Taylor ) or w.tail_bound == 0.0:

        value = geometric_mean( w )

        return value, value

    moduli = np.abs( boundary_samples( w, 2 ** 14 ) )
    low = np.maximum( moduli - w.tail_bound, 0.0 )
    high = moduli + w.tail_bound

    with np.errstate( divide="ignore" ):

        lower = float( np.exp( np.mean( np.log( low ) ) ) )

    return lower, float( np.exp( np.mean( np.log( high ) ) ) )

# mean of log|p| over the unit torus, midpoint rule in the last variable and
# Jensen's formula once a single variable is left
def _torus_log_mean( coeffs: np.ndarray, tol: config.Tolerances ) -> float:

    if coeffs.ndim == 1:

        return polynomials.log_jensen( coeffs, 1.0 )

    limit = max( 16, 2 ** ( 12 // ( coeffs.ndim - 1 ) ) )
    size = 16
    previous = None

    while True:

        nodes = np.exp( 2j * np.pi * ( np.arange( size ) + 0.5 ) / size )
        powers = nodes[ :, None ] ** np.arange( coeffs.shape[ -1 ] )[ None, : ]
        current = float( np.mean( [ _torus_log_mean( coeffs @ row, tol ) for row in powers ] ) )

        if not np.isfinite( current ):

            raise exceptions.NumericalFailure( "weight vanishes identically on a torus slice" )

        if previous is not None and abs( current - previous ) <= tol.quad_rel:

            return current

        if size >= limit:

            logger.warning( "torus mean stopped at %d nodes per variable ( change %.3g )", size, abs( current - previous ) )

            return current

        previous = current
        size *= 2

# exp of the mean of log|w| over the unit torus ( Haar measure )
def torus_geometric_mean( w: MultiPolynomial ) -> float:

    if polynomials.is_zero( w.coeffs ):

        raise exceptions.PreconditionError( "weight is identically zero" )

    return float( np.exp( _torus_log_mean( w.coeffs, config.get_tolerances() ) ) )

# number of zeros inside the circle of radius r by the argument principle
def count_zeros( w: Weight, circle_radius: float = 1.0 ) -> int:

    if isinstance( w, MultiPolynomial ):

        raise exceptions.PreconditionError( "zero counting needs a one-variable weight" )

    if isinstance( w, BoundarySamples ) and circle_radius != 1.0:

        raise exceptions.PreconditionError( "boundary samples can only be wound on the unit circle" )

    tol = config.get_tolerances()
    floor = tol.inv + ( w.tail_bound if isinstance( w, Taylor ) else 0.0 )
    size = w.grid_size if isinstance( w, BoundarySamples ) else 1024

    while True:

        values = boundary_samples( w, size, circle_radius )

        if np.abs( values ).min() <= floor:

            raise exceptions.NumericalFailure( "weight vanishes on or too near the counting contour" )

        steps = np.angle( np.roll( values, -1 ) / values )

        if np.abs( steps ).max() < np.pi / 4:

            return int( round( float( np.sum( steps ) ) / ( 2.0 * np.pi ) ) )

        if isinstance( w, BoundarySamples ) or size >= tol.quad_max_points:

            raise exceptions.NumericalFailure( "grid too coarse to follow the argument of the weight" )

        size *= 2

# zeros with |z| <= r, with multiplicities
def find_zeros( w: Weight, closed_radius: float = 1.0 ) -> List[ Tuple[ complex, int ] ]:

    if isinstance( w, ( Taylor, BoundarySamples ) ):

        count = count_zeros( w, closed_radius )

        raise exceptions.CountOnly( f"{ w.kind } weight: zeros counted ( { count } ), not located", count )

    if isinstance( w, MultiPolynomial ):

        raise exceptions.PreconditionError( "zero location needs a one-variable weight" )

    coeffs = numerator( w )

    if polynomials.is_zero( coeffs ):

        raise exceptions.PreconditionError( "weight is identically zero" )

    tol = config.get_tolerances()
    found = polynomials.cluster( polynomials.roots( coeffs ), tol.cluster, coeffs )

    return [ ( zero, multiplicity ) for zero, multiplicity in found if abs( zero ) <= closed_radius + tol.zero ]

# values of a polynomial in several variables on the product grid of size**n torus nodes
def _torus_grid_values( coeffs: np.ndarray, size: int ) -> np.ndarray:

    nodes = np.exp( 2j * np.pi * np.arange( size ) / size )
    values = coeffs

    for degree in coeffs.shape:

        vandermonde = nodes[ :, None ] ** np.arange( degree )[ None, : ]
        values = np.tensordot( values, vandermonde, axes=( [ 0 ], [ 1 ] ) )

    return values

# is w bounded away from zero on the torus, from a sampled minimum and a Lipschitz margin
def _torus_invertibility( w: MultiPolynomial, tol: config.Tolerances ) -> Tri:

    exponents, values = w.terms()
    lipschitz = float( np.sum( np.abs( values ) * exponents.sum( axis=1 ) ) )
    size = 2 ** max( 4, 18 // w.dimension )

    while True:

        smallest = float( np.abs( _torus_grid_values( w.coeffs, size ) ).min() )

        if smallest <= tol.inv:

            return Tri.NO

        if smallest - lipschitz * np.pi / size > tol.inv:

            return Tri.YES

        if size ** w.dimension >= 2 ** 22:

            return Tri.UNKNOWN

        size *= 2

# zero-free on the closed polydisc: no zeros on T x closed D^(n-1) and none in one slice;
# the first condition is checked on sampled circle points, recursively
def _polydisc_zero_free( coeffs: np.ndarray, tol: config.Tolerances, samples: int = 64 ) -> bool:

    if coeffs.ndim == 1:

        if polynomials.is_zero( coeffs ):

            return False

        return bool( np.all( np.abs( polynomials.roots( coeffs ) ) > 1.0 + tol.zero ) )

    moduli = np.abs( coeffs ).reshape( -1 )

    if moduli[ 0 ] > moduli[ 1: ].sum():

        return True

    if not _polydisc_zero_free( coeffs.reshape( coeffs.shape[ 0 ], -1 ).sum( axis=1 ), tol ):

        return False

    nodes = np.exp( 2j * np.pi * np.arange( samples ) / samples )

    for node in nodes:

        powers = node ** np.arange( coeffs.shape[ 0 ] )

        if not _polydisc_zero_free( np.tensordot( powers, coeffs, axes=( 0, 0 ) ), tol, samples ):

            return False

    return True

# invertibility of w in the disc algebra, in C(T) and in H_inf
def invertibility_profile( w: Weight ) -> InvertibilityProfile:

    tol = config.get_tolerances()

    if isinstance( w, BoundarySamples ):

        return InvertibilityProfile(
            Tri.UNKNOWN, Tri.of( bool( np.abs( w.values ).min() > tol.inv ) ), Tri.UNKNOWN
        )

    if isinstance( w, MultiPolynomial ):

        if _polydisc_zero_free( w.coeffs, tol ):

            return InvertibilityProfile( Tri.YES, Tri.YES, Tri.YES )

        return InvertibilityProfile( Tri.NO, _torus_invertibility( w, tol ), Tri.NO )

    if isinstance( w, Taylor ):

        return _taylor_profile( w, tol )

    coeffs = numerator( w )

    if polynomials.is_zero( coeffs ):

        return InvertibilityProfile( Tri.NO, Tri.NO, Tri.NO )

    moduli = np.abs( polynomials.roots( coeffs ) )
    in_disc = Tri.of( bool( np.all( moduli > 1.0 + tol.zero ) ) )
    on_circle = Tri.of( bool( np.all( np.abs( moduli - 1.0 ) > tol.zero ) ) )

    return InvertibilityProfile( in_disc, on_circle, in_disc )

# Rouche: the partial sum and w have the same zeros in the disc once min|p| exceeds the tail
def _taylor_profile( w: Taylor, tol: config.Tolerances ) -> InvertibilityProfile:

    size = 4096
    moduli = np.abs( boundary_samples( w, size ) )
    lipschitz = float( np.sum( np.arange( w.coeffs.size ) * np.abs( w.coeffs ) ) )
    smallest = float( moduli.min() )

    if smallest - lipschitz * np.pi / size > w.tail_bound + tol.inv:

        boundary = Tri.YES

    elif smallest + w.tail_bound <= tol.inv:

        boundary = Tri.NO

    else:

        boundary = Tri.UNKNOWN

    if boundary is Tri.NO:

        return InvertibilityProfile( Tri.NO, Tri.NO, Tri.NO )

    if boundary is Tri.UNKNOWN:

        return InvertibilityProfile( Tri.UNKNOWN, Tri.UNKNOWN, Tri.UNKNOWN )

    zero_free = Tri.of( count_zeros( w ) == 0 )
    in_disc = zero_free if "disc_algebra" in w.tags else Tri.UNKNOWN

    return InvertibilityProfile( in_disc, boundary, zero_free )

# Blaschke and outer data of a polynomial or rational weight
def factorization_summary( w: Weight ) -> FactorizationSummary:

    if isinstance( w, MultiPolynomial ) or not w.is_rational:

        raise exceptions.PreconditionError( f"factorization needs a polynomial or rational weight, got { w.kind }" )

    coeffs = numerator( w )

    if polynomials.is_zero( coeffs ):

        raise exceptions.PreconditionError( "weight is identically zero" )

    tol = config.get_tolerances()
    inside: List[ Tuple[ complex, int ] ] = []
    on_circle: List[ Tuple[ complex, int ] ] = []

    for zero, multiplicity in polynomials.cluster( polynomials.roots( coeffs ), tol.cluster, coeffs ):

        distance = abs( abs( zero ) - 1.0 )

        if distance <= tol.zero:

            on_circle.append( ( zero, multiplicity ) )

        elif distance <= 10.0 * tol.zero:

            raise exceptions.PreconditionError(
                f"ambiguous boundary zero at { zero } ( distance { distance:.3g} from the unit circle )"
            )

        elif abs( zero ) < 1.0:

            inside.append( ( zero, multiplicity ) )

    return FactorizationSummary(
        zeros_in_disc=tuple( inside ),
        zeros_on_circle=tuple( on_circle ),
        blaschke_finite=True,
        outer_value_mod=geometric_mean( w, 1.0 ),
        singular_part_present=Tri.NO,
    )
