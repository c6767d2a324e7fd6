# import dependencies
from __future__ import annotations

import dataclasses
import logging
from enum import Enum
from typing import Iterable, Optional, Tuple, Union

import numpy as np
import scipy.optimize

import config  # type: ignore
import exceptions  # type: ignore
import polynomials  # type: ignore
from analysis import geometric_mean, torus_geometric_mean  # type: ignore
from angles import RootOfUnity, Rotation, RotationAngle, RotationVector  # type: ignore
from parallel import index_blocks, parallel_map  # type: ignore
from weights import BoundarySamples, MultiPolynomial, Polynomial, Weight  # type: ignore

logger = logging.getLogger( __name__ )

MAX_HORIZON = 10 ** 6
COSET_GRID = 2 ** 14

# log|w_n| along the forward and backward orbit of one base point, n = 1 ... n_max
@dataclasses.dataclass( frozen=True )
class OrbitProduct:

    base_point: Union[ complex, Tuple[ complex, ... ] ]
    n_max: int
    forward_log: np.ndarray # ln|w_n(k)|
    backward_log: np.ndarray # ln|w_n(phi^-n(k))|

    #
    @property
    def forward_mods( self ) -> np.ndarray:

        return np.exp( self.forward_log )

    #
    @property
    def backward_mods( self ) -> np.ndarray:

        return np.exp( self.backward_log )

#
class Verdict( Enum ):

    CERTIFIED_IN = "certified_in"
    CERTIFIED_OUT = "certified_out"
    INCONCLUSIVE = "inconclusive"

# outcome of the orbit test for approximate point spectrum membership
@dataclasses.dataclass( frozen=True )
class MembershipVerdict:

    verdict: Verdict
    witness: Optional[ complex ]
    margin: float # best min-over-n log slack, divided by the horizon

# log|w| at points, an exact zero gives -inf
def _log_modulus( w: Weight, points: np.ndarray ) -> np.ndarray:

    with np.errstate( divide="ignore" ):

        return np.log( np.abs( w.evaluate( points ) ) )

# forward and backward orbit points alpha^j k, j = 0 ... n-1 and alpha^-i k, i = 1 ... n
def _orbits( alpha: Rotation, base, n_max: int ) -> Tuple[ np.ndarray, np.ndarray ]:

    forward = alpha.orbit( base, n_max )
    backward = alpha.orbit( base, n_max, start=-n_max )

    if isinstance( alpha, RotationVector ):

        return forward, backward[ ::-1 ]

    return forward, backward[ ..., ::-1 ]

# cumulative orbit products in log domain
def orbit_products( w: Weight, alpha: Rotation, base_point, n_max: int ) -> OrbitProduct:

    if not 1 <= n_max <= MAX_HORIZON:

        raise exceptions.PreconditionError( f"orbit horizon must lie in [1, { MAX_HORIZON }], got { n_max }" )

    if isinstance( alpha, RotationVector ) != isinstance( w, MultiPolynomial ):

        raise exceptions.PreconditionError( "torus rotations need a weight in several variables and vice versa" )

    if isinstance( alpha, RotationVector ):

        base_point = tuple( complex( point ) for point in base_point )

    else:

        base_point = complex( base_point )

    forward, backward = _orbits( alpha, base_point, n_max )

    return OrbitProduct(
        base_point=base_point,
        n_max=n_max,
        forward_log=np.cumsum( _log_modulus( w, forward ) ),
        backward_log=np.cumsum( _log_modulus( w, backward ) ),
    )

# per base point: worst forward slack and worst backward excess over the horizon
def _scan_grid(
    w: Weight, alpha: RotationAngle, log_modulus: float, n_max: int, grid_size: int
) -> Tuple[ np.ndarray, np.ndarray, np.ndarray ]:

    base = np.exp( 2j * np.pi * np.arange( grid_size ) / grid_size )
    growth = log_modulus * np.arange( 1, n_max + 1 )

    #
    def block( index: np.ndarray ) -> Tuple[ np.ndarray, np.ndarray ]:

        forward, backward = _orbits( alpha, base[ index ], n_max )
        forward_slack = ( np.cumsum( _log_modulus( w, forward ), axis=1 ) - growth ).min( axis=1 )
        backward_excess = ( np.cumsum( _log_modulus( w, backward ), axis=1 ) - growth ).max( axis=1 )

        return forward_slack, backward_excess

    parts = parallel_map( block, index_blocks( grid_size, block=256 ) )

    return base, np.concatenate( [ p[ 0 ] for p in parts ] ), np.concatenate( [ p[ 1 ] for p in parts ] )

#
def _grid_verdict(
    w: Weight, alpha: RotationAngle, log_modulus: float, n_max: int, grid_size: int, tol_ap: float
) -> MembershipVerdict:

    base, forward_slack, backward_excess = _scan_grid( w, alpha, log_modulus, n_max, grid_size )
    score = np.minimum( forward_slack, -backward_excess )
    best = int( np.argmax( score ) )
    margin = float( score[ best ] ) / n_max

    if score[ best ] >= -tol_ap:

        return MembershipVerdict( Verdict.CERTIFIED_IN, complex( base[ best ] ), margin )

    # a point is out once one inequality fails by more than tol_ap beyond the tolerance itself
    violated = ( forward_slack < -2.0 * tol_ap ) | ( backward_excess > 2.0 * tol_ap )

    if np.all( violated ):

        return MembershipVerdict( Verdict.CERTIFIED_OUT, None, margin )

    return MembershipVerdict( Verdict.INCONCLUSIVE, None, margin )

# orbit test for lambda in the approximate point spectrum; only |lambda| matters
def ap_membership(
    w: Weight, alpha: Rotation, lam: complex, n_max: int = 200, grid_size: int = 4096
) -> MembershipVerdict:

    if lam == 0:

        raise exceptions.PreconditionError( "the orbit test needs lambda != 0" )

    if not isinstance( alpha, RotationAngle ) or isinstance( w, MultiPolynomial ):

        raise exceptions.PreconditionError( "the orbit test runs on the circle only" )

    if alpha.is_periodic:

        raise exceptions.PreconditionError( "the orbit test needs a non-periodic rotation" )

    if not 1 <= n_max <= MAX_HORIZON or grid_size < 1:

        raise exceptions.PreconditionError( "horizon and grid size must be positive" )

    tol_ap = n_max * config.get_tolerances().ap_per_step
    log_modulus = float( np.log( abs( lam ) ) )
    coarse = _grid_verdict( w, alpha, log_modulus, n_max, grid_size, tol_ap )
    fine = _grid_verdict( w, alpha, log_modulus, n_max, 2 * grid_size, tol_ap )

    if coarse.verdict is not fine.verdict:

        logger.info( "orbit verdict changes between grids %d and %d", grid_size, 2 * grid_size )

        return MembershipVerdict( Verdict.INCONCLUSIVE, None, coarse.margin )

    return coarse

# mean of log|w| over the cosets t H of the finite group H of q-th roots of unity
def _coset_log_profile( w: Weight, roots: np.ndarray, theta: np.ndarray ) -> np.ndarray:

    points = np.multiply.outer( np.exp( 1j * theta ), roots )

    return _log_modulus( w, points ).mean( axis=1 )

# max over cosets of the coset geometric mean, grid scan then a local polish
def _coset_radius( w: Weight, alpha: RootOfUnity ) -> float:

    roots = alpha.powers( alpha.q )
    period = 2.0 * np.pi / alpha.q
    theta = period * np.arange( COSET_GRID ) / COSET_GRID
    values = np.concatenate(
        parallel_map( lambda index: _coset_log_profile( w, roots, theta[ index ] ), index_blocks( COSET_GRID ) )
    )
    best = int( np.argmax( values ) )

    if not np.isfinite( values[ best ] ):

        return 0.0

    step = period / COSET_GRID
    centre = float( theta[ best ] )

    #
    def objective( x: float ) -> float:

        value = float( _coset_log_profile( w, roots, np.array( [ x ] ) )[ 0 ] )

        return -value if np.isfinite( value ) else np.inf

    try:

        result = scipy.optimize.minimize_scalar(
            objective, bracket=( centre - step, centre, centre + step ), method="golden", tol=1e-12
        )

    except ValueError:

        # the grid maximum is flat, fall back to a bounded search on the best cell
        result = scipy.optimize.minimize_scalar(
            objective, bounds=( centre - step, centre + step ), method="bounded", options={ "xatol": 1e-12 }
        )

    logger.debug( "coset radius grid %.17g, polished %.17g", values[ best ], -result.fun )

    return float( np.exp( max( float( values[ best ] ), -float( result.fun ) ) ) )

# spectral radius of wU from the Haar measure of the closed subgroup generated by the rotation
def group_rotation_radius( w: Weight, alpha: Rotation ) -> float:

    if isinstance( alpha, RotationVector ):

        if alpha.relations:

            raise exceptions.PreconditionError( "rotations with a nonempty relation lattice are not supported" )

        if alpha.is_periodic:

            raise exceptions.PreconditionError( "torus radius needs every rotation component non-periodic" )

        if isinstance( w, Polynomial ):

            w = MultiPolynomial.lift( w, alpha.dimension )

        if not isinstance( w, MultiPolynomial ) or w.dimension != alpha.dimension:

            raise exceptions.PreconditionError( "weight and rotation vector must have the same number of variables" )

        return torus_geometric_mean( w )

    if isinstance( w, MultiPolynomial ):

        raise exceptions.PreconditionError( "a weight in several variables needs a rotation vector" )

    if isinstance( w, BoundarySamples ) and "riemann_integrable" not in w.tags:

        raise exceptions.PreconditionError( "sampled weights need the declared tag 'riemann_integrable' ( or 'continuous' )" )

    if isinstance( alpha, RootOfUnity ):

        return _coset_radius( w, alpha )

    if alpha.is_periodic:

        raise exceptions.PreconditionError( "raw angle not asserted non-periodic, the subgroup is undetermined" )

    return geometric_mean( w, 1.0 )

# radius of a polynomial weight from its root moduli: the product of the moduli
# outside the unit circle, roots inside contribute a factor rho(A) = 1 each
def polynomial_radius_cases( root_moduli: Iterable[ float ], leading_modulus: float = 1.0 ) -> float:

    moduli = np.asarray( list( root_moduli ), dtype=np.float64 )
    tol = config.get_tolerances().zero

    if np.any( np.abs( moduli - 1.0 ) <= tol ):

        raise exceptions.PreconditionError( "weight not invertible: a root lies on the unit circle" )

    # a root inside the circle contributes rho( A ) = 1, so only the roots outside count
    return leading_modulus * float( np.prod( moduli[ moduli > 1.0 ] ) )

# radius of a polynomial weight; other representations are rejected by type
def polynomial_radius( w: Polynomial ) -> float:

    if not isinstance( w, Polynomial ):

        raise TypeError( f"polynomial_radius needs a Polynomial weight, got { type( w ).__name__ }" )

    return polynomial_radius_cases( np.abs( polynomials.roots( w.coeffs ) ), abs( w.leading ) )
