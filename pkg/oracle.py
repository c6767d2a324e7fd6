# import dependencies
from __future__ import annotations

import dataclasses
import logging
from typing import Callable, Iterable, Optional, Sequence

import numpy as np
import scipy.integrate
import scipy.linalg
import scipy.optimize
import scipy.special
from typing_extensions import Literal, Self

import exceptions # type: ignore
from angles import RotationAngle # type: ignore
from classify import classify # type: ignore
from ergodic import Verdict, ap_membership # type: ignore
from grid_types import new_grid, polar_points # type: ignore
from parallel import parallel_map # type: ignore
from set_kinds import SpectralSet # type: ignore
from spaces import BaseSpace # type: ignore
from weights import Polynomial, Weight, taylor_coefficients # type: ignore

logger = logging.getLogger( __name__ )

MAX_ORDER = 4096
MAX_LADDER = 10 ** 5
BLOCH_GRID = 512

NormTag = Literal[ "euclidean", "sum" ]

# +1: monomial norms grow with the degree, -1: they shrink
NORM_TRENDS = { "bergman": -1, "dirichlet": 1 }

# T = wU compressed to the first N normalized monomials
@dataclasses.dataclass( frozen=True )
class TruncationMatrix:

    matrix: np.ndarray # lower triangular, matrix[ n, k ] = alpha^k w_{n-k} nu_n / nu_k
    space_tag: str
    norm_tag: NormTag

    #
    @property
    def order( self ) -> int:

        return self.matrix.shape[ 0 ]

    # the eigenvalues, exactly alpha^k w(0)
    @property
    def diagonal( self ) -> np.ndarray:

        return np.diagonal( self.matrix ).copy()

    #
    def scaled( self, factor: complex ) -> Self:

        return dataclasses.replace( self, matrix=self.matrix * factor )

# resolvent gaps sampled on concentric circles
@dataclasses.dataclass( frozen=True )
class PseudospectrumGrid:

    points: np.ndarray # grid_dt records
    norm_tag: NormTag
    order: int

    #
    @property
    def gaps( self ) -> np.ndarray:

        return self.points[ "gap" ]

# scaled norms of the peak functions ( ( 1 + z ) / 2 )^m along a ladder of m
@dataclasses.dataclass( frozen=True )
class NormAsymptotics:

    space_tag: str
    ladder: np.ndarray
    scale_exponent: float # scaled = m^scale_exponent * norm
    scaled: np.ndarray # computed numerically
    reference: np.ndarray # the same quantity in closed form
    limit: float # value of the scaled norm as m -> infinity

    # relative change between the two largest ladder values
    @property
    def drift( self ) -> float:

        if self.scaled.size < 2:

            return 0.0

        return float( abs( self.scaled[ -1 ] / self.scaled[ -2 ] - 1.0 ) )

#
def _check_order( order: int ) -> int:

    if isinstance( order, bool ) or not isinstance( order, int ) or not 1 <= order <= MAX_ORDER:

        raise exceptions.PreconditionError( f"truncation order must be an integer in [1, { MAX_ORDER }], got { order!r}" )

    return order

# matrix of T = wU on span{ z^k / nu_k : k < N }
def build_truncation( space: BaseSpace, w: Weight, alpha: RotationAngle, order: int ) -> TruncationMatrix:

    _check_order( order )

    if space.norm_tag is None:

        raise exceptions.PreconditionError( f"{ space.variant } has no monomial matrix model" )

    if not isinstance( alpha, RotationAngle ):

        raise exceptions.PreconditionError( "the matrix model needs a scalar rotation angle" )

    coeffs = taylor_coefficients( w, order )
    norms = space.monomial_norms( order )
    trend = NORM_TRENDS.get( space.variant )

    if trend is not None and np.any( trend * np.diff( norms ) < 0.0 ):

        raise exceptions.NumericalFailure( f"monomial norms of { space.variant } are not monotone" )

    ratios = norms[ :, None ] / norms[ None, : ]
    matrix = scipy.linalg.toeplitz( coeffs, np.zeros( order, dtype=np.complex128 ) )
    powers = alpha.powers( order )
    matrix = np.tril( matrix * powers[ None, : ] * ratios )

    # diagonal alpha^k w(0), the same product point_spectrum_candidates forms
    np.fill_diagonal( matrix, coeffs[ 0 ] * powers )

    logger.debug( "built %s truncation of order %d", space.variant, order )

    return TruncationMatrix( matrix=matrix, space_tag=space.variant, norm_tag=space.norm_tag )

# 1 / || ( lam - T_N )^-1 ||, zero on the eigenvalues
def resolvent_gap( matrix: np.ndarray, lam: complex, norm_tag: NormTag ) -> float:

    shifted = lam * np.eye( matrix.shape[ 0 ] ) - matrix

    if np.any( np.diagonal( shifted ) == 0 ):

        return 0.0

    if norm_tag == "euclidean":

        return float( scipy.linalg.svdvals( shifted, check_finite=False )[ -1 ] )

    if norm_tag == "sum":

        # triangular, so the inverse comes from one forward substitution per column
        with np.errstate( over="ignore", invalid="ignore" ):

            inverse = scipy.linalg.solve_triangular( shifted, np.eye( matrix.shape[ 0 ] ), lower=True )
            column_sums = np.abs( inverse ).sum( axis=0 )

        if not np.all( np.isfinite( column_sums ) ):

            return 0.0

        return float( 1.0 / column_sums.max() )

    raise exceptions.PreconditionError( f"unknown norm tag '{ norm_tag }'" )

# resolvent gaps of T_N at angles points on each circle of the given radii
def pseudospectrum_scan(
    truncation: TruncationMatrix,
    radii: Sequence[ float ],
    angles: int,
    norm_tag: Optional[ NormTag ] = None,
    offset: float = 0.0,
) -> PseudospectrumGrid:

    norm_tag = norm_tag or truncation.norm_tag
    points = polar_points( radii, angles, offset )
    matrix = truncation.matrix

    logger.info( "scanning %d points at order %d ( %s norm )", points.size, truncation.order, norm_tag )

    gaps = parallel_map( lambda lam: resolvent_gap( matrix, complex( lam ), norm_tag ), list( points ) )

    return PseudospectrumGrid( points=new_grid( points, np.array( gaps ) ), norm_tag=norm_tag, order=truncation.order )

# numerical rank, singular values below N eps s_max count as zero
def truncation_rank( truncation: TruncationMatrix ) -> int:

    values = scipy.linalg.svdvals( truncation.matrix )

    if values[ 0 ] == 0.0:

        return 0

    threshold = truncation.order * np.finfo( np.float64 ).eps * values[ 0 ]
    kept = values[ values > threshold ]

    if kept[ -1 ] < 10.0 * threshold:

        raise exceptions.NumericalFailure(
            f"rank is indeterminate: singular value { kept[ -1 ]:.3g} lies within 10x of the threshold { threshold:.3g}"
        )

    return int( kept.size )

# the two sides of ( I - T ) S_n( T, eps ) = ( 1 - eps )^n I + eps sum_{j=1}^n ( 1 - eps )^( n - j ) T^j
#   - eps sum_{j=1}^n ( 1 - eps )^( j - 1 ) T^( n + j ) - ( 1 - eps )^n T^( 2n + 1 )
def check_smoothing_identity( matrix: np.ndarray, eps: float, n: int ) -> float:

    if not 0.0 < eps < 1.0:

        raise exceptions.PreconditionError( f"smoothing parameter must lie in (0, 1), got { eps }" )

    if n < 1:

        raise exceptions.PreconditionError( "smoothing length must be positive" )

    size = matrix.shape[ 0 ]
    keep = 1.0 - eps
    powers = [ np.eye( size, dtype=np.complex128 ) ]

    for _ in range( 2 * n + 1 ):

        powers.append( powers[ -1 ] @ matrix )

    smoothing = sum( keep ** abs( j - n ) * powers[ j ] for j in range( 2 * n + 1 ) )
    left = ( powers[ 0 ] - matrix ) @ smoothing

    right = keep ** n * powers[ 0 ] - keep ** n * powers[ 2 * n + 1 ]
    right = right + eps * sum( keep ** ( n - j ) * powers[ j ] for j in range( 1, n + 1 ) )
    right = right - eps * sum( keep ** ( j - 1 ) * powers[ n + j ] for j in range( 1, n + 1 ) )

    return float( np.abs( left - right ).max() )

#
def _vector_norm( vector: np.ndarray, norm_tag: str ) -> float:

    if norm_tag == "sum":

        return float( np.abs( vector ).sum() )

    return float( np.linalg.norm( vector ) )

# Taylor coefficients of ( ( z + k ) / 2 )^n, computed in log domain
def peak_coefficients( k: complex, n: int ) -> np.ndarray:

    j = np.arange( n + 1 )
    log_binomial = scipy.special.gammaln( n + 1 ) - scipy.special.gammaln( j + 1 ) - scipy.special.gammaln( n - j + 1 )

    return np.exp( log_binomial - n * np.log( 2.0 ) ) * np.exp( 1j * np.angle( k ) * ( n - j ) )

# || T G - lam G || / || G || for G = S_m( T, 1 / sqrt( m ) ) U^-m Q_n / w_m( k ),
# Q_n a peak function at an orbit witness k
def singular_sequence_residual(
    space: BaseSpace,
    w: Weight,
    alpha: RotationAngle,
    lam: complex,
    m: int,
    n: int = 400,
    grid_size: int = 4096,
) -> float:

    if m < 1 or n < 1:

        raise exceptions.PreconditionError( "smoothing length and peak exponent must be positive" )

    if not isinstance( w, Polynomial ):

        raise exceptions.PreconditionError( "singular sequences are built for polynomial weights only" )

    predicted = classify( space, w, alpha )[ SpectralSet.SIGMA_AP ]

    if not predicted.is_exact or not predicted.value.contains( lam ):

        raise exceptions.PreconditionError( f"lambda = { lam } is not in the predicted approximate point spectrum" )

    membership = ap_membership( w, alpha, lam, n_max=m, grid_size=grid_size )

    if membership.verdict is not Verdict.CERTIFIED_IN or membership.witness is None:

        raise exceptions.PreconditionError(
            f"no orbit witness for lambda = { lam } ( verdict { membership.verdict.value } )"
        )

    k = membership.witness
    orbit_product = complex( np.prod( w.evaluate( alpha.orbit( k, m ) ) ) )

    if orbit_product == 0:

        raise exceptions.NumericalFailure( f"the weight vanishes on the orbit of the witness { k }" )

    order = n + ( 2 * m + 1 ) * w.degree + 1
    truncation = build_truncation( space, w, alpha, order ).scaled( 1.0 / lam )
    norms = space.monomial_norms( order )

    degrees = np.arange( n + 1 )
    vector = np.zeros( order, dtype=np.complex128 )
    vector[ : n + 1 ] = peak_coefficients( k, n ) * norms[ : n + 1 ]
    vector[ : n + 1 ] *= np.exp( -2j * np.pi * np.mod( m * degrees * alpha.turns, 1.0 ) ) / orbit_product
    vector /= _vector_norm( vector, truncation.norm_tag )

    keep = 1.0 - 1.0 / np.sqrt( m )
    smoothed = np.zeros( order, dtype=np.complex128 )

    for j in range( 2 * m + 1 ):

        smoothed += keep ** abs( j - m ) * vector
        vector = truncation.matrix @ vector

    residual = truncation.matrix @ smoothed - smoothed
    value = abs( lam ) * _vector_norm( residual, truncation.norm_tag ) / _vector_norm( smoothed, truncation.norm_tag )

    logger.info( "singular sequence residual %.3e at m = %d, n = %d, witness %s", value, m, n, k )

    return value

# log || ( ( 1 + z ) / 2 )^m ||^p in the Bergman space A^p of the disc
def bergman_peak_log_norm( m: int, p: float = 2.0, method: str = "closed_form" ) -> float:

    a = m * p + 2.0

    # centred at -1 the disc is rho < 2 cos phi, which leaves 4 / ( mp + 2 ) times the integral of cos^a
    if method == "closed_form":

        return float(
            np.log( 4.0 * np.sqrt( np.pi ) ) + scipy.special.gammaln( ( a + 1.0 ) / 2.0 )
            - scipy.special.gammaln( a / 2.0 + 1.0 ) - np.log( m * p + 2.0 )
        )

    if method == "series":

        if p != 2.0:

            raise exceptions.PreconditionError( "the monomial series norm needs p = 2" )

        j = np.arange( m + 1 )
        log_binomial = scipy.special.gammaln( m + 1 ) - scipy.special.gammaln( j + 1 ) - scipy.special.gammaln( m - j + 1 )

        return float(
            np.log( np.pi ) - m * np.log( 4.0 ) + scipy.special.logsumexp( 2.0 * log_binomial - np.log( j + 1.0 ) )
        )

    if method == "quadrature":

        upper = min( np.pi / 2.0, 40.0 / np.sqrt( a ) )
        value, error = scipy.integrate.quad(
            lambda phi: np.exp( a * np.log( np.cos( phi ) ) ), 0.0, upper, epsabs=0.0, epsrel=1e-12, limit=200
        )

        if not value > 0.0 or error > 1e-8 * value:

            raise exceptions.NumericalFailure( f"Bergman norm quadrature did not converge at m = { m }" )

        return float( np.log( 4.0 / ( m * p + 2.0 ) ) + np.log( 2.0 * value ) )

    raise exceptions.PreconditionError( f"unknown method '{ method }'" )

# Bloch norm of ( ( 1 + z ) / 2 )^m; the supremum of ( 1 - x^2 ) q_m'( x ) sits at x = ( m - 1 ) / ( m + 1 )
def bloch_peak_norm_closed_form( m: int ) -> float:

    ratio = m / ( m + 1.0 )
    seminorm = 2.0 * ratio ** 2 * np.exp( ( m - 1 ) * np.log( ratio ) )

    return float( seminorm + 2.0 ** -m )

# sup of ( 1 - r^2 ) | x'( r e^it ) | from a log-modulus of x', grid search then L-BFGS-B polish;
# r = 1 - exp( -s ) so the grid resolves peaks close to the circle
def bloch_seminorm( log_derivative: Callable[ [ np.ndarray, np.ndarray ], np.ndarray ], depth: float ) -> float:

    s = np.linspace( 0.0, depth, BLOCH_GRID )
    t = np.linspace( -np.pi, np.pi, BLOCH_GRID, endpoint=False )
    ss, tt = np.meshgrid( s, t, indexing="ij" )

    #
    def objective( s_value: np.ndarray, t_value: np.ndarray ) -> np.ndarray:

        r = 1.0 - np.exp( -s_value )

        return -s_value + np.log( 2.0 - np.exp( -s_value ) ) + log_derivative( r, t_value )

    values = objective( ss, tt )
    best = np.unravel_index( np.argmax( values ), values.shape )
    start = np.array( [ ss[ best ], tt[ best ] ] )

    polished = scipy.optimize.minimize(
        lambda x: -float( objective( x[ 0 ], x[ 1 ] ) ),
        start,
        method="L-BFGS-B",
        bounds=[ ( 0.0, depth ), ( -np.pi, np.pi ) ],
    )
    top = max( float( values[ best ] ), -float( polished.fun ) )

    logger.debug( "Bloch sup: grid %.12g, polished %.12g", float( values[ best ] ), -float( polished.fun ) )

    return float( np.exp( top ) )

#
def bloch_peak_norm( m: int ) -> float:

    #
    def log_derivative( r: np.ndarray, t: np.ndarray ) -> np.ndarray:

        with np.errstate( divide="ignore" ):

            return np.log( m / 2.0 ) + ( m - 1 ) * np.log( np.abs( 1.0 + r * np.exp( 1j * t ) ) / 2.0 )

    return 2.0 ** -m + bloch_seminorm( log_derivative, depth=2.0 * np.log( m + 2.0 ) + 5.0 )

# scaled norms of q_m = ( ( 1 + z ) / 2 )^m: m^{3/2} ||q_m||^p for Bergman, ||q_m|| for Bloch
def norm_asymptotics( space: BaseSpace, ladder: Iterable[ int ] ) -> NormAsymptotics:

    ladder = np.asarray( sorted( set( int( m ) for m in ladder ) ), dtype=np.int64 )

    if ladder.size == 0 or ladder[ 0 ] < 1 or ladder[ -1 ] > MAX_LADDER:

        raise exceptions.PreconditionError( f"ladder values must lie in [1, { MAX_LADDER }]" )

    if space.variant == "bergman":

        p = space.p # type: ignore
        method = "series" if p == 2.0 else "quadrature"
        computed = np.array( [ bergman_peak_log_norm( int( m ), p, method ) for m in ladder ] )
        reference = np.array( [ bergman_peak_log_norm( int( m ), p, "closed_form" ) for m in ladder ] )
        growth = 1.5 * np.log( ladder )

        return NormAsymptotics(
            space_tag=space.variant,
            ladder=ladder,
            scale_exponent=1.5,
            scaled=np.exp( computed + growth ),
            reference=np.exp( reference + growth ),
            limit=float( 4.0 * np.sqrt( 2.0 * np.pi ) / p ** 1.5 ),
        )

    if space.variant == "bloch":

        return NormAsymptotics(
            space_tag=space.variant,
            ladder=ladder,
            scale_exponent=0.0,
            scaled=np.array( [ bloch_peak_norm( int( m ) ) for m in ladder ] ),
            reference=np.array( [ bloch_peak_norm_closed_form( int( m ) ) for m in ladder ] ),
            limit=float( 2.0 / np.e ),
        )

    raise exceptions.PreconditionError( f"no peak-function asymptotics for { space.variant }" )
