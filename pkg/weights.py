# import dependencies
from __future__ import annotations

import logging
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

import numpy as np
import scipy.signal

import config  # type: ignore
import exceptions  # type: ignore
import polynomials  # type: ignore

logger = logging.getLogger( __name__ )

# declared regularity of the boundary function, the only tags boundary samples may carry
BOUNDARY_TAGS: FrozenSet[ str ] = frozenset( { "continuous", "riemann_integrable" } )

# declared memberships a weight may carry
TAGS: FrozenSet[ str ] = frozenset(
    { "disc_algebra", "H_inf", "multiplier_Bloch", "multiplier_Dirichlet", "ell1A", "Lambda_class" }
) | BOUNDARY_TAGS

# tag -> tags it implies (inclusions of the corresponding function classes)
IMPLIED: Dict[ str, FrozenSet[ str ] ] = {
    "Lambda_class": frozenset( { "ell1A" } ),
    "ell1A": frozenset( { "disc_algebra" } ),
    "disc_algebra": frozenset( { "H_inf" } ),
    "multiplier_Bloch": frozenset( { "H_inf" } ),
    "multiplier_Dirichlet": frozenset( { "H_inf" } ),
    "continuous": frozenset( { "riemann_integrable" } ),
}

# close a tag set under the implications above
def close_tags( tags: Iterable[ str ] ) -> FrozenSet[ str ]:

    closed = set( tags )
    unknown = closed - TAGS

    if unknown:

        raise exceptions.MalformedInput( f"unknown regularity tags { sorted( unknown ) }" )

    frontier = list( closed )

    while frontier:

        for implied in IMPLIED.get( frontier.pop(), frozenset() ):

            if implied not in closed:

                closed.add( implied )
                frontier.append( implied )

    return frozenset( closed )

# generic multiplier w, immutable after construction
class Weight:

    kind = "<abstract>"

    def __init__( self, tags: Iterable[ str ] = () ) -> None:

        self._tags = close_tags( tags )

    #
    @property
    def tags( self ) -> FrozenSet[ str ]:

        return self._tags

    # analytic data inside the disc is available ( Taylor data or a closed form )
    @property
    def is_analytic( self ) -> bool:

        return True

    # exact closed form ( polynomial or rational )
    @property
    def is_rational( self ) -> bool:

        return False

    # a constant weight
    @property
    def is_constant( self ) -> bool:

        return False

    #
    @property
    def dimension( self ) -> int:

        return 1

    # values at points of the closed disc
    def evaluate( self, z: np.ndarray ) -> np.ndarray:

        raise NotImplementedError()

    #
    def to_dict( self ) -> Dict[ str, Any ]:

        raise NotImplementedError()

# w = c_0 + c_1 z + ... + c_d z^d
class Polynomial( Weight ):

    kind = "poly"

    def __init__( self, coeffs: Iterable[ complex ] ) -> None:

        super().__init__( TAGS )
        self.coeffs = polynomials.trim( np.asarray( list( coeffs ), dtype=np.complex128 ) )
        self.coeffs.setflags( write=False )

    @property
    def is_rational( self ) -> bool:

        return True

    @property
    def is_constant( self ) -> bool:

        return self.coeffs.size == 1

    #
    @property
    def degree( self ) -> int:

        return self.coeffs.size - 1

    #
    @property
    def leading( self ) -> complex:

        return complex( self.coeffs[ -1 ] )

    def evaluate( self, z: np.ndarray ) -> np.ndarray:

        return polynomials.evaluate( self.coeffs, z )

    # product of two polynomial weights
    def __mul__( self, other: Polynomial ) -> Polynomial:

        return Polynomial( np.convolve( self.coeffs, other.coeffs ) )

    def to_dict( self ) -> Dict[ str, Any ]:

        return { "type": "poly", "coeffs": _encode_complex( self.coeffs ) }

    def __repr__( self ) -> str:

        return f"Polynomial({ self.coeffs.tolist() })"

# w = num / den with den zero-free on the closed disc, normalized so den(0) = 1
class Rational( Weight ):

    kind = "rational"

    def __init__( self, num: Iterable[ complex ], den: Iterable[ complex ] ) -> None:

        super().__init__( TAGS )
        num_arr = polynomials.trim( np.asarray( list( num ), dtype=np.complex128 ) )
        den_arr = polynomials.trim( np.asarray( list( den ), dtype=np.complex128 ) )

        if polynomials.is_zero( den_arr ):

            raise exceptions.MalformedInput( "rational weight has a zero denominator" )

        tol = config.get_tolerances().zero
        poles = polynomials.roots( den_arr )
        inside = poles[ np.abs( poles ) <= 1.0 + tol ]

        if inside.size:

            raise exceptions.PreconditionError(
                f"rational weight has a pole in the closed unit disc at { complex( inside[ 0 ] ) }"
            )

        scale = den_arr[ 0 ]
        self.num = num_arr / scale
        self.den = den_arr / scale
        self.num.setflags( write=False )
        self.den.setflags( write=False )

    @property
    def is_rational( self ) -> bool:

        return True

    @property
    def is_constant( self ) -> bool:

        return self.num.size == 1 and self.den.size == 1

    def evaluate( self, z: np.ndarray ) -> np.ndarray:

        return polynomials.evaluate( self.num, z ) / polynomials.evaluate( self.den, z )

    def to_dict( self ) -> Dict[ str, Any ]:

        return { "type": "rational", "num": _encode_complex( self.num ), "den": _encode_complex( self.den ) }

    def __repr__( self ) -> str:

        return f"Rational({ self.num.tolist() }, { self.den.tolist() })"

# finitely many Taylor coefficients plus a bound on the sum of the moduli of the rest,
# so the partial sum is within tail_bound of w on the closed disc
class Taylor( Weight ):

    kind = "taylor"

    def __init__( self, coeffs: Iterable[ complex ], tail_bound: float, tags: Iterable[ str ] = () ) -> None:

        super().__init__( tags )
        self.coeffs = np.asarray( list( coeffs ), dtype=np.complex128 )

        if self.coeffs.size == 0:

            raise exceptions.MalformedInput( "taylor weight needs at least one coefficient" )

        if not np.isfinite( tail_bound ) or tail_bound < 0:

            raise exceptions.MalformedInput( "taylor tail bound must be a nonnegative finite number" )

        self.tail_bound = float( tail_bound )
        self.coeffs.setflags( write=False )

    @property
    def is_constant( self ) -> bool:

        return self.tail_bound == 0.0 and not np.any( self.coeffs[ 1: ] )

    # value of the partial sum, an approximation within tail_bound
    def evaluate( self, z: np.ndarray ) -> np.ndarray:

        return polynomials.evaluate( self.coeffs, z )

    # sum of coefficient moduli plus the tail, the l1 norm bound
    @property
    def l1_bound( self ) -> float:

        return float( np.sum( np.abs( self.coeffs ) ) + self.tail_bound )

    def to_dict( self ) -> Dict[ str, Any ]:

        return {
            "type": "taylor",
            "coeffs": _encode_complex( self.coeffs ),
            "tail_bound": self.tail_bound,
            "tags": sorted( self.tags ),
        }

# boundary values on a uniform grid of the unit circle, no data inside the disc
class BoundarySamples( Weight ):

    kind = "samples"

    def __init__( self, values: Iterable[ complex ], tags: Iterable[ str ] = () ) -> None:

        super().__init__( tags )
        self.values = np.asarray( list( values ), dtype=np.complex128 )
        size = self.values.size

        if size < 64 or size & ( size - 1 ):

            raise exceptions.MalformedInput( f"boundary sample grid must be a power of two >= 64, got { size }" )

        self.values.setflags( write=False )

    @property
    def is_analytic( self ) -> bool:

        return False

    @property
    def grid_size( self ) -> int:

        return self.values.size

    # periodic linear interpolation in the angle; radius is ignored
    def evaluate( self, z: np.ndarray ) -> np.ndarray:

        size = self.grid_size
        position = np.mod( np.angle( np.asarray( z, dtype=np.complex128 ) ) / ( 2.0 * np.pi ), 1.0 ) * size

        return self.at_positions( position )

    # interpolate at fractional grid positions in [0, size)
    def at_positions( self, position: np.ndarray ) -> np.ndarray:

        size = self.grid_size
        lower = np.floor( position ).astype( np.int64 ) % size
        frac = position - np.floor( position )
        upper = ( lower + 1 ) % size

        return self.values[ lower ] * ( 1.0 - frac ) + self.values[ upper ] * frac

    def to_dict( self ) -> Dict[ str, Any ]:

        return { "type": "samples", "values": _encode_complex( self.values ), "tags": sorted( self.tags ) }

# polynomial in several variables, coefficient tensor indexed by exponents
class MultiPolynomial( Weight ):

    kind = "multipoly"

    def __init__( self, coeffs: np.ndarray ) -> None:

        super().__init__( TAGS )
        self.coeffs = np.array( coeffs, dtype=np.complex128 )

        if self.coeffs.ndim < 1:

            raise exceptions.MalformedInput( "multipolynomial needs at least one variable" )

        self.coeffs.setflags( write=False )

    # a one-variable polynomial viewed as a function of the first of dim variables
    @classmethod
    def lift( cls, weight: Polynomial, dim: int ) -> MultiPolynomial:

        tensor = np.zeros( ( weight.coeffs.size, ) + ( 1, ) * ( dim - 1 ), dtype=np.complex128 )
        tensor.reshape( -1 )[ : weight.coeffs.size ] = weight.coeffs

        return cls( tensor )

    @property
    def is_rational( self ) -> bool:

        return True

    @property
    def is_constant( self ) -> bool:

        return not np.any( self.coeffs.reshape( -1 )[ 1: ] )

    @property
    def dimension( self ) -> int:

        return self.coeffs.ndim

    # value at the origin
    @property
    def constant( self ) -> complex:

        return complex( self.coeffs[ ( 0, ) * self.dimension ] )

    # exponent rows and matching coefficients of the nonzero terms
    def terms( self ) -> Tuple[ np.ndarray, np.ndarray ]:

        exponents = np.argwhere( self.coeffs != 0 )

        return exponents, self.coeffs[ tuple( exponents.T ) ]

    # points has shape ( ..., dimension )
    def evaluate( self, z: np.ndarray ) -> np.ndarray:

        points = np.asarray( z, dtype=np.complex128 )

        if points.shape[ -1 ] != self.dimension:

            raise exceptions.PreconditionError(
                f"expected points with { self.dimension } coordinates, got shape { points.shape }"
            )

        exponents, values = self.terms()
        total = np.zeros( points.shape[ :-1 ], dtype=np.complex128 )

        for exponent, coeff in zip( exponents, values ):

            total = total + coeff * np.prod( points ** exponent, axis=-1 )

        return total

    def to_dict( self ) -> Dict[ str, Any ]:

        exponents, values = self.terms()

        return {
            "type": "multipoly",
            "dim": self.dimension,
            "terms": [
                { "power": [ int( e ) for e in exponent ], "coeff": [ float( v.real ), float( v.imag ) ] }
                for exponent, v in zip( exponents, values )
            ],
        }

#
def _encode_complex( values: np.ndarray ) -> List[ List[ float ] ]:

    return [ [ float( v.real ), float( v.imag ) ] for v in np.asarray( values ) ]

# complex numbers are written as [re, im] pairs
def _decode_complex( raw: Any, field: str ) -> np.ndarray:

    if not isinstance( raw, list ) or not raw:

        raise exceptions.MalformedInput( f"weight field '{ field }' must be a nonempty list of [re, im] pairs" )

    decoded = []

    for pair in raw:

        if (
            not isinstance( pair, list )
            or len( pair ) != 2
            or not all( isinstance( x, ( int, float ) ) and not isinstance( x, bool ) for x in pair )
        ):

            raise exceptions.MalformedInput( f"weight field '{ field }' has an entry that is not an [re, im] pair" )

        decoded.append( complex( pair[ 0 ], pair[ 1 ] ) )

    values = np.asarray( decoded, dtype=np.complex128 )

    if not np.all( np.isfinite( values ) ):

        raise exceptions.MalformedInput( f"weight field '{ field }' contains non-finite numbers" )

    return values

#
def _declared_tags( document: Mapping[ str, Any ] ) -> List[ str ]:

    tags = document.get( "tags", [] )

    if not isinstance( tags, list ) or not all( isinstance( tag, str ) for tag in tags ):

        raise exceptions.MalformedInput( "'tags' must be a list of strings" )

    return tags

#
def _parse_multipoly( document: Mapping[ str, Any ] ) -> MultiPolynomial:

    dim = document.get( "dim" )
    terms = document.get( "terms" )

    if isinstance( dim, bool ) or not isinstance( dim, int ) or dim < 1:

        raise exceptions.MalformedInput( "multipoly weight needs a positive integer 'dim'" )

    if not isinstance( terms, list ) or not terms:

        raise exceptions.MalformedInput( "multipoly weight needs a nonempty 'terms' list" )

    powers: List[ Tuple[ int, ... ] ] = []
    values: List[ complex ] = []

    for term in terms:

        power = term.get( "power" ) if isinstance( term, Mapping ) else None

        if (
            not isinstance( power, list )
            or len( power ) != dim
            or not all( isinstance( e, int ) and not isinstance( e, bool ) and e >= 0 for e in power )
        ):

            raise exceptions.MalformedInput( f"multipoly term powers must be { dim } nonnegative integers" )

        powers.append( tuple( power ) )
        values.append( complex( _decode_complex( [ term.get( "coeff" ) ], "coeff" )[ 0 ] ) )

    shape = tuple( max( p[ axis ] for p in powers ) + 1 for axis in range( dim ) )
    tensor = np.zeros( shape, dtype=np.complex128 )

    for power, value in zip( powers, values ):

        tensor[ power ] += value

    return MultiPolynomial( tensor )

# build a validated weight from the "weight" section of a job document
def parse_weight( document: Any ) -> Weight:

    if not isinstance( document, Mapping ) or "type" not in document:

        raise exceptions.MalformedInput( "weight must be an object with a 'type' field" )

    kind = document[ "type" ]

    if kind == "poly":

        return Polynomial( _decode_complex( document.get( "coeffs" ), "coeffs" ) )

    if kind == "rational":

        return Rational(
            _decode_complex( document.get( "num" ), "num" ),
            _decode_complex( document.get( "den" ), "den" ),
        )

    if kind == "taylor":

        tail = document.get( "tail_bound", 0.0 )

        if isinstance( tail, bool ) or not isinstance( tail, ( int, float ) ):

            raise exceptions.MalformedInput( "'tail_bound' must be a number" )

        return Taylor( _decode_complex( document.get( "coeffs" ), "coeffs" ), float( tail ), _declared_tags( document ) )

    if kind == "samples":

        tags = _declared_tags( document )
        analytic = sorted( set( tags ) - BOUNDARY_TAGS )

        if analytic:

            raise exceptions.MalformedInput(
                f"inconsistent tags { analytic }: boundary samples carry no analytic continuation data, "
                f"only { sorted( BOUNDARY_TAGS ) } may be declared"
            )

        return BoundarySamples( _decode_complex( document.get( "values" ), "values" ), tags )

    if kind == "multipoly":

        return _parse_multipoly( document )

    raise exceptions.MalformedInput( f"unknown weight type '{ kind }'" )

# the first count Taylor coefficients at 0
def taylor_coefficients( w: Weight, count: int ) -> np.ndarray:

    if count < 1:

        raise exceptions.PreconditionError( "coefficient count must be positive" )

    if isinstance( w, Polynomial ) or isinstance( w, Taylor ):

        out = np.zeros( count, dtype=np.complex128 )
        used = min( count, w.coeffs.size )
        out[ :used ] = w.coeffs[ :used ]

        if isinstance( w, Taylor ) and count > w.coeffs.size and w.tail_bound > 0:

            logger.debug( "taylor weight padded with zeros beyond %d stored coefficients", w.coeffs.size )

        return out

    if isinstance( w, Rational ):

        impulse = np.zeros( count, dtype=np.complex128 )
        impulse[ 0 ] = 1.0

        # power-series division num / den as an IIR filter response
        return scipy.signal.lfilter( w.num, w.den, impulse ).astype( np.complex128 )

    raise exceptions.PreconditionError(
        f"{ w.kind } weight has no analytic continuation data for Taylor coefficients"
    )

# values w( r exp( 2 pi i k / G ) ), k = 0 ... G - 1
def boundary_samples( w: Weight, grid_size: int, circle_radius: float = 1.0 ) -> np.ndarray:

    if grid_size < 1:

        raise exceptions.PreconditionError( "grid size must be positive" )

    if not 0.0 < circle_radius <= 1.0:

        raise exceptions.PreconditionError( f"circle radius must lie in (0, 1], got { circle_radius }" )

    if isinstance( w, MultiPolynomial ):

        raise exceptions.PreconditionError( "boundary samples on a circle need a one-variable weight" )

    if isinstance( w, BoundarySamples ):

        if circle_radius != 1.0:

            raise exceptions.PreconditionError( "boundary samples can only be read on the unit circle" )

        # exact subsampling whenever grid_size divides the stored grid
        position = np.arange( grid_size, dtype=np.float64 ) * ( w.grid_size / grid_size )

        return w.at_positions( position )

    nodes = circle_radius * np.exp( 2j * np.pi * np.arange( grid_size ) / grid_size )

    return w.evaluate( nodes )

# w( beta z ) for a unimodular beta
def rotated( w: Weight, beta: complex ) -> Weight:

    if isinstance( w, Polynomial ):

        return Polynomial( w.coeffs * beta ** np.arange( w.coeffs.size ) )

    if isinstance( w, Rational ):

        return Rational( w.num * beta ** np.arange( w.num.size ), w.den * beta ** np.arange( w.den.size ) )

    if isinstance( w, Taylor ):

        return Taylor( w.coeffs * beta ** np.arange( w.coeffs.size ), w.tail_bound, w.tags )

    raise exceptions.PreconditionError( f"rotation of a { w.kind } weight is not supported" )

