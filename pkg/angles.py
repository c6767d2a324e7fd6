# import dependencies
from __future__ import annotations

import dataclasses
import math
from typing import Any, Dict, List, Mapping, Tuple, Union

import numpy as np

import exceptions  # type: ignore

# fractional parts of the named irrational rotations, in turns
NAMED_TURNS: Dict[ str, float ] = {
    "golden": ( math.sqrt( 5.0 ) - 1.0 ) / 2.0,
    "sqrt2": math.sqrt( 2.0 ) - 1.0,
    "e_frac": math.e - 2.0,
}

# a rotation z -> alpha z of the circle, alpha = exp( 2 pi i turns )
@dataclasses.dataclass( frozen=True )
class RotationAngle:

    #
    @property
    def turns( self ) -> float:

        raise NotImplementedError()

    # a root of unity, or an angle not certified to be non-periodic
    @property
    def is_periodic( self ) -> bool:

        raise NotImplementedError()

    #
    @property
    def value( self ) -> complex:

        return complex( self.powers( 1, start=1 )[ 0 ] )

    # alpha^k for k = start ... start + count - 1, reduced modulo one turn
    # before exponentiating so large k keep full precision
    def powers( self, count: int, start: int = 0 ) -> np.ndarray:

        k = np.arange( start, start + count, dtype=np.float64 )

        return np.exp( 2j * np.pi * np.mod( k * self.turns, 1.0 ) )

    # orbit points alpha^j * base for j = start ... start + count - 1
    def orbit( self, base: Union[ complex, np.ndarray ], count: int, start: int = 0 ) -> np.ndarray:

        steps = self.powers( count, start=start )

        return np.multiply.outer( np.asarray( base, dtype=np.complex128 ), steps )

    #
    def to_dict( self ) -> Dict[ str, Any ]:

        raise NotImplementedError()

#
@dataclasses.dataclass( frozen=True )
class RootOfUnity( RotationAngle ):

    p: int
    q: int

    def __post_init__( self ) -> None:

        if self.q < 1 or not 0 <= self.p < self.q or math.gcd( self.p, self.q ) != 1:

            raise exceptions.MalformedInput(
                f"root of unity needs 0 <= p < q with gcd(p, q) = 1, got p={ self.p }, q={ self.q }"
            )

    @property
    def turns( self ) -> float:

        return self.p / self.q

    @property
    def is_periodic( self ) -> bool:

        return True

    # exact residues modulo q, so alpha^q is exactly 1
    def powers( self, count: int, start: int = 0 ) -> np.ndarray:

        k = np.arange( start, start + count, dtype=np.int64 )

        return np.exp( 2j * np.pi * np.mod( k * self.p, self.q ) / self.q )

    def to_dict( self ) -> Dict[ str, Any ]:

        return { "kind": "rational", "p": self.p, "q": self.q }

#
@dataclasses.dataclass( frozen=True )
class NamedIrrational( RotationAngle ):

    name: str

    def __post_init__( self ) -> None:

        if self.name not in NAMED_TURNS:

            raise exceptions.MalformedInput(
                f"unknown named rotation '{ self.name }', expected one of { sorted( NAMED_TURNS ) }"
            )

    @property
    def turns( self ) -> float:

        return NAMED_TURNS[ self.name ]

    @property
    def is_periodic( self ) -> bool:

        return False

    def to_dict( self ) -> Dict[ str, Any ]:

        return { "kind": "named", "name": self.name }

# a raw angle in radians, non-periodicity is the caller's assertion
@dataclasses.dataclass( frozen=True )
class RawRadians( RotationAngle ):

    radians: float
    assumed_nonperiodic: bool = False

    def __post_init__( self ) -> None:

        if not math.isfinite( self.radians ):

            raise exceptions.MalformedInput( "rotation angle must be finite" )

    @property
    def turns( self ) -> float:

        return ( self.radians / ( 2.0 * math.pi ) ) % 1.0

    @property
    def is_periodic( self ) -> bool:

        return not self.assumed_nonperiodic

    def to_dict( self ) -> Dict[ str, Any ]:

        return { "kind": "radians", "value": self.radians, "assumed_nonperiodic": self.assumed_nonperiodic }

# rotation of the torus, one angle per variable plus the integer relations among them
@dataclasses.dataclass( frozen=True )
class RotationVector:

    components: Tuple[ RotationAngle, ... ]
    relations: Tuple[ Tuple[ int, ... ], ... ] = ()

    def __post_init__( self ) -> None:

        if len( self.components ) < 1:

            raise exceptions.MalformedInput( "rotation vector needs at least one component" )

        for relation in self.relations:

            if len( relation ) != len( self.components ) or not any( relation ):

                raise exceptions.MalformedInput(
                    "each relation must be a nonzero integer vector with one entry per component"
                )

    #
    @property
    def dimension( self ) -> int:

        return len( self.components )

    # an empty relation lattice with every component non-periodic
    @property
    def is_periodic( self ) -> bool:

        return bool( self.relations ) or any( angle.is_periodic for angle in self.components )

    # orbit points of a torus point, shape ( count, dimension )
    def orbit( self, base: Tuple[ complex, ... ], count: int, start: int = 0 ) -> np.ndarray:

        columns = [ angle.orbit( point, count, start=start ) for angle, point in zip( self.components, base ) ]

        return np.stack( columns, axis=-1 )

    # alpha_1^k_1 ... alpha_n^k_n for each multi-index row of exponents
    def monomials( self, exponents: np.ndarray ) -> np.ndarray:

        exponents = np.asarray( exponents, dtype=np.int64 )
        turns = np.array( [ angle.turns for angle in self.components ] )
        phase = np.mod( exponents.astype( np.float64 ) @ turns, 1.0 )

        return np.exp( 2j * np.pi * phase )

    def to_dict( self ) -> Dict[ str, Any ]:

        return {
            "kind": "vector",
            "components": [ angle.to_dict() for angle in self.components ],
            "relations": [ list( relation ) for relation in self.relations ],
        }

Rotation = Union[ RotationAngle, RotationVector ]

#
def _integer( document: Mapping[ str, Any ], key: str ) -> int:

    value = document.get( key )

    if isinstance( value, bool ) or not isinstance( value, int ):

        raise exceptions.MalformedInput( f"rotation field '{ key }' must be an integer" )

    return value

# build a rotation from the "rotation" section of a job document
def parse_rotation( document: Any ) -> Rotation:

    if not isinstance( document, Mapping ) or "kind" not in document:

        raise exceptions.MalformedInput( "rotation must be an object with a 'kind' field" )

    kind = document[ "kind" ]

    if kind == "named":

        return NamedIrrational( str( document.get( "name", "" ) ) )

    if kind == "rational":

        return RootOfUnity( _integer( document, "p" ), _integer( document, "q" ) )

    if kind == "radians":

        value = document.get( "value" )

        if isinstance( value, bool ) or not isinstance( value, ( int, float ) ):

            raise exceptions.MalformedInput( "radians rotation needs a numeric 'value'" )

        return RawRadians( float( value ), bool( document.get( "assumed_nonperiodic", False ) ) )

    if kind == "vector":

        components = document.get( "components" )

        if not isinstance( components, list ) or not components:

            raise exceptions.MalformedInput( "vector rotation needs a nonempty 'components' list" )

        parsed: List[ RotationAngle ] = []

        for component in components:

            angle = parse_rotation( component )

            if not isinstance( angle, RotationAngle ):

                raise exceptions.MalformedInput( "vector rotation components must be scalar rotations" )

            parsed.append( angle )

        relations = document.get( "relations", [] )

        if not isinstance( relations, list ) or not all(
            isinstance( row, list ) and all( isinstance( m, int ) and not isinstance( m, bool ) for m in row )
            for row in relations
        ):

            raise exceptions.MalformedInput( "'relations' must be a list of integer lists" )

        return RotationVector( tuple( parsed ), tuple( tuple( row ) for row in relations ) )

    raise exceptions.MalformedInput( f"unknown rotation kind '{ kind }'" )
