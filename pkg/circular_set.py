# import dependencies
from __future__ import annotations

import dataclasses
import math
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

import config  # type: ignore
import exceptions  # type: ignore

# a set of moduli: lo..hi with open or closed ends
@dataclasses.dataclass( frozen=True )
class Interval:

    lo: float
    hi: float
    lo_closed: bool
    hi_closed: bool

#
def _radius( value: Any, name: str ) -> float:

    if isinstance( value, bool ) or not isinstance( value, ( int, float ) ):

        raise exceptions.MalformedInput( f"{ name } must be a number" )

    value = float( value )

    if not math.isfinite( value ) or value < 0.0:

        raise exceptions.MalformedInput( f"{ name } must be a nonnegative finite number, got { value }" )

    return value

# every component is centred at 0 and determined by its set of moduli
class Component:

    key = "<abstract>"

    #
    def interval( self ) -> Interval:

        raise NotImplementedError()

    #
    def to_dict( self ) -> Dict[ str, Any ]:

        raise NotImplementedError()

#
@dataclasses.dataclass( frozen=True )
class Circle( Component ):

    r: float
    key = "circle"

    def interval( self ) -> Interval:

        return Interval( self.r, self.r, True, True )

    def to_dict( self ) -> Dict[ str, Any ]:

        return { "circle": self.r }

#
@dataclasses.dataclass( frozen=True )
class ClosedAnnulus( Component ):

    r_in: float
    r_out: float
    key = "closed_annulus"

    def __post_init__( self ) -> None:

        if not 0.0 < self.r_in <= self.r_out:

            raise exceptions.MalformedInput( f"closed annulus needs 0 < r_in <= r_out, got { self.r_in }, { self.r_out }" )

    def interval( self ) -> Interval:

        return Interval( self.r_in, self.r_out, True, True )

    def to_dict( self ) -> Dict[ str, Any ]:

        return { "closed_annulus": [ self.r_in, self.r_out ] }

#
@dataclasses.dataclass( frozen=True )
class OpenAnnulus( Component ):

    r_in: float
    r_out: float
    key = "open_annulus"

    def __post_init__( self ) -> None:

        if not 0.0 <= self.r_in < self.r_out:

            raise exceptions.MalformedInput( f"open annulus needs 0 <= r_in < r_out, got { self.r_in }, { self.r_out }" )

    def interval( self ) -> Interval:

        return Interval( self.r_in, self.r_out, False, False )

    def to_dict( self ) -> Dict[ str, Any ]:

        return { "open_annulus": [ self.r_in, self.r_out ] }

#
@dataclasses.dataclass( frozen=True )
class OpenDisc( Component ):

    r: float
    key = "open_disc"

    def __post_init__( self ) -> None:

        if self.r <= 0.0:

            raise exceptions.MalformedInput( "open disc needs a positive radius" )

    def interval( self ) -> Interval:

        return Interval( 0.0, self.r, True, False )

    def to_dict( self ) -> Dict[ str, Any ]:

        return { "open_disc": self.r }

#
@dataclasses.dataclass( frozen=True )
class ClosedDisc( Component ):

    r: float
    key = "closed_disc"

    def interval( self ) -> Interval:

        return Interval( 0.0, self.r, True, True )

    def to_dict( self ) -> Dict[ str, Any ]:

        return { "closed_disc": self.r }

#
@dataclasses.dataclass( frozen=True )
class Origin( Component ):

    key = "origin"

    def interval( self ) -> Interval:

        return Interval( 0.0, 0.0, True, True )

    def to_dict( self ) -> Dict[ str, Any ]:

        return { "origin": True }

# decode one component from its JSON object
def component_from_dict( document: Any ) -> Component:

    if not isinstance( document, dict ) or len( document ) != 1:

        raise exceptions.MalformedInput( "a component must be an object with exactly one key" )

    ( key, value ), = document.items()

    if key == "circle":

        return Circle( _radius( value, "circle radius" ) )

    if key == "open_disc":

        return OpenDisc( _radius( value, "disc radius" ) )

    if key == "closed_disc":

        return ClosedDisc( _radius( value, "disc radius" ) )

    if key == "origin":

        return Origin()

    if key in ( "closed_annulus", "open_annulus" ):

        if not isinstance( value, list ) or len( value ) != 2:

            raise exceptions.MalformedInput( f"{ key } needs [r_in, r_out]" )

        r_in, r_out = _radius( value[ 0 ], "inner radius" ), _radius( value[ 1 ], "outer radius" )

        return ClosedAnnulus( r_in, r_out ) if key == "closed_annulus" else OpenAnnulus( r_in, r_out )

    raise exceptions.MalformedInput( f"unknown component '{ key }'" )

# canonical, pairwise disjoint components covering one interval
def _components_of( part: Interval ) -> List[ Component ]:

    lo, hi = part.lo, part.hi

    if lo == hi:

        return [ Origin() ] if lo == 0.0 else [ Circle( lo ) ]

    if lo == 0.0 and part.lo_closed:

        return [ ClosedDisc( hi ) ] if part.hi_closed else [ OpenDisc( hi ) ]

    if part.lo_closed and part.hi_closed:

        return [ ClosedAnnulus( lo, hi ) ]

    pieces: List[ Component ] = []

    if part.lo_closed:

        pieces.append( Circle( lo ) )

    pieces.append( OpenAnnulus( lo, hi ) )

    if part.hi_closed:

        pieces.append( Circle( hi ) )

    return pieces

# endpoints closer than merge_rel ( relative ) collapse onto the smallest one
def _snap_table( values: Iterable[ float ], rel: float ) -> Dict[ float, float ]:

    table: Dict[ float, float ] = {}
    anchor: Optional[ float ] = None

    for value in sorted( set( values ) ):

        if anchor is None or value - anchor > rel * max( abs( anchor ), abs( value ) ):

            anchor = value

        table[ value ] = anchor

    return table

#
def _member( parts: Iterable[ Interval ], x: float ) -> bool:

    for part in parts:

        if part.lo < x < part.hi:

            return True

        if x == part.lo and part.lo_closed or x == part.hi and part.hi_closed:

            return True

    return False

# boolean combination of two interval unions, rebuilt from elementary pieces
# ( every endpoint and every open gap between consecutive endpoints )
def _combine( a: List[ Interval ], b: List[ Interval ], op: Callable[ [ bool, bool ], bool ] ) -> List[ Interval ]:

    rel = config.get_tolerances().merge_rel
    table = _snap_table( [ 0.0 ] + [ e for part in a + b for e in ( part.lo, part.hi ) ], rel )

    #
    def snapped( parts: List[ Interval ] ) -> List[ Interval ]:

        return [ Interval( table[ p.lo ], table[ p.hi ], p.lo_closed, p.hi_closed ) for p in parts ]

    a, b = snapped( a ), snapped( b )
    points = sorted( set( table.values() ) )
    pieces: List[ Tuple[ float, float, bool ] ] = []

    for index, point in enumerate( points ):

        pieces.append( ( point, point, True ) )

        if index + 1 < len( points ):

            pieces.append( ( point, points[ index + 1 ], False ) )

    result: List[ Interval ] = []
    current: Optional[ List[ Any ] ] = None

    for lo, hi, is_point in pieces:

        probe = lo if is_point else 0.5 * ( lo + hi )

        if op( _member( a, probe ), _member( b, probe ) ):

            if current is None:

                current = [ lo, hi, is_point, is_point ]

            else:

                current[ 1 ], current[ 3 ] = hi, is_point

        elif current is not None:

            result.append( Interval( *current ) )
            current = None

    if current is not None:

        result.append( Interval( *current ) )

    return result

# rotation-invariant planar set: a finite union of circles, annuli, discs and {0};
# it cannot express anything that is not rotation invariant
class CircularSet:

    def __init__( self, components: Iterable[ Component ] = () ) -> None:

        parts = [ component.interval() for component in components ]
        self._parts = _combine( parts, [], lambda x, _: x )

    #
    @classmethod
    def _from_parts( cls, parts: List[ Interval ] ) -> CircularSet:

        made = cls()
        made._parts = parts

        return made

    # canonical disjoint components, ordered by radius
    @property
    def components( self ) -> List[ Component ]:

        return [ component for part in self._parts for component in _components_of( part ) ]

    #
    @property
    def is_empty( self ) -> bool:

        return not self._parts

    #
    def union( self, other: CircularSet ) -> CircularSet:

        return self._from_parts( _combine( self._parts, other._parts, lambda x, y: x or y ) )

    #
    def intersection( self, other: CircularSet ) -> CircularSet:

        return self._from_parts( _combine( self._parts, other._parts, lambda x, y: x and y ) )

    #
    def difference( self, other: CircularSet ) -> CircularSet:

        return self._from_parts( _combine( self._parts, other._parts, lambda x, y: x and not y ) )

    #
    def is_subset( self, other: CircularSet ) -> bool:

        return self.difference( other ).is_empty

    #
    def is_disjoint( self, other: CircularSet ) -> bool:

        return self.intersection( other ).is_empty

    # membership of a complex point, radii within the merge tolerance count as equal
    def contains( self, lam: complex ) -> bool:

        probe = CircularSet( [ Circle( abs( lam ) ) if lam != 0 else Origin() ] )

        return probe.is_subset( self )

    # radii of the boundary circles
    def boundary_radii( self ) -> List[ float ]:

        radii = { e for part in self._parts for e in ( part.lo, part.hi ) if e > 0.0 }

        return sorted( radii )

    #
    @property
    def max_radius( self ) -> float:

        return self._parts[ -1 ].hi if self._parts else 0.0

    def __eq__( self, other: object ) -> bool:

        if not isinstance( other, CircularSet ):

            return NotImplemented

        return self.is_subset( other ) and other.is_subset( self )

    __hash__ = None # type: ignore

    def __repr__( self ) -> str:

        return f"CircularSet({ self.components })"

    #
    def to_json( self ) -> List[ Dict[ str, Any ] ]:

        return [ component.to_dict() for component in self.components ]

    #
    @classmethod
    def from_json( cls, document: Any ) -> CircularSet:

        if not isinstance( document, list ):

            raise exceptions.MalformedInput( "a circular set must be a list of components" )

        return cls( component_from_dict( item ) for item in document )

EMPTY = CircularSet()
