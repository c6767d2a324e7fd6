# import dependencies
from __future__ import annotations

import dataclasses
import json
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from typing_extensions import Self

import exceptions  # type: ignore
from circular_set import EMPTY, CircularSet, Component, component_from_dict  # type: ignore
from set_kinds import SpectralSet, Status  # type: ignore

# index value on a residual component: an integer, "-inf" or "unknown"
IndexValue = Union[ int, str ]
INDEX_FLAGS = ( "-inf", "unknown" )

# one reported spectral set; for bounds the true set lies between lower and upper,
# an unknown set may still carry the enclosures that are known
@dataclasses.dataclass( frozen=True )
class SetEntry:

    status: Status
    value: CircularSet
    citation: str
    lower: Optional[ CircularSet ] = None
    upper: Optional[ CircularSet ] = None

    #
    @classmethod
    def exact( cls, value: CircularSet, citation: str ) -> Self:

        return cls( Status.EXACT, value, citation )

    # collapses to an exact entry when both sides agree
    @classmethod
    def bounds( cls, lower: CircularSet, upper: CircularSet, citation: str ) -> Self:

        if lower == upper:

            return cls( Status.EXACT, upper, citation )

        return cls( Status.BOUNDS, upper, citation, lower, upper )

    #
    @classmethod
    def unknown(
        cls, citation: str, lower: Optional[ CircularSet ] = None, upper: Optional[ CircularSet ] = None
    ) -> Self:

        return cls( Status.UNKNOWN, upper if upper is not None else EMPTY, citation, lower, upper )

    #
    @property
    def is_exact( self ) -> bool:

        return self.status is Status.EXACT

    #
    def to_dict( self ) -> Dict[ str, Any ]:

        document: Dict[ str, Any ] = {
            "components": self.value.to_json(),
            "status": self.status.value,
            "citation": self.citation,
        }

        if self.lower is not None:

            document[ "lower" ] = self.lower.to_json()

        if self.upper is not None:

            document[ "upper" ] = self.upper.to_json()

        return document

    #
    @classmethod
    def from_dict( cls, document: Any ) -> Self:

        if not isinstance( document, Mapping ):

            raise exceptions.MalformedInput( "a set entry must be an object" )

        try:

            status = Status( document.get( "status" ) )

        except ValueError:

            raise exceptions.MalformedInput( f"unknown set status { document.get( 'status' )!r}" )

        lower = document.get( "lower" )
        upper = document.get( "upper" )

        return cls(
            status,
            CircularSet.from_json( document.get( "components", [] ) ),
            str( document.get( "citation", "" ) ),
            None if lower is None else CircularSet.from_json( lower ),
            None if upper is None else CircularSet.from_json( upper ),
        )

# index of lambda I - T on one component of the residual spectrum
@dataclasses.dataclass( frozen=True )
class IndexEntry:

    component: Component
    index: IndexValue

    def __post_init__( self ) -> None:

        if isinstance( self.index, bool ) or not ( isinstance( self.index, int ) or self.index in INDEX_FLAGS ):

            raise exceptions.MalformedInput( f"index must be an integer, '-inf' or 'unknown', got { self.index!r}" )

    #
    def to_dict( self ) -> Dict[ str, Any ]:

        return { "component": self.component.to_dict(), "index": self.index }

    #
    @classmethod
    def from_dict( cls, document: Any ) -> Self:

        if not isinstance( document, Mapping ) or "component" not in document or "index" not in document:

            raise exceptions.MalformedInput( "an index entry needs 'component' and 'index'" )

        return cls( component_from_dict( document[ "component" ] ), document[ "index" ] )

# the classification of one weighted rotation operator
@dataclasses.dataclass
class SpectrumReport:

    sets: Dict[ SpectralSet, SetEntry ]
    index_map: List[ IndexEntry ] = dataclasses.field( default_factory=list )
    citations: List[ str ] = dataclasses.field( default_factory=list )
    open_flags: List[ str ] = dataclasses.field( default_factory=list )
    inputs_echo: Dict[ str, Any ] = dataclasses.field( default_factory=dict )

    #
    def __getitem__( self, kind: SpectralSet ) -> SetEntry:

        return self.sets[ kind ]

    #
    @property
    def has_unknown( self ) -> bool:

        return any( entry.status is Status.UNKNOWN for entry in self.sets.values() )

    # containment and partition rules between exact sets, one message per broken rule
    def consistency_violations( self ) -> List[ str ]:

        problems: List[ str ] = []

        #
        def exact( *kinds: SpectralSet ) -> Optional[ Tuple[ CircularSet, ... ] ]:

            entries = [ self.sets.get( kind ) for kind in kinds ]

            if all( entry is not None and entry.is_exact for entry in entries ):

                return tuple( entry.value for entry in entries ) # type: ignore

            return None

        parts = exact( SpectralSet.SIGMA, SpectralSet.SIGMA_AP, SpectralSet.SIGMA_R )

        if parts is not None:

            sigma, sigma_ap, sigma_r = parts

            if not sigma_ap.union( sigma_r ) == sigma:

                problems.append( "sigma_ap and sigma_r do not cover sigma" )

            if not sigma_ap.is_disjoint( sigma_r ):

                problems.append( "sigma_ap and sigma_r overlap" )

        chain = (
            ( SpectralSet.SIGMA_1, SpectralSet.SIGMA_2 ),
            ( SpectralSet.SIGMA_2, SpectralSet.SIGMA_3 ),
            ( SpectralSet.SIGMA_3, SpectralSet.SIGMA_4 ),
            ( SpectralSet.SIGMA_4, SpectralSet.SIGMA_5 ),
            ( SpectralSet.SIGMA_5, SpectralSet.SIGMA ),
        )

        for small, large in chain:

            pair = exact( small, large )

            if pair is not None and not pair[ 0 ].is_subset( pair[ 1 ] ):

                problems.append( f"{ small.value } is not contained in { large.value }" )

        sigma_1 = exact( SpectralSet.SIGMA_1 )

        if sigma_1 is not None:

            for entry in self.index_map:

                if entry.index != 0 and not CircularSet( [ entry.component ] ).is_disjoint( sigma_1[ 0 ] ):

                    problems.append( f"nonzero index on { entry.component.to_dict() } which meets sigma_1" )

        return problems

    #
    def to_dict( self ) -> Dict[ str, Any ]:

        return {
            "sets": { kind.value: self.sets[ kind ].to_dict() for kind in SpectralSet if kind in self.sets },
            "index_map": [ entry.to_dict() for entry in self.index_map ],
            "citations": list( self.citations ),
            "open_flags": list( self.open_flags ),
            "inputs_echo": self.inputs_echo,
        }

    # stable text form, identical input gives identical bytes
    def to_json( self ) -> str:

        return json.dumps( self.to_dict(), indent=2, sort_keys=True ) + "\n"

    #
    @classmethod
    def from_dict( cls, document: Any ) -> Self:

        if not isinstance( document, Mapping ) or not isinstance( document.get( "sets" ), Mapping ):

            raise exceptions.MalformedInput( "a report must be an object with a 'sets' object" )

        sets: Dict[ SpectralSet, SetEntry ] = {}

        for key, entry in document[ "sets" ].items():

            try:

                kind = SpectralSet( key )

            except ValueError:

                raise exceptions.MalformedInput( f"unknown spectral set '{ key }'" )

            sets[ kind ] = SetEntry.from_dict( entry )

        index_map = document.get( "index_map", [] )
        citations = document.get( "citations", [] )
        open_flags = document.get( "open_flags", [] )

        if not all( isinstance( part, list ) for part in ( index_map, citations, open_flags ) ):

            raise exceptions.MalformedInput( "'index_map', 'citations' and 'open_flags' must be lists" )

        return cls(
            sets=sets,
            index_map=[ IndexEntry.from_dict( entry ) for entry in index_map ],
            citations=[ str( item ) for item in citations ],
            open_flags=[ str( item ) for item in open_flags ],
            inputs_echo=dict( document.get( "inputs_echo", {} ) ),
        )

    #
    @classmethod
    def from_json( cls, text: str ) -> Self:

        try:

            document = json.loads( text )

        except json.JSONDecodeError as error:

            raise exceptions.MalformedInput( f"report is not valid JSON: { error }" )

        return cls.from_dict( document )
