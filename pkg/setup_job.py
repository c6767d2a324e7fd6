# import dependencies
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

import config # type: ignore
import exceptions # type: ignore
from angles import parse_rotation # type: ignore
from engine import Engine, ScanParams, VerifyParams # type: ignore
from oracle import MAX_LADDER, MAX_ORDER # type: ignore
from spaces import parse_space # type: ignore
from weights import parse_weight # type: ignore

logger = logging.getLogger( __name__ )

JOB_KEYS = frozenset( { "weight", "rotation", "space", "verify", "scan", "tolerances" } )

# read a JSON document from a file
def read_json( path: Union[ str, Path ] ) -> Any:

    try:

        with open( path, "r" ) as f:

            return json.load( f )

    except OSError as error:

        raise exceptions.MalformedInput( f"cannot read { path }: { error }" )

    except json.JSONDecodeError as error:

        raise exceptions.MalformedInput( f"{ path } is not valid JSON: { error }" )

#
def _section( document: Mapping[ str, Any ], key: str ) -> Mapping[ str, Any ]:

    section = document.get( key, {} )

    if not isinstance( section, Mapping ):

        raise exceptions.MalformedInput( f"'{ key }' must be an object" )

    return section

#
def _positive_int( value: Any, field: str, upper: Optional[ int ] = None ) -> int:

    if isinstance( value, bool ) or not isinstance( value, int ) or value < 1 or ( upper is not None and value > upper ):

        bound = f" and at most { upper }" if upper is not None else ""

        raise exceptions.MalformedInput( f"'{ field }' must be a positive integer{ bound }, got { value!r}" )

    return value

#
def _ladder( value: Any, field: str, upper: int ) -> Tuple[ int, ... ]:

    if not isinstance( value, list ) or not value:

        raise exceptions.MalformedInput( f"'{ field }' must be a nonempty list of integers" )

    return tuple( _positive_int( item, field, upper ) for item in value )

#
def parse_verify( section: Mapping[ str, Any ] ) -> VerifyParams:

    fields: Dict[ str, Any ] = {}

    for key, value in section.items():

        if key in ( "n_ladder", "m_ladder" ):

            fields[ key ] = _ladder( value, key, MAX_ORDER )

        elif key in ( "bloch_ladder", "bergman_ladder" ):

            fields[ key ] = _ladder( value, key, MAX_LADDER )

        elif key in ( "rank_order", "peak_exponent" ):

            fields[ key ] = _positive_int( value, key, MAX_ORDER )

        elif key in ( "n_max", "grid_size", "circle_points" ):

            fields[ key ] = _positive_int( value, key )

        else:

            raise exceptions.MalformedInput( f"unknown verify parameter '{ key }'" )

    return VerifyParams( **fields )

#
def parse_scan( section: Mapping[ str, Any ] ) -> ScanParams:

    fields: Dict[ str, Any ] = {}

    for key, value in section.items():

        if key == "order":

            fields[ key ] = _positive_int( value, key, MAX_ORDER )

        elif key == "angles":

            fields[ key ] = _positive_int( value, key )

        elif key == "radii":

            if not isinstance( value, list ) or not value or not all(
                isinstance( r, ( int, float ) ) and not isinstance( r, bool ) and r >= 0 for r in value
            ):

                raise exceptions.MalformedInput( "'radii' must be a nonempty list of nonnegative numbers" )

            fields[ key ] = tuple( float( r ) for r in value )

        else:

            raise exceptions.MalformedInput( f"unknown scan parameter '{ key }'" )

    return ScanParams( **fields )

# return an engine for the job document
def new_engine( document: Any ) -> Engine:

    if not isinstance( document, Mapping ):

        raise exceptions.MalformedInput( "a job must be a JSON object" )

    unknown = set( document ) - JOB_KEYS

    if unknown:

        raise exceptions.MalformedInput( f"unknown job fields { sorted( unknown ) }" )

    for key in ( "weight", "rotation", "space" ):

        if key not in document:

            raise exceptions.MalformedInput( f"job is missing '{ key }'" )

    # tolerances first, parsing may already look at them
    overrides = config.tolerance_overrides( _section( document, "tolerances" ) )

    with config.using_tolerances( **overrides ):

        engine = Engine(
            space=parse_space( document[ "space" ] ),
            weight=parse_weight( document[ "weight" ] ),
            rotation=parse_rotation( document[ "rotation" ] ),
            verify=parse_verify( _section( document, "verify" ) ),
            scan=parse_scan( _section( document, "scan" ) ),
            tolerances=overrides,
        )

    logger.debug( "job: %s on %r", engine.weight, engine.space )

    return engine

# load a job file and return its engine
def load_job( path: Union[ str, Path ] ) -> Engine:

    return new_engine( read_json( path ) )
