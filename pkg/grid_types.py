# import dependencies
from __future__ import annotations

import io
from pathlib import Path
from typing import Sequence, Union

import numpy as np

import exceptions  # type: ignore

# one sampled point of a resolvent-gap scan
grid_dt = np.dtype(
    [
        ( "re", np.float64 ),
        ( "im", np.float64 ),
        ( "gap", np.float64 ), # 1 / ||( lambda - T_N )^-1||, zero on eigenvalues
    ]
)

CSV_HEADER = "re,im,gap"

# helper for packing scan points and their gaps
def new_grid( points: np.ndarray, gaps: np.ndarray ) -> np.ndarray:

    points = np.asarray( points, dtype=np.complex128 ).reshape( -1 )
    grid = np.empty( points.size, dtype=grid_dt )
    grid[ "re" ] = points.real
    grid[ "im" ] = points.imag
    grid[ "gap" ] = np.asarray( gaps, dtype=np.float64 ).reshape( -1 )

    return grid

# angles points on each circle, rotated by offset turns
def polar_points( radii: Sequence[ float ], angles: int, offset: float = 0.0 ) -> np.ndarray:

    if angles < 1 or len( radii ) == 0:

        raise exceptions.PreconditionError( "a scan grid needs at least one radius and one angle" )

    turns = ( np.arange( angles ) + offset ) / angles

    return np.multiply.outer( np.asarray( radii, dtype=np.float64 ), np.exp( 2j * np.pi * turns ) ).reshape( -1 )

#
def grid_points( grid: np.ndarray ) -> np.ndarray:

    return grid[ "re" ] + 1j * grid[ "im" ]

# CSV text, 17 significant digits so values survive the round trip
def grid_to_csv( grid: np.ndarray ) -> str:

    buffer = io.StringIO()
    table = np.column_stack( [ grid[ "re" ], grid[ "im" ], grid[ "gap" ] ] )
    np.savetxt( buffer, table, fmt="%.17g", delimiter=",", header=CSV_HEADER, comments="" )

    return buffer.getvalue()

#
def write_grid_csv( grid: np.ndarray, path: Union[ str, Path ] ) -> None:

    try:

        Path( path ).write_text( grid_to_csv( grid ) )

    except OSError as error:

        raise exceptions.MalformedInput( f"cannot write grid file { path }: { error }" )

#
def grid_from_csv( text: str ) -> np.ndarray:

    lines = [ line for line in text.splitlines() if line.strip() ]

    if not lines or lines[ 0 ].replace( " ", "" ) != CSV_HEADER:

        raise exceptions.MalformedInput( f"grid file must start with the header '{ CSV_HEADER }'" )

    if len( lines ) == 1:

        raise exceptions.MalformedInput( "grid file holds no points" )

    try:

        table = np.loadtxt( io.StringIO( "\n".join( lines[ 1: ] ) ), delimiter=",", ndmin=2 )

    except ValueError as error:

        raise exceptions.MalformedInput( f"grid file is not numeric: { error }" )

    if table.shape[ 1 ] != 3 or not np.all( np.isfinite( table ) ):

        raise exceptions.MalformedInput( "grid rows must hold three finite numbers re, im, gap" )

    return new_grid( table[ :, 0 ] + 1j * table[ :, 1 ], table[ :, 2 ] )

#
def read_grid_csv( path: Union[ str, Path ] ) -> np.ndarray:

    try:

        text = Path( path ).read_text()

    except OSError as error:

        raise exceptions.MalformedInput( f"cannot read grid file { path }: { error }" )

    return grid_from_csv( text )
