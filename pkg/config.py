# import dependencies
from __future__ import annotations

import contextlib
import contextvars
import dataclasses
import os
from typing import Any, Dict, Iterator, Mapping

import exceptions  # type: ignore

# numerical tolerances shared by every module, overridable per job
@dataclasses.dataclass( frozen=True )
class Tolerances:

    zero: float = 1e-9 # a zero closer than this to a circle lies on it
    inv: float = 1e-8 # boundary modulus below this counts as vanishing
    cluster: float = 1e-7 # roots closer than this are one repeated root
    quad_rel: float = 1e-10 # stopping rule for grid doubling
    quad_start: int = 64
    quad_max_points: int = 2 ** 20
    merge_rel: float = 1e-9 # radii closer than this are merged
    ap_per_step: float = 1e-3 # orbit slack grows by this per step

_active: contextvars.ContextVar[ Tolerances ] = contextvars.ContextVar(
    "wro_tolerances", default=Tolerances()
)

# the tolerances in force for the calling thread
def get_tolerances() -> Tolerances:

    return _active.get()

# temporarily override some tolerances, e.g. using_tolerances( zero=1e-7 )
@contextlib.contextmanager
def using_tolerances( **overrides: Any ) -> Iterator[ Tolerances ]:

    token = _active.set( dataclasses.replace( _active.get(), **overrides ) )

    try:

        yield _active.get()

    finally:

        _active.reset( token )

# validate the "tolerances" section of a job document
def tolerance_overrides( section: Mapping[ str, Any ] ) -> Dict[ str, Any ]:

    known = { field.name: field.type for field in dataclasses.fields( Tolerances ) }
    overrides: Dict[ str, Any ] = {}

    for key, value in section.items():

        if key not in known:

            raise exceptions.MalformedInput( f"unknown tolerance '{ key }'" )

        if isinstance( value, bool ) or not isinstance( value, ( int, float ) ) or value <= 0:

            raise exceptions.MalformedInput( f"tolerance '{ key }' must be a positive number" )

        overrides[ key ] = int( value ) if known[ key ] == "int" else float( value )

    return overrides

# number of worker threads for grid scans, capped by WRO_THREADS
def thread_count() -> int:

    raw = os.environ.get( "WRO_THREADS", "" ).strip()

    if not raw:

        return os.cpu_count() or 1

    try:

        value = int( raw )

    except ValueError:

        raise exceptions.MalformedInput( f"WRO_THREADS must be a positive integer, got '{ raw }'" )

    if value < 1:

        raise exceptions.MalformedInput( f"WRO_THREADS must be a positive integer, got '{ raw }'" )

    return value
