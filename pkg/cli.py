# import dependencies
from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Optional, Union

import exceptions # type: ignore
from engine import Engine # type: ignore
from grid_types import grid_from_csv, grid_to_csv, read_grid_csv, write_grid_csv # type: ignore
from render_functions import render_svg # type: ignore
from report import SpectrumReport # type: ignore

logger = logging.getLogger( __name__ )

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERICAL = 2
EXIT_PARTIAL = 3

PathLike = Union[ str, Path ]

# write text to a file, or to stdout without a path
def write_output( text: str, output: Optional[ PathLike ] ) -> None:

    if output is None:

        sys.stdout.write( text )

        return

    try:

        Path( output ).write_text( text )

    except OSError as error:

        raise exceptions.MalformedInput( f"cannot write { output }: { error }" )

#
def read_text( path: PathLike ) -> str:

    try:

        return Path( path ).read_text()

    except OSError as error:

        raise exceptions.MalformedInput( f"cannot read { path }: { error }" )

# classification report as JSON; exit 3 when some set is unknown
def cmd_classify( engine: Engine, output: Optional[ PathLike ] = None ) -> int:

    report = engine.classify()
    write_output( report.to_json(), output )

    return EXIT_PARTIAL if report.has_unknown else EXIT_OK

# verification ledger as JSON; exit 2 when a check fails
def cmd_verify( engine: Engine, output: Optional[ PathLike ] = None ) -> int:

    ledger = engine.verify()
    write_output( ledger.to_json(), output )

    for entry in ledger.failures:

        logger.warning( "check failed: %s: %s", entry.check, entry.full_text )

    return EXIT_OK if ledger.passed else EXIT_NUMERICAL

# resolvent gap grid as CSV
def cmd_scan( engine: Engine, output: Optional[ PathLike ] = None ) -> int:

    grid = engine.scan().points

    if output is None:

        write_output( grid_to_csv( grid ), None )

    else:

        write_grid_csv( grid, output )

    return EXIT_OK

# SVG of a report or a grid, a report may take a grid as heat layer
def cmd_plot( source: PathLike, output: Optional[ PathLike ] = None, grid_path: Optional[ PathLike ] = None ) -> int:

    text = read_text( source )
    report: Optional[ SpectrumReport ] = None
    grid = None

    if text.lstrip().startswith( "{" ):

        report = SpectrumReport.from_json( text )

    else:

        grid = grid_from_csv( text )

    if grid_path is not None:

        grid = read_grid_csv( grid_path )

    write_output( render_svg( report, grid ), output )

    return EXIT_OK

# spectral radius on stdout
def cmd_radius( engine: Engine, output: Optional[ PathLike ] = None ) -> int:

    write_output( f"{ engine.radius():.17g}\n", output )

    return EXIT_OK
