# import dependencies
from __future__ import annotations

import argparse
import logging
import sys
import traceback
from typing import List, Optional

import cli # type: ignore
import exceptions # type: ignore
import setup_job # type: ignore

JOB_COMMANDS = {
    "classify": cli.cmd_classify,
    "verify": cli.cmd_verify,
    "scan": cli.cmd_scan,
    "radius": cli.cmd_radius,
}

# build the command line parser
def build_parser() -> argparse.ArgumentParser:

    parser = argparse.ArgumentParser(
        prog="wro", description="spectra of weighted rotation operators T = wU"
    )
    parser.add_argument( "-v", "--verbose", action="count", default=0, help="-v info, -vv debug" )
    commands = parser.add_subparsers( dest="command", required=True )

    for name, help_text in (
        ( "classify", "classify the spectra, write the report as JSON" ),
        ( "verify", "check the classification against the numerical oracles" ),
        ( "scan", "write resolvent gaps of a truncation as CSV" ),
        ( "radius", "print the spectral radius" ),
    ):

        command = commands.add_parser( name, help=help_text )
        command.add_argument( "-i", "--input", required=True, help="job JSON file" )
        command.add_argument( "-o", "--output", default=None, help="output file, stdout when omitted" )

    plot = commands.add_parser( "plot", help="draw a report JSON or grid CSV as SVG" )
    plot.add_argument( "-i", "--input", required=True, help="report JSON or grid CSV" )
    plot.add_argument( "-o", "--output", default=None, help="SVG file, stdout when omitted" )
    plot.add_argument( "--grid", default=None, help="grid CSV drawn as heat layer under a report" )

    return parser

# 0 warnings only, 1 info, 2 and more debug; stderr keeps stdout clean
def configure_logging( verbosity: int ) -> None:

    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG

    logging.basicConfig( level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s" )

# define main
def main( argv: Optional[ List[ str ] ] = None ) -> int:

    args = build_parser().parse_args( argv )
    configure_logging( args.verbose )

    try:

        if args.command == "plot":

            return cli.cmd_plot( args.input, args.output, args.grid )

        engine = setup_job.load_job( args.input )

        return JOB_COMMANDS[ args.command ]( engine, args.output )

    except ( exceptions.MalformedInput, exceptions.PreconditionError ) as error:

        print( f"wro: { error }", file=sys.stderr )

        return cli.EXIT_INPUT

    except exceptions.NumericalFailure as error:

        print( f"wro: numerical failure: { error }", file=sys.stderr )

        return cli.EXIT_NUMERICAL

    except Exception: # anything else is a bug or a numerical breakdown

        traceback.print_exc()

        return cli.EXIT_NUMERICAL

# execute main
if __name__ == "__main__":

    sys.exit( main() )
