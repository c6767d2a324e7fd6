# import dependencies
import json

import pytest

import checks
import cli
import exceptions
from main import main

#
def _run( *argv ):

    return main( [ str( arg ) for arg in argv ] )

#
def test_classify_writes_the_report( job_file, bergman_job, tmp_path ):

    output = tmp_path / "report.json"

    assert _run( "classify", "-i", job_file( bergman_job ), "-o", output ) == cli.EXIT_OK

    document = json.loads( output.read_text() )

    assert document[ "inputs_echo" ][ "space" ][ "variant" ] == "bergman"
    assert document[ "sets" ][ "sigma" ][ "status" ] == "exact"

# an open problem leaves a set unknown
def test_unknown_sets_exit_partial( job_file, bergman_job, capsys ):

    bergman_job[ "space" ] = { "variant": "ell1a" }
    bergman_job[ "weight" ] = { "type": "poly", "coeffs": [ [ -1, 0 ], [ 1, 0 ] ] }

    assert _run( "classify", "-i", job_file( bergman_job ) ) == cli.EXIT_PARTIAL
    assert json.loads( capsys.readouterr().out )[ "open_flags" ]

#
def test_malformed_weight_is_an_input_error( job_file, bergman_job, capsys ):

    bergman_job[ "weight" ] = { "type": "poly", "coeffs": [ "one" ] }

    assert _run( "classify", "-i", job_file( bergman_job ) ) == cli.EXIT_INPUT
    assert capsys.readouterr().err.startswith( "wro: " )

#
def test_missing_job_file( tmp_path ):

    assert _run( "radius", "-i", tmp_path / "absent.json" ) == cli.EXIT_INPUT

#
def test_radius( job_file, bergman_job, capsys ):

    assert _run( "radius", "-i", job_file( bergman_job ) ) == cli.EXIT_OK
    assert float( capsys.readouterr().out ) == pytest.approx( 2.0, rel=1e-9 )

# a failing check is a numerical failure, the ledger is still written
def test_failed_verification_exits_numerical( job_file, bergman_job, tmp_path, monkeypatch ):

    def broken( self ):

        raise exceptions.NumericalFailure( "no convergence" )

    monkeypatch.setattr( checks.BergmanScalingCheck, "perform", broken )
    bergman_job[ "verify" ] = { "n_ladder": [ 32, 64 ], "m_ladder": [ 4, 16 ] }
    output = tmp_path / "ledger.json"

    assert _run( "verify", "-i", job_file( bergman_job ), "-o", output ) == cli.EXIT_NUMERICAL

    document = json.loads( output.read_text() )

    assert document[ "passed" ] is False
    assert [ entry[ "check" ] for entry in document[ "entries" ] if not entry[ "passed" ] ] == [ "bergman_scaling" ]

#
def test_scan_and_plot( job_file, bergman_job, tmp_path ):

    bergman_job[ "scan" ] = { "order": 16, "angles": 4, "radii": [ 1.0, 2.0 ] }
    grid = tmp_path / "grid.csv"
    report = tmp_path / "report.json"
    svg = tmp_path / "plot.svg"
    job = job_file( bergman_job )

    assert _run( "scan", "-i", job, "-o", grid ) == cli.EXIT_OK
    assert len( grid.read_text().splitlines() ) == 9
    assert _run( "classify", "-i", job, "-o", report ) == cli.EXIT_OK
    assert _run( "plot", "-i", report, "--grid", grid, "-o", svg ) == cli.EXIT_OK
    assert svg.read_text().count( 'r="3.000"' ) == 8

#
def test_plot_of_an_empty_grid( tmp_path ):

    grid = tmp_path / "grid.csv"
    grid.write_text( "re,im,gap\n" )

    assert _run( "plot", "-i", grid ) == cli.EXIT_INPUT

#
def test_bad_thread_count( job_file, bergman_job, monkeypatch ):

    monkeypatch.setenv( "WRO_THREADS", "zero" )
    bergman_job[ "scan" ] = { "order": 8, "angles": 4, "radii": [ 1.0 ] }

    assert _run( "scan", "-i", job_file( bergman_job ) ) == cli.EXIT_INPUT

# outputs do not depend on the number of worker threads
@pytest.mark.parametrize( "command", [ "classify", "scan", "plot" ] )
def test_thread_count_does_not_change_output( command, job_file, bergman_job, tmp_path, monkeypatch ):

    bergman_job[ "scan" ] = { "order": 32, "angles": 16 }
    job = job_file( bergman_job )
    report = tmp_path / "report.json"
    _run( "classify", "-i", job, "-o", report )
    outputs = []

    for threads in ( "1", "8" ):

        monkeypatch.setenv( "WRO_THREADS", threads )
        output = tmp_path / f"{ command }-{ threads }.out"
        source = report if command == "plot" else job

        assert _run( command, "-i", source, "-o", output ) == cli.EXIT_OK

        outputs.append( output.read_bytes() )

    assert outputs[ 0 ] == outputs[ 1 ]

# grid files that cannot be written or read are input errors
def test_grid_file_errors( job_file, bergman_job, tmp_path ):

    bergman_job[ "scan" ] = { "order": 8, "angles": 4, "radii": [ 1.0 ] }
    job = job_file( bergman_job )
    report = tmp_path / "report.json"

    assert _run( "scan", "-i", job, "-o", tmp_path / "missing" / "grid.csv" ) == cli.EXIT_INPUT
    assert _run( "classify", "-i", job, "-o", report ) == cli.EXIT_OK
    assert _run( "plot", "-i", report, "--grid", tmp_path / "absent.csv" ) == cli.EXIT_INPUT
