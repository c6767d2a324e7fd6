# import dependencies
import json

import pytest

import exceptions
import weight_factories
from circular_set import EMPTY, Circle, CircularSet, ClosedDisc, OpenDisc
from classify import classify
from report import IndexEntry, SetEntry, SpectrumReport
from set_kinds import SpectralSet, Status
from spaces import AnnulusHardy, Bergman, EllOneA

#
def _sets( value ):

    return { kind: SetEntry.exact( value, "test" ) for kind in SpectralSet }

#
def test_bounds_collapse_when_both_sides_agree():

    disc = CircularSet( [ ClosedDisc( 1.0 ) ] )

    assert SetEntry.bounds( disc, disc, "c" ).status is Status.EXACT
    assert SetEntry.bounds( EMPTY, disc, "c" ).status is Status.BOUNDS

#
def test_index_must_be_an_integer_or_a_flag():

    IndexEntry( OpenDisc( 2.0 ), -1 )
    IndexEntry( OpenDisc( 2.0 ), "-inf" )

    with pytest.raises( exceptions.MalformedInput ):

        IndexEntry( OpenDisc( 2.0 ), "minus one" )

    with pytest.raises( exceptions.MalformedInput ):

        IndexEntry( OpenDisc( 2.0 ), True )

# every report the classifier writes reads back unchanged
@pytest.mark.parametrize( "space, w", [
    ( Bergman( 2 ), weight_factories.residual_pair ),
    ( Bergman( 2 ), weight_factories.z_minus_one ),
    ( EllOneA(), weight_factories.z_minus_one ),
    ( AnnulusHardy( 0.25, 2 ), weight_factories.residual_pair ),
] )
def test_json_round_trip( space, w ):

    report = classify( space, w, weight_factories.golden )
    again = SpectrumReport.from_json( report.to_json() )

    assert again.to_json() == report.to_json()
    assert again.sets == report.sets
    assert again.index_map == report.index_map

#
def test_json_schema_keys():

    report = classify( Bergman( 2 ), weight_factories.z_minus_two, weight_factories.golden )
    document = json.loads( report.to_json() )

    assert set( document ) == { "sets", "index_map", "citations", "open_flags", "inputs_echo" }
    assert document[ "sets" ][ "sigma" ] == { "components": [ { "circle": 2.0 } ], "status": "exact", "citation": "Thm 7.3(1)" }

#
def test_consistency_violations_are_reported():

    report = SpectrumReport( sets=_sets( CircularSet( [ Circle( 2.0 ) ] ) ) )

    # sigma_r equal to sigma overlaps sigma_ap
    assert "sigma_ap and sigma_r overlap" in report.consistency_violations()

    sets = _sets( CircularSet( [ Circle( 2.0 ) ] ) )
    sets[ SpectralSet.SIGMA_R ] = SetEntry.exact( EMPTY, "test" )
    sets[ SpectralSet.SIGMA_1 ] = SetEntry.exact( CircularSet( [ ClosedDisc( 2.0 ) ] ), "test" )

    assert SpectrumReport( sets=sets ).consistency_violations() == [ "sigma_1 is not contained in sigma_2" ]

#
@pytest.mark.parametrize( "text", [
    "not json",
    "[]",
    '{"sets": {"sigma_9": {"status": "exact"}}}',
    '{"sets": {"sigma": {"status": "guessed"}}}',
    '{"sets": {}, "citations": "Thm 7.3"}',
] )
def test_malformed_reports( text ):

    with pytest.raises( exceptions.MalformedInput ):

        SpectrumReport.from_json( text )
