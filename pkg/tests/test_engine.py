# import dependencies
import numpy as np
import pytest

import checks
import exceptions
import weight_factories
from engine import Engine, ScanParams, VerifyParams
from spaces import Bergman, Bloch, Hinf

#
def _entries( ledger, name ):

    return [ entry for entry in ledger.entries if entry.check == name ]

# the full default verification on the Bergman space
@pytest.mark.parametrize( "w", [
    weight_factories.z_minus_two,
    weight_factories.residual_pair,
    weight_factories.z_minus_one,
] )
def test_bergman_verification_passes( w ):

    engine = Engine( Bergman( 2 ), w, weight_factories.golden )
    ledger = engine.verify()

    assert ledger.passed, [ entry.to_dict() for entry in ledger.failures ]
    assert _entries( ledger, "report_consistency" )
    assert _entries( ledger, "diagonal_law" )
    assert _entries( ledger, "bergman_scaling" )

#
def test_rank_entry_counts_the_disc_zero():

    engine = Engine(
        Bergman( 2 ),
        weight_factories.residual_pair,
        weight_factories.golden,
        verify=VerifyParams( n_ladder=( 32, 64 ), m_ladder=( 4, 16 ), bergman_ladder=( 1000, 3000 ) ),
    )
    ( entry, ) = _entries( engine.verify(), "truncation_rank" )

    assert entry.passed
    assert entry.measured == { "rank": 63, "expected": 63 }

# T is the rotation itself, T_N is the diagonal of the rotation powers
def test_unit_weight_diagonal_law_on_hardy():

    engine = Engine( Hinf(), weight_factories.one, weight_factories.golden )
    ledger = engine.verify()
    ( entry, ) = _entries( ledger, "diagonal_law" )

    assert entry.passed
    assert entry.measured == { "mismatches": 0 }

#
def test_bloch_constant_check():

    engine = Engine( Bloch(), weight_factories.z_minus_two, weight_factories.golden )
    ( entry, ) = _entries( engine.verify(), "bloch_constant" )

    assert entry.passed, entry.text

# checks that do not fit the job are left out
def test_checks_only_where_they_apply():

    engine = Engine( Hinf(), weight_factories.z_minus_two, weight_factories.golden )
    names = { entry.check for entry in engine.verify().entries }

    assert "orbit_membership" in names
    assert "bloch_constant" not in names
    assert "bergman_scaling" not in names
    assert "report_consistency" in names

# an error inside a check is a failed entry, the other checks still run
def test_check_errors_are_recorded( monkeypatch ):

    def broken( self ):

        raise exceptions.NumericalFailure( "no convergence" )

    monkeypatch.setattr( checks.SmoothingIdentityCheck, "perform", broken )
    engine = Engine( Hinf(), weight_factories.z_minus_two, weight_factories.golden )
    ledger = engine.verify()
    ( entry, ) = _entries( ledger, "smoothing_identity" )

    assert not entry.passed
    assert entry.text == "NumericalFailure: no convergence"
    assert not ledger.passed
    assert _entries( ledger, "diagonal_law" )

#
def test_scan_radii_follow_the_spectrum():

    engine = Engine( Bergman( 2 ), weight_factories.z_minus_two, weight_factories.golden )

    np.testing.assert_allclose( engine.scan_radii(), [ 1.0, 1.5, 2.0, 2.5, 3.0 ] )

#
def test_scan_grid_shape():

    engine = Engine(
        Hinf(), weight_factories.z_minus_two, weight_factories.golden, scan=ScanParams( order=16, angles=6, radii=( 1.0, 3.0 ) )
    )
    grid = engine.scan()

    assert grid.order == 16
    assert grid.points.size == 12
    assert np.all( grid.gaps >= 0.0 )

#
def test_radius_and_classification_are_cached():

    engine = Engine( Bergman( 2 ), weight_factories.z_minus_two, weight_factories.golden )

    assert engine.radius() == pytest.approx( 2.0, rel=1e-9 )
    assert engine.classify() is engine.report

# a job the classifier rejects is not verified at all
def test_periodic_rotation_is_not_verified():

    engine = Engine( Bergman( 2 ), weight_factories.z_minus_two, weight_factories.cube_root )

    with pytest.raises( exceptions.PreconditionError ):

        engine.verify()
