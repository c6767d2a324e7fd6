# import dependencies
import numpy as np
import pytest

import config
import exceptions
from parallel import index_blocks, parallel_map

#
def test_overrides_are_scoped():

    default = config.get_tolerances().zero

    with config.using_tolerances( zero=1e-5 ) as tolerances:

        assert tolerances.zero == 1e-5
        assert config.get_tolerances().zero == 1e-5

    assert config.get_tolerances().zero == default

#
def test_tolerance_section():

    assert config.tolerance_overrides( { "merge_rel": 1e-6, "quad_max_points": 1024.0 } ) == {
        "merge_rel": 1e-6,
        "quad_max_points": 1024,
    }

    with pytest.raises( exceptions.MalformedInput ):

        config.tolerance_overrides( { "zero": "small" } )

@pytest.mark.parametrize( "raw, expected", [ ( "1", 1 ), ( " 8 ", 8 ) ] )
def test_thread_count_from_environment( raw, expected, monkeypatch ):

    monkeypatch.setenv( "WRO_THREADS", raw )

    assert config.thread_count() == expected

#
def test_thread_count_default( monkeypatch ):

    monkeypatch.delenv( "WRO_THREADS", raising=False )

    assert config.thread_count() >= 1

@pytest.mark.parametrize( "raw", [ "0", "-2", "many" ] )
def test_bad_thread_count( raw, monkeypatch ):

    monkeypatch.setenv( "WRO_THREADS", raw )

    with pytest.raises( exceptions.MalformedInput ):

        config.thread_count()

# results keep item order whatever thread runs them
def test_parallel_map_keeps_order( monkeypatch ):

    monkeypatch.setenv( "WRO_THREADS", "4" )
    def square( x ):

        return x * x

    assert parallel_map( square, list( range( 100 ) ) ) == [ x * x for x in range( 100 ) ]
    assert parallel_map( square, [] ) == []

#
def test_index_blocks_cover_the_range():

    blocks = index_blocks( 1100, 512 )

    assert [ block.size for block in blocks ] == [ 512, 512, 76 ]
    np.testing.assert_array_equal( np.concatenate( blocks ), np.arange( 1100 ) )
