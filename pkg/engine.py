# import dependencies
from __future__ import annotations

import dataclasses
import logging
from typing import Any, Dict, List, Optional, Tuple

import config # type: ignore
from angles import Rotation # type: ignore
from checks import run_checks # type: ignore
from classify import classify # type: ignore
from ergodic import group_rotation_radius # type: ignore
from message_log import VerificationLedger # type: ignore
from oracle import PseudospectrumGrid, build_truncation, pseudospectrum_scan # type: ignore
from report import SpectrumReport # type: ignore
from set_kinds import SpectralSet # type: ignore
from spaces import BaseSpace # type: ignore
from weights import Weight # type: ignore

logger = logging.getLogger( __name__ )

# scan radii as multiples of each predicted radius
SCAN_FACTORS = ( 0.5, 0.75, 1.0, 1.25, 1.5 )

# parameters of the verify command
@dataclasses.dataclass( frozen=True )
class VerifyParams:

    n_ladder: Tuple[ int, ... ] = ( 64, 128, 256 ) # truncation orders of the gap trend
    rank_order: int = 64
    m_ladder: Tuple[ int, ... ] = ( 4, 16, 64 ) # smoothing lengths of the singular sequences
    peak_exponent: int = 400
    n_max: int = 200 # orbit horizon
    grid_size: int = 4096 # orbit base points
    circle_points: int = 8
    bloch_ladder: Tuple[ int, ... ] = ( 1, 10, 100, 1000, 10000 )
    bergman_ladder: Tuple[ int, ... ] = ( 1000, 3000, 10000 )

# parameters of the scan command
@dataclasses.dataclass( frozen=True )
class ScanParams:

    order: int = 128
    angles: int = 64
    radii: Optional[ Tuple[ float, ... ] ] = None # None: derived from the classification

# one job: a weighted rotation operator on a space plus command parameters
class Engine:

    def __init__(
        self,
        space: BaseSpace,
        weight: Weight,
        rotation: Rotation,
        verify: VerifyParams = VerifyParams(),
        scan: ScanParams = ScanParams(),
        tolerances: Optional[ Dict[ str, Any ] ] = None,
    ) -> None:

        self.space = space
        self.weight = weight
        self.rotation = rotation
        self.params = verify
        self.scan_params = scan
        self.overrides = dict( tolerances or {} )
        self.ledger = VerificationLedger()
        self._report: Optional[ SpectrumReport ] = None

    # the tolerances this job runs with
    @property
    def tolerances( self ) -> config.Tolerances:

        return dataclasses.replace( config.get_tolerances(), **self.overrides )

    # the classification, computed once
    @property
    def report( self ) -> SpectrumReport:

        if self._report is None:

            with config.using_tolerances( **self.overrides ):

                self._report = classify( self.space, self.weight, self.rotation )

        return self._report

    #
    def classify( self ) -> SpectrumReport:

        return self.report

    # spectral radius from the ergodic formula, roots of unity included
    def radius( self ) -> float:

        with config.using_tolerances( **self.overrides ):

            return group_rotation_radius( self.weight, self.rotation )

    # run every applicable check against the classification
    def verify( self ) -> VerificationLedger:

        self.ledger = VerificationLedger()

        # classification errors are input errors, not failed checks
        self.classify()

        with config.using_tolerances( **self.overrides ):

            run_checks( self )

        logger.info( "verification %s, %d entries", "passed" if self.ledger.passed else "failed", len( self.ledger.entries ) )

        return self.ledger

    # radii of the scan, from the job or around the predicted spectral circles
    def scan_radii( self ) -> List[ float ]:

        if self.scan_params.radii:

            return list( self.scan_params.radii )

        predicted = self.report[ SpectralSet.SIGMA ]
        sets = [ predicted.value ] + ( [ predicted.upper ] if predicted.upper is not None else [] )
        radii = sorted( { r for s in sets for r in s.boundary_radii() } ) or [ 1.0 ]

        return sorted( { factor * r for r in radii for factor in SCAN_FACTORS } )

    # resolvent gaps of the truncation on the scan grid
    def scan( self ) -> PseudospectrumGrid:

        with config.using_tolerances( **self.overrides ):

            truncation = build_truncation( self.space, self.weight, self.rotation, self.scan_params.order )

            return pseudospectrum_scan( truncation, self.scan_radii(), self.scan_params.angles )
