# import dependencies
from __future__ import annotations

import logging
from typing import List, TYPE_CHECKING

import numpy as np
import scipy.linalg

import exceptions # type: ignore
from analysis import find_zeros # type: ignore
from angles import RotationAngle # type: ignore
from classify import point_spectrum_candidates # type: ignore
from ergodic import Verdict, ap_membership # type: ignore
from oracle import ( # type: ignore
    build_truncation,
    check_smoothing_identity,
    norm_asymptotics,
    pseudospectrum_scan,
    singular_sequence_residual,
    truncation_rank,
)
from set_kinds import SpectralSet # type: ignore
from weights import MultiPolynomial, Polynomial # type: ignore

if TYPE_CHECKING:
    from engine import Engine # type: ignore

logger = logging.getLogger( __name__ )

# interface for all verification checks
class VerificationCheck:

    name = "<abstract>"

    def __init__( self, engine: Engine ) -> None:

        self.engine = engine

    # whether the check makes sense for the engine's job
    def applies( self ) -> bool:

        return True

    # run the check and record the outcome in the engine's ledger
    def perform( self ) -> None:

        raise NotImplementedError()

    #
    def record( self, passed: bool, text: str, **measured: object ) -> None:

        self.engine.ledger.add_entry( self.name, passed, text, measured )

# checks that need the monomial matrix model of a one-variable weight
class MatrixModelCheck( VerificationCheck ):

    def applies( self ) -> bool:

        engine = self.engine

        return (
            engine.space.norm_tag is not None
            and isinstance( engine.rotation, RotationAngle )
            and not isinstance( engine.weight, MultiPolynomial )
            and engine.weight.is_analytic
        )

#
class ReportConsistencyCheck( VerificationCheck ):

    name = "report_consistency"

    def perform( self ) -> None:

        problems = self.engine.report.consistency_violations()

        if problems:

            self.record( False, "; ".join( problems ) )

        else:

            self.record( True, "set identities and containments hold" )

# the truncation is lower triangular with eigenvalues alpha^k w(0)
class DiagonalLawCheck( MatrixModelCheck ):

    name = "diagonal_law"

    def perform( self ) -> None:

        engine = self.engine
        order = engine.params.rank_order
        diagonal = build_truncation( engine.space, engine.weight, engine.rotation, order ).diagonal
        candidates = point_spectrum_candidates( engine.weight, engine.rotation, order )

        if not candidates:

            passed = not np.any( diagonal )
            self.record( passed, f"w(0) = 0, diagonal of T_{ order } vanishes: { passed }" )

            return

        mismatches = int( np.count_nonzero( diagonal != np.array( candidates ) ) )
        self.record( mismatches == 0, f"diagonal of T_{ order } equals alpha^k w(0) exactly", mismatches=mismatches )

# resolvent gaps shrink on the approximate point spectrum and stay put off the spectrum
class PseudospectrumTrendCheck( MatrixModelCheck ):

    name = "pseudospectrum_trend"

    def applies( self ) -> bool:

        report = self.engine.report

        return (
            super().applies()
            and report[ SpectralSet.SIGMA ].is_exact
            and report[ SpectralSet.SIGMA_AP ].is_exact
        )

    def perform( self ) -> None:

        engine = self.engine
        params = engine.params
        sigma = engine.report[ SpectralSet.SIGMA ].value
        on_radii = engine.report[ SpectralSet.SIGMA_AP ].value.boundary_radii()
        off_radii = sorted(
            { factor * r for r in sigma.boundary_radii() for factor in ( 0.75, 1.25 ) if not sigma.contains( factor * r ) }
        )
        ladder = sorted( params.n_ladder )

        if engine.weight.is_constant:

            self.record( True, "skipped: constant weight, T_N is diagonal" )

            return

        if not on_radii or len( ladder ) < 2:

            self.record( True, "skipped: no spectral circle or a single truncation order" )

            return

        radii = on_radii + off_radii
        gaps = np.array(
            [
                pseudospectrum_scan(
                    build_truncation( engine.space, engine.weight, engine.rotation, order ),
                    radii,
                    params.circle_points,
                    offset=0.5,
                ).gaps
                for order in ladder
            ]
        )
        split = len( on_radii ) * params.circle_points
        on, off = gaps[ :, :split ], gaps[ :, split: ]

        # compressions are nested, so gaps can only shrink; allow one numerical blip per 16 comparisons
        rises = int( np.count_nonzero( on[ 1: ] > on[ :-1 ] * ( 1.0 + 1e-9 ) ) )
        allowed = on[ 1: ].size // 16
        shrinking = bool( np.median( on[ -1 ] ) < np.median( on[ 0 ] ) )
        self.record(
            rises <= allowed and shrinking,
            f"gap on radii { on_radii } decreases over N = { ladder }",
            rises=rises,
            allowed=allowed,
            median_first=float( np.median( on[ 0 ] ) ),
            median_last=float( np.median( on[ -1 ] ) ),
        )

        if off.size:

            drops = int( np.count_nonzero( off[ -1 ] < 0.5 * off[ 0 ] ) )
            self.record(
                drops <= off[ 0 ].size // 16,
                f"gap on radii { off_radii } stays above half its N = { ladder[ 0 ] } value",
                drops=drops,
                min_ratio=float( np.min( off[ -1 ] / off[ 0 ] ) ),
            )

# numerical rank of T_N is N minus the zeros in the disc
class RankCheck( MatrixModelCheck ):

    name = "truncation_rank"

    def applies( self ) -> bool:

        return super().applies() and isinstance( self.engine.weight, Polynomial )

    def perform( self ) -> None:

        engine = self.engine
        order = engine.params.rank_order
        zeros = find_zeros( engine.weight, 1.0 )
        tol = engine.tolerances.zero

        if any( abs( abs( zero ) - 1.0 ) <= tol for zero, _ in zeros ):

            self.record( True, "skipped: the weight vanishes on the unit circle" )

            return

        inside = [ ( zero, multiplicity ) for zero, multiplicity in zeros if abs( zero ) < 1.0 ]

        # the kernel direction of T_N has size about |z|^N, it must sit below the rank threshold
        if any( abs( zero ) ** order > order * np.finfo( np.float64 ).eps for zero, _ in inside if zero != 0 ):

            self.record( True, f"skipped: a disc zero is too close to the circle for N = { order }" )

            return

        expected = order - sum( multiplicity for _, multiplicity in inside )
        rank = truncation_rank( build_truncation( engine.space, engine.weight, engine.rotation, order ) )
        self.record( rank == expected, f"rank { rank }/{ order }, expected { expected }", rank=rank, expected=expected )

# singular sequence residuals at a point of the approximate point spectrum decay with m
class ResidualDecayCheck( MatrixModelCheck ):

    name = "residual_decay"

    def applies( self ) -> bool:

        entry = self.engine.report[ SpectralSet.SIGMA_AP ]

        return (
            super().applies()
            and isinstance( self.engine.weight, Polynomial )
            and entry.is_exact
            and entry.value.max_radius > 0.0
        )

    def perform( self ) -> None:

        engine = self.engine
        params = engine.params
        lam = engine.report[ SpectralSet.SIGMA_AP ].value.max_radius
        residuals = [
            singular_sequence_residual(
                engine.space, engine.weight, engine.rotation, lam, m, params.peak_exponent, params.grid_size
            )
            for m in params.m_ladder
        ]
        decreasing = bool( np.all( np.diff( residuals ) < 0.0 ) )
        self.record(
            decreasing, f"residual at lambda = { lam:.6g} decreases over m = { list( params.m_ladder ) }", residuals=residuals
        )

# the smoothing identity holds on the truncation, scaled to unit norm
class SmoothingIdentityCheck( MatrixModelCheck ):

    name = "smoothing_identity"

    def perform( self ) -> None:

        engine = self.engine
        matrix = build_truncation( engine.space, engine.weight, engine.rotation, engine.params.rank_order ).matrix
        scale = scipy.linalg.norm( matrix, 2 )
        matrix = matrix / scale if scale > 0.0 else matrix
        deviation = max(
            check_smoothing_identity( matrix, eps, n ) for eps in ( 0.1, 0.5, 0.9 ) for n in ( 1, 3, 7 )
        )
        self.record( deviation < 1e-10, f"smoothing identity deviation { deviation:.3e}", deviation=deviation )

# orbit certificates agree with the classified approximate point spectrum
class OrbitMembershipCheck( VerificationCheck ):

    name = "orbit_membership"

    def applies( self ) -> bool:

        engine = self.engine

        return (
            isinstance( engine.rotation, RotationAngle )
            and not engine.rotation.is_periodic
            and not isinstance( engine.weight, MultiPolynomial )
            and engine.report[ SpectralSet.SIGMA_AP ].is_exact
        )

    def perform( self ) -> None:

        engine = self.engine
        params = engine.params
        sigma_ap = engine.report[ SpectralSet.SIGMA_AP ].value
        probes: List[ float ] = []

        for r in sigma_ap.boundary_radii():

            probes.append( r )
            probes.extend( factor * r for factor in ( 0.6, 0.75, 1.25 ) if not sigma_ap.contains( factor * r ) )

        for lam in probes:

            expected = sigma_ap.contains( lam )
            verdict = ap_membership( engine.weight, engine.rotation, lam, params.n_max, params.grid_size ).verdict

            if verdict is Verdict.INCONCLUSIVE:

                self.record( True, f"lambda = { lam:.6g}: orbit test inconclusive" )

                continue

            agrees = ( verdict is Verdict.CERTIFIED_IN ) == expected
            self.record( agrees, f"lambda = { lam:.6g}: { verdict.value }, classified in: { expected }" )

# Bloch norms of the peak functions match their closed form and its limit 2 / e
class BlochConstantCheck( VerificationCheck ):

    name = "bloch_constant"

    def applies( self ) -> bool:

        return self.engine.space.variant == "bloch"

    def perform( self ) -> None:

        result = norm_asymptotics( self.engine.space, self.engine.params.bloch_ladder )
        mismatch = float( np.max( np.abs( result.scaled / result.reference - 1.0 ) ) )
        limit_error = float( abs( result.reference[ -1 ] / result.limit - 1.0 ) )

        self.record(
            mismatch < 0.01 and limit_error < 0.01,
            f"||q_m|| matches the closed form within { mismatch:.2e} and 2/e within { limit_error:.2e} at m = { int( result.ladder[ -1 ] ) }",
            norms=result.scaled,
            reference=result.reference,
        )

# m^{3/2} ||q_m||^p settles to a constant in the Bergman space
class BergmanScalingCheck( VerificationCheck ):

    name = "bergman_scaling"

    def applies( self ) -> bool:

        return self.engine.space.variant == "bergman"

    def perform( self ) -> None:

        result = norm_asymptotics( self.engine.space, self.engine.params.bergman_ladder )
        mismatch = float( np.max( np.abs( result.scaled / result.reference - 1.0 ) ) )

        self.record(
            result.drift < 0.02 and mismatch < 1e-8,
            f"m^(3/2) ||q_m||^p drifts { result.drift:.2e} at the top of the ladder",
            drift=result.drift,
            mismatch=mismatch,
            scaled=result.scaled,
        )

CHECKS = (
    ReportConsistencyCheck,
    DiagonalLawCheck,
    PseudospectrumTrendCheck,
    RankCheck,
    ResidualDecayCheck,
    SmoothingIdentityCheck,
    OrbitMembershipCheck,
    BlochConstantCheck,
    BergmanScalingCheck,
)

# run every applicable check; a failing check is recorded, never raised
def run_checks( engine: Engine ) -> None:

    for check_class in CHECKS:

        check = check_class( engine )

        if not check.applies():

            logger.debug( "%s does not apply", check.name )

            continue

        try:

            check.perform()

        except exceptions.WroError as error:

            check.record( False, f"{ type( error ).__name__ }: { error }" )
