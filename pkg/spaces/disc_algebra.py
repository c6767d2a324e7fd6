# import dependencies
from __future__ import annotations

import dataclasses

from angles import Rotation # type: ignore
from report import SpectrumReport # type: ignore
from set_kinds import SpectralSet # type: ignore
from spaces.base_space import BaseSpace # type: ignore
from weights import Weight # type: ignore

# functions analytic in the disc and continuous on its closure; the residual disc radius
# is |w_e(0)| since Haar measure is the only invariant measure of the rotation
class DiscAlgebra( BaseSpace ):

    variant = "disc_algebra"
    required_tags = frozenset( { "disc_algebra" } )
    case_citations = { 1: "Thm 6.1(4)(I)", 2: "Thm 6.1(4)(III)", 3: "Thm 6.1(4)(II)" }

    def classify( self, w: Weight, alpha: Rotation ) -> SpectrumReport:

        case = self.invertibility_case( w )
        report = self.trichotomy_report( w, case )

        if case == 2:

            # one variable: sigma_3 = sigma_1 and sigma_4 = sigma
            for kind in ( SpectralSet.SIGMA_3, SpectralSet.SIGMA_4 ):

                report.sets[ kind ] = dataclasses.replace( report.sets[ kind ], citation="Ex 6.3(a)" )

            report.citations.append( "Ex 6.3(a)" )

        return report
