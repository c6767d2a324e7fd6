# import dependencies
from __future__ import annotations

from typing import Any, Callable, Dict, Mapping

import exceptions # type: ignore
from spaces.annulus import AnnulusHardy # type: ignore
from spaces.base_space import BaseSpace # type: ignore
from spaces.disc_algebra import DiscAlgebra # type: ignore
from spaces.ell_one import EllOneA # type: ignore
from spaces.hardy import HardyBanach, Hinf # type: ignore
from spaces.polydisc import PolydiscAlgebra, PolydiscBergman # type: ignore
from spaces.smooth import SmoothCnA, SobolevWnA # type: ignore
from spaces.trichotomy import Bergman, Bloch, Dirichlet # type: ignore

# variant name -> constructor taking the remaining fields of the "space" section
SPACES: Dict[ str, Callable[ ..., BaseSpace ] ] = {
    "disc_algebra": DiscAlgebra,
    "hinf": Hinf,
    "hardy_banach": HardyBanach,
    "bergman": Bergman,
    "bloch": Bloch,
    "dirichlet": Dirichlet,
    "smooth_cn": SmoothCnA,
    "sobolev_wn": SobolevWnA,
    "ell1a": EllOneA,
    "annulus_hardy": AnnulusHardy,
    "polydisc_algebra": PolydiscAlgebra,
    "polydisc_bergman": PolydiscBergman,
}

# build a space from the "space" section of a job document
def parse_space( document: Any ) -> BaseSpace:

    if not isinstance( document, Mapping ) or "variant" not in document:

        raise exceptions.MalformedInput( "space must be an object with a 'variant' field" )

    variant = document[ "variant" ]
    factory = SPACES.get( variant )

    if factory is None:

        raise exceptions.MalformedInput( f"unknown space variant { variant!r}, expected one of { sorted( SPACES ) }" )

    parameters = { key: value for key, value in document.items() if key != "variant" }

    try:

        return factory( **parameters )

    except TypeError:

        raise exceptions.MalformedInput( f"unexpected parameters { sorted( parameters ) } for space '{ variant }'" )
