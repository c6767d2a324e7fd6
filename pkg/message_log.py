# import dependencies
from __future__ import annotations

import json
import logging
from typing import Any, Dict, List, Optional

import numpy as np

logger = logging.getLogger( __name__ )

# plain JSON values for numpy scalars and arrays
def _plain( value: Any ) -> Any:

    if isinstance( value, np.ndarray ):

        return [ _plain( item ) for item in value.tolist() ]

    if isinstance( value, ( list, tuple ) ):

        return [ _plain( item ) for item in value ]

    if isinstance( value, dict ):

        return { str( key ): _plain( item ) for key, item in value.items() }

    if isinstance( value, np.generic ):

        value = value.item()

    if isinstance( value, complex ):

        return [ value.real, value.imag ]

    return value

# one outcome of a verification check
class LedgerEntry:

    def __init__( self, check: str, passed: bool, text: str, measured: Optional[ Dict[ str, Any ] ] = None ):

        self.check = check
        self.passed = passed
        self.text = text
        self.measured = _plain( measured or {} )
        self.count = 1

    # the text of this entry, including the count if it repeated
    @property
    def full_text( self ) -> str:

        if self.count > 1:

            return f"{ self.text } (x{ self.count })"

        return self.text

    #
    def to_dict( self ) -> Dict[ str, Any ]:

        return {
            "check": self.check,
            "passed": self.passed,
            "text": self.full_text,
            "count": self.count,
            "measured": self.measured,
        }

# pass/fail record of a verification run
class VerificationLedger:

    def __init__( self ) -> None:

        self.entries: List[ LedgerEntry ] = []

    # add an entry to this ledger, if "stack" is true it merges with an identical previous entry
    def add_entry(
        self,
        check: str,
        passed: bool,
        text: str,
        measured: Optional[ Dict[ str, Any ] ] = None,
        *,
        stack: bool = True,
    ) -> None:

        last = self.entries[ -1 ] if self.entries else None

        if stack and last and ( last.check, last.passed, last.text ) == ( check, passed, text ):

            last.count += 1

        else:

            self.entries.append( LedgerEntry( check, passed, text, measured ) )

        logger.log( logging.INFO if passed else logging.WARNING, "%s: %s", check, text )

    #
    @property
    def passed( self ) -> bool:

        return all( entry.passed for entry in self.entries )

    #
    @property
    def failures( self ) -> List[ LedgerEntry ]:

        return [ entry for entry in self.entries if not entry.passed ]

    #
    def to_dict( self ) -> Dict[ str, Any ]:

        return { "passed": self.passed, "entries": [ entry.to_dict() for entry in self.entries ] }

    #
    def to_json( self ) -> str:

        return json.dumps( self.to_dict(), indent=2, sort_keys=True ) + "\n"
