# import dependencies
import json
import os
import sys

import pytest

# modules live at the repository root, next to main.py
sys.path.insert( 0, os.path.dirname( os.path.abspath( __file__ ) ) )

# write a job document and return its path
@pytest.fixture
def job_file( tmp_path ):

    def write( document, name="job.json" ):

        path = tmp_path / name
        path.write_text( json.dumps( document ) )

        return path

    return write

# job documents used across the command tests
@pytest.fixture
def bergman_job():

    return {
        "weight": { "type": "poly", "coeffs": [ [ -2, 0 ], [ 1, 0 ] ] },
        "rotation": { "kind": "named", "name": "golden" },
        "space": { "variant": "bergman", "p": 2 },
    }
