"""Graph embeddings on surfaces: face tracing, genus search, strong embeddings.

Thin wrapper over the C++ extension module. All vertices, edges and darts are
0-based on this side; the text file formats remain 1-based.
"""

import json as _json

from ._stronggenus import *  # noqa: F401,F403
from ._stronggenus import verify_hex as _verify_hex_json


def verify_hex(rings, cap=-1, threads=1, timeout=0.0):
    """Run the full verification pipeline on a hex-cylinder instance.

    Returns the report as a dict; see the README for the field contract.
    """
    return _json.loads(_verify_hex_json(rings, cap, threads, timeout))
