"""Runtime limits for the brute-force oracles.

The default cap keeps full S_n sweeps at or below 10! words.  It can be
overridden per call, or globally through the INVPOLY_MAX_N environment
variable.
"""

import os

DEFAULT_MAX_N = 10


def max_n() -> int:
    raw = os.environ.get("INVPOLY_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    return int(raw)
