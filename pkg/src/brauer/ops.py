"""Backend selection for the matching kernels.

Imports the compiled kernels when the extension built, otherwise the
pure-Python twins.  Set BRAUER_PURE=1 to force the fallback (used by the
benchmark and by tests that cross-check the two backends).
"""

import os

if os.environ.get("BRAUER_PURE") == "1":
    from brauer._matchops import closure_cycles, compose_partners

    BACKEND = "python"
else:
    try:
        from brauer._speedups import closure_cycles, compose_partners

        BACKEND = "compiled"
    except ImportError:
        from brauer._matchops import closure_cycles, compose_partners

        BACKEND = "python"

__all__ = ["compose_partners", "closure_cycles", "BACKEND"]
