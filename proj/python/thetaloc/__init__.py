"""Riemann theta functions with half-integer characteristics.

Thin re-export of the compiled extension; see the project README for the
library's scope (certified theta evaluation on the Siegel upper half space and
the incidence structure of the genus-3 reducible locus).
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
