"""Exact-rational analysis of privacy/utility in two-stage data-release pipelines.

Thin re-export of the compiled _privpipe module. Matrices cross the boundary
as dicts: {"rows": [...], "cols": [...], "entries": [["p/q", ...], ...]} with
every number an exact fraction string.
"""

from _privpipe import *  # noqa: F401,F403
from _privpipe import __doc__ as _core_doc  # noqa: F401
