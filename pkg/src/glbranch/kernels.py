"""Kernel dispatch: compiled line kernels when available, pure Python otherwise.

Set ``GLBRANCH_PURE=1`` to force the pure-Python kernels.
"""

from __future__ import annotations

import os

from . import _lines

_PURE_ONLY = ("restrict", "precedes", "linked", "neg", "upward_sequence", "downward_sequence",
              "upward_sequences", "downward_sequences", "removal_right", "generic_witness")
_COMPILED = ("derivative_right", "integral_right", "mw_dual", "hd_right_z", "ul", "is_generic")

backend = "python"
_impl = _lines
if os.environ.get("GLBRANCH_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        backend = "cython"
    except ImportError:
        _impl = _lines

restrict = _lines.restrict
precedes = _lines.precedes
linked = _lines.linked
neg = _lines.neg
upward_sequence = _lines.upward_sequence
downward_sequence = _lines.downward_sequence
upward_sequences = _lines.upward_sequences
downward_sequences = _lines.downward_sequences
removal_right = _lines.removal_right
generic_witness = _lines.generic_witness

derivative_right = _impl.derivative_right
integral_right = _impl.integral_right
mw_dual = _impl.mw_dual
hd_right_z = _impl.hd_right_z
ul = _impl.ul
is_generic = _impl.is_generic
