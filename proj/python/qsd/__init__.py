"""Quantum state discrimination toolkit (python bindings)."""

try:
    from qsd._qsd import *  # noqa: F401,F403  (installed package layout)
    from qsd._qsd import __doc__ as _doc
except ImportError:
    from _qsd import *  # noqa: F401,F403  (in-tree build layout)
    from _qsd import __doc__ as _doc

__doc__ = _doc
