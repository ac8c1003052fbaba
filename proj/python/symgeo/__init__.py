"""Characteristic-number calculus for symplectic sum constructions."""

try:
    from ._core import *  # noqa: F401,F403  (installed wheel layout)
    from ._core import __version__  # noqa: F401
except ImportError:  # in-tree build: the extension sits on PYTHONPATH
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
