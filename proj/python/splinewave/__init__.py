"""Cardinal B-spline scaling functions, wavelets, and their decay law."""

try:
    from ._core import *  # noqa: F401,F403
except ImportError:  # extension built outside the package (in-tree builds)
    from _core import *  # noqa: F401,F403

__version__ = "1.0.0"
