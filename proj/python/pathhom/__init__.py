"""Path homology and cyclomatic complexity of directed graphs."""

try:
    from ._core import *  # noqa: F401,F403
except ImportError:  # in-tree builds place _core next to this package
    from _core import *  # noqa: F401,F403

__version__ = "0.1.0"
