"""Regularized factorization method for delamination imaging on the unit disk."""

try:
    from ._eitrfm import *  # noqa: F401,F403
    from ._eitrfm import __all__, __doc__  # noqa: F401
except ImportError:
    # plain CMake builds leave the extension next to the build tree
    from _eitrfm import *  # noqa: F401,F403
    from _eitrfm import __all__, __doc__  # noqa: F401
