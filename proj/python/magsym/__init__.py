"""Generator algebra and magnetic translation checks for charged particles.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
