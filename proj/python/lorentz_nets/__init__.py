"""Contact congruences of oriented spheres in Lorentz 3-space.

Grid fields are numpy arrays of shape (height, width, ...) indexed [j, i].
Library failures raise LnetError (a ValueError) whose ``kind`` names the error.
"""

from ._core import *  # noqa: F401,F403
from ._core import LnetError, __doc__  # noqa: F401

__version__ = "0.1.0"
