"""0-Hecke monoids, double Catalan monoids and Dyck paths."""

from ._catkit import *  # noqa: F401,F403
from ._catkit import __version__  # noqa: F401
