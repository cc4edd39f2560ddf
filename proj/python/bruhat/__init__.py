"""Bruhat order on Weyl groups, parabolic quotients and K-orbit graphs."""

from ._bruhat import *  # noqa: F401,F403
from ._bruhat import BruhatError, RootDatum, WeylElt, run_cli

__all__ = ["BruhatError", "RootDatum", "WeylElt", "run_cli"]
