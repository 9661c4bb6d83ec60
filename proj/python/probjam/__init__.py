"""Covert communication with a probabilistic jammer."""

from ._core import *  # noqa: F401,F403
from ._core import InvalidParameter, SystemParams, run_cli  # noqa: F401
