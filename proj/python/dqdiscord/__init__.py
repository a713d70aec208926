"""Phonon-mediated quantum discord between two quantum-dot excitonic qubits.

Thin wrapper around the compiled core: exact pure-dephasing propagation of a
two-qubit density matrix under a shared acoustic-phonon bath, geometric and
rescaled discord bounds, and the sweep drivers behind the dqdsim CLI.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
