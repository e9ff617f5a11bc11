"""Gaussian ensembles of real cyclic matrices.

Sampling, closed-form spectra, generalized-parity diagnostics, analytic
spacing laws, and Monte Carlo goodness-of-fit experiments. The heavy lifting
lives in the compiled extension; this package adds thin conveniences for
working with run reports as dictionaries.
"""

import json as _json

from ._rcm import *  # noqa: F401,F403
from ._rcm import execute_json as _execute_json
from ._rcm import run_json as _run_json
from ._rcm import fourier_symmetry_report as _fourier_symmetry_report


def execute_report(config):
    """Run the configured experiments and return the report as a dict."""
    return _json.loads(_execute_json(config))


def run_report(config):
    """Like execute_report, but also writes data files into config.out_dir."""
    return _json.loads(_run_json(config))


def symmetry_report(n):
    """Parity diagnostics for the Fourier basis at dimension n, as a dict."""
    return _json.loads(_fourier_symmetry_report(n))
