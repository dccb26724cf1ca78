"""Hankel determinants of perturbed Jacobi weights.

High-precision values are returned as decimal strings; convert with
``mpmath.mpf`` or ``decimal.Decimal`` as needed.
"""

import json

from ._core import (
    HdetError,
    HParseError,
    HPositivityError,
    PrecisionError,
    __version__,
    density,
    density_mass,
    fluid_recurrence,
    heine_average,
    log_barnes_g,
    logdet_asym,
    logdet_exact,
    parse_h,
    perturbed_logdet,
    policy_digits,
    prediction,
    run_json,
    support_endpoints,
)


def run(command, n, alpha="0", beta="0", h="1", digits=0, jobs=0):
    """Runs an hdet subcommand and returns its report as a dict."""
    if not isinstance(n, str):
        n = ",".join(str(v) for v in n)
    return json.loads(run_json(command, n, str(alpha), str(beta), h, digits, jobs))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
