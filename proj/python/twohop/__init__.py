# Copyright 2026 The twohop Authors
# SPDX-License-Identifier: Apache-2.0
"""Coverage of ground-BS to UAV-relay two-hop networks.

Configs are plain dicts using the JSON schema of the command-line tool;
missing keys take the built-in urban defaults.
"""

import json

from . import _twohop

__all__ = [
    "analytical_coverage",
    "cdf_t1",
    "cdf_t1_t3_joint",
    "cdf_t2",
    "default_window_radius",
    "environment_names",
    "resolve_config",
    "simulated_coverage",
    "validate_config",
    "version",
]

__version__ = _twohop.version()

version = _twohop.version
environment_names = _twohop.environment_names
cdf_t1 = _twohop.cdf_t1
cdf_t2 = _twohop.cdf_t2
cdf_t1_t3_joint = _twohop.cdf_t1_t3_joint


def _dump(config):
    return json.dumps(config or {}, sort_keys=True)


def _taus(tau_db):
    return [10.0 ** (t / 10.0) for t in sorted(set(tau_db))]


def resolve_config(config=None):
    """Full config with defaults filled in."""
    return json.loads(_twohop.resolve_config(_dump(config)))


def validate_config(config=None):
    """List of violated invariants; empty when the config is valid."""
    return _twohop.validate_config(_dump(config))


def default_window_radius(config=None):
    """Simulation window radius in meters."""
    return _twohop.default_window_radius(_dump(config))


def analytical_coverage(config=None, protocols=("af", "df"), tau_db=(-10.0, 0.0, 10.0), samples=20000,
                        replicates=16, seed=1, tolerance=0.01, window=0.0):
    """Analytical coverage rows, one dict per protocol and threshold.

    ``window`` is the interference truncation radius in meters: 0 mirrors
    the simulation window and ``math.inf`` integrates over the whole plane.
    """
    return _twohop.analytical_coverage(_dump(config), list(protocols), _taus(tau_db), samples, replicates, seed,
                                       tolerance, float(window))


def simulated_coverage(config=None, protocols=("af", "df"), tau_db=(-10.0, 0.0, 10.0), trials=20000, seed=1):
    """Monte Carlo coverage rows, one dict per protocol and threshold."""
    return _twohop.simulated_coverage(_dump(config), list(protocols), _taus(tau_db), trials, seed)


