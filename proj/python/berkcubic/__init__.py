"""Cubic rational maps over Puiseux series: Berkovich ramification loci.

Thin dict-based wrappers around the C++ core. Instances are dicts with
exactly one of "coefficients", "critical_data" or "pq" (series literals),
plus an optional integer "precision".
"""

import json as _json

import _berkcubic as _core

BerkError = _core.BerkError


def parse_series(text):
    """Normalize a series literal."""
    return _core.parse_series(text)


def validate(instance):
    return _json.loads(_core.validate(_json.dumps(instance)))


def classify(instance):
    """Case label, e.g. {"case": "2-1-2"}."""
    return _json.loads(_core.classify(_json.dumps(instance)))


def locus(instance, mode="oracle"):
    """Ramification-locus report; mode is symbolic | oracle | both."""
    return _json.loads(_core.locus(_json.dumps(instance), mode))


def multiplicity(instance, center, radius_exp):
    """Local degree at the disk point zeta_{center, radius_exp}."""
    return _core.multiplicity(_json.dumps(instance), center, str(radius_exp))


def trace(instance, grid=3):
    """Sampled multiplicities over the critical hull."""
    return _json.loads(_core.trace(_json.dumps(instance), grid))


def cross_check(instance):
    """Compare the symbolic table, the oracle and the theorem bullets."""
    return _json.loads(_core.cross_check(_json.dumps(instance)))


__all__ = [
    "BerkError",
    "parse_series",
    "validate",
    "classify",
    "locus",
    "multiplicity",
    "trace",
    "cross_check",
]
