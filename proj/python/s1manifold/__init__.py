"""Circle actions on 3-manifolds: classification data, capping and equivariant cohomology."""

import json
from fractions import Fraction

from ._core import (
    OrbitInvariants,
    betti_numbers,
    canonical,
    classify_2d,
    enumerate,
    equivalent,
    modular_inverse,
    normalize,
    orbit_euler_characteristic,
    parse,
    poincare_series,
    serialize,
)
from . import _core


def _datum(value):
    return value if isinstance(value, OrbitInvariants) else parse(value)


def validate(datum):
    return json.loads(_core._validate(_datum(datum)))


def canonical_form(datum):
    return json.loads(_core._canonical_form(_datum(datum)))


def derived_counts(datum):
    return json.loads(_core._derived_counts(_datum(datum)))


def cap_off(datum):
    return json.loads(_core._cap_off(_datum(datum)))


def is_formal(datum):
    return json.loads(_core._is_formal(_datum(datum)))


def euler_number(datum):
    """Fraction, 0, or None when the number is not defined."""
    result = json.loads(_core._euler_number(_datum(datum)))
    if result["kind"] == "undefined":
        return None
    return Fraction(result["value"]["num"], result["value"]["den"])


__all__ = [
    "OrbitInvariants",
    "betti_numbers",
    "canonical",
    "canonical_form",
    "cap_off",
    "classify_2d",
    "derived_counts",
    "enumerate",
    "equivalent",
    "euler_number",
    "is_formal",
    "modular_inverse",
    "normalize",
    "orbit_euler_characteristic",
    "parse",
    "poincare_series",
    "serialize",
    "validate",
]
