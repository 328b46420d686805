"""Python access to the mwcomb C++ core."""

import json

from ._mwcomb import (
    IdentityFailure,
    ValidationError,
    beta_sign,
    check_nilpotent,
    check_theta_sign,
    dual,
    j_psi,
    render_parameter,
    run_cli,
    subset_complex_homology,
)
from . import _mwcomb


def parse_parameter(text):
    return json.loads(_mwcomb.parse_parameter(text))


def signs(text):
    return json.loads(_mwcomb.signs_json(text))


def resolve(text, rule="minimal"):
    return json.loads(_mwcomb.resolve_json(text, rule))


def dominate(text, rule="minimal"):
    return json.loads(_mwcomb.dominate_json(text, rule))


__all__ = [
    "IdentityFailure",
    "ValidationError",
    "beta_sign",
    "check_nilpotent",
    "check_theta_sign",
    "dominate",
    "dual",
    "j_psi",
    "parse_parameter",
    "render_parameter",
    "resolve",
    "run_cli",
    "signs",
    "subset_complex_homology",
]
