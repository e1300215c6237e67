"""Exact Jack polynomials, interpolation polynomials and binomial positivity.

Partitions are sequences of ints such as ``(3, 1)``. Rational functions in t
are canonical strings such as ``"(2*t+2)/(t+2)"``. Symmetric polynomials are
dicts ``{"n", "basis", "terms": [{"partition", "coeff"}]}``.
"""

import json

from . import _jackpos
from ._jackpos import (
    ParseError,
    UnsupportedRange,
    binomial,
    binomial_table_csv,
    cone_member,
    contains,
    dominates,
    h_normalizer,
    ratfun_eval,
    ratfun_normalize,
    weakly_dominates,
)

__all__ = [
    "ParseError",
    "UnsupportedRange",
    "binomial",
    "binomial_table",
    "binomial_table_csv",
    "cone_member",
    "contains",
    "difference_expansion",
    "dominates",
    "h_normalizer",
    "interp",
    "interp_tableau",
    "jack",
    "ratfun_eval",
    "ratfun_normalize",
    "schur",
    "shifted_expansion",
    "sympoly_normalize",
    "verify",
    "weakly_dominates",
]


def schur(shape, n):
    return json.loads(_jackpos.schur(list(shape), n))


def jack(shape, n):
    return json.loads(_jackpos.jack(list(shape), n))


def interp(shape, n, monic=False):
    return json.loads(_jackpos.interp(list(shape), n, monic))


def interp_tableau(shape, n):
    return json.loads(_jackpos.interp_tableau(list(shape), n))


def sympoly_normalize(poly):
    """Parse a symmetric-polynomial dict and return its canonical form."""
    return json.loads(_jackpos.sympoly_normalize(json.dumps(poly)))


def _coeff_dict(text):
    return {tuple(e["partition"]): e["coeff"] for e in json.loads(text)}


def shifted_expansion(lam, n):
    """{nu: binom(lam, nu)} from the shift-and-expand pipeline."""
    return _coeff_dict(_jackpos.shifted_expansion(list(lam), n))


def difference_expansion(lam, mu, n):
    return _coeff_dict(_jackpos.difference_expansion(list(lam), list(mu), n))


def binomial_table(d, n):
    return json.loads(_jackpos.binomial_table_json(d, n))


def verify(claim, d, n, tau="", grid="dense", threads=0):
    """Run a verification sweep and return its report as a dict."""
    return json.loads(_jackpos.verify(claim, d, n, tau, grid, threads))
