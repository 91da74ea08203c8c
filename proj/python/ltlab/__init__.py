"""Python access to the ltlab verification routines.

Reports come back as dicts with exact values: ints, "a/b" strings for
rationals and coordinate lists for cyclotomic numbers.
"""

import json

from . import _ltlab
from ._ltlab import (
    GuardExceeded,
    InvalidArgument,
    brute_count,
    conway_polynomial,
    count_points,
    field_mul,
    identity_names,
)

__all__ = [
    "GuardExceeded",
    "InvalidArgument",
    "brute_count",
    "congruence_verify",
    "conjecture",
    "conway_polynomial",
    "count_points",
    "field_mul",
    "formal_verify",
    "identities",
    "identity_names",
    "predicted_s",
    "symmetry",
    "zeta",
]


def predicted_s(q, h, n):
    return int(_ltlab.predicted_s(q, h, n))


def conjecture(q, h, N, convention="artin_schreier", threads=0):
    return json.loads(_ltlab.conjecture_json(q, h, N, convention, threads))


def zeta(q, h, n=1):
    return json.loads(_ltlab.zeta_json(q, h, n))


def identities(q, h, names=None):
    names = identity_names() if names is None else names
    return [json.loads(_ltlab.identity_json(name, q, h)) for name in names]


def formal_verify(q, h, samples=3, prec=0, residue_degree=0, seed=1, threads=1):
    return json.loads(_ltlab.formal_verify_json(q, h, samples, prec, residue_degree, seed, threads))


def congruence_verify(q, h, samples=3, prec=0, residue_degree=0, seed=1, tie="least", threads=1):
    return json.loads(_ltlab.congruence_verify_json(q, h, samples, prec, residue_degree, seed, tie, threads))


def symmetry(q, h, n=1):
    return json.loads(_ltlab.symmetry_json(q, h, n))
