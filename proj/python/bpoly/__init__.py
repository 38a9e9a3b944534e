"""Python bindings for the bpoly library.

Inputs are digraph, mixed graph or graph descriptions in the text format
("digraph 2; 1 2") or the JSON format. Polynomials come back as dicts with
"vars" and "terms" keys.
"""

import json

from . import _core
from ._core import ArithmeticError, ParseError, PreconditionError, check_ids

__all__ = [
    "ArithmeticError",
    "ParseError",
    "PreconditionError",
    "b_poly",
    "b_eval_direct",
    "b_w",
    "check",
    "check_ids",
    "potts",
    "pretty",
    "qsym_b",
    "structure",
    "survey",
    "t_mixed",
    "tutte",
]


def b_poly(text):
    return json.loads(_core.b_poly(text))


def b_eval_direct(text, q):
    return json.loads(_core.b_eval_direct(text, q))


def b_w(text, word):
    return json.loads(_core.b_w(text, word))


def qsym_b(text):
    return json.loads(_core.qsym_b(text))


def potts(text):
    return json.loads(_core.potts(text))


def tutte(text):
    return json.loads(_core.tutte(text))


def t_mixed(text, which):
    return json.loads(_core.t_mixed(text, which))


def structure(text):
    return json.loads(_core.structure(text))


def pretty(poly):
    return _core.pretty(json.dumps(poly))


def check(check_id, text, rotation=None):
    """Runs one check for every applicable parameter set; returns report dicts."""
    rot = json.dumps(rotation) if rotation is not None else ""
    return json.loads(_core.check(check_id, text, rot))


def survey(n, m, checks=(), jobs=1):
    return json.loads(_core.survey(n, m, list(checks), jobs))
