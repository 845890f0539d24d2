"""Classification of the TLeib_5 and TLeib_6 filiform Leibniz families.

Parameter tuples are dicts in the parameter-file shape used by the CLI::

    {"family": "TLeib", "dim": 5, "params": {"b00": "1", "b01": "0", ...}}

Exact scalars are strings such as ``"-3/2+1/4i"``; approximate ones are
``[re, im]`` pairs.
"""

import json

from ._filiform import FiliformError, ParseError, labels, normalize_scalar
from . import _filiform

__all__ = [
    "FiliformError",
    "ParseError",
    "classify",
    "isomorphic",
    "labels",
    "normalize_scalar",
    "representative",
    "sample",
    "table",
    "tleib",
    "verify",
]

_KEYS = {5: ("b00", "b01", "b11", "b12"), 6: ("b00", "b01", "b11", "b12", "b13", "b23")}
DEFAULT_TOL = 1e-12


def _scalar(x):
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, float):
        return [x, 0.0]
    return str(x)


def tleib(*values):
    """Parameter dict for a TLeib tuple given positionally (4 or 6 values)."""
    dim = {4: 5, 6: 6}.get(len(values))
    if dim is None:
        raise ValueError(f"expected 4 or 6 values, got {len(values)}")
    return {"family": "TLeib", "dim": dim, "params": dict(zip(_KEYS[dim], map(_scalar, values)))}


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def classify(params, tol=DEFAULT_TOL):
    return json.loads(_filiform.classify_json(_dump(params), tol))


def isomorphic(a, b, tol=DEFAULT_TOL):
    return json.loads(_filiform.isomorphic_json(_dump(a), _dump(b), tol))


def table(params):
    return json.loads(_filiform.table_json(_dump(params)))


def verify(obj):
    """Leibniz defect, lower central series and filiform flag of a table or parameter dict."""
    return json.loads(_filiform.verify_json(_dump(obj)))


def sample(label, seed):
    return json.loads(_filiform.sample_json(label, seed))


def representative(label, lambdas=()):
    return json.loads(_filiform.representative_json(label, [str(x) for x in lambdas]))
