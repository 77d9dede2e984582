"""Directed Oberwolfach factorizations of K*_n for n = 2 (mod 4).

Documents are plain dicts in the same JSON layout the command line tool writes.
"""

import json

from . import _oberwolfach
from ._oberwolfach import canonical_type, even_partitions

__all__ = [
    "Nonexistent",
    "canonical_type",
    "even_partitions",
    "export",
    "h_star",
    "j_decompose",
    "solve",
    "tables",
    "tables_check",
    "verify",
    "w_star",
]


class Nonexistent(Exception):
    """No factorization of the requested type exists."""


def solve(n, factor, seed=1, timeout_ms=600000, search_only=False, cache_path=""):
    """Return a verified F-factorization of K*_n as a dict.

    Raises Nonexistent for (6, [6]), TimeoutError when the small-order search
    runs out of time and ValueError for malformed or unsupported requests.
    """
    status, payload, _method = _oberwolfach.solve_json(n, factor, seed, timeout_ms, search_only, cache_path)
    if status == "nonexistent":
        raise Nonexistent(payload)
    if status == "timed_out":
        raise TimeoutError(payload)
    return json.loads(payload)


def verify(document):
    """Re-check a document (dict or JSON text); returns the report dict."""
    text = document if isinstance(document, str) else json.dumps(document)
    return json.loads(_oberwolfach.verify_json(text))


def export(host, factor, format="json"):
    """The construction for F on "JStar", "WStar" or "HStar" rendered in `format`."""
    return _oberwolfach.construction(host, factor, format)


def j_decompose(factor):
    return json.loads(export("JStar", factor))


def w_star(factor):
    return json.loads(export("WStar", factor))


def h_star(factor):
    return json.loads(export("HStar", factor))


def tables():
    return json.loads(_oberwolfach.tables_json())


def tables_check():
    """Audit the embedded tables; returns (cap rows, decomposition rows, failures)."""
    caps, rows, failures = _oberwolfach.tables_check()
    return caps, rows, list(failures)
