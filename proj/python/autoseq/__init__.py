"""Automatic sequences, truncated power series over F_p, and morphic words.

Thin wrappers around the C++ core; report-like values come back as plain
dicts and lists.
"""

import json

from . import _core
from ._core import (
    Series,
    bfile,
    check_ids,
    compose,
    count_lengths,
    cross_check,
    fixed_point,
    pf_eigenvalue,
    prefix,
    rep,
    reversion,
    sequence_names,
    term,
)

__all__ = [
    "Series",
    "bfile",
    "check_ids",
    "compose",
    "count_lengths",
    "cross_check",
    "dfao",
    "dfao_dot",
    "dfao_eval",
    "fixed_point",
    "kernel_report",
    "minimize",
    "pf_eigenvalue",
    "prefix",
    "relation_search",
    "rep",
    "reversion",
    "run_checks",
    "sequence_names",
    "synthesize_dfao",
    "term",
]


def relation_search(series, depth, degree):
    """Relation c(X) + sum_i c_i(X) A(X^(p^i)) = 0 as a dict, or None."""
    found = _core.relation_search_json(series, depth, degree)
    return None if found is None else json.loads(found)


def dfao(name):
    """Built-in automaton (d, u, x, LF, Lprime, La, La1, La2) as a dict."""
    return json.loads(_core.dfao_json(name))


def minimize(automaton):
    return json.loads(_core.minimize_json(json.dumps(automaton)))


def dfao_eval(automaton, n, system="base2"):
    return _core.dfao_eval(json.dumps(automaton), n, system)


def dfao_dot(automaton):
    return _core.dfao_dot(json.dumps(automaton))


def kernel_report(name, k=2, depth=10, horizon=512):
    return json.loads(_core.kernel_report_json(name, k, depth, horizon))


def synthesize_dfao(terms, k=2, depth=10, horizon=512):
    return json.loads(_core.synthesize_dfao_json(list(terms), k, depth, horizon))


def run_checks(ids=(), horizons=None, jobs=1):
    return json.loads(_core.run_checks_json(list(ids), dict(horizons or {}), jobs))
