"""Exact symbolic engine for quantum cluster algebras at roots of unity."""

import json

from ._core import ParseError, Seed, a2_suite, classify_monoid, kernel

__all__ = ["ParseError", "Seed", "a2_suite", "classify_monoid", "kernel", "exchange_graph", "summary"]


def exchange_graph(seed, mode="unlabelled", max_seeds=10000):
    """Explore the exchange graph from `seed` and return it as a dict."""
    return json.loads(seed.exchange_graph_json(mode, max_seeds))


def summary(seed):
    return json.loads(seed.summary_json())
