from __future__ import annotations

import pytest

from shifted_crystals import build_graph, make_skew_shape


@pytest.fixture(scope="session")
def graph_cache():
    """Session-wide cache of built crystals keyed by (outer, inner, n)."""
    cache = {}

    def get(outer, inner=(), n=2):
        key = (tuple(outer), tuple(inner), n)
        if key not in cache:
            cache[key] = build_graph(make_skew_shape(outer, inner), n)
        return cache[key]

    return get
