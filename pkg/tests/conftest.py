"""Shared fixtures: the small named corpus and the two Cayley graphs."""

from __future__ import annotations

import pytest

from iharalab.graphs import certify_regular, named_graph
from iharalab.lps import build_lps
from iharalab.spectral import eigendecompose

NAMED = ("K3", "K4", "K33", "PETERSEN", "CUBE")


@pytest.fixture(scope="session")
def corpus():
    """name -> (graph, certificate) for the five named graphs."""
    out = {}
    for name in NAMED:
        g = named_graph(name)
        out[name] = (g, certify_regular(g))
    return out


@pytest.fixture(scope="session")
def spectra(corpus):
    """name -> SpectralData for the named corpus."""
    return {name: eigendecompose(g, cert) for name, (g, cert) in corpus.items()}


@pytest.fixture(scope="session")
def x135():
    """(graph, params, cert, sd) for the 14-regular bipartite Cayley graph."""
    g, params = build_lps(13, 5)
    cert = certify_regular(g)
    sd = eigendecompose(g, cert)
    return g, params, cert, sd


@pytest.fixture(scope="session")
def x513():
    """(graph, params, cert) for the 6-regular graph on 2184 vertices.

    No eigendecomposition here; tests that need the spectrum compute it
    themselves so its cost is attributed to them.
    """
    g, params = build_lps(5, 13)
    return g, params, certify_regular(g)
