from __future__ import annotations

import networkx as nx
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def nx_cliques(g, k):
    """k-cliques via networkx, as a set of sorted tuples (independent oracle)."""
    return {tuple(sorted(c)) for c in nx.enumerate_all_cliques(to_nx(g)) if len(c) == k}


ACCEPTANCE_LINES = {}


def record(n, ok, detail):
    """Store the pass/fail line for acceptance criterion n."""
    ACCEPTANCE_LINES[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
