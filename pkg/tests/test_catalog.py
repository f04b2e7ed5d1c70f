import io
import json
from fractions import Fraction

import numpy as np
import pytest

from twoeig import graph6
from twoeig.catalog import (
    PRINTED_TOLERANCE,
    SECOND_LARGEST,
    SECOND_SMALLEST,
    catalog,
    check_entry,
    entry,
    export_catalog,
    scan_forbidden,
    validate_catalog,
)
from twoeig.families import construct, enumerate_instances, friendship
from twoeig.graph import complete_graph, cycle_graph, induced_subgraph, petersen_graph
from twoeig.iso import are_isomorphic
from twoeig.poly import evaluate
from twoeig.spectra import char_poly

NAMES = "ABCDEFGHJKLMNPQRST"


def test_catalog_shape():
    entries = catalog()
    assert "".join(e.name for e in entries) == NAMES
    assert [e.graph.n for e in entries] == [5] * 6 + [6] * 10 + [7] * 2
    assert all(e.bound_kind == SECOND_SMALLEST for e in entries[:6])
    assert all(e.bound_kind == SECOND_LARGEST for e in entries[6:])
    assert are_isomorphic(entry("A").graph, cycle_graph(5))


def test_entries_pairwise_nonisomorphic():
    entries = catalog()
    for i, e in enumerate(entries):
        for f in entries[i + 1:]:
            assert not are_isomorphic(e.graph, f.graph), (e.name, f.name)


@pytest.mark.parametrize("name", NAMES)
def test_exact_bound_violation(name):
    assert check_entry(entry(name)).bound_ok


@pytest.mark.parametrize("name", NAMES)
def test_bound_against_float_eigenvalues(name):
    e = entry(name)
    ev = np.sort(np.linalg.eigvalsh(np.array(e.graph.adjacency_matrix(), dtype=float)))[::-1]
    value = ev[e.root_index - 1]
    assert value > 1 if e.bound_kind == SECOND_LARGEST else value < -1
    lo, hi = check_entry(e).interval
    assert float(lo) - 1e-9 <= value <= float(hi) + 1e-9


@pytest.mark.parametrize("name", NAMES)
def test_printed_value_checksum(name):
    e = entry(name)
    c = check_entry(e)
    assert c.printed_match, f"{name}: computed {c.estimate:.6f}, printed {e.printed_value}"
    if not e.exact:
        assert abs(c.estimate - float(e.printed_value)) <= PRINTED_TOLERANCE


def test_known_values():
    lo, hi = check_entry(entry("A")).interval
    assert Fraction(-16180340, 10**7) <= lo < hi <= Fraction(-16180339, 10**7)
    assert check_entry(entry("K")).estimate == pytest.approx(3**0.5, abs=1e-9)
    assert evaluate(char_poly(entry("P").graph), 2) == 0


def test_report_lists_every_entry():
    rep = validate_catalog()
    assert [c.name for c in rep.checks] == list(NAMES)
    assert all(c.interval[1] - c.interval[0] <= Fraction(1, 10**9) for c in rep.checks)


def test_scanner():
    assert scan_forbidden(construct(friendship(10))) == []
    assert scan_forbidden(complete_graph(6)) == []
    hits = dict(scan_forbidden(petersen_graph()))
    w = hits["A"][0]
    assert are_isomorphic(induced_subgraph(petersen_graph(), w), cycle_graph(5))
    every = dict(scan_forbidden(petersen_graph(), all_witnesses=True))
    assert len(every["A"]) == 12


def test_family_members_avoid_catalog():
    for spec in enumerate_instances(16):
        assert scan_forbidden(construct(spec)) == [], spec


def test_export_roundtrip():
    g6, side = io.StringIO(), io.StringIO()
    export_catalog(g6, side)
    g6.seek(0)
    graphs = list(graph6.read_graph6(g6))
    meta = json.loads(side.getvalue())
    assert [m["name"] for m in meta] == list(NAMES)
    assert graphs == [e.graph for e in catalog()]
    assert meta[13] == {"name": "P", "bound_kind": SECOND_LARGEST, "printed_value": "2"}
