import math

import numpy as np
import pytest

from twoeig.classifier import check_structure_rules
from twoeig.families import (
    FamilySpec,
    construct,
    enumerate_instances,
    expected_certificate,
    expected_spectrum,
    friendship,
    parse_family_spec,
    verify_family,
)
from twoeig.graph import complete_graph, cycle_graph, is_bipartite, is_connected
from twoeig.iso import are_isomorphic, contains_induced


def eigenvalues(g):
    return np.sort(np.linalg.eigvalsh(np.array(g.adjacency_matrix(), dtype=float)))[::-1]


def test_small_constructions():
    assert are_isomorphic(construct(FamilySpec("i", (3,))), cycle_graph(6))
    bowtie = construct(FamilySpec("ii", (1, 2)))
    assert (bowtie.n, bowtie.num_edges) == (5, 6)
    assert sorted(bowtie.degrees()) == [2, 2, 2, 2, 4]
    iv1 = construct(FamilySpec("iv", (1,)))
    assert (iv1.n, iv1.num_edges) == (10, 13) and is_bipartite(iv1)
    iv2 = construct(FamilySpec("iv", (2,)))
    assert iv2.n == 12 and is_bipartite(iv2)


def test_reverse_identity_block():
    # in (ii) the matching pairs vertex a+i with a+2k-1-i
    g = construct(FamilySpec("ii", (2, 3)))
    assert all(g.has_edge(2 + i, 2 + 5 - i) for i in range(3))


def test_closed_forms():
    assert expected_certificate(friendship(16)).signature == (15, 16, 1, -32)
    assert expected_certificate(FamilySpec("iii", (2, 2))).signature == (2, 4, 2, -15)
    assert expected_certificate(FamilySpec("vi", (3, 5))).signature == (5, 6, 1, -32)
    assert expected_spectrum(FamilySpec("i", (4,))).residual == (-9, 0, 1)
    with pytest.raises(ValueError):
        expected_certificate(friendship(1))


@pytest.mark.parametrize("a", range(1, 7))
def test_case_ii_radical_against_float_eigenvalues(a):
    # independent check of the radical (a +- sqrt(a^2 + 8ak - 4a + 4)) / 2
    for k in range(2, 13):
        ev = eigenvalues(construct(FamilySpec("ii", (a, k))))
        root = math.sqrt(a * a + 8 * a * k - 4 * a + 4)
        assert ev[0] == pytest.approx((a + root) / 2, abs=1e-9)
        assert ev[-1] == pytest.approx((a - root) / 2, abs=1e-9)
        assert verify_family(FamilySpec("ii", (a, k)))


@pytest.mark.parametrize(
    "spec,r,s",
    [
        ("v:a=6,b=5", 4 + 2 * math.sqrt(10), 4 - 2 * math.sqrt(10)),
        ("v:a=4,b=6", (7 + math.sqrt(129)) / 2, (7 - math.sqrt(129)) / 2),
        ("v:a=3,b=8", 4 + math.sqrt(37), 4 - math.sqrt(37)),
        ("vi:a=3,m=5", (1 + math.sqrt(129)) / 2, (1 - math.sqrt(129)) / 2),
        ("vi:a=4,m=4", 1 + 2 * math.sqrt(7), 1 - 2 * math.sqrt(7)),
        ("iv:1", 3, -3),
        ("iv:2", 4, -4),
    ],
)
def test_sporadic_extreme_eigenvalues(spec, r, s):
    ev = eigenvalues(construct(parse_family_spec(spec)))
    assert ev[0] == pytest.approx(r, abs=1e-9) and ev[-1] == pytest.approx(s, abs=1e-9)


def test_corrupted_construction_fails():
    spec = FamilySpec("ii", (2, 4))
    g = construct(spec)
    for u, v in [(0, 1), (0, 5), (2, 3)]:
        assert not verify_family(spec, g.flip_edge(u, v))


def test_instance_lists():
    assert enumerate_instances(5) == [friendship(2).normalized()]
    eight = {str(s) for s in enumerate_instances(8)}
    assert eight == {
        "i:m=3", "i:m=4", "ii:a=1,k=2", "ii:a=1,k=3", "ii:a=2,k=2",
        "ii:a=2,k=3", "ii:a=3,k=2", "ii:a=4,k=2", "iii:l=2,m=2",
    }
    thirteen = enumerate_instances(13)
    assert FamilySpec("vi", (3, 5)) in thirteen and FamilySpec("v", (4, 6)) in thirteen
    assert len(set(enumerate_instances(40))) == len(enumerate_instances(40))
    with pytest.raises(ValueError):
        enumerate_instances(4)


def test_every_instance_up_to_40():
    triangle = complete_graph(3)
    for spec in enumerate_instances(40):
        g = construct(spec)
        assert g.n == spec.n
        assert verify_family(spec), spec
        assert is_connected(g)
        assert check_structure_rules(g).ok, spec
        has_triangle = contains_induced(g, triangle) is not None
        assert has_triangle == (spec.kind not in ("i", "iv")), spec
        assert is_bipartite(g) == (spec.kind in ("i", "iv"))


def test_friendship_alias():
    for k in range(2, 9):
        assert construct(friendship(k)) == construct(FamilySpec("ii", (1, k)))
    assert are_isomorphic(construct(friendship(1)), complete_graph(3))


@pytest.mark.parametrize(
    "text", ["i:m=3", "ii:a=1,k=16", "iii:l=4,m=3", "iv:1", "v:a=4,b=6", "vi:a=3,m=5", "friendship:k=16"]
)
def test_parse_roundtrip(text):
    assert str(parse_family_spec(text)) == text


@pytest.mark.parametrize(
    "text",
    ["i:m=2", "ii:a=0,k=3", "ii:a=1,k=1", "iii:l=2,m=3", "iv:3", "v:a=5,b=5", "vi:a=1,m=1",
     "vii:m=3", "ii:a=1", "ii:a=1,k=x", "ii:a=1,a=2,k=3", "nonsense"],
)
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_family_spec(text)
