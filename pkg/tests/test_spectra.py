from fractions import Fraction

import numpy as np
import pytest

from twoeig.errors import ContractViolation
from twoeig.families import construct, friendship
from twoeig.generate import enumerate_graphs
from twoeig.graph import (
    add_isolated_edges,
    complete_graph,
    cycle_graph,
    disjoint_union,
    matching,
    path_graph,
    petersen_graph,
)
from twoeig.poly import RootCounter
from twoeig.spectra import (
    SpectrumSummary,
    TwoEigCertificate,
    approx_root,
    char_poly,
    classify_spectrum,
    count_roots_above,
    count_roots_with_multiplicity,
    in_class_G,
    psd_rank_check,
    strip_pm_one,
)


def test_strip_bowtie():
    s = strip_pm_one(char_poly(construct(friendship(2))))
    assert s == SpectrumSummary(1, 2, (-4, -1, 1))
    assert s.reconstruct() == char_poly(construct(friendship(2)))


def test_strip_requires_monic():
    with pytest.raises(ContractViolation):
        strip_pm_one((1, 2))


def test_classification_kinds():
    assert classify_spectrum(matching(3)).kind == "AllPmOne"
    c = classify_spectrum(add_isolated_edges(complete_graph(4), 2))
    assert c.kind == "OneExtra" and c.root == 3
    two_cliques = classify_spectrum(disjoint_union(complete_graph(3), complete_graph(4)))
    assert two_cliques.kind == "TwoExtra" and two_cliques.clique_union and two_cliques.certificate is None
    bowtie = classify_spectrum(construct(friendship(2)))
    assert bowtie.certificate == TwoEigCertificate(1, 2, 1, -4)
    assert classify_spectrum(petersen_graph()).kind == "MoreThanTwo"


def test_class_membership():
    assert in_class_G(construct(friendship(3))) is not None
    assert in_class_G(add_isolated_edges(construct(friendship(3)), 1)) is None  # disconnected
    assert in_class_G(complete_graph(4)) is None


def test_root_counting_variants():
    # K3 + 2K1: eigenvalues 2, 0, 0, -1, -1
    g = disjoint_union(
        disjoint_union(complete_graph(3), complete_graph(1)),
        complete_graph(1),
    )
    cp = char_poly(g)
    assert count_roots_above(cp, -1, strict=False) == 3  # distinct: 2, 0, -1
    assert count_roots_with_multiplicity(cp, -1, strict=False) == 5


def test_double_root_at_two():
    p_graph = disjoint_union(complete_graph(3), complete_graph(3))
    cp = char_poly(p_graph)
    assert count_roots_with_multiplicity(cp, 1) == 2
    assert count_roots_above(cp, 1) == 1


def test_approx_root_pentagon():
    lo, hi = approx_root(char_poly(cycle_graph(5)), 4)
    assert hi - lo <= Fraction(1, 10**9)
    assert lo < Fraction(-(1 + 5**0.5) / 2) <= hi + Fraction(1, 10**15)
    with pytest.raises(ContractViolation):
        approx_root(char_poly(cycle_graph(5)), 6)


def test_psd_rank_check_bowtie():
    rep = psd_rank_check(construct(friendship(2)))
    assert (rep.rank, rep.c1, rep.c0) == (2, 7, 8)
    assert rep.min_principal_minor >= 0
    with pytest.raises(ContractViolation):
        psd_rank_check(path_graph(4))


def test_sturm_roots_match_eigvalsh_small_graphs():
    worst = 0.0
    for n in range(1, 8):
        for g in enumerate_graphs(n):
            est = []
            for lo, hi, k in RootCounter(char_poly(g)).isolate_all():
                est += [float((lo + hi) / 2)] * k
            ev = np.sort(np.linalg.eigvalsh(np.array(g.adjacency_matrix(), dtype=float)))[::-1]
            assert len(est) == n
            worst = max(worst, float(np.max(np.abs(np.array(est) - ev))))
    assert worst <= 1e-6
