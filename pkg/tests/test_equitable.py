import pytest

from twoeig.equitable import (
    Partition,
    coarsest_equitable_refinement,
    is_equitable,
    parse_partition,
    quotient_char_poly,
    quotient_matrix,
    verify_quotient_divides,
)
from twoeig.charpoly import char_poly_matrix
from twoeig.errors import ContractViolation
from twoeig.families import FamilySpec, construct, enumerate_instances, friendship, printed_partition
from twoeig.graph import complete_graph, cycle_graph, petersen_graph
from twoeig.poly import exact_div
from twoeig.spectra import char_poly


def printed(spec):
    g = construct(spec)
    return g, Partition(g.n, tuple(printed_partition(spec)))


def test_friendship_centre_split():
    g = construct(friendship(5))
    p = parse_partition("0|" + ",".join(map(str, range(1, 11))), 11)
    assert is_equitable(g, p)
    assert quotient_matrix(g, p) == [[0, 10], [1, 1]]
    assert quotient_char_poly(quotient_matrix(g, p)) == (-10, -1, 1)
    assert verify_quotient_divides(g, p)


def test_non_equitable_split():
    g = construct(friendship(2))
    p = parse_partition("0,1|2,3,4", 5)
    assert not is_equitable(g, p)
    with pytest.raises(ContractViolation):
        quotient_matrix(g, p)


def test_regular_single_cell():
    for g in (petersen_graph(), complete_graph(5), cycle_graph(7)):
        p = Partition.unit(g.n)
        assert is_equitable(g, p)
        assert quotient_matrix(g, p) == [[g.degree(0)]]
        assert verify_quotient_divides(g, p)
        assert coarsest_equitable_refinement(g, p) == p


@pytest.mark.parametrize("a,k", [(1, 2), (2, 7), (5, 3)])
def test_case_ii_quotient(a, k):
    g, p = printed(FamilySpec("ii", (a, k)))
    assert quotient_matrix(g, p) == [[a - 1, 2 * k], [a, 1]]


@pytest.mark.parametrize("a,m", [(3, 5), (4, 4)])
def test_case_vi_quotient(a, m):
    g, p = printed(FamilySpec("vi", (a, m)))
    assert quotient_matrix(g, p) == [[a - 1, m, 0], [a, 0, m - 1], [0, m - 1, 0]]


def test_case_iii_quotient_roots():
    g, p = printed(FamilySpec("iii", (2, 2)))
    qp = quotient_char_poly(quotient_matrix(g, p))
    assert qp == (-15, -2, 1)  # roots 5 and -3
    assert verify_quotient_divides(g, p)


def test_every_printed_partition_divides():
    for spec in enumerate_instances(30):
        g, p = printed(spec)
        assert is_equitable(g, p), spec
        assert verify_quotient_divides(g, p), spec


def test_refinement_examples():
    g = construct(friendship(4))
    r = coarsest_equitable_refinement(g, Partition.unit(g.n))
    assert sorted(len(c) for c in r.cells) == [1, 8]
    g = construct(FamilySpec("v", (6, 5)))
    r = coarsest_equitable_refinement(g, Partition.unit(g.n))
    assert sorted(len(c) for c in r.cells) == [1, 5, 6]


def test_refinement_is_equitable_and_idempotent():
    for spec in enumerate_instances(20):
        g = construct(spec)
        r = coarsest_equitable_refinement(g, Partition.unit(g.n))
        assert is_equitable(g, r)
        assert coarsest_equitable_refinement(g, r) == r


def test_j_shift_changes_only_quotient_factor():
    # subtract J from the clique block and the off-diagonal blocks of (ii)
    a, k = 3, 4
    spec = FamilySpec("ii", (a, k))
    g, p = printed(spec)
    n = g.n
    a_mat = g.adjacency_matrix()
    shifted = [row[:] for row in a_mat]
    for i in range(n):
        for j in range(n):
            if i < a or j < a:
                shifted[i][j] -= 1
    # A' = [[-I_a, O], [O, R_2k]]
    assert all(shifted[i][j] == (-1 if i == j else 0) for i in range(a) for j in range(n))
    q_orig = quotient_char_poly(quotient_matrix(g, p))
    q_shift = char_poly_matrix([[a - 1 - a, 2 * k - 2 * k], [a - a, 1]])
    rest_orig = exact_div(char_poly(g), q_orig)
    rest_shift = exact_div(char_poly_matrix(shifted), q_shift)
    assert rest_orig == rest_shift


def test_partition_validation():
    with pytest.raises(ValueError):
        parse_partition("0|0,1", 2)
    with pytest.raises(ValueError):
        parse_partition("0|2", 2)
    with pytest.raises(ValueError):
        parse_partition("0", 2)
    with pytest.raises(ValueError):
        parse_partition("a|b", 2)
    with pytest.raises(ValueError):
        is_equitable(complete_graph(3), Partition.unit(4))
