from collections import Counter

import pytest

from chainpoly.labelings import (
    EdgeLabeling, HostMismatch, descent_set, flag_by_chain_enumeration, flag_from_labeling,
    gessel_labeling, phi_word, psi_word, strict_descent_set, typeB_labeling, verify_strict_R)
from chainpoly.lattices import boolean_lattice, partition_lattice, partition_lattice_B
from chainpoly.multisets import gen_words
from chainpoly.posets import beta_flag, maximal_chains


def _index(L, label):
    return L.labels.index(label)


def test_gessel_examples():
    L = partition_lattice(3)
    lam = gessel_labeling(L)
    bot = L.bottom
    assert lam(bot, _index(L, "12|3")) == 2
    assert lam(bot, _index(L, "13|2")) == 3
    increasing = [c for c in maximal_chains(L)
                  if all(a < b for a, b in zip(lam.word(c), lam.word(c)[1:]))]
    assert len(increasing) == 1


def test_gessel_label_range():
    L = partition_lattice(5)
    assert set(gessel_labeling(L).label.values()) == {2, 3, 4, 5}


def test_typeB_examples():
    L1 = partition_lattice_B(1)
    assert list(typeB_labeling(L1).label.values()) == [1]
    L = partition_lattice_B(2)
    lam = typeB_labeling(L)
    words = [lam.word(c) for c in maximal_chains(L)]
    assert sum(1 for w in words if w[0] < w[1]) == 1
    assert sum(1 for w in words if w[0] >= w[1]) == 3


def test_typeB_label_range():
    L = partition_lattice_B(4)
    assert set(typeB_labeling(L).label.values()) == {1, 2, 3, 4}


def test_host_mismatch():
    with pytest.raises(HostMismatch):
        gessel_labeling(partition_lattice_B(2))
    with pytest.raises(HostMismatch):
        typeB_labeling(partition_lattice(3))
    with pytest.raises(HostMismatch):
        psi_word(boolean_lattice(2), [0, 1, 3])


def test_strict_R_examples():
    assert verify_strict_R(gessel_labeling(partition_lattice(4))) == (True, None)
    assert verify_strict_R(typeB_labeling(partition_lattice_B(3))) == (True, None)
    B2 = boolean_lattice(2)
    zero = EdgeLabeling(B2, {e: 0 for e in B2.covers()})
    ok, witness = verify_strict_R(zero)
    assert not ok
    x, y, count = witness
    assert count == 0 and B2.rank[y] - B2.rank[x] == 2


def test_strict_R_larger():
    assert verify_strict_R(gessel_labeling(partition_lattice(5)))[0]


def test_flag_examples():
    b = flag_from_labeling(gessel_labeling(partition_lattice(3)))
    assert b[[]] == 1 and b[[1]] == 2
    L4 = partition_lattice(4)
    assert flag_from_labeling(gessel_labeling(L4)) == beta_flag(L4)
    bB = flag_from_labeling(typeB_labeling(partition_lattice_B(2)))
    assert bB[[]] == 1 and bB[[1]] == 3
    assert bB.h_polynomial().int_coeffs() == [1, 3]


@pytest.mark.parametrize("n", range(2, 8))
def test_gessel_flag_equals_rank_selection(n):
    L = partition_lattice(n)
    assert flag_from_labeling(gessel_labeling(L)) == beta_flag(L)


@pytest.mark.parametrize("n", range(1, 6))
def test_typeB_flag_equals_rank_selection(n):
    L = partition_lattice_B(n)
    assert flag_from_labeling(typeB_labeling(L)) == beta_flag(L)


@pytest.mark.parametrize("L,lab", [(partition_lattice(5), gessel_labeling),
                                   (partition_lattice_B(3), typeB_labeling)])
def test_state_dp_matches_enumeration(L, lab):
    lam = lab(L)
    assert flag_from_labeling(lam) == flag_by_chain_enumeration(lam)


def test_weak_descents():
    assert descent_set([3, 3, 1]) == 0b11
    assert strict_descent_set([3, 3, 1]) == 0b10


def test_psi_example():
    L = partition_lattice(3)
    chain = [L.bottom, _index(L, "12|3"), L.top]
    assert psi_word(L, chain) == (2, 2)


@pytest.mark.parametrize("n", range(3, 7))
def test_psi_descents_type_A(n):
    L = partition_lattice(n)
    lam = gessel_labeling(L)
    for c in maximal_chains(L):
        assert descent_set(lam.word(c)) == strict_descent_set(psi_word(L, c))


@pytest.mark.parametrize("n", range(1, 5))
def test_psi_descents_type_B(n):
    L = partition_lattice_B(n)
    lam = typeB_labeling(L)
    for c in maximal_chains(L):
        assert descent_set(lam.word(c)) == strict_descent_set(psi_word(L, c))


@pytest.mark.parametrize("n", range(2, 7))
def test_psi_multiset_is_A_star(n):
    L = partition_lattice(n)
    got = Counter(psi_word(L, c) for c in maximal_chains(L))
    want = Counter()
    for w, mult in gen_words("A-star", n):
        want[w] += mult
    assert got == want


@pytest.mark.parametrize("n", range(1, 5))
def test_psi_multiset_is_B_star(n):
    L = partition_lattice_B(n)
    got = Counter(psi_word(L, c) for c in maximal_chains(L))
    want = Counter()
    for w, mult in gen_words("B-star", n):
        want[w] += mult
    assert got == want


@pytest.mark.parametrize("n", range(1, 5))
def test_phi_injective_type_B(n):
    L = partition_lattice_B(n)
    chains = list(maximal_chains(L))
    assert len({phi_word(L, c) for c in chains}) == len(chains)


def test_psi_range_type_B_two():
    L = partition_lattice_B(2)
    words = {psi_word(L, c) for c in maximal_chains(L)}
    assert words == {(1, 1), (2, 1)}
