import random
from collections import Counter
from itertools import product

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from chainpoly.abindex import (
    ABPolynomial, ab_index, derivation_D, from_flag, lpeak_of_mask, omega, prism_ab, prism_h,
    pyr_ab, pyr_h, sd2_gamma, sd2_h, zonotope_ab, zonotope_h_from_flags)
from chainpoly.lattices import (boolean_lattice, cube_face_lattice, partition_lattice,
                                partition_lattice_B, simplex_face_lattice, uniform_flats)
from chainpoly.multisets import lpeak_set
from chainpoly.polynomials import Poly, eulerian_A, eulerian_B, interlaces, is_real_rooted
from chainpoly.posets import beta_flag, chain_poset, h_of_bounded, prism_poset, pyramid_poset

from helpers import random_graded


def P(text):
    return ABPolynomial.parse(text)


# -- string-level oracles ------------------------------------------------------------

def omega_strings(word):
    """Expand omega of one word as a Counter of strings."""
    pieces, i = [], 0
    while i < len(word):
        if word[i:i + 2] == "ab":
            pieces.append({"ab": 2, "ba": 2})
            i += 2
        else:
            pieces.append({"a": 1, "b": 1})
            i += 1
    out = Counter()
    for combo in product(*[list(p.items()) for p in pieces]):
        c = 1
        for _, k in combo:
            c *= k
        out["".join(s for s, _ in combo)] += c
    return out


def D_strings(word):
    out = Counter()
    for i in range(len(word)):
        for repl in ("ab", "ba"):
            out[word[:i] + repl + word[i + 1:]] += 1
    return out


def from_counter(n, counter):
    out = ABPolynomial(n)
    for w, c in counter.items():
        out = out + ABPolynomial.word(w, c)
    return out


words = st.integers(0, 6).flatmap(lambda k: st.text("ab", min_size=k, max_size=k))


# -- ABPolynomial basics -----------------------------------------------------------

def test_parse_and_print():
    p = P("2ab + ba - 3bb")
    assert p.n == 2
    assert p.to_json() == {"ab": 2, "ba": 1, "bb": -3}
    assert str(p) == "2ab + ba - 3bb"
    assert P(str(p)) == p
    assert ABPolynomial.from_json(p.to_json()) == p
    assert str(ABPolynomial.unit()) == "1"
    with pytest.raises(ValueError):
        P("ab + a")
    with pytest.raises(ValueError):
        ABPolynomial.word("abc")


def test_specialize_and_flag():
    p = P("a + 2b")
    assert p.specialize() == Poly([1, 2])
    assert p.to_flag()[[1]] == 2
    assert from_flag(p.to_flag()) == p


# -- ab-index ------------------------------------------------------------------------

def test_ab_index_examples():
    assert ab_index(boolean_lattice(2)) == P("a + b")
    assert ab_index(partition_lattice(3)) == P("a + 2b")
    assert ab_index(chain_poset(2)) == ABPolynomial.unit()


@pytest.mark.parametrize("build", [
    lambda: boolean_lattice(5), lambda: partition_lattice(6), lambda: partition_lattice_B(4),
    lambda: cube_face_lattice(4), lambda: simplex_face_lattice(4), lambda: uniform_flats(6, 4)])
def test_specialization_is_h(build):
    L = build()
    assert ab_index(L).specialize() == h_of_bounded(L)


def test_specialization_is_h_rank_seven():
    L = boolean_lattice(7)
    assert ab_index(L).specialize() == h_of_bounded(L)


def test_boolean_ab_index_counts_descents():
    psi = ab_index(boolean_lattice(4))
    assert sum(psi.terms.values()) == 24
    assert all(len(w) == 3 for w in psi.to_json())


# -- omega and D ---------------------------------------------------------------------

def test_omega_examples():
    assert omega("a") == P("a + b")
    assert omega("ab") == P("2ab + 2ba")
    assert omega("aa") == P("aa + ab + ba + bb")


def test_D_examples():
    assert derivation_D("a") == P("ab + ba")
    assert derivation_D("ab") == P("abb + bab + aab + aba")
    assert derivation_D(ABPolynomial.unit()).is_zero()


@given(words)
@settings(max_examples=200, deadline=None)
def test_omega_matches_string_oracle(w):
    assert omega(w) == from_counter(len(w), omega_strings(w))


@given(words)
@settings(max_examples=200, deadline=None)
def test_D_matches_string_oracle(w):
    assert derivation_D(w) == from_counter(len(w) + 1, D_strings(w))


@given(words, words)
@settings(max_examples=100, deadline=None)
def test_D_is_a_derivation(u, v):
    U, V = ABPolynomial.word(u), ABPolynomial.word(v)
    assert derivation_D(U * V) == derivation_D(U) * V + U * derivation_D(V)


# -- pyramid and prism on ab-indices ---------------------------------------------------

def test_pyr_prism_examples():
    assert pyr_ab(ABPolynomial.unit()) == P("a + b")
    assert pyr_ab(P("a + b")) == ab_index(boolean_lattice(3))
    assert prism_ab(ABPolynomial.unit()) == P("a + b")


@given(st.integers(0, 5).flatmap(
    lambda k: st.dictionaries(st.text("ab", min_size=k, max_size=k), st.integers(-9, 9))))
@settings(max_examples=100, deadline=None)
def test_pyr_numerator_always_even(terms):
    # mod 2, D(w) = w(a+b) + (a+b)w, so halving never fails on integer input
    psi = ABPolynomial.from_json(terms)
    n = len(next(iter(terms))) if terms else 0
    psi = psi if psi.terms else ABPolynomial(n)
    assert pyr_ab(psi).scale(2) == (psi * P("a + b") + P("a + b") * psi + derivation_D(psi))


OPERATOR_SET = [
    ("boolean1", lambda: boolean_lattice(1)), ("boolean2", lambda: boolean_lattice(2)),
    ("boolean3", lambda: boolean_lattice(3)), ("boolean4", lambda: boolean_lattice(4)),
    ("boolean5", lambda: boolean_lattice(5)), ("pi4", lambda: partition_lattice(4)),
    ("piB3", lambda: partition_lattice_B(3)), ("square", lambda: cube_face_lattice(2)),
    ("cube", lambda: cube_face_lattice(3)),
]


@pytest.mark.parametrize("name,build", OPERATOR_SET)
def test_pyr_prism_ab_match_constructions(name, build):
    L = build()
    psi = ab_index(L)
    assert pyr_ab(psi) == ab_index(pyramid_poset(L))
    assert prism_ab(psi) == ab_index(prism_poset(L))


@pytest.mark.parametrize("name,build", OPERATOR_SET)
def test_pyr_prism_h_match_constructions(name, build):
    L = build()
    h = h_of_bounded(L)
    assert pyr_h(h, L.n) == h_of_bounded(pyramid_poset(L)) == pyr_ab(ab_index(L)).specialize()
    assert prism_h(h, L.n) == h_of_bounded(prism_poset(L)) == prism_ab(ab_index(L)).specialize()


@pytest.mark.parametrize("seed", range(15))
def test_pyr_prism_on_random_posets(seed):
    L = random_graded(random.Random(seed), random.Random(seed).randint(1, 3), width=3)
    psi = ab_index(L)
    assert pyr_ab(psi) == ab_index(pyramid_poset(L))
    assert prism_ab(psi) == ab_index(prism_poset(L))


def test_pyr_h_examples():
    assert pyr_h(Poly([1, 4, 1]), 3) == Poly([1, 11, 11, 1])
    assert prism_h(Poly([1, 6, 1]), 3) == Poly([1, 23, 23, 1])
    assert pyr_h(Poly([1]), 1) == Poly([1, 1])
    with pytest.raises(ValueError):
        pyr_h(Poly([1]), 0)


def test_pyramid_walks_eulerian():
    for n in range(1, 8):
        assert pyr_h(eulerian_A(n), n) == eulerian_A(n + 1)
        # the n-cube's face lattice has rank n + 1
        assert prism_h(eulerian_B(n), n + 1) == eulerian_B(n + 1)


def test_pyr_derivative_identity_symbolic():
    x, n = sympy.symbols("x n")
    coeffs = sympy.symbols("c0:7")
    h = sum(c * x ** i for i, c in enumerate(coeffs))
    lhs = (1 + n * x) * h + (x - x ** 2) * sympy.diff(h, x)
    rhs = (h + x * sympy.diff(h, x)) * (1 - x) + (n + 1) * x * h
    assert sympy.expand(lhs - rhs) == 0


@given(st.lists(st.integers(0, 30), min_size=1, max_size=5), st.integers(1, 8))
@settings(max_examples=100, deadline=None)
def test_pyr_prism_preserve_real_roots(tail, n):
    # products of (1 + r x) with r >= 0 give real-rooted h with h(0) = 1
    h = Poly([1])
    for r in tail:
        h = h * Poly([1, r])
    for op in (pyr_h, prism_h):
        g = op(h, max(n, h.degree + 1))
        assert is_real_rooted(g)
        assert interlaces(h, g)


# -- zonotopes ---------------------------------------------------------------------

def test_zonotope_ab_examples():
    assert zonotope_ab(ABPolynomial.unit()) == P("a + b")
    z3 = zonotope_ab(ab_index(partition_lattice(3)))
    assert z3 == P("aa + 5ab + 5ba + bb")
    assert z3.specialize() == Poly([1, 10, 1])
    assert zonotope_ab(ab_index(partition_lattice(4))).specialize() == Poly([1, 71, 71, 1])


def test_zonotope_h_examples():
    assert zonotope_h_from_flags(beta_flag(partition_lattice(3))) == Poly([1, 10, 1])
    assert zonotope_h_from_flags(beta_flag(partition_lattice(2))) == Poly([1, 1])
    assert zonotope_h_from_flags(beta_flag(partition_lattice(4))) == Poly([1, 71, 71, 1])


@pytest.mark.parametrize("build", [
    lambda: partition_lattice(5), lambda: partition_lattice_B(3), lambda: boolean_lattice(4),
    lambda: uniform_flats(5, 3), lambda: uniform_flats(6, 4)])
def test_zonotope_routes_agree(build):
    L = build()
    beta = beta_flag(L)
    h = zonotope_h_from_flags(beta)
    assert h == zonotope_ab(ab_index(L)).specialize()
    assert h(1) == 2 ** L.n * L.maximal_chain_count
    assert h.int_coeffs() == h.int_coeffs()[::-1]


def test_zonotope_of_boolean_is_cube():
    # the lattice of flats of n independent vectors gives the n-cube
    for n in range(1, 6):
        assert zonotope_h_from_flags(beta_flag(boolean_lattice(n))) == eulerian_B(n)


@pytest.mark.parametrize("m,n", [(3, 2), (4, 2), (4, 3), (5, 3), (5, 4), (6, 4), (6, 5)])
def test_uniform_zonotope_interlaced_by_B(m, n):
    h = zonotope_h_from_flags(beta_flag(uniform_flats(m, n)))
    assert is_real_rooted(h)
    assert interlaces(eulerian_B(n - 1), h)


def test_lpeak_mask_matches_set_version():
    for mask in range(1 << 8):
        assert lpeak_of_mask(mask) == lpeak_set({i + 1 for i in range(8) if mask >> i & 1})


# -- second barycentric subdivision --------------------------------------------------

SD2 = {3: [1, 10, 1], 4: [1, 71, 71, 1], 6: [1, 4677, 38522, 38522, 4677, 1]}


@pytest.mark.parametrize("n", sorted(SD2))
def test_sd2_table(n):
    assert sd2_h(n).int_coeffs() == SD2[n]


@pytest.mark.parametrize("n", range(2, 6))
def test_sd2_three_routes(n):
    h = sd2_h(n, "flags")
    assert h == sd2_h(n, "signed") == sd2_h(n, "poset")


@pytest.mark.parametrize("n", range(6, 9))
def test_sd2_flags_vs_signed(n):
    assert sd2_h(n, "flags") == sd2_h(n, "signed")


def test_sd2_gamma_examples():
    assert sd2_gamma(3) == [1, 8]
    assert sd2_gamma(4) == [1, 68]
    assert sd2_gamma(5) == [1, 532, 736]
    assert sd2_gamma(6) == [1, 4672, 24496]


@pytest.mark.parametrize("n", range(2, 8))
def test_sd2_symmetric_and_gamma_expansion(n):
    h = sd2_h(n)
    d = n - 1
    coeffs = h.int_coeffs()
    assert coeffs == coeffs[::-1] and len(coeffs) == d + 1
    g = sd2_gamma(n)
    assert all(v >= 0 for v in g)
    rebuilt = Poly()
    for i, c in enumerate(g):
        rebuilt = rebuilt + (Poly([1, 1]) ** (d - 2 * i)).shift_degree(i) * c
    assert rebuilt == h


def test_sd2_errors():
    with pytest.raises(ValueError):
        sd2_h(1)
    with pytest.raises(ValueError):
        sd2_h(4, "nope")
