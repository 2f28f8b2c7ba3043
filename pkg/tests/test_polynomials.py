from fractions import Fraction as F
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from chainpoly.polynomials import (
    Poly, SymmetryError, X, eulerian_A, eulerian_A_bruteforce, eulerian_Aq,
    eulerian_Aq_bruteforce, eulerian_B, eulerian_B_bruteforce, gamma_decompose, gamma_expand,
    h_transform, interlaces, is_interlacing_sequence, is_real_rooted, isolate_roots,
    lemma_combine, poly_gcd, squarefree_decomposition, squarefree_part, sturm_count,
    sturm_sequence)


def P(*c):
    return Poly(c)


def root_list_interlaces(fr, gr):
    """Oracle on explicit root lists: ... <= a2 <= b2 <= a1 <= b1."""
    a = sorted(fr, reverse=True)
    b = sorted(gr, reverse=True)
    if not (len(a) <= len(b) <= len(a) + 1):
        return False
    merged = []
    for i in range(len(b)):
        merged.append(b[i])
        if i < len(a):
            merged.append(a[i])
    return all(merged[i] >= merged[i + 1] for i in range(len(merged) - 1))


# -- arithmetic --------------------------------------------------------------

def test_zero_and_degree():
    assert Poly().degree == -1
    assert Poly([0, 0]).is_zero()
    assert P(1, 2, 0).coeffs == (F(1), F(2))


def test_immutable():
    p = P(1, 1)
    with pytest.raises(AttributeError):
        p.coeffs = ()


def test_arithmetic():
    assert (P(1, 1) * P(1, -1)) == P(1, 0, -1)
    assert (P(1, 1) ** 3) == P(1, 3, 3, 1)
    q, r = divmod(P(1, 0, 1), P(1, 1))
    assert q * P(1, 1) + r == P(1, 0, 1)
    assert P(1, 2, 3).derivative() == P(2, 6)
    assert P(1, 2, 3)(F(1, 2)) == F(11, 4)


def test_str_and_json_roundtrip():
    p = P(1, 11, 6)
    assert str(p) == "1 + 11x + 6x^2"
    q = Poly([F(1, 3), -2])
    assert Poly.from_json(q.to_json()) == q
    assert q.to_json() == ["1/3", "-2/1"]


def test_h_transform_antichain():
    # chain polynomial of the 3-antichain
    assert h_transform(P(1, 3), 1) == P(1, 2)


# -- Sturm and roots --------------------------------------------------------------

def test_sturm_count_examples():
    assert sturm_count(P(1, 0, 1)) == 0
    assert sturm_count(P(1, 11, 6)) == 2
    assert sturm_count(P(1, 3, 3, 1)) == 1


def test_sturm_count_half_open():
    p = P(0, 1)  # root at 0
    assert sturm_count(p, -1, 0) == 1
    assert sturm_count(p, 0, 1) == 0


def test_sturm_count_rejects_zero():
    with pytest.raises(ValueError):
        sturm_count(Poly())


def test_real_rooted_examples():
    assert is_real_rooted(Poly())
    assert is_real_rooted(P(1, 11, 6))
    assert not is_real_rooted(P(1, 1, 1))


def test_sturm_sequence_terms_are_integral():
    for q in sturm_sequence(P(1, 11, 11, 1)):
        assert all(c.denominator == 1 for c in q.coeffs)


def test_isolate_examples():
    iso = isolate_roots(P(1, 1))
    assert len(iso.intervals) == 1
    lo, hi = iso.intervals[0]
    assert lo < -1 <= hi

    iso = isolate_roots(P(1, 1) ** 2 * P(2, 1))
    assert iso.multiplicities == (1, 2)
    (a, b), (c, d) = iso.intervals
    assert a < -2 <= b and c < -1 <= d
    assert iso.is_real_rooted()

    iso = isolate_roots(P(1, 6, 1)).refine(F(1, 1000))
    r1, r2 = -3 - 2 * 2 ** 0.5, -3 + 2 * 2 ** 0.5
    (a, b), (c, d) = iso.intervals
    assert a < r1 <= b and c < r2 <= d and b <= c
    assert all(hi - lo <= F(1, 1000) for lo, hi in iso.intervals)


def test_squarefree_decomposition():
    p = P(1, 1) ** 3 * P(0, 1) ** 2 * P(5, 1)
    dec = squarefree_decomposition(p)
    prod = Poly.const(1)
    for f, k in dec:
        prod = prod * f ** k
    assert prod == p.monic()
    assert squarefree_part(p) == (P(1, 1) * P(0, 1) * P(5, 1)).monic()


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6),
       st.lists(st.integers(-6, 6), min_size=0, max_size=3))
@settings(max_examples=80, deadline=None)
def test_isolation_matches_constructed_roots(roots, extra_quadratic):
    p = Poly.from_roots(roots)
    if extra_quadratic:
        p = p * P(1 + sum(c * c for c in extra_quadratic), 0, 1)  # no real roots
    iso = isolate_roots(p)
    distinct = sorted(set(roots))
    assert len(iso.intervals) == len(distinct)
    for (lo, hi), r, m in zip(iso.intervals, distinct, iso.multiplicities):
        assert lo < r <= hi
        assert m == roots.count(r)
    assert iso.is_real_rooted() == (not extra_quadratic)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_real_rooted_positive_coeffs_have_negative_roots(roots):
    rs = [-abs(r) - 1 for r in roots]
    p = Poly.from_roots(rs)
    p = p * (1 / p[0])
    assert p[0] == 1
    for lo, hi in isolate_roots(p).refine(F(1, 2)).intervals:
        assert hi < 0


def test_poly_gcd():
    a = P(1, 1) * P(2, 1)
    b = P(1, 1) * P(3, 1)
    assert poly_gcd(a, b) == P(1, 1)
    assert poly_gcd(Poly(), P(2, 4)) == P(F(1, 2), 1)


# -- interlacing --------------------------------------------------------------------

def test_interlaces_examples():
    assert interlaces(P(1, 1), P(1, 6, 1))
    assert interlaces(Poly(), P(1, 6, 1))
    assert interlaces(P(1, 6, 1), Poly())
    assert not interlaces(P(1, 6, 1), P(1, 1))


def test_interlacing_sequence_examples():
    assert is_interlacing_sequence([P(1), X])
    assert is_interlacing_sequence([eulerian_A(3), eulerian_A(4)])
    assert not is_interlacing_sequence([P(1, 6, 1), P(1, 1)])


def test_interlaces_with_common_roots():
    f = Poly.from_roots([-1, -1])
    g = Poly.from_roots([-1, -1, -2])
    assert interlaces(f, g)
    assert interlaces(Poly.from_roots([0, 0]), Poly.from_roots([0, 0, 0]))
    assert not interlaces(Poly.from_roots([0, -2]), Poly.from_roots([0, 0, -1]))


def test_interlaces_rejects_complex():
    assert not interlaces(P(1, 1, 1), P(1, 1, 1) * P(0, 1))


@given(st.lists(st.integers(-5, 5), min_size=0, max_size=6),
       st.lists(st.integers(-5, 5), min_size=0, max_size=6),
       st.sampled_from([1, -1]), st.sampled_from([1, -1]))
@settings(max_examples=300, deadline=None)
def test_interlaces_matches_root_list_oracle(fr, gr, sf, sg):
    f = Poly.from_roots(fr) * sf
    g = Poly.from_roots(gr) * sg
    expected = root_list_interlaces(fr, gr)
    assert interlaces(f, g) == expected


# -- lemma_combine ------------------------------------------------------------------

def test_lemma_combine_examples():
    assert lemma_combine([P(1)]) == [P(1), X]
    assert lemma_combine([P(1), X]) == [P(1, 1), P(0, 2), P(0, 1, 1)]
    with pytest.raises(ValueError):
        lemma_combine([])


def interlacing_family(draw_roots):
    """Sequence f_i = prod_{j != i} (x - r_j) over sorted roots is interlacing."""
    rs = sorted(set(draw_roots), reverse=True)
    return [Poly.from_roots(rs[:i] + rs[i + 1:]) for i in range(len(rs))]


@given(st.lists(st.integers(-20, 0), min_size=2, max_size=6, unique=True))
@settings(max_examples=60, deadline=None)
def test_lemma_combine_preserves_interlacing(roots):
    fs = interlacing_family([F(r) for r in roots])
    assert is_interlacing_sequence(fs)
    assert is_interlacing_sequence(lemma_combine(fs))


# -- gamma --------------------------------------------------------------------------

def test_gamma_examples():
    assert gamma_decompose(P(1, 1) ** 4, 4) == [1, 0, 0]
    assert gamma_decompose(P(1, 6, 1), 2) == [1, 4]
    assert gamma_decompose(P(1, 23, 23, 1), 3) == [1, 20]
    with pytest.raises(SymmetryError):
        gamma_decompose(P(1, 2), 1)


@given(st.integers(0, 7), st.data())
@settings(max_examples=50, deadline=None)
def test_gamma_roundtrip(n, data):
    gs = data.draw(st.lists(st.integers(-20, 20), min_size=n // 2 + 1, max_size=n // 2 + 1))
    p = gamma_expand(gs, n)
    assert gamma_expand(gamma_decompose(p, n), n) == p
    assert gamma_decompose(p, n) == gs


# -- Eulerian families --------------------------------------------------------------

def test_eulerian_examples():
    assert eulerian_A(3) == P(1, 4, 1)
    assert eulerian_B(2) == P(1, 6, 1)
    q = F(5, 3)
    assert eulerian_Aq(3, q) == Poly([1, 2 * q + 2 * q * q, q ** 3])


@pytest.mark.parametrize("n", range(1, 8))
def test_eulerian_against_bruteforce(n):
    assert eulerian_A(n) == eulerian_A_bruteforce(n)
    if n <= 6:
        assert eulerian_B(n) == eulerian_B_bruteforce(n)


@pytest.mark.parametrize("q", [F(1, 2), 2, 3])
def test_eulerian_Aq_against_bruteforce(q):
    for n in range(1, 7):
        assert eulerian_Aq(n, q) == eulerian_Aq_bruteforce(n, q)


def test_eulerian_Aq_at_one():
    for n in range(1, 9):
        assert eulerian_Aq(n, 1) == eulerian_A(n)


@pytest.mark.parametrize("q", [F(1, 2), 1, 2, 3])
def test_eulerian_Aq_interlacing(q):
    for n in range(2, 9):
        assert is_real_rooted(eulerian_Aq(n, q))
        assert interlaces(eulerian_Aq(n - 1, q), eulerian_Aq(n, q))


def test_eulerian_rejects_bad_args():
    with pytest.raises(ValueError):
        eulerian_A(0)
    with pytest.raises(ValueError):
        eulerian_Aq(3, 0)


def test_descent_definition_small():
    # direct check of A_3 from S_3
    counts = [0, 0, 0]
    for w in permutations(range(3)):
        counts[sum(w[i] > w[i + 1] for i in range(2))] += 1
    assert eulerian_A(3).int_coeffs() == counts
