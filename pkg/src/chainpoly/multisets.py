"""Word multisets whose descent statistics give h-polynomials of partition lattices.

Kind ``A`` is the product over j = 1..n-1 of the factor in which i in [j]
appears j+1-i times; kind ``B`` is the product over k = 1..n of the factor
in which i in [k] appears 2k-2i+1 times. Words are streamed over distinct
letters with multiplicities carried as weights, so nothing of size
|multiset| is ever materialized.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from itertools import product
from math import factorial, prod
from typing import Iterator, Sequence

from .polynomials import Poly
from .posets import FlagVector, GradedBoundedPoset, beta_flag, mask_to_subset

KINDS = ("A", "B", "A-star", "B-star", "A-signed")
STREAM_CAP = {"A": 8, "B": 7, "A-star": 8, "B-star": 7, "A-signed": 8}


class CapExceeded(ValueError):
    pass


def factors(kind: str, n: int) -> list[list[tuple[int, int]]]:
    """Factors of the product as lists of (letter, multiplicity)."""
    if kind in ("A", "A-signed"):
        return [[(i, j + 1 - i) for i in range(1, j + 1)] for j in range(1, n)]
    if kind == "B":
        return [[(i, 2 * k - 2 * i + 1) for i in range(1, k + 1)] for k in range(1, n + 1)]
    if kind == "A-star":
        # k-th factor from the left holds letters 2..n+1-k, letter v with multiplicity v-1
        return [[(v, v - 1) for v in range(2, n + 2 - k)] for k in range(1, n)]
    if kind == "B-star":
        return [[(i, 2 * i - 1) for i in range(1, n + 2 - k)] for k in range(1, n + 1)]
    raise ValueError(f"unknown kind {kind!r}")


def size(kind: str, n: int) -> int:
    base = prod(sum(m for _, m in f) for f in factors(kind, n))
    return base * 2 ** (n - 1) if kind == "A-signed" else base


def expected_size(kind: str, n: int) -> int:
    """Closed forms for the multiset sizes."""
    if kind in ("A", "A-star"):
        return factorial(n) * factorial(n - 1) // 2 ** (n - 1)
    if kind in ("B", "B-star"):
        return factorial(n) ** 2
    if kind == "A-signed":
        return factorial(n) * factorial(n - 1)
    raise ValueError(kind)


def gen_words(kind: str, n: int, cap_override: bool = False) -> Iterator[tuple[tuple[int, ...], int]]:
    """Stream (word, multiplicity) over distinct words of the multiset."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if not cap_override and n > STREAM_CAP[kind]:
        raise CapExceeded(f"streaming {kind} words for n={n} exceeds cap {STREAM_CAP[kind]}")
    if kind == "A-signed":
        for word, mult in gen_words("A", n, cap_override):
            for signs in product((1, -1), repeat=len(word)):
                yield tuple(s * v for s, v in zip(signs, word)), mult
        return
    fs = factors(kind, n)
    for combo in product(*fs):
        yield tuple(v for v, _ in combo), prod(m for _, m in combo)


def star(kind: str, word: Sequence[int]) -> tuple[int, ...]:
    """Reversal bijection onto the starred multiset."""
    if kind == "A":
        n = len(word) + 1
        return tuple(n + 1 - t - word[n - 2 - t] for t in range(n - 1))
    if kind == "B":
        n = len(word)
        return tuple(n + 1 - t - word[n - 1 - t] for t in range(n))
    raise ValueError(kind)


def descent_mask(word: Sequence[int], strict: bool = False) -> int:
    m = 0
    for i in range(len(word) - 1):
        if word[i] > word[i + 1] or (not strict and word[i] == word[i + 1]):
            m |= 1 << i
    return m


def descent_sets(kind: str, n: int, strict: bool | None = None) -> dict[int, int]:
    """Multiplicity of each descent set (bitmask); weak descents unless starred."""
    if strict is None:
        strict = kind.endswith("star")
    out: dict[int, int] = defaultdict(int)
    for w, mult in gen_words(kind, n):
        out[descent_mask(w, strict)] += mult
    return dict(out)


def descent_h_bruteforce(kind: str, n: int) -> Poly:
    counts = Counter()
    for mask, mult in descent_sets(kind, n).items():
        counts[bin(mask).count("1")] += mult
    return Poly([counts[k] for k in range(max(counts) + 1)] if counts else [1])


def hk_recurrence(kind: str, n: int) -> list[Poly]:
    """The polynomials h_{n,k}, words ending in letter k, ordered from the largest k down.

    Kind A gives (h_{n,n-1}, ..., h_{n,1}); kind B gives (h_{n,n}, ..., h_{n,1}).
    """
    if kind == "A":
        if n < 2:
            raise ValueError("kind A needs n >= 2")
        rows = [Poly.const(1)]  # h_{2,1}
        for m in range(2, n):
            # rows = h_{m,1..m-1}; build h_{m+1,k}, k in [m]
            rows = [(sum(rows[: k - 1], Poly()) + sum(rows[k - 1:], Poly()).shift_degree(1))
                    * (m + 1 - k) for k in range(1, m + 1)]
        return rows[::-1]
    if kind == "B":
        if n < 1:
            raise ValueError("kind B needs n >= 1")
        rows = [Poly.const(1)]  # h^B_{1,1}
        for m in range(1, n):
            rows = [(sum(rows[: k - 1], Poly()) + sum(rows[k - 1:], Poly()).shift_degree(1))
                    * (2 * m - 2 * k + 3) for k in range(1, m + 2)]
        return rows[::-1]
    raise ValueError(f"recurrence defined for kinds A and B, not {kind!r}")


def descent_h(kind: str, n: int, route: str = "recurrence") -> Poly:
    """sum over the multiset of x^des; equals h of Pi_n (A) or Pi^B_n (B)."""
    if kind == "A" and n == 1:
        return Poly.const(1)
    if route == "recurrence":
        return sum(hk_recurrence(kind, n), Poly())
    if route == "brute":
        return descent_h_bruteforce(kind, n)
    raise ValueError(f"unknown route {route!r}")


def multiset_flag(kind: str, n: int) -> FlagVector:
    """Flag vector predicted by the multiset: beta(S) = #{sigma : Des(sigma) = r - S}.

    Here r = n-1 for kind A (rank n-1) and r = n for kind B.
    """
    rank = n - 1 if kind == "A" else n
    vals: dict[int, int] = defaultdict(int)
    for mask, mult in descent_sets(kind, n).items():
        S = [rank - i for i in mask_to_subset(mask)]
        vals[sum(1 << (s - 1) for s in S)] += mult
    return FlagVector(rank, dict(vals))


def beta_match(kind: str, n: int, lattice: GradedBoundedPoset | None = None) -> bool:
    """Compare the rank-selection flag vector of the partition lattice with multiset descent counts."""
    from .lattices import partition_lattice, partition_lattice_B

    if lattice is None:
        lattice = partition_lattice(n) if kind == "A" else partition_lattice_B(n)
    if kind == "A" and n < 2:
        return True
    return beta_flag(lattice) == multiset_flag(kind, n)


# -- peaks and signed words ---------------------------------------------------

def lpeak_word(word: Sequence[int]) -> int:
    """Weak descents i with i = 1 or i-1 an ascent."""
    count = 0
    for i in range(1, len(word)):
        if word[i - 1] >= word[i] and (i == 1 or word[i - 2] < word[i - 1]):
            count += 1
    return count


def lpeak_set(S, n: int | None = None) -> int:
    """Elements i of S with i-1 not in S."""
    S = set(mask_to_subset(S)) if isinstance(S, int) else set(S)
    return sum(1 for i in S if i - 1 not in S)


def edes_B(tau: Sequence[int]) -> int:
    """Indices i in {0..len-1} with t_i > t_{i+1} or t_i = t_{i+1} > 0, where t_0 = 0."""
    t = (0,) + tuple(tau)
    return sum(1 for i in range(len(t) - 1) if t[i] > t[i + 1] or (t[i] == t[i + 1] > 0))


def signed_words(n: int, cap_override: bool = False):
    return gen_words("A-signed", n, cap_override)


def edes_B_polynomial(n: int) -> Poly:
    counts = Counter()
    for tau, mult in signed_words(n):
        counts[edes_B(tau)] += mult
    return Poly([counts[k] for k in range(max(counts) + 1)])


def per_word_identity(word: Sequence[int]) -> bool:
    """Sum over sign patterns of x^edes_B equals (4x)^lpeak (1+x)^(len - 2 lpeak)."""
    k = len(word)
    counts = Counter()
    for signs in product((1, -1), repeat=k):
        counts[edes_B([s * v for s, v in zip(signs, word)])] += 1
    lhs = Poly([counts[i] for i in range(k + 1)])
    lp = lpeak_word(word)
    rhs = Poly.monomial(lp, 4 ** lp) * Poly((1, 1)) ** (k - 2 * lp)
    return lhs == rhs


def lpeak_distribution(n: int) -> list[int]:
    """Counts of words of A_n by lpeak."""
    counts = Counter()
    for w, mult in gen_words("A", n):
        counts[lpeak_word(w)] += mult
    return [counts[i] for i in range(max(counts) + 1)] if counts else [1]


def statistics(kind: str, n: int, by: str) -> dict[str, int]:
    """Histogram of the multiset by descent 'set', descent 'count', or 'lpeak'."""
    hist: dict[str, int] = defaultdict(int)
    for w, mult in gen_words(kind, n):
        if kind == "A-signed":
            if by != "count":
                raise ValueError("signed words support --by count (edes_B) only")
            hist[str(edes_B(w))] += mult
            continue
        strict = kind.endswith("star")
        if by == "set":
            hist[",".join(map(str, mask_to_subset(descent_mask(w, strict))))] += mult
        elif by == "count":
            hist[str(bin(descent_mask(w, strict)).count("1"))] += mult
        elif by == "lpeak":
            hist[str(lpeak_word(w))] += mult
        else:
            raise ValueError(f"unknown statistic {by!r}")
    return dict(sorted(hist.items(), key=lambda kv: (len(kv[0]), kv[0])))
