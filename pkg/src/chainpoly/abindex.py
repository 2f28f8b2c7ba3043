"""ab-words, the ab-index, and the operators acting on it.

A word of length k in the noncommuting letters a, b is stored as a bitmask
whose bit i is set when position i+1 holds ``b``; an :class:`ABPolynomial`
maps such masks of one common length to integer coefficients.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .polynomials import Poly, X
from .posets import FlagVector, GradedBoundedPoset, beta_flag, mask_to_subset


@dataclass
class ABPolynomial:
    n: int
    terms: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {w: c for w, c in self.terms.items() if c}

    # -- construction -------------------------------------------------
    @classmethod
    def word(cls, s: str, coeff: int = 1) -> "ABPolynomial":
        mask = 0
        for i, ch in enumerate(s):
            if ch == "b":
                mask |= 1 << i
            elif ch != "a":
                raise ValueError(f"not an ab-word: {s!r}")
        return cls(len(s), {mask: coeff})

    @classmethod
    def unit(cls) -> "ABPolynomial":
        return cls(0, {0: 1})

    @classmethod
    def parse(cls, text: str) -> "ABPolynomial":
        """Parse sums like '2ab + ba - 3bb' (every word must share one length)."""
        text = text.replace(" ", "").replace("-", "+-")
        out = None
        for term in filter(None, text.split("+")):
            k = 0
            while k < len(term) and (term[k].isdigit() or term[k] == "-"):
                k += 1
            coeff = term[:k]
            c = -1 if coeff == "-" else int(coeff) if coeff else 1
            w = term[k:]
            w = "" if w == "1" else w
            p = cls.word(w, c)
            out = p if out is None else out + p
        return out if out is not None else cls(0)

    # -- algebra --------------------------------------------------------
    def __add__(self, other: "ABPolynomial") -> "ABPolynomial":
        if not other.terms:
            return self
        if not self.terms:
            return other
        if self.n != other.n:
            raise ValueError("adding ab-polynomials of different degrees")
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, 0) + c
        return ABPolynomial(self.n, t)

    def scale(self, c: int) -> "ABPolynomial":
        return ABPolynomial(self.n, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other: "ABPolynomial") -> "ABPolynomial":
        """Concatenation product."""
        t: dict[int, int] = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = u | (v << self.n)
                t[w] = t.get(w, 0) + cu * cv
        return ABPolynomial(self.n + other.n, t)

    def __eq__(self, other):
        if not isinstance(other, ABPolynomial):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.n == other.n and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def word_str(self, mask: int) -> str:
        return "".join("b" if mask >> i & 1 else "a" for i in range(self.n))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=self.word_str):
            c = self.terms[w]
            s = self.word_str(w) or "1"
            parts.append(("" if c == 1 else "-" if c == -1 else str(c)) + s)
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict[str, int]:
        return {self.word_str(w): c for w, c in sorted(self.terms.items(),
                                                        key=lambda kv: self.word_str(kv[0]))}

    @classmethod
    def from_json(cls, data) -> "ABPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        out = cls(0)
        for w, c in data.items():
            out = out + cls.word(w, int(c))
        return out

    def specialize(self, a=1, b=X) -> Poly:
        """Substitute commuting values for a and b; default gives h(x) = Psi(1, x)."""
        a = a if isinstance(a, Poly) else Poly.const(a)
        b = b if isinstance(b, Poly) else Poly.const(b)
        out = Poly()
        for w, c in self.terms.items():
            k = bin(w).count("1")
            out = out + (b ** k) * (a ** (self.n - k)) * c
        return out

    def to_flag(self) -> FlagVector:
        return FlagVector(self.n + 1, dict(self.terms))


A_PLUS_B = ABPolynomial(1, {0: 1, 1: 1})
AB_PLUS_BA = ABPolynomial(2, {0b10: 1, 0b01: 1})


def ab_index(L: GradedBoundedPoset) -> ABPolynomial:
    """Psi_L = sum_S beta_L(S) u_S, words of length n-1."""
    return from_flag(beta_flag(L))


def from_flag(beta: FlagVector) -> ABPolynomial:
    return ABPolynomial(max(beta.n - 1, 0), dict(beta.values))


def _as_poly(w) -> ABPolynomial:
    return ABPolynomial.word(w) if isinstance(w, str) else w


def omega(p) -> ABPolynomial:
    """Replace each factor ab by 2(ab + ba), then every remaining letter by a + b."""
    p = _as_poly(p)
    out = ABPolynomial(0)
    for w, c in p.terms.items():
        s = p.word_str(w)
        acc = ABPolynomial.unit()
        i = 0
        while i < len(s):
            if s[i:i + 2] == "ab":
                acc = acc * AB_PLUS_BA.scale(2)
                i += 2
            else:
                acc = acc * A_PLUS_B
                i += 1
        out = out + acc.scale(c)
    if out.is_zero():
        out = ABPolynomial(p.n)
    return out


def derivation_D(p) -> ABPolynomial:
    """Leibniz extension of D(a) = D(b) = ab + ba."""
    p = _as_poly(p)
    out = ABPolynomial(p.n + 1)
    n = p.n
    for w, c in p.terms.items():
        for i in range(n):
            left = w & ((1 << i) - 1)
            right = w >> (i + 1)
            for mid in (0b10, 0b01):
                m = left | (mid << i) | (right << (i + 2))
                out = out + ABPolynomial(n + 1, {m: c})
    return out


def pyr_ab(psi: ABPolynomial) -> ABPolynomial:
    """ab-index of the pyramid: (Psi (a+b) + (a+b) Psi + D(Psi)) / 2."""
    twice = psi * A_PLUS_B + A_PLUS_B * psi + derivation_D(psi)
    odd = {w: c for w, c in twice.terms.items() if c % 2}
    if odd:
        raise ValueError(f"odd coefficients {odd}: input is not an ab-index")
    return ABPolynomial(twice.n, {w: c // 2 for w, c in twice.terms.items()})


def prism_ab(psi: ABPolynomial) -> ABPolynomial:
    """ab-index of the prism: Psi (a+b) + D(Psi)."""
    return psi * A_PLUS_B + derivation_D(psi)


def zonotope_ab(psi_flats: ABPolynomial) -> ABPolynomial:
    """ab-index of a zonotope's face lattice from that of its lattice of flats: omega(a Psi)."""
    return omega(ABPolynomial.word("a") * psi_flats)


def pyr_h(h: Poly, n: int) -> Poly:
    """(1 + n x) h + (x - x^2) h'."""
    if n < 1:
        raise ValueError("rank must be positive")
    return Poly((1, n)) * h + Poly((0, 1, -1)) * h.derivative()


def prism_h(h: Poly, n: int) -> Poly:
    """(1 + (2n-1) x) h + 2 (x - x^2) h'."""
    if n < 1:
        raise ValueError("rank must be positive")
    return Poly((1, 2 * n - 1)) * h + Poly((0, 2, -2)) * h.derivative()


def lpeak_of_mask(mask: int) -> int:
    return bin(mask & ~(mask << 1)).count("1")


def zonotope_h_from_flags(beta: FlagVector) -> Poly:
    """sum_S beta(S) (4x)^lpeak(S) (1+x)^(n - 2 lpeak(S)) for a rank-n flag vector."""
    n = beta.n
    one_plus = Poly((1, 1))
    out = Poly()
    for mask, c in beta.values.items():
        k = lpeak_of_mask(mask)
        out = out + (one_plus ** (n - 2 * k)).shift_degree(k) * (c * 4 ** k)
    return out


# -- second barycentric subdivision of the simplex boundary -----------------

def sd2_h(n: int, route: str = "flags") -> Poly:
    """h-polynomial of sd^2 of the boundary of the (n-1)-simplex.

    Routes: "flags" (zonotope formula on the type-A partition lattice),
    "signed" (edes_B over signed words), "poset" (subdivide twice and count chains).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if route == "flags":
        from .lattices import partition_lattice
        return zonotope_h_from_flags(beta_flag(partition_lattice(n)))
    if route == "signed":
        from .multisets import edes_B_polynomial
        return edes_B_polynomial(n)
    if route == "poset":
        from .lattices import boolean_lattice
        from .posets import face_poset_of_order_complex, h_polynomial, remove_extremes
        return h_polynomial(face_poset_of_order_complex(remove_extremes(boolean_lattice(n))))
    raise ValueError(f"unknown route {route!r}")


def sd2_gamma(n: int) -> list[int]:
    """gamma_{n,2,i} = 4^i times the number of words of A_n with lpeak i."""
    from .multisets import lpeak_distribution
    return [4 ** i * c for i, c in enumerate(lpeak_distribution(n))]


def mask_subset_str(mask: int) -> str:
    return ",".join(map(str, mask_to_subset(mask)))
