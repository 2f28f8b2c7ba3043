"""Edge labelings of partition lattices and their descent statistics.

Gessel's labeling of the type-A partition lattice, its type-B analogue, a
checker for the strict R-labeling property and the flag h-vector read off
from descent sets of maximal chains.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .posets import FlagVector, GradedBoundedPoset, maximal_chains


class HostMismatch(ValueError):
    pass


@dataclass
class EdgeLabeling:
    host: GradedBoundedPoset
    label: dict[tuple[int, int], int]

    def __call__(self, x: int, y: int) -> int:
        return self.label[x, y]

    def word(self, chain: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.label[a, b] for a, b in zip(chain, chain[1:]))


def _require_kind(L: GradedBoundedPoset, family: str):
    if not L.kind or L.kind[0] != family:
        raise HostMismatch(f"expected a {family} lattice, got {L.kind}")


def _merged_blocks(x, y):
    """The two blocks of x whose union is a block of y (type A)."""
    gone = [b for b in x if b not in set(y)]
    if len(gone) != 2:
        raise ValueError(f"{y} does not cover {x}")
    return gone


def gessel_labeling(L: GradedBoundedPoset) -> EdgeLabeling:
    """label(x, y) = max(min B, min B') where y merges blocks B, B' of x."""
    _require_kind(L, "partition_A")
    lab = {}
    for i, j in L.covers():
        b1, b2 = _merged_blocks(L.objects[i], L.objects[j])
        lab[i, j] = max(b1[0], b2[0])
    return EdgeLabeling(L, lab)


def _typeB_merge(x, y):
    """Return (kind, B, B') describing the cover x < y of the type-B lattice.

    kind is "zero" when the positive block B joins the zero block (B' is
    None), otherwise "pair" with B, B' the positive blocks merged (one of
    them possibly negated in y).
    """
    zx, bx = x
    zy, by = y
    gone = [b for b in bx if b not in set(by)]
    if len(zy) > len(zx):
        if len(gone) != 1:
            raise ValueError(f"{y} does not cover {x}")
        return "zero", gone[0], None
    if len(gone) != 2:
        raise ValueError(f"{y} does not cover {x}")
    return "pair", gone[0], gone[1]


def typeB_labeling(L: GradedBoundedPoset) -> EdgeLabeling:
    """Type-B analogue: max of min|B| and min|B'| over the merging pair, the zero block counting as 0."""
    _require_kind(L, "partition_B")
    lab = {}
    for i, j in L.covers():
        kind, b1, b2 = _typeB_merge(L.objects[i], L.objects[j])
        if kind == "zero":
            lab[i, j] = abs(b1[0])
        else:
            lab[i, j] = max(abs(b1[0]), abs(b2[0]))
    return EdgeLabeling(L, lab)


def verify_strict_R(lam: EdgeLabeling):
    """Check that every closed interval has exactly one strictly increasing maximal chain.

    Returns ``(True, None)`` or ``(False, (x, y, count))`` for a failing
    interval [x, y].
    """
    L = lam.host
    for x in range(L.size):
        arrivals = defaultdict(int)
        stack = [(x, None)]
        while stack:
            z, last = stack.pop()
            for w in L.upper[z]:
                l = lam.label[z, w]
                if last is None or l > last:
                    arrivals[w] += 1
                    stack.append((w, l))
        mask = L.up[x]
        while mask:
            low = mask & -mask
            y = low.bit_length() - 1
            mask ^= low
            if arrivals.get(y, 0) != 1:
                return False, (x, y, arrivals.get(y, 0))
    return True, None


def descent_set(word: Sequence[int]) -> int:
    """Bitmask of weak descents i (1-based) with word[i-1] >= word[i]."""
    m = 0
    for i in range(len(word) - 1):
        if word[i] >= word[i + 1]:
            m |= 1 << i
    return m


def flag_from_labeling(lam: EdgeLabeling) -> FlagVector:
    """beta(S) = number of maximal chains whose label descent set is S.

    Chains are aggregated by (element, last label, descent set so far) so
    each cover is visited once per state instead of once per chain.
    """
    L = lam.host
    states = [None] * L.size
    states[L.bottom] = {(None, 0): 1}
    for x in L.topo:
        sx = states[x]
        if not sx:
            continue
        r = L.rank[x]
        for y in L.upper[x]:
            l = lam.label[x, y]
            sy = states[y]
            if sy is None:
                sy = states[y] = {}
            for (last, mask), c in sx.items():
                if last is not None and last >= l:
                    key = (l, mask | 1 << (r - 1))
                else:
                    key = (l, mask)
                sy[key] = sy.get(key, 0) + c
        if x != L.top:
            states[x] = None
    out = defaultdict(int)
    for (_, mask), c in (states[L.top] or {}).items():
        out[mask] += c
    if L.n == 0:
        out[0] = 1
    return FlagVector(L.n, dict(out))


def flag_by_chain_enumeration(lam: EdgeLabeling) -> FlagVector:
    """Same as flag_from_labeling, by explicit DFS over maximal chains (small cases)."""
    out = defaultdict(int)
    for c in maximal_chains(lam.host):
        out[descent_set(lam.word(c))] += 1
    return FlagVector(lam.host.n, dict(out))


def psi_step(L: GradedBoundedPoset, x: int, y: int) -> int:
    """Index j of the later-listed block taking part in the merge x < y."""
    if L.kind and L.kind[0] == "partition_A":
        blocks = L.objects[x]
        b1, b2 = _merged_blocks(blocks, L.objects[y])
        return max(blocks.index(b1), blocks.index(b2)) + 1
    if L.kind and L.kind[0] == "partition_B":
        px = L.objects[x][1]
        kind, b1, b2 = _typeB_merge(L.objects[x], L.objects[y])
        if kind == "zero":
            return px.index(b1) + 1
        return max(px.index(b1), px.index(b2)) + 1
    raise HostMismatch(f"psi is defined on type A/B partition lattices, got {L.kind}")


def phi_step(L: GradedBoundedPoset, x: int, y: int) -> tuple[int, int]:
    """The pair recording which blocks merge; injective along maximal chains."""
    if L.kind and L.kind[0] == "partition_A":
        blocks = L.objects[x]
        b1, b2 = _merged_blocks(blocks, L.objects[y])
        i, j = sorted((blocks.index(b1) + 1, blocks.index(b2) + 1))
        return i, j
    if L.kind and L.kind[0] == "partition_B":
        px = L.objects[x][1]
        kind, b1, b2 = _typeB_merge(L.objects[x], L.objects[y])
        if kind == "zero":
            j = px.index(b1) + 1
            return j, j
        i, j = sorted((px.index(b1) + 1, px.index(b2) + 1))
        # same-sign merge B_i + B_j gives (i, j); B_j with -B_i gives (j, i)
        bi, bj = px[i - 1], px[j - 1]
        merged = set(bi) | set(bj)
        same = any(set(b) == merged for b in L.objects[y][1])
        return (i, j) if same else (j, i)
    raise HostMismatch(f"phi is defined on type A/B partition lattices, got {L.kind}")


def psi_word(L: GradedBoundedPoset, chain: Sequence[int]) -> tuple[int, ...]:
    return tuple(psi_step(L, a, b) for a, b in zip(chain, chain[1:]))


def phi_word(L: GradedBoundedPoset, chain: Sequence[int]) -> tuple[tuple[int, int], ...]:
    return tuple(phi_step(L, a, b) for a, b in zip(chain, chain[1:]))


def strict_descent_set(word: Sequence[int]) -> int:
    m = 0
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            m |= 1 << i
    return m
