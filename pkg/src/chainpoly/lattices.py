"""Constructors for the concrete lattice families.

Each constructor builds the lattice breadth-first from its bottom element,
generating upper covers directly from the combinatorial description, so the
elements come out numbered rank by rank.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations, product
from typing import Callable, Hashable, Iterable

from .posets import (GradedBoundedPoset, FinitePoset, grade, pyramid_poset,
                     subposet)


class CapExceeded(ValueError):
    """Requested instance is above the default resource cap."""


CAPS = {"A": 9, "B": 6, "D": 6}


def _check_cap(family: str, n: int, override: bool) -> None:
    if not override and n > CAPS[family]:
        raise CapExceeded(f"n={n} exceeds the default cap {CAPS[family]} for type {family}; "
                          "pass cap_override=True to build anyway")


def build_from_bottom(bottom: Hashable, up_covers: Callable[[Hashable], Iterable[Hashable]],
                      fmt: Callable[[Hashable], str] = str, kind=None) -> GradedBoundedPoset:
    """Breadth-first closure from ``bottom`` under ``up_covers``."""
    index = {bottom: 0}
    objects = [bottom]
    upper: list[list[int]] = [[]]
    queue = deque([bottom])
    while queue:
        x = queue.popleft()
        i = index[x]
        succ = set()
        for y in up_covers(x):
            j = index.get(y)
            if j is None:
                j = len(objects)
                index[y] = j
                objects.append(y)
                upper.append([])
                queue.append(y)
            succ.add(j)
        upper[i] = sorted(succ)
    P = FinitePoset(len(objects), upper, labels=[fmt(o) for o in objects],
                    objects=objects, kind=kind)
    return grade(P)


# -- Boolean lattices and face lattices --------------------------------

def _fmt_set(mask: int) -> str:
    return "{" + ",".join(str(i + 1) for i in range(mask.bit_length()) if mask >> i & 1) + "}"


def boolean_lattice(n: int) -> GradedBoundedPoset:
    """Subsets of [n] ordered by inclusion."""
    if n < 1:
        raise ValueError("n must be positive")

    def covers(mask):
        return [mask | 1 << i for i in range(n) if not mask >> i & 1]

    return build_from_bottom(0, covers, _fmt_set, kind=("boolean", n))


def simplex_face_lattice(n: int) -> GradedBoundedPoset:
    """Face lattice of the n-dimensional simplex (Boolean lattice on n+1 vertices)."""
    if n < 1:
        raise ValueError("n must be positive")
    L = boolean_lattice(n + 1)
    L.kind = ("simplex", n)
    return L


def cube_face_lattice(n: int) -> GradedBoundedPoset:
    """Faces of [0,1]^n as words over {0,1,*}, plus the empty face."""
    if n < 1:
        raise ValueError("n must be positive")
    empty = "empty"

    def covers(x):
        if x == empty:
            return ["".join(v) for v in product("01", repeat=n)]
        return [x[:i] + "*" + x[i + 1:] for i in range(n) if x[i] != "*"]

    return build_from_bottom(empty, covers, kind=("cube", n))


# -- subspace lattices ---------------------------------------------------

class FiniteField:
    """GF(q) for q in {2, 3, 4, 5, 7}; elements are 0..q-1."""

    def __init__(self, q: int):
        self.q = q
        if q in (2, 3, 5, 7):
            self.add = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        elif q == 4:
            # 0, 1, w, w+1 as 2-bit vectors, w^2 = w + 1
            exp = [1, 2, 3]
            log = {1: 0, 2: 1, 3: 2}
            self.add = [[a ^ b for b in range(4)] for a in range(4)]
            self.mul = [[0 if a == 0 or b == 0 else exp[(log[a] + log[b]) % 3]
                         for b in range(4)] for a in range(4)]
        else:
            raise ValueError(f"unsupported field size q={q}")
        self.neg = [next(b for b in range(q) if self.add[a][b] == 0) for a in range(q)]
        self.inv = [None] + [next(b for b in range(q) if self.mul[a][b] == 1) for a in range(1, q)]

    def rref(self, rows) -> tuple[tuple[int, ...], ...]:
        """Reduced row-echelon form with zero rows removed."""
        rows = [list(r) for r in rows]
        out = []
        ncols = len(rows[0]) if rows else 0
        r = 0
        for c in range(ncols):
            piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            s = self.inv[rows[r][c]]
            rows[r] = [self.mul[s][v] for v in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = self.neg[rows[i][c]]
                    rows[i] = [self.add[a][self.mul[f][b]] for a, b in zip(rows[i], rows[r])]
            r += 1
        for row in rows[:r]:
            out.append(tuple(row))
        return tuple(out)


def subspace_lattice(n: int, q: int) -> GradedBoundedPoset:
    """All subspaces of GF(q)^n ordered by inclusion, keyed by RREF bases."""
    if n < 1:
        raise ValueError("n must be positive")
    F = FiniteField(q)
    vectors = [v for v in product(range(q), repeat=n) if any(v)]

    def covers(U):
        out = set()
        for v in vectors:
            W = F.rref(list(U) + [v])
            if len(W) == len(U) + 1:
                out.add(W)
        return out

    def fmt(U):
        return "<" + ";".join("".join(map(str, r)) for r in U) + ">"

    return build_from_bottom((), covers, fmt, kind=("subspace", n, q))


# -- partition lattices ---------------------------------------------------

def _fmt_partition(p) -> str:
    return "|".join("".join(map(str, b)) if max(b) < 10 else ",".join(map(str, b)) for b in p)


def partition_lattice(n: int, cap_override: bool = False) -> GradedBoundedPoset:
    """Set partitions of [n] under reverse refinement.

    Each element is a tuple of sorted blocks listed by increasing minimum.
    """
    if n < 1:
        raise ValueError("n must be positive")
    _check_cap("A", n, cap_override)
    bottom = tuple((i,) for i in range(1, n + 1))

    def covers(p):
        out = []
        for a, b in combinations(range(len(p)), 2):
            merged = tuple(sorted(p[a] + p[b]))
            rest = [blk for k, blk in enumerate(p) if k != a and k != b]
            out.append(tuple(sorted(rest + [merged])))
        return out

    return build_from_bottom(bottom, covers, _fmt_partition, kind=("partition_A", n))


def _normalize_signed(block: Iterable[int]) -> tuple[int, ...]:
    """Choose the sign of a nonzero block so that its element of least |.| is positive."""
    block = tuple(block)
    lead = min(block, key=abs)
    if lead < 0:
        block = tuple(-v for v in block)
    return tuple(sorted(block, key=lambda v: (abs(v), v)))


def signed_blocks(x) -> list[tuple[int, ...]]:
    """All blocks of a type-B partition over {-n..n}, zero block first."""
    zero, blocks = x
    zb = tuple(sorted([0] + [v for i in zero for v in (i, -i)]))
    out = [zb]
    for b in blocks:
        out.append(b)
        out.append(tuple(-v for v in b))
    return out


def _fmt_signed(x) -> str:
    zero, blocks = x
    z = "0" + "".join(f"±{i}" for i in zero)
    rest = ["".join(("-" if v < 0 else "") + str(abs(v)) for v in b) for b in blocks]
    return "[" + z + ("|" + "|".join(rest) if rest else "") + "]"


def _typeB_covers(x):
    """Upper covers of a type-B partition stored as (zero-block abs values, positive blocks)."""
    zero, blocks = x
    out = []
    for k, b in enumerate(blocks):
        rest = blocks[:k] + blocks[k + 1:]
        z = tuple(sorted(set(zero) | {abs(v) for v in b}))
        out.append((z, rest))
    for a, c in combinations(range(len(blocks)), 2):
        rest = [blk for k, blk in enumerate(blocks) if k != a and k != c]
        for sign in (1, -1):
            merged = _normalize_signed(blocks[a] + tuple(sign * v for v in blocks[c]))
            out.append((zero, tuple(sorted(rest + [merged], key=lambda t: abs(t[0])))))
    return out


def partition_lattice_B(n: int, cap_override: bool = False) -> GradedBoundedPoset:
    """Type-B partition lattice: symmetric partitions of {-n..n} with a zero block.

    An element is ``(zero, blocks)``: ``zero`` lists the i with +-i in the zero
    block, ``blocks`` holds one sign-normalized representative of each pair
    {B, -B} of nonzero blocks.
    """
    if n < 1:
        raise ValueError("n must be positive")
    _check_cap("B", n, cap_override)
    bottom = ((), tuple((i,) for i in range(1, n + 1)))
    return build_from_bottom(bottom, _typeB_covers, _fmt_signed, kind=("partition_B", n))


def partition_lattice_D(n: int, cap_override: bool = False) -> GradedBoundedPoset:
    """Subposet of the type-B lattice whose zero block is never {0, i, -i}."""
    if n < 2:
        raise ValueError("n must be at least 2")
    _check_cap("D", n, cap_override)
    B = partition_lattice_B(n, cap_override=True)
    keep = [i for i, (zero, _) in enumerate(B.objects) if len(zero) != 1]
    return grade(subposet(B, keep, kind=("partition_D", n)))


# -- matroid flat lattices by formula --------------------------------------

def uniform_flats(m: int, n: int) -> GradedBoundedPoset:
    """Lattice of flats of U_{m,n}: subsets of size < n, plus the full set."""
    if not 1 <= n <= m:
        raise ValueError("need 1 <= n <= m")
    full = (1 << m) - 1

    def covers(mask):
        if mask == full:
            return []
        k = bin(mask).count("1")
        if k == n - 1:
            return [full]
        return [mask | 1 << i for i in range(m) if not mask >> i & 1]

    return build_from_bottom(0, covers, _fmt_set, kind=("uniform", m, n))


def near_pencil_flats(m: int, n: int) -> GradedBoundedPoset:
    """Near-pencil of rank n on m elements: U_{m-n+2,2} with n-2 coloops added."""
    if not 2 <= n <= m:
        raise ValueError("need 2 <= n <= m")
    L = uniform_flats(m - n + 2, 2)
    for _ in range(n - 2):
        L = pyramid_poset(L)
    L.kind = ("near_pencil", m, n)
    return L
