"""Finite posets: construction, chain counting, flag vectors, pyramid and prism.

Elements are integer indices ``0..size-1``. The order relation is held as
Python-int bitsets (``up[i]`` has bit ``j`` set iff ``i < j``), which keeps
closure and reduction cheap for the few-thousand-element lattices used here.
Counting runs through numpy matrix-vector products once a magnitude guard has
confirmed that int64 cannot overflow.
"""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .polynomials import Poly, h_transform

INT64_SAFE = 2 ** 62


class PosetError(ValueError):
    pass


class CycleError(PosetError):
    pass


class NotBoundedError(PosetError):
    pass


class NotGradedError(PosetError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _topological_order(size: int, upper: Sequence[Sequence[int]]) -> list[int]:
    indeg = [0] * size
    for succ in upper:
        for j in succ:
            indeg[j] += 1
    stack = [i for i in range(size) if indeg[i] == 0]
    stack.reverse()
    order = []
    while stack:
        i = stack.pop()
        order.append(i)
        for j in upper[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                stack.append(j)
    if len(order) != size:
        raise CycleError("relation contains a cycle")
    return order


class FinitePoset:
    """A finite poset given by its cover relations.

    ``labels`` are display strings and ``objects`` the mathematical objects
    behind each index (set partitions, subspaces, ...); both are side data.
    ``kind`` names the constructing family, e.g. ``("partition_A", 4)``.
    """

    def __init__(self, size: int, upper: Sequence[Iterable[int]],
                 labels: Sequence[str] | None = None,
                 objects: Sequence | None = None,
                 kind: tuple | None = None):
        self.size = size
        self.upper = tuple(tuple(sorted(set(u))) for u in upper)
        if len(self.upper) != size:
            raise PosetError("cover list length does not match size")
        self.labels = tuple(labels) if labels is not None else None
        self.objects = tuple(objects) if objects is not None else None
        self.kind = kind
        self.topo = _topological_order(size, self.upper)

    # -- derived structure -------------------------------------------
    @cached_property
    def lower(self) -> tuple[tuple[int, ...], ...]:
        low = [[] for _ in range(self.size)]
        for i, succ in enumerate(self.upper):
            for j in succ:
                low[j].append(i)
        return tuple(tuple(sorted(x)) for x in low)

    @cached_property
    def up(self) -> tuple[int, ...]:
        """Strict up-sets as bitsets."""
        up = [0] * self.size
        for i in reversed(self.topo):
            m = 0
            for j in self.upper[i]:
                m |= up[j] | (1 << j)
            up[i] = m
        return tuple(up)

    @cached_property
    def down(self) -> tuple[int, ...]:
        down = [0] * self.size
        for i in self.topo:
            m = 0
            for j in self.lower[i]:
                m |= down[j] | (1 << j)
            down[i] = m
        return tuple(down)

    def less(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def leq(self, i: int, j: int) -> bool:
        return i == j or self.less(i, j)

    def covers(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.size) for j in self.upper[i]]

    def minimal(self) -> list[int]:
        return [i for i in range(self.size) if not self.lower[i]]

    def maximal(self) -> list[int]:
        return [i for i in range(self.size) if not self.upper[i]]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def __repr__(self):
        return f"{type(self).__name__}(size={self.size}, covers={sum(map(len, self.upper))})"

    def less_matrix(self) -> np.ndarray:
        """Dense boolean matrix M[i, j] = (i < j)."""
        m = self.size
        nbytes = (m + 7) // 8
        rows = np.zeros((m, nbytes * 8), dtype=np.uint8)
        for i, mask in enumerate(self.up):
            if mask:
                raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
                rows[i] = np.unpackbits(raw, bitorder="little")
        return rows[:, :m].astype(bool)

    def height(self) -> int:
        """Largest cardinality of a chain."""
        longest = [1] * self.size
        for i in self.topo:
            for j in self.upper[i]:
                longest[j] = max(longest[j], longest[i] + 1)
        return max(longest, default=0)


def from_cover_relations(m: int, pairs: Iterable[tuple[int, int]], labels=None) -> FinitePoset:
    """Build a poset from generating pairs ``(low, high)``.

    Pairs implied by transitivity are demoted with a warning; a cycle raises
    :class:`CycleError`.
    """
    succ = [set() for _ in range(m)]
    for a, b in pairs:
        if not (0 <= a < m and 0 <= b < m):
            raise PosetError(f"pair ({a}, {b}) out of range")
        if a == b:
            raise CycleError(f"reflexive pair ({a}, {a})")
        succ[a].add(b)
    raw = FinitePoset(m, succ, labels=labels)
    up = raw.up
    upper = []
    dropped = []
    for a in range(m):
        via = 0
        for c in succ[a]:
            via |= up[c]
        keep = [b for b in succ[a] if not via >> b & 1]
        dropped.extend((a, b) for b in succ[a] if via >> b & 1)
        upper.append(keep)
    if dropped:
        warnings.warn(f"demoted non-cover pairs: {sorted(dropped)}", stacklevel=2)
        return FinitePoset(m, upper, labels=labels)
    return raw


def from_order(size: int, less, **meta) -> FinitePoset:
    """Poset from a strict-order predicate ``less(i, j)``; covers by transitive reduction."""
    up = [0] * size
    for i in range(size):
        for j in range(size):
            if i != j and less(i, j):
                up[i] |= 1 << j
    return _from_up_sets(up, **meta)


def _from_up_sets(up: Sequence[int], **meta) -> FinitePoset:
    upper = []
    for i, mask in enumerate(up):
        via = 0
        for j in _bits(mask):
            via |= up[j]
        upper.append(list(_bits(mask & ~via)))
    return FinitePoset(len(up), upper, **meta)


def subposet(P: FinitePoset, keep: Iterable[int], kind=None) -> FinitePoset:
    """Induced subposet on ``keep`` (in the given order), covers recomputed."""
    keep = list(keep)
    index = {x: k for k, x in enumerate(keep)}
    keep_mask = 0
    for x in keep:
        keep_mask |= 1 << x
    up = []
    for x in keep:
        up.append(sum(1 << index[y] for y in _bits(P.up[x] & keep_mask)))
    labels = [P.label(x) for x in keep] if P.labels is not None else None
    objects = [P.objects[x] for x in keep] if P.objects is not None else None
    return _from_up_sets(up, labels=labels, objects=objects, kind=kind)


def dual(P: FinitePoset) -> FinitePoset:
    Q = FinitePoset(P.size, P.lower, labels=P.labels, objects=P.objects)
    if isinstance(P, GradedBoundedPoset):
        return grade(Q)
    return Q


def interval(L: FinitePoset, x: int, y: int) -> FinitePoset:
    """Closed interval [x, y]."""
    if not L.leq(x, y):
        raise PosetError(f"interval endpoints out of order: {x} !<= {y}")
    between = [z for z in range(L.size)
               if (z == x or L.less(x, z)) and (z == y or L.less(z, y))]
    Q = subposet(L, between)
    return grade(Q) if isinstance(L, GradedBoundedPoset) else Q


def remove_extremes(L: FinitePoset) -> FinitePoset:
    """Proper part: drop every minimum and maximum element of a bounded poset."""
    mins, maxs = L.minimal(), L.maximal()
    drop = set()
    if len(mins) == 1:
        drop.add(mins[0])
    if len(maxs) == 1:
        drop.add(maxs[0])
    return subposet(L, [i for i in range(L.size) if i not in drop])


# -- chain counting ----------------------------------------------------

def _chain_counts(P: FinitePoset) -> list[int]:
    """c_k = number of k-element chains, k >= 0."""
    m = P.size
    if m == 0:
        return [1]
    M = P.less_matrix()
    # magnitude dry run in floating point
    Mf = M.astype(np.float64)
    v = np.ones(m)
    peak = 1.0
    while v.any():
        peak = max(peak, float(v.sum()))
        v = v @ Mf
    if peak < INT64_SAFE / 4:
        Mi = M.astype(np.int64)
        v = np.ones(m, dtype=np.int64)
    else:
        Mi = M.astype(object)
        v = np.ones(m, dtype=object)
    counts = [1]
    while True:
        total = int(v.sum())
        if total == 0:
            break
        counts.append(total)
        v = v @ Mi
    return counts


def chain_polynomial(P: FinitePoset) -> Poly:
    """p_P(x) = sum_k c_k x^k with c_k the number of k-element chains."""
    return Poly(_chain_counts(P))


def h_polynomial(P: FinitePoset) -> Poly:
    """h-polynomial of the order complex: (1-x)^n p(x/(1-x)), n the height."""
    p = chain_polynomial(P)
    return h_transform(p, p.degree)


# -- graded bounded posets ---------------------------------------------

class GradedBoundedPoset(FinitePoset):
    """Bounded poset in which all maximal chains have ``n + 1`` elements."""

    def __init__(self, base: FinitePoset, bottom: int, top: int, rank: Sequence[int]):
        super().__init__(base.size, base.upper, base.labels, base.objects, base.kind)
        self.__dict__.update({k: v for k, v in base.__dict__.items()
                              if k in ("up", "down", "lower")})
        self.bottom = bottom
        self.top = top
        self.rank = tuple(rank)
        self.n = self.rank[top]

    @property
    def base(self) -> FinitePoset:
        return self

    @cached_property
    def layers(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.n + 1)]
        for i, r in enumerate(self.rank):
            out[r].append(i)
        return tuple(tuple(x) for x in out)

    @cached_property
    def maximal_chain_count(self) -> int:
        ways = [0] * self.size
        ways[self.bottom] = 1
        for i in self.topo:
            for j in self.upper[i]:
                ways[j] += ways[i]
        return ways[self.top]

    @cached_property
    def _layer_matrices(self) -> dict:
        pos = {}
        for layer in self.layers:
            for k, x in enumerate(layer):
                pos[x] = k
        dense = self.less_matrix()
        out = {}
        for s in range(self.n + 1):
            rows = np.array(self.layers[s])
            for t in range(s + 1, self.n + 1):
                cols = np.array(self.layers[t])
                out[s, t] = dense[np.ix_(rows, cols)].astype(np.int64)
        return out


def grade(P: FinitePoset) -> GradedBoundedPoset:
    """Detect 0-hat, 1-hat and the rank function, or raise."""
    if isinstance(P, GradedBoundedPoset):
        return P
    mins, maxs = P.minimal(), P.maximal()
    if len(mins) != 1 or len(maxs) != 1:
        raise NotBoundedError(f"{len(mins)} minimal and {len(maxs)} maximal elements")
    bottom, top = mins[0], maxs[0]
    rank = [0] * P.size
    for i in P.topo:
        for j in P.upper[i]:
            rank[j] = max(rank[j], rank[i] + 1)
    for i in range(P.size):
        for j in P.upper[i]:
            if rank[j] != rank[i] + 1:
                raise NotGradedError(f"cover ({i}, {j}) jumps from rank {rank[i]} to {rank[j]}")
    return GradedBoundedPoset(P, bottom, top, rank)


def h_of_bounded(L: GradedBoundedPoset) -> Poly:
    """h_L computed on the proper part of L."""
    if L.n < 1:
        raise PosetError("rank must be at least 1")
    return h_polynomial(remove_extremes(L))


# -- flag vectors -------------------------------------------------------

def subset_to_mask(S: Iterable[int]) -> int:
    m = 0
    for i in S:
        m |= 1 << (i - 1)
    return m


def mask_to_subset(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in _bits(mask))


def subset_key(mask: int) -> str:
    return ",".join(map(str, mask_to_subset(mask)))


@dataclass
class FlagVector:
    """Map from subsets S of [n-1] (bitmask, bit i-1 for i) to integers."""

    n: int
    values: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, S) -> int:
        mask = S if isinstance(S, int) else subset_to_mask(S)
        return self.values.get(mask, 0)

    def __eq__(self, other):
        if not isinstance(other, FlagVector):
            return NotImplemented
        keys = set(self.values) | set(other.values)
        return self.n == other.n and all(self[k] == other[k] for k in keys)

    def total(self) -> int:
        return sum(self.values.values())

    def h_polynomial(self) -> Poly:
        coeffs = [0] * max(self.n, 1)
        for mask, v in self.values.items():
            coeffs[_popcount(mask)] += v
        return Poly(coeffs)

    def to_json(self) -> dict[str, int]:
        return {subset_key(m): self[m] for m in range(1 << max(self.n - 1, 0))}

    @classmethod
    def from_json(cls, n: int, data: dict[str, int]) -> "FlagVector":
        vals = {}
        for key, v in data.items():
            S = [int(s) for s in key.split(",") if s.strip()]
            vals[subset_to_mask(S)] = int(v)
        return cls(n, vals)


def _require_graded(L) -> GradedBoundedPoset:
    if not isinstance(L, GradedBoundedPoset):
        return grade(L)
    return L


def alpha_flag(L: GradedBoundedPoset, S: Iterable[int]) -> int:
    """Maximal chains of the rank-selected subposet {rank in S} + {0-hat, 1-hat}."""
    L = _require_graded(L)
    ranks = sorted(set(S))
    if any(not 1 <= r <= L.n - 1 for r in ranks):
        raise PosetError(f"S must be a subset of [1, {L.n - 1}]")
    if L.maximal_chain_count >= INT64_SAFE:
        raise OverflowError("maximal-chain count exceeds int64 range")
    mats = L._layer_matrices
    v = np.ones(1, dtype=np.int64)
    prev = 0
    for r in ranks + [L.n]:
        v = v @ mats[prev, r]
        prev = r
    return int(v[0])


def alpha_table(L: GradedBoundedPoset) -> FlagVector:
    L = _require_graded(L)
    n = L.n
    vals = {}
    for mask in range(1 << max(n - 1, 0)):
        vals[mask] = alpha_flag(L, mask_to_subset(mask))
    return FlagVector(n, vals)


def beta_from_alpha(alpha: FlagVector) -> FlagVector:
    """beta(S) = sum over T subset S of (-1)^{|S-T|} alpha(T)."""
    k = max(alpha.n - 1, 0)
    vals = [alpha[m] for m in range(1 << k)]
    for bit in range(k):
        for m in range(1 << k):
            if m >> bit & 1:
                vals[m] -= vals[m ^ (1 << bit)]
    return FlagVector(alpha.n, dict(enumerate(vals)))


def beta_flag(L: GradedBoundedPoset) -> FlagVector:
    """Flag h-vector by rank selection and inclusion-exclusion."""
    return beta_from_alpha(alpha_table(_require_graded(L)))


# -- products, pyramid, prism -----------------------------------------

def product_poset(P: FinitePoset, Q: FinitePoset) -> FinitePoset:
    """Cartesian product with componentwise order; index of (x, y) is x*|Q| + y."""
    nq = Q.size
    upper = []
    for x in range(P.size):
        for y in range(nq):
            succ = [x * nq + y2 for y2 in Q.upper[y]]
            succ += [x2 * nq + y for x2 in P.upper[x]]
            upper.append(succ)
    labels = [f"({P.label(x)},{Q.label(y)})" for x in range(P.size) for y in range(nq)]
    return FinitePoset(P.size * nq, upper, labels=labels)


def chain_poset(k: int) -> GradedBoundedPoset:
    """The k-element chain."""
    return grade(FinitePoset(k, [[i + 1] if i + 1 < k else [] for i in range(k)]))


def pyramid_poset(L: GradedBoundedPoset) -> GradedBoundedPoset:
    """Pyr(L) = L x (2-element chain)."""
    L = _require_graded(L)
    if L.n < 1:
        raise PosetError("rank must be at least 1")
    return grade(product_poset(L, chain_poset(2)))


def prism_poset(L: GradedBoundedPoset) -> GradedBoundedPoset:
    """New minimum adjoined below (L - 0-hat) x (L_2 - 0-hat), L_2 the Boolean lattice of rank 2."""
    L = _require_graded(L)
    if L.n < 1:
        raise PosetError("rank must be at least 1")
    rest = [x for x in range(L.size) if x != L.bottom]
    idx = {x: k for k, x in enumerate(rest)}
    # L_2 minus its bottom: a, b below t
    small_upper = {0: [2], 1: [2], 2: []}
    size = 1 + 3 * len(rest)
    upper = [[] for _ in range(size)]
    labels = ["0"] + [""] * (size - 1)
    names = "abt"
    for x in rest:
        for s in range(3):
            me = 1 + 3 * idx[x] + s
            labels[me] = f"({L.label(x)},{names[s]})"
            for s2 in small_upper[s]:
                upper[me].append(1 + 3 * idx[x] + s2)
            for x2 in L.upper[x]:
                upper[me].append(1 + 3 * idx[x2] + s)
    for x in L.upper[L.bottom]:
        for s in (0, 1):
            upper[0].append(1 + 3 * idx[x] + s)
    return grade(FinitePoset(size, upper, labels=labels))


def add_bounds(P: FinitePoset) -> FinitePoset:
    """Adjoin a new minimum and a new maximum."""
    m = P.size
    upper = [list(u) for u in P.upper]
    for i in P.maximal():
        upper[i].append(m + 1)
    upper.append(P.minimal() if m else [m + 1])
    upper.append([])
    labels = list(P.labels) + ["0^", "1^"] if P.labels else None
    return FinitePoset(m + 2, upper, labels=labels)


def face_poset_of_order_complex(P: FinitePoset) -> FinitePoset:
    """Nonempty chains of P ordered by inclusion (the face poset of its order complex)."""
    chains: list[tuple[int, ...]] = []

    def extend(chain, cand):
        for y in _bits(cand):
            c = chain + (y,)
            chains.append(c)
            extend(c, cand & P.up[y])

    for x in P.topo:
        chains.append((x,))
        extend((x,), P.up[x])
    chains = sorted(set(tuple(sorted(c)) for c in chains), key=lambda c: (len(c), c))
    index = {c: k for k, c in enumerate(chains)}
    upper = [[] for _ in chains]
    for c, k in index.items():
        for j in range(len(c)):
            sub = c[:j] + c[j + 1:]
            if sub:
                upper[index[sub]].append(k)
    return FinitePoset(len(chains), upper, objects=chains)


def maximal_chains(L: GradedBoundedPoset) -> Iterator[tuple[int, ...]]:
    """All maximal chains 0-hat = c_0 < ... < c_n = 1-hat, depth first."""
    L = _require_graded(L)
    stack = [(L.bottom,)]
    while stack:
        c = stack.pop()
        last = c[-1]
        if last == L.top:
            yield c
            continue
        for y in reversed(L.upper[last]):
            stack.append(c + (y,))


# -- serialization ----------------------------------------------------

def dumps_poset(P: FinitePoset) -> str:
    lines = [f"poset {P.size}"]
    if P.labels is not None:
        for i, lab in enumerate(P.labels):
            lines.append(f"label {i} {lab}")
    for i, j in P.covers():
        lines.append(f"cover {i} {j}")
    return "\n".join(lines) + "\n"


def loads_poset(text: str) -> FinitePoset:
    size = None
    labels: dict[int, str] = {}
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        try:
            if head == "poset":
                size = int(rest)
            elif head == "label":
                i, _, lab = rest.partition(" ")
                labels[int(i)] = lab
            elif head == "cover":
                a, b = rest.split()
                pairs.append((int(a), int(b)))
            else:
                raise PosetError(f"line {lineno}: unknown directive {head!r}")
        except ValueError as exc:
            if isinstance(exc, PosetError):
                raise
            raise PosetError(f"line {lineno}: {exc}") from exc
    if size is None:
        raise PosetError("missing 'poset <m>' header")
    lab = [labels.get(i, str(i)) for i in range(size)] if labels else None
    return from_cover_relations(size, pairs, labels=lab)


def poset_to_json(P: FinitePoset) -> str:
    data = {"size": P.size, "covers": [list(c) for c in P.covers()]}
    if P.labels is not None:
        data["labels"] = list(P.labels)
    return json.dumps(data, sort_keys=True)


def poset_from_json(text: str) -> FinitePoset:
    data = json.loads(text)
    return from_cover_relations(data["size"], [tuple(c) for c in data["covers"]],
                                labels=data.get("labels"))


def _refined_colors(posets: Sequence[FinitePoset]) -> list[list[int]]:
    """Colour refinement on cover graphs, with one palette shared by all inputs.

    Starts from height (longest chain below) and repeatedly splits classes by
    the multisets of colours directly below and above, until stable.
    """
    downs, ups, colors = [], [], []
    for R in posets:
        down = [[] for _ in range(R.size)]
        up = [[] for _ in range(R.size)]
        for x, y in R.covers():
            down[y].append(x)
            up[x].append(y)
        height = [0] * R.size
        for v in R.topo:
            for y in up[v]:
                height[y] = max(height[y], height[v] + 1)
        downs.append(down)
        ups.append(up)
        colors.append(height)
    classes = len({c for col in colors for c in col})
    while True:
        palette: dict = {}
        new = []
        for col, down, up in zip(colors, downs, ups):
            new.append([palette.setdefault(
                (col[v], tuple(sorted(col[x] for x in down[v])),
                 tuple(sorted(col[y] for y in up[v]))), len(palette))
                for v in range(len(col))])
        colors = new
        if len(palette) == classes:
            return colors
        classes = len(palette)


def is_isomorphic(P: FinitePoset, Q: FinitePoset) -> bool:
    """Poset isomorphism, decided as directed isomorphism of cover graphs."""
    import networkx as nx

    if P.size != Q.size or len(P.covers()) != len(Q.covers()):
        return False
    colors = _refined_colors([P, Q])
    if sorted(colors[0]) != sorted(colors[1]):
        return False
    graphs = []
    for R, col in zip((P, Q), colors):
        G = nx.DiGraph()
        G.add_nodes_from((v, {"c": col[v]}) for v in range(R.size))
        G.add_edges_from(R.covers())
        graphs.append(G)
    return nx.is_isomorphic(*graphs, node_match=lambda a, b: a["c"] == b["c"])


# -- lattice operations --------------------------------------------------

class _LatticeOps:
    """Join/meet on a poset renumbered along a linear extension."""

    def __init__(self, P: FinitePoset):
        self.P = P
        self.pos = {x: k for k, x in enumerate(P.topo)}
        self.U = [0] * P.size
        self.D = [0] * P.size
        for x in range(P.size):
            k = self.pos[x]
            self.U[k] = sum(1 << self.pos[y] for y in _bits(P.up[x])) | (1 << k)
            self.D[k] = sum(1 << self.pos[y] for y in _bits(P.down[x])) | (1 << k)

    def join(self, x: int, y: int) -> int | None:
        c = self.U[self.pos[x]] & self.U[self.pos[y]]
        if not c:
            return None
        k = (c & -c).bit_length() - 1
        return self.P.topo[k] if self.U[k] == c else None

    def meet(self, x: int, y: int) -> int | None:
        c = self.D[self.pos[x]] & self.D[self.pos[y]]
        if not c:
            return None
        k = c.bit_length() - 1
        return self.P.topo[k] if self.D[k] == c else None


def is_lattice(P: FinitePoset) -> bool:
    ops = _LatticeOps(P)
    return all(ops.join(x, y) is not None and ops.meet(x, y) is not None
               for x, y in combinations(range(P.size), 2))


def geometric_witness(L: GradedBoundedPoset):
    """None if L is an atomic semimodular lattice, else a short failure description."""
    L = _require_graded(L)
    ops = _LatticeOps(L)
    atoms = list(L.upper[L.bottom])
    for x in range(L.size):
        if x == L.bottom:
            continue
        j = L.bottom
        for a in atoms:
            if L.leq(a, x):
                j = ops.join(j, a)
        if j != x:
            return ("not atomic", x)
    for x, y in combinations(range(L.size), 2):
        jn, mt = ops.join(x, y), ops.meet(x, y)
        if jn is None or mt is None:
            return ("not a lattice", (x, y))
        if L.rank[jn] + L.rank[mt] > L.rank[x] + L.rank[y]:
            return ("not semimodular", (x, y))
    return None


def is_geometric(L: GradedBoundedPoset) -> bool:
    return geometric_witness(L) is None
