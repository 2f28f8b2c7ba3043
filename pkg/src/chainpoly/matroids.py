"""Matroids from bases lists, their lattices of flats, and the conjecture harness.

Subsets of the ground set ``{0..m-1}`` are bitmasks throughout.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb
from pathlib import Path
from typing import Iterable

from .abindex import zonotope_h_from_flags
from .lattices import build_from_bottom
from .polynomials import (Poly, eulerian_A, eulerian_B, interlaces, is_real_rooted,
                          isolate_roots, sturm_count)
from .posets import (GradedBoundedPoset, beta_flag, geometric_witness, h_of_bounded)

FLATS_CAP = 12
EXCHANGE_CHECK_MAX = 10


class BasesParseError(ValueError):
    pass


class ExchangeViolation(ValueError):
    def __init__(self, msg, witness):
        super().__init__(msg)
        self.witness = witness


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _fmt(mask: int) -> str:
    return "{" + ",".join(str(i) for i in range(mask.bit_length()) if mask >> i & 1) + "}"


@dataclass
class Matroid:
    ground: int
    bases: frozenset[int]
    name: str = field(default="", compare=False)
    _rank_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.bases = frozenset(self.bases)
        if not self.bases:
            raise ValueError("a matroid needs at least one basis")
        sizes = {_popcount(b) for b in self.bases}
        if len(sizes) != 1:
            raise ValueError(f"bases of different cardinalities {sorted(sizes)}")
        full = (1 << self.ground) - 1
        if any(b & ~full for b in self.bases):
            raise ValueError("basis element outside the ground set")

    @property
    def rank_(self) -> int:
        return _popcount(next(iter(self.bases)))

    def rank(self, S: int | Iterable[int]) -> int:
        if not isinstance(S, int):
            S = sum(1 << e for e in S)
        r = self._rank_cache.get(S)
        if r is None:
            r = max(_popcount(b & S) for b in self.bases)
            self._rank_cache[S] = r
        return r

    def closure(self, S: int | Iterable[int]) -> int:
        if not isinstance(S, int):
            S = sum(1 << e for e in S)
        r = self.rank(S)
        out = S
        for e in range(self.ground):
            if not S >> e & 1 and self.rank(S | 1 << e) == r:
                out |= 1 << e
        return out

    def exchange_witness(self):
        """None if the basis-exchange axiom holds, else (B1, B2, x)."""
        bases = self.bases
        for b1 in bases:
            for b2 in bases:
                diff1 = b1 & ~b2
                diff2 = b2 & ~b1
                x = diff1
                while x:
                    xb = x & -x
                    x ^= xb
                    ok = False
                    y = diff2
                    while y:
                        yb = y & -y
                        y ^= yb
                        if (b1 ^ xb) | yb in bases:
                            ok = True
                            break
                    if not ok:
                        return b1, b2, xb.bit_length() - 1
        return None

    def verify(self) -> None:
        w = self.exchange_witness()
        if w is not None:
            b1, b2, x = w
            raise ExchangeViolation(
                f"basis exchange fails: B1={_fmt(b1)}, B2={_fmt(b2)}, x={x}", w)

    def is_simple(self) -> bool:
        if self.rank_ == 0:
            return self.ground == 0
        if any(self.rank(1 << e) == 0 for e in range(self.ground)):
            return False
        if self.rank_ >= 2:
            return all(self.rank(1 << e | 1 << f) == 2
                       for e, f in combinations(range(self.ground), 2))
        return self.ground == 1

    def coloops(self) -> list[int]:
        return [e for e in range(self.ground) if all(b >> e & 1 for b in self.bases)]


def add_coloop(M: Matroid) -> Matroid:
    """New element m lying in every basis."""
    e = 1 << M.ground
    return Matroid(M.ground + 1, frozenset(b | e for b in M.bases), name=f"{M.name}+coloop")


# -- standard families --------------------------------------------------------

def uniform_matroid(m: int, n: int) -> Matroid:
    return Matroid(m, frozenset(sum(1 << e for e in c) for c in combinations(range(m), n)),
                   name=f"U{m},{n}")


def near_pencil_matroid(m: int, n: int) -> Matroid:
    M = uniform_matroid(m - n + 2, 2)
    for _ in range(n - 2):
        M = add_coloop(M)
    M.name = f"near_pencil{m},{n}"
    return M


def graphic_matroid(edges: list[tuple[int, int]], name: str = "") -> Matroid:
    """Cycle matroid: bases are the spanning forests."""
    verts = sorted({v for e in edges for v in e})

    def is_forest(sub):
        parent = {v: v for v in verts}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b in sub:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True

    bases = []
    for k in range(len(edges), -1, -1):
        for c in combinations(range(len(edges)), k):
            if is_forest([edges[i] for i in c]):
                bases.append(sum(1 << i for i in c))
        if bases:
            break
    return Matroid(len(edges), frozenset(bases), name=name)


def _from_dependent_hyperplanes(m: int, r: int, circuits: list[set[int]], name: str) -> Matroid:
    """Rank-r matroid whose non-bases among r-subsets are exactly those inside a listed set."""
    nonbases = set()
    for C in circuits:
        for c in combinations(sorted(C), r):
            nonbases.add(sum(1 << e for e in c))
    bases = [sum(1 << e for e in c) for c in combinations(range(m), r)]
    return Matroid(m, frozenset(b for b in bases if b not in nonbases), name=name)


FANO_LINES = [{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}]


def fano() -> Matroid:
    return _from_dependent_hyperplanes(7, 3, FANO_LINES, "F7")


def non_fano() -> Matroid:
    return _from_dependent_hyperplanes(7, 3, FANO_LINES[:-1], "F7-")


def ag32() -> Matroid:
    """Affine geometry AG(3,2): 4-subsets of F_2^3 that are affine planes are dependent."""
    planes = []
    for c in combinations(range(8), 4):
        if c[0] ^ c[1] ^ c[2] ^ c[3] == 0:
            planes.append(set(c))
    return _from_dependent_hyperplanes(8, 4, planes, "AG(3,2)")


def vamos() -> Matroid:
    """Vamos matroid: five of the six unions of two of the pairs {0,1},{2,3},{4,5},{6,7} are dependent."""
    pairs = [{0, 1}, {2, 3}, {4, 5}, {6, 7}]
    unions = [pairs[i] | pairs[j] for i, j in combinations(range(4), 2)]
    return _from_dependent_hyperplanes(8, 4, unions[:5], "V8")


def wheel4() -> Matroid:
    hub = 4
    rim = [(0, 1), (1, 2), (2, 3), (3, 0)]
    spokes = [(i, hub) for i in range(4)]
    return graphic_matroid(rim + spokes, name="M(W4)")


def spot_matroids() -> list[Matroid]:
    """Hand-picked simple matroids on 7 and 8 elements."""
    return [uniform_matroid(7, 3), fano(), non_fano(),
            graphic_matroid([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)], "M(K4)+pendant"),
            uniform_matroid(8, 4), ag32(), vamos(), wheel4()]


# -- text format ----------------------------------------------------------------

def parse_bases(text: str, verify: bool = True, name: str = "") -> Matroid:
    """Parse ``ground <m>`` / ``basis i j ...`` lines (0-indexed, ``#`` comments)."""
    ground = None
    bases = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            if head == "ground":
                if len(rest) != 1:
                    raise ValueError("expected 'ground <m>'")
                ground = int(rest[0])
                if ground < 0:
                    raise ValueError("negative ground set size")
            elif head == "basis":
                if ground is None:
                    raise ValueError("basis before ground header")
                elems = [int(t) for t in rest]
                if any(not 0 <= e < ground for e in elems):
                    raise ValueError("element outside ground set")
                if len(set(elems)) != len(elems):
                    raise ValueError("repeated element in basis")
                bases.append(sum(1 << e for e in elems))
            else:
                raise ValueError(f"unknown directive {head!r}")
        except ValueError as exc:
            raise BasesParseError(f"line {lineno}: {exc}") from None
    if ground is None:
        raise BasesParseError("missing 'ground <m>' header")
    if not bases:
        raise BasesParseError("no bases given")
    try:
        M = Matroid(ground, frozenset(bases), name=name)
    except ValueError as exc:
        raise BasesParseError(str(exc)) from None
    if verify and M.ground <= EXCHANGE_CHECK_MAX:
        M.verify()
    return M


def dumps_bases(M: Matroid) -> str:
    lines = []
    if M.name:
        lines.append(f"# {M.name}")
    lines.append(f"ground {M.ground}")
    for b in sorted(M.bases, key=lambda b: [i for i in range(M.ground) if b >> i & 1]):
        lines.append("basis " + " ".join(str(i) for i in range(M.ground) if b >> i & 1))
    return "\n".join(lines) + "\n"


def revlex_to_bases(m: int, r: int, code: str) -> Matroid:
    """Decode a revlex-ordered basis indicator string ('*' or '+'/'-' for bases, '0' otherwise)."""
    subsets = sorted(combinations(range(m), r), key=lambda c: tuple(reversed(c)))
    code = code.strip()
    if len(code) != len(subsets):
        raise BasesParseError(f"expected {len(subsets)} symbols for r={r}, m={m}, got {len(code)}")
    bases = [sum(1 << e for e in c) for c, ch in zip(subsets, code) if ch != "0"]
    return Matroid(m, frozenset(bases))


# -- lattice of flats -----------------------------------------------------------

@dataclass
class FlatLattice:
    lattice: GradedBoundedPoset
    flat_sets: tuple[int, ...]


def flats_lattice(M: Matroid, cap_override: bool = False, check: bool = True) -> FlatLattice:
    """Flats by closures of F + e, rank by rank; geometricity verified unless check=False."""
    if M.ground > FLATS_CAP and not cap_override:
        raise ValueError(f"ground set of {M.ground} exceeds the cap {FLATS_CAP}")
    bottom = M.closure(0)

    def covers(F):
        out = set()
        for e in range(M.ground):
            if not F >> e & 1:
                out.add(M.closure(F | 1 << e))
        return out

    r = M.rank_
    is_uniform = len(M.bases) == comb(M.ground, r)
    kind = ("uniform", M.ground, r) if is_uniform else ("flats", M.name)
    L = build_from_bottom(bottom, covers, _fmt, kind=kind)
    if check:
        w = geometric_witness(L)
        if w is not None:
            raise ValueError(f"lattice of flats fails geometricity: {w}")
    return FlatLattice(L, tuple(L.objects))


# -- enumeration of small simple matroids ------------------------------------

def canonical_form(M: Matroid) -> tuple[int, ...]:
    best = None
    m = M.ground
    for perm in permutations(range(m)):
        img = sorted(sum(1 << perm[i] for i in range(m) if b >> i & 1) for b in M.bases)
        t = tuple(img)
        if best is None or t < best:
            best = t
    return best if best is not None else tuple(sorted(M.bases))


def _extensions(M: Matroid):
    """All single-element extensions of M by a non-coloop new element."""
    r = M.rank_
    if r == 0:
        return
    e = 1 << M.ground
    indep = sorted({b & ~(1 << i) for b in M.bases for i in range(M.ground) if b >> i & 1})
    k = len(indep)
    for choice in range(1, 1 << k):
        extra = [indep[i] | e for i in range(k) if choice >> i & 1]
        yield Matroid(M.ground + 1, M.bases | frozenset(extra))


def simple_matroids(m: int) -> list[Matroid]:
    """Representatives of the isomorphism classes of simple matroids on m elements."""
    level = {(): Matroid(0, frozenset([0]))}
    for size in range(1, m + 1):
        nxt = {}
        for M in level.values():
            cands = [add_coloop(M)] + list(_extensions(M))
            for C in cands:
                if not C.is_simple() or C.exchange_witness() is not None:
                    continue
                key = canonical_form(C)
                if key not in nxt:
                    nxt[key] = Matroid(size, frozenset(key))
        level = nxt
    out = sorted(level.values(), key=lambda M: (M.rank_, len(M.bases), sorted(M.bases)))
    for i, M in enumerate(out):
        M.name = f"m{m}_r{M.rank_}_{i:02d}"
    return out


def write_corpus(directory: Path, max_m: int = 6, spot: bool = True) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for m in range(1, max_m + 1):
        for M in simple_matroids(m):
            p = directory / f"{M.name}.bases"
            p.write_text(dumps_bases(M))
            written.append(p)
    if spot:
        for M in spot_matroids():
            safe = M.name.replace("(", "").replace(")", "").replace(",", "_").replace("+", "_")
            p = directory / f"spot_{safe}.bases"
            p.write_text(dumps_bases(M))
            written.append(p)
    return written


def bundled_corpus() -> Path:
    return Path(__file__).parent / "data" / "matroids"


# -- conjecture harness ---------------------------------------------------------

CHECKS = ("geom-5.1", "zonotope-5.10", "pencil-uniform")


def _certificate(p: Poly) -> dict:
    if p.degree <= 0:
        return {"degree": p.degree, "distinct_real_roots": 0, "intervals": [], "multiplicities": []}
    iso = isolate_roots(p)
    return {"degree": p.degree,
            "distinct_real_roots": sturm_count(p),
            **iso.to_json()}


def _b_ref(n: int) -> Poly:
    return eulerian_B(n) if n >= 1 else Poly.const(1)


def check_conjecture(L, which: str = "geom-5.1") -> dict:
    """Report on one lattice; findings are returned, never raised."""
    t0 = time.perf_counter()
    if isinstance(L, FlatLattice):
        L = L.lattice
    if which not in CHECKS:
        raise ValueError(f"unknown check {which!r}; choose from {CHECKS}")
    n = L.n
    h = h_of_bounded(L) if n >= 1 else Poly.const(1)
    report = {"check": which, "rank": n, "h": h.int_coeffs()}
    rr = is_real_rooted(h)
    report["real_rooted"] = rr
    report["certificate"] = _certificate(h)
    if which == "geom-5.1":
        ref = eulerian_A(n)
        report["reference"] = f"A_{n}"
        report["interlaced_by_reference"] = interlaces(ref, h)
        report["verdict"] = "pass" if rr and report["interlaced_by_reference"] else "fail"
    elif which == "zonotope-5.10":
        hz = zonotope_h_from_flags(beta_flag(L))
        report["zonotope_h"] = hz.int_coeffs()
        report["zonotope_real_rooted"] = is_real_rooted(hz)
        report["reference"] = f"B_{n - 1}"
        ok = interlaces(_b_ref(n - 1), hz)
        report["interlaced_by_reference"] = ok
        # open question: reported, not asserted
        report["verdict"] = "holds" if ok else "fails"
    else:
        hz = zonotope_h_from_flags(beta_flag(L))
        report["zonotope_h"] = hz.int_coeffs()
        report["zonotope_real_rooted"] = is_real_rooted(hz)
        ok = rr and report["zonotope_real_rooted"]
        if L.kind and L.kind[0] == "uniform":
            report["uniform_interlaced_by_A"] = interlaces(eulerian_A(n), h)
            report["uniform_zonotope_interlaced_by_B"] = interlaces(_b_ref(n - 1), hz)
            ok = ok and report["uniform_interlaced_by_A"] and report["uniform_zonotope_interlaced_by_B"]
        report["verdict"] = "pass" if ok else "fail"
    report["ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return report


def _check_file(args) -> dict:
    path, which = args
    path = Path(path)
    out = {"name": path.stem}
    try:
        M = parse_bases(path.read_text(), name=path.stem)
    except (BasesParseError, ExchangeViolation, OSError, UnicodeDecodeError) as exc:
        out["error"] = str(exc)
        return out
    t0 = time.perf_counter()
    try:
        FL = flats_lattice(M)
    except ValueError as exc:
        out["error"] = str(exc)
        return out
    L = FL.lattice
    rep = check_conjecture(L, which)
    beta = beta_flag(L)
    out.update({"m": M.ground, "rank": M.rank_, "atoms": len(L.upper[L.bottom]),
                "h": rep["h"], "verdict": rep["verdict"], "real_rooted": rep["real_rooted"],
                "interlaced_by_reference": rep.get("interlaced_by_reference"),
                "flag_sum_matches_chains": beta.total() == L.maximal_chain_count})
    if out["flag_sum_matches_chains"] is False:
        out["verdict"] = "fail"
    out["ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return out


def batch_check(directory, which: str = "geom-5.1", workers: int = 1) -> tuple[list[dict], dict]:
    """Run a check on every ``*.bases`` file (sorted by name); results come back in input order."""
    files = sorted(Path(directory).glob("*.bases"))
    jobs = [(str(f), which) for f in files]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_file, jobs))
    else:
        results = [_check_file(j) for j in jobs]
    summary = {"check": which, "total": len(results),
               "errors": sum(1 for r in results if "error" in r),
               "pass": sum(1 for r in results if r.get("verdict") in ("pass", "holds")),
               "fail": sum(1 for r in results if r.get("verdict") in ("fail", "fails"))}
    return results, summary


def report_line(rep: dict, timing: bool = False) -> str:
    rep = dict(rep)
    if not timing:
        rep.pop("ms", None)
    return json.dumps(rep, sort_keys=True)
