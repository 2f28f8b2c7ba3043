"""Golden h-polynomial tables and the code that regenerates them.

Expected coefficients are stored once here; tests and the ``tables``
subcommand both diff against this data.
"""
from __future__ import annotations

from .polynomials import Poly

GOLDEN: dict[str, dict[int, tuple[int, ...]]] = {
    "piA": {
        1: (1,),
        2: (1,),
        3: (1, 2),
        4: (1, 11, 6),
        5: (1, 47, 108, 24),
        6: (1, 197, 1268, 1114, 120),
        7: (1, 870, 13184, 29383, 12542, 720),
    },
    "piB": {
        1: (1,),
        2: (1, 3),
        3: (1, 20, 15),
        4: (1, 111, 359, 105),
        5: (1, 642, 5978, 6834, 945),
        6: (1, 4081, 92476, 268236, 143211, 10395),
    },
    "piD": {
        2: (1, 1),
        3: (1, 11, 6),
        4: (1, 67, 175, 45),
        5: (1, 397, 3143, 3239, 420),
        6: (1, 2539, 50272, 134160, 67503, 4725),
    },
    "sd2": {
        2: (1, 1),
        3: (1, 10, 1),
        4: (1, 71, 71, 1),
        5: (1, 536, 1806, 536, 1),
        6: (1, 4677, 38522, 38522, 4677, 1),
    },
}

ROUTES = {
    "piA": ("construction", "formula"),
    "piB": ("construction", "formula"),
    "piD": ("construction",),
    "sd2": ("flags", "signed", "poset"),
}


def compute(which: str, n: int, via: str | None = None) -> Poly:
    """Regenerate one table row by the chosen route."""
    via = via or ROUTES[which][0]
    if via not in ROUTES[which]:
        raise ValueError(f"route {via!r} not available for {which}; choose from {ROUTES[which]}")
    if which == "sd2":
        from .abindex import sd2_h
        return sd2_h(n, route=via)
    if via == "formula":
        from .multisets import descent_h
        return descent_h("A" if which == "piA" else "B", n)
    from .lattices import partition_lattice, partition_lattice_B, partition_lattice_D
    from .posets import h_of_bounded
    build = {"piA": partition_lattice, "piB": partition_lattice_B, "piD": partition_lattice_D}[which]
    L = build(n)
    if L.n == 0:
        return Poly.const(1)
    return h_of_bounded(L)


def compare(which: str, via: str | None = None) -> list[dict]:
    rows = []
    for n, expected in GOLDEN[which].items():
        got = tuple(compute(which, n, via).int_coeffs())
        rows.append({"table": which, "n": n, "expected": list(expected),
                     "computed": list(got), "match": got == expected})
    return rows
