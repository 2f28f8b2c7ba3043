"""Brute-force oracles and random generators shared by the test modules."""
from __future__ import annotations

import random
from itertools import combinations, permutations

from chainpoly.posets import FinitePoset, grade


def chains_bruteforce(P: FinitePoset) -> list[int]:
    """c_k by checking every k-subset for total comparability."""
    out = [1]
    for k in range(1, P.size + 1):
        c = 0
        for sub in combinations(range(P.size), k):
            if all(P.less(a, b) or P.less(b, a) for a, b in combinations(sub, 2)):
                c += 1
        if c == 0:
            break
        out.append(c)
    return out


def descent_mask(w) -> int:
    return sum(1 << i for i in range(len(w) - 1) if w[i] > w[i + 1])


def boolean_beta_bruteforce(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for w in permutations(range(n)):
        m = descent_mask(w)
        out[m] = out.get(m, 0) + 1
    return out


def random_graded(rng: random.Random, rank: int, width: int = 4):
    """Random bounded graded poset of the given rank.

    Interior ranks 1..rank-1 get 1..width elements; every element has at
    least one cover below and above, so the bottom and top are unique.
    """
    layers = [[0]]
    size = 1
    for _ in range(rank - 1):
        k = rng.randint(1, width)
        layers.append(list(range(size, size + k)))
        size += k
    layers.append([size])
    size += 1
    upper = [set() for _ in range(size)]
    for lo, hi in zip(layers, layers[1:]):
        for y in hi:
            upper[rng.choice(lo)].add(y)
        for x in lo:
            if not upper[x]:
                upper[x].add(rng.choice(hi))
        for x in lo:
            for y in hi:
                if rng.random() < 0.3:
                    upper[x].add(y)
    return grade(FinitePoset(size, upper))
