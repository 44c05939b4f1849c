"""Seeded instance generators for experiments and test harnesses.

Every generator takes either an integer seed or a shared
``random.Random`` stream; the portable Mersenne Twister keeps outputs
reproducible across platforms for a fixed seed.
"""

from __future__ import annotations

import random

from .core import LinearTournament
from .steiner import orient_clique, steiner_triple_system

def _rng(seed) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def random_tournament(n: int, seed=None) -> LinearTournament:
    """Uniform orientation: each pair is backward with probability 1/2."""
    rng = _rng(seed)
    backward = {
        (t, h) for h in range(n) for t in range(h + 1, n) if rng.random() < 0.5
    }
    return LinearTournament(n, frozenset(backward))


def random_sparse_tournament(n: int, seed=None) -> LinearTournament:
    """Random matching of backward arcs with spans of at least 2."""
    rng = _rng(seed)
    target = rng.randint(0, n // 2)
    available = set(range(n))
    backward: set[tuple[int, int]] = set()
    misses = 0
    while len(backward) < target and misses < 200 and len(available) >= 2:
        h, t = sorted(rng.sample(sorted(available), 2))
        if t - h >= 2:
            backward.add((t, h))
            available.discard(h)
            available.discard(t)
        else:
            misses += 1
    return LinearTournament(n, frozenset(backward))


def random_fully_sparse_tournament(n: int, seed=None) -> LinearTournament:
    """Perfect matching of backward arcs with spans of at least 2."""
    if n % 2 != 0:
        raise ValueError(f"full sparsity needs an even vertex count, got {n}")
    if n == 0:
        return LinearTournament(0, frozenset())
    rng = _rng(seed)
    for _ in range(10_000):
        order = list(range(n))
        rng.shuffle(order)
        pairs = [
            tuple(sorted((order[2 * i], order[2 * i + 1]), reverse=True))
            for i in range(n // 2)
        ]
        if all(t - h >= 2 for t, h in pairs):
            return LinearTournament(n, frozenset(pairs))
    raise ValueError(f"no span-2 perfect matching found for n={n}")


def clique_sts_tournament(n: int) -> LinearTournament:
    """Deterministic triple-system orientation of the complete graph."""
    return orient_clique(steiner_triple_system(n))


def generate(kind: str, n: int, seed=0) -> LinearTournament:
    if kind == "random":
        return random_tournament(n, seed)
    if kind == "random-sparse":
        return random_sparse_tournament(n, seed)
    if kind == "random-fully-sparse":
        return random_fully_sparse_tournament(n, seed)
    if kind == "clique-sts":
        return clique_sts_tournament(n)
    raise ValueError(f"unknown generator kind {kind!r}")
