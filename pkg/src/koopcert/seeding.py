"""Deterministic stream splitting on top of the counter-based Philox generator.

Every stochastic operation derives its draws from a child stream keyed by
``(master_seed, spawn_key)``.  Children are independent of each other and of
the order in which they are created, so batched or parallel execution cannot
change any result.
"""

from __future__ import annotations

import numpy as np


def child_generator(master_seed: int, *spawn_key: int) -> np.random.Generator:
    """Generator for the child stream identified by ``spawn_key``."""
    ss = np.random.SeedSequence(master_seed, spawn_key=tuple(spawn_key))
    return np.random.Generator(np.random.Philox(ss))


def child_generators(master_seed: int, count: int, *prefix: int) -> list[np.random.Generator]:
    """One independent child stream per index ``0..count-1``."""
    return [child_generator(master_seed, *prefix, i) for i in range(count)]
