"""Seeded, counter-based randomness.

Every random choice in the package comes from numpy's Philox4x64-10
bit generator keyed by ``numpy.random.SeedSequence(seed)``.  A Bernoulli
trial consumes exactly one ``Generator.random()`` double ``x`` and succeeds
iff ``x < p``, compared exactly when ``p`` is a ``Fraction``.
"""

from fractions import Fraction

import numpy as np


def derive_seed(base: int, index: int) -> np.random.SeedSequence:
    """Independent child stream ``index`` of ``base`` (used for repeated runs)."""
    return np.random.SeedSequence(base, spawn_key=(index,))


class StreamRNG:
    def __init__(self, seed=0):
        self.generator = np.random.Generator(np.random.Philox(seed))
        self.draws = 0

    def uniform(self) -> float:
        self.draws += 1
        return float(self.generator.random())

    def bernoulli(self, p) -> bool:
        x = self.uniform()
        if isinstance(p, Fraction):
            return Fraction(x) < p
        return x < p
