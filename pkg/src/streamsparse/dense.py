"""Dense adjacency storage feeding the kernels.

Exact weights are kept as integers over one shared denominator so the
minimum-cut kernels never touch ``Fraction`` objects.  Once the scaled total
could overflow int64 the matrix moves to an ``object`` array of Python ints
and the slower kernels take over; nothing is ever rounded.
"""

from fractions import Fraction
from math import gcd

import numpy as np

# any partial sum a kernel forms is bounded by twice the total weight
_INT64_LIMIT = 2**61


class DenseWeights:
    def __init__(self, n, exact=True):
        self.n = n
        self.exact = exact
        self.denom = 1
        self.total = 0
        self.mat = np.zeros((n, n), dtype=np.int64 if exact else np.float64)

    @classmethod
    def from_graph(cls, g):
        dw = cls(g.n, exact=g.exact)
        for e in g.edges:
            dw.add(e.u, e.v, e.w)
        return dw

    def copy(self):
        other = DenseWeights.__new__(DenseWeights)
        other.n = self.n
        other.exact = self.exact
        other.denom = self.denom
        other.total = self.total
        other.mat = self.mat.copy()
        return other

    def _scaled(self, w):
        w = Fraction(w)
        if self.denom % w.denominator:
            factor = w.denominator // gcd(self.denom, w.denominator)
            self._rescale(factor)
        return w.numerator * (self.denom // w.denominator)

    def _rescale(self, factor):
        self.denom *= factor
        self.total *= factor
        self._fit()
        self.mat *= factor

    def _fit(self):
        if self.mat.dtype != object and self.total >= _INT64_LIMIT:
            self.mat = self.mat.astype(object)

    def add(self, u, v, w):
        if self.exact:
            x = self._scaled(w)
            self.total += x
            self._fit()
        else:
            x = float(w)
        self.mat[u, v] += x
        self.mat[v, u] += x

    def remove(self, u, v, w):
        x = self._scaled(w) if self.exact else float(w)
        if self.exact:
            self.total -= x
        self.mat[u, v] -= x
        self.mat[v, u] -= x

    def value(self, x):
        """Convert a kernel result back to graph units."""
        if self.exact:
            return Fraction(int(x), self.denom)
        return float(x)
