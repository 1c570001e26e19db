"""Permutations of {0, ..., n-1} stored as image arrays.

Products compose left to right: ``(p * q)(i) == q(p(i))``.  This convention
is fixed once here and enforced by the test suite; every other module
composes through this class.
"""

from __future__ import annotations

import math

import numpy as np

_DTYPE = np.int32


class Permutation:
    """A bijection of {0, ..., degree-1}.

    Immutable; instances hash and compare by their image arrays, so they can
    be used as dictionary keys during element enumeration.
    """

    __slots__ = ("images", "_hash", "_inverse")

    def __init__(self, images, _validate: bool = True):
        arr = np.array(images, dtype=_DTYPE)
        if _validate:
            if arr.ndim != 1 or arr.size == 0:
                raise ValueError("a permutation needs a non-empty 1-d image array")
            counts = np.bincount(arr, minlength=arr.size) if arr.min() >= 0 else None
            if counts is None or arr.max() >= arr.size or not (counts == 1).all():
                raise ValueError("images are not a bijection of {0, ..., n-1}")
        arr.setflags(write=False)
        self.images = arr
        self._hash = None
        self._inverse = None

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def identity(degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be at least 1")
        return Permutation(np.arange(degree, dtype=_DTYPE), _validate=False)

    @staticmethod
    def from_cycles(degree: int, cycles) -> "Permutation":
        """Build a permutation from disjoint cycles of 0-based points."""
        images = np.arange(degree, dtype=_DTYPE)
        seen = set()
        for cycle in cycles:
            for pt in cycle:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt} outside degree {degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated across cycles")
                seen.add(pt)
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if len(cycle) > 1:
                images[cycle[-1]] = cycle[0]
        return Permutation(images, _validate=False)

    # -- basic protocol --------------------------------------------------------

    @property
    def degree(self) -> int:
        return self.images.size

    def __call__(self, point: int) -> int:
        return int(self.images[point])

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation(other.images[self.images], _validate=False)

    def inverse(self) -> "Permutation":
        if self._inverse is None:
            inv = np.empty(self.degree, dtype=_DTYPE)
            inv[self.images] = np.arange(self.degree, dtype=_DTYPE)
            self._inverse = Permutation(inv, _validate=False)
        return self._inverse

    def __pow__(self, n: int) -> "Permutation":
        if n == 0:
            return Permutation.identity(self.degree)
        if n < 0:
            return self.inverse() ** (-n)
        half = self ** (n // 2)
        sq = half * half
        return sq * self if n % 2 else sq

    def conjugate_by(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and np.array_equal(self.images, other.images)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images.tobytes())
        return self._hash

    def key(self) -> bytes:
        """Stable bytes key for use in element-index dictionaries."""
        return self.images.tobytes()

    def is_identity(self) -> bool:
        return bool((self.images == np.arange(self.degree, dtype=_DTYPE)).all())

    # -- structure -------------------------------------------------------------

    def cycles(self, include_fixed: bool = False):
        """Disjoint cycles as tuples of 0-based points."""
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        imgs = self.images
        for start in range(self.degree):
            if seen[start]:
                continue
            cur = [start]
            seen[start] = True
            nxt = int(imgs[start])
            while nxt != start:
                cur.append(nxt)
                seen[nxt] = True
                nxt = int(imgs[nxt])
            if len(cur) > 1 or include_fixed:
                out.append(tuple(cur))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()), 1)

    def is_even(self) -> bool:
        """True for even permutations (sign +1)."""
        swaps = sum(len(c) - 1 for c in self.cycles())
        return swaps % 2 == 0

    def min_moved_point(self) -> int | None:
        moved = np.nonzero(self.images != np.arange(self.degree, dtype=_DTYPE))[0]
        return int(moved[0]) if moved.size else None

    def cycle_string(self) -> str:
        """Human-readable cycle form with 1-based points (internal points are 0-based)."""
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(pt + 1) for pt in c) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: the result maps i to q(p(i))."""
    return p * q
