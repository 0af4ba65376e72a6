"""Dense vectors indexed by the m-subsets of {1..n}."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Mapping, Optional

__all__ = ["SubsetVector", "DissimilarityVector", "WeightVector", "subsets", "check_subset"]


def subsets(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """All m-subsets of 1..n as sorted tuples, in lexicographic order."""
    return combinations(range(1, n + 1), m)


def check_subset(members: Iterable[int], n: int, m: Optional[int] = None) -> tuple[int, ...]:
    """Return ``members`` as a sorted tuple after validating it against 1..n."""
    key = tuple(sorted(members))
    if len(set(key)) != len(key):
        raise ValueError(f"repeated leaf in subset {key}")
    if key and (key[0] < 1 or key[-1] > n):
        raise ValueError(f"subset {key} is not within 1..{n}")
    if m is not None and len(key) != m:
        raise ValueError(f"subset {key} has size {len(key)}, expected {m}")
    return key


class SubsetVector:
    """A rational value for every m-subset of 1..n, stored in lexicographic order."""

    def __init__(self, n: int, m: int, entries: Mapping[Iterable[int], object]):
        if not 1 <= m <= n:
            raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
        self.n = n
        self.m = m
        values = {}
        for key, value in entries.items():
            values[check_subset(key, n, m)] = Fraction(value)
        if len(values) != comb(n, m):
            missing = [s for s in subsets(n, m) if s not in values]
            raise ValueError(f"vector is incomplete; missing {missing[:5]}")
        self._entries = {s: values[s] for s in subsets(n, m)}

    @property
    def entries(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._entries)

    def __getitem__(self, subset: Iterable[int]) -> Fraction:
        return self._entries[tuple(sorted(subset))]

    def __contains__(self, subset) -> bool:
        return tuple(sorted(subset)) in self._entries

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def items(self):
        return self._entries.items()

    def values(self):
        return self._entries.values()

    def map(self, fn) -> "SubsetVector":
        """A vector of the same class with ``fn`` applied to every value."""
        return self._like({s: fn(v) for s, v in self._entries.items()})

    def _like(self, entries):
        return type(self)(self.n, self.m, entries)

    def __eq__(self, other):
        if not isinstance(other, SubsetVector):
            return NotImplemented
        return (self.n, self.m, self._entries) == (other.n, other.m, other._entries)

    def __hash__(self):
        return hash((self.n, self.m, tuple(self._entries.values())))

    def __repr__(self):
        head = ", ".join(f"{''.join(map(str, s))}: {v}" for s, v in list(self._entries.items())[:4])
        more = ", ..." if len(self._entries) > 4 else ""
        return f"{type(self).__name__}(n={self.n}, m={self.m}, {{{head}{more}}})"


class DissimilarityVector(SubsetVector):
    """Hull lengths of leaf subsets; every entry is nonnegative."""

    def __init__(self, n: int, m: int, entries):
        if m < 2:
            raise ValueError("dissimilarity vectors need m >= 2")
        super().__init__(n, m, entries)
        negative = [s for s, v in self._entries.items() if v < 0]
        if negative:
            raise ValueError(f"negative dissimilarity at {negative[0]}")


class WeightVector(SubsetVector):
    """Weights on Plücker coordinates.  Entries may be any rationals.

    ``source`` optionally records how the vector was produced, e.g. the
    rooting used by a tree functional.
    """

    def __init__(self, n: int, m: int, entries, source: Optional[dict] = None):
        super().__init__(n, m, entries)
        self.source = source

    def _like(self, entries):
        return WeightVector(self.n, self.m, entries, self.source)
