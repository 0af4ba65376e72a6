"""Quadratic Plücker relations and the tropical "optimum attained twice" test.

A weight vector ``w`` on Plücker coordinates gives each monomial
``Z_A Z_B`` the weight ``w(A) + w(B)``.  The initial form of a relation is
a monomial exactly when one term alone attains the optimum, so a vector
passes a relation when at least two terms tie for the optimum.  Checking
the quadratic exchange relations certifies membership in the tropical
prevariety they cut out; for m = 2 the three-term relations are enough.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Literal

from .vectors import SubsetVector

__all__ = [
    "QuadMonomial",
    "QuadraticRelation",
    "RelationResult",
    "TropicalCertificate",
    "three_term_relations",
    "exchange_relations",
    "tropical_check",
    "check_all",
    "CONVENTIONS",
]

Convention = Literal["min", "max"]
CONVENTIONS = ("min", "max")


@dataclass(frozen=True)
class QuadMonomial:
    left: tuple[int, ...]
    right: tuple[int, ...]
    coefficient: int

    def __post_init__(self):
        if self.coefficient == 0:
            raise ValueError("monomial coefficient must be nonzero")
        if self.right < self.left:
            left, right = self.right, self.left
            object.__setattr__(self, "left", left)
            object.__setattr__(self, "right", right)

    def __str__(self):
        return "Z" + "".join(map(str, self.left)) + "*Z" + "".join(map(str, self.right))


@dataclass(frozen=True)
class QuadraticRelation:
    m: int
    n: int
    monomials: tuple[QuadMonomial, ...]

    def __post_init__(self):
        pairs = [(t.left, t.right) for t in self.monomials]
        if len(set(pairs)) != len(pairs):
            raise ValueError("repeated monomial in relation")
        if len(self.monomials) < 2:
            raise ValueError("a Plücker relation has at least two monomials")

    def evaluate(self, coords) -> object:
        """Value of the relation at Plücker coordinates ``coords[subset]``."""
        return sum(t.coefficient * coords[t.left] * coords[t.right] for t in self.monomials)

    def __str__(self):
        out = []
        for t in self.monomials:
            sign = "-" if t.coefficient < 0 else "+"
            mag = abs(t.coefficient)
            out.append(f"{sign} {'' if mag == 1 else f'{mag}*'}{t}")
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else text


def _normalize(m: int, n: int, terms: dict) -> QuadraticRelation | None:
    monos = sorted((QuadMonomial(l, r, c) for (l, r), c in terms.items() if c != 0),
                   key=lambda t: (t.left, t.right))
    if not monos:
        return None
    if monos[0].coefficient < 0:
        monos = [QuadMonomial(t.left, t.right, -t.coefficient) for t in monos]
    return QuadraticRelation(m, n, tuple(monos))


def three_term_relations(n: int) -> list[QuadraticRelation]:
    """``z_ij z_kl - z_ik z_jl + z_il z_jk`` for every ``i < j < k < l``."""
    if n < 4:
        raise ValueError("three-term relations need n >= 4")
    return [
        QuadraticRelation(2, n, (QuadMonomial((i, j), (k, l), 1),
                                 QuadMonomial((i, k), (j, l), -1),
                                 QuadMonomial((i, l), (j, k), 1)))
        for i, j, k, l in combinations(range(1, n + 1), 4)
    ]


@lru_cache(maxsize=None)
def _exchange(m: int, n: int) -> tuple[QuadraticRelation, ...]:
    seen = set()
    out = []
    labels = range(1, n + 1)
    for small in combinations(labels, m - 1):
        for big in combinations(labels, m + 1):
            terms: dict = {}
            for t, j in enumerate(big):
                if j in small:
                    continue
                # moving j from the end of `small` into sorted position
                sign = -1 if sum(1 for i in small if i > j) % 2 else 1
                left = tuple(sorted(small + (j,)))
                right = big[:t] + big[t + 1:]
                key = (left, right) if left <= right else (right, left)
                terms[key] = terms.get(key, 0) + (-1) ** t * sign
            rel = _normalize(m, n, terms)
            if rel is None:
                continue
            key = tuple((t.left, t.right, t.coefficient) for t in rel.monomials)
            if key in seen:
                continue
            seen.add(key)
            out.append(rel)
    return tuple(out)


def exchange_relations(m: int, n: int) -> list[QuadraticRelation]:
    """Grassmann–Plücker exchange relations for the m-subsets of 1..n.

    One candidate per pair (I, J) of an (m-1)-subset and an (m+1)-subset:
    ``sum_t (-1)^t Z_{I+j_t} Z_{J-j_t}``.  Terms with ``j_t`` in ``I``
    vanish, indices are sorted with the permutation sign folded into the
    coefficient, equal monomials are merged, and candidates that cancel
    completely or repeat an earlier relation up to sign are dropped.
    Relations are normalized so their lexicographically first monomial has
    a positive coefficient.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if m > n:
        raise ValueError(f"m={m} exceeds n={n}")
    return list(_exchange(m, n))


@dataclass(frozen=True)
class RelationResult:
    relation: QuadraticRelation
    weights: tuple[Fraction, ...]
    optimum: Fraction
    achievers: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return len(self.achievers) >= 2


def tropical_check(rel: QuadraticRelation, w: SubsetVector,
                   convention: Convention = "max") -> RelationResult:
    """Monomial weights of ``rel`` under ``w`` and which terms attain the optimum."""
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be 'min' or 'max', got {convention!r}")
    weights = []
    for t in rel.monomials:
        for idx in (t.left, t.right):
            if idx not in w:
                raise KeyError(f"weight vector has no entry for Z{''.join(map(str, idx))}")
        weights.append(w[t.left] + w[t.right])
    best = max(weights) if convention == "max" else min(weights)
    achievers = tuple(k for k, x in enumerate(weights) if x == best)
    return RelationResult(rel, tuple(weights), best, achievers)


@dataclass(frozen=True)
class TropicalCertificate:
    m: int
    n: int
    convention: str
    results: tuple[RelationResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[RelationResult]:
        return [r for r in self.results if not r.passed]

    def find(self, relation: QuadraticRelation) -> RelationResult:
        for r in self.results:
            if r.relation == relation:
                return r
        raise KeyError(str(relation))


def check_all(w: SubsetVector, convention: Convention = "max") -> TropicalCertificate:
    """Run :func:`tropical_check` on every exchange relation for ``(w.m, w.n)``."""
    results = tuple(tropical_check(rel, w, convention) for rel in _exchange(w.m, w.n))
    return TropicalCertificate(w.m, w.n, convention, results)
