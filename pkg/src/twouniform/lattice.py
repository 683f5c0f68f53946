"""Finite-index sublattices of Z^2 in Hermite normal form.

A :class:`SublatticeMatrix` ``(a, b; 0, d)`` stands for the sublattice
generated by the two row vectors ``(a, b)`` and ``(0, d)`` with
``a, d >= 1`` and ``0 <= b < d``.  Every sublattice of index ``n = a*d`` has
exactly one such form, so there are ``sigma_1(n)`` of them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

__all__ = ["SublatticeMatrix", "enumerate_sublattices", "reduce_to_coset", "contains", "hnf_of_rows"]

Vec = tuple[int, int]


@dataclass(frozen=True, order=True)
class SublatticeMatrix:
    a: int
    b: int
    d: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.d < 1 or not 0 <= self.b < self.d:
            raise ValueError(f"not in Hermite normal form: ({self.a},{self.b};0,{self.d})")

    @property
    def index(self) -> int:
        return self.a * self.d

    @property
    def generators(self) -> tuple[Vec, Vec]:
        return (self.a, self.b), (0, self.d)

    def transversal(self) -> list[Vec]:
        """Canonical coset representatives, in lexicographic order."""
        return [(x, y) for x in range(self.a) for y in range(self.d)]

    def coset_index(self, v: Vec) -> int:
        x, y = reduce_to_coset(v, self)
        return x * self.d + y

    def __str__(self) -> str:
        return f"{self.a} {self.b} {self.d}"

    @classmethod
    def parse(cls, text: str) -> "SublatticeMatrix":
        a, b, d = (int(x) for x in text.replace(",", " ").split())
        return cls(a, b, d)


def enumerate_sublattices(n: int) -> list[SublatticeMatrix]:
    if n <= 0:
        raise ValueError("index must be positive")
    return list(_iter_hnf(n))


def _iter_hnf(n: int) -> Iterator[SublatticeMatrix]:
    for a in range(1, n + 1):
        if n % a:
            continue
        d = n // a
        for b in range(d):
            yield SublatticeMatrix(a, b, d)


def reduce_to_coset(v: Vec, m: SublatticeMatrix) -> Vec:
    x, y = v
    k = x // m.a
    x -= k * m.a
    y -= k * m.b
    return x, y % m.d


def contains(m: SublatticeMatrix, v: Vec) -> bool:
    x, y = v
    if x % m.a:
        return False
    return (y - (x // m.a) * m.b) % m.d == 0


def hnf_of_rows(r1: Vec, r2: Vec) -> SublatticeMatrix:
    """Hermite normal form of the lattice spanned by two integer rows."""
    rows = [list(r1), list(r2)]
    # Euclid on the first column
    while rows[1][0]:
        q = rows[0][0] // rows[1][0]
        rows[0] = [rows[0][0] - q * rows[1][0], rows[0][1] - q * rows[1][1]]
        rows[0], rows[1] = rows[1], rows[0]
    (a, b), (_, d) = rows
    if a < 0:
        a, b = -a, -b
    d = abs(d)
    if a == 0 or d == 0:
        raise ValueError("rows are linearly dependent")
    return SublatticeMatrix(a, b % d, d)
