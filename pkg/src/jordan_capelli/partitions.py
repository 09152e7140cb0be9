"""Partitions as plain tuples of positive ints; hook and strict enumeration."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

from .algebra import Q
from .errors import CapelliError

Partition = tuple[int, ...]


def as_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise CapelliError("NOT_A_PARTITION", f"{list(parts)} is not weakly decreasing positive")
    return parts


def parse_partition(text: str) -> Partition:
    """'4,2,1' -> (4, 2, 1); the empty string is the empty partition."""
    text = text.strip().strip("()[]")
    if not text:
        return ()
    return as_partition([int(s) for s in text.split(",") if s.strip()])


def part(lam: Partition, i: int) -> int:
    """lambda_i with 1-based i, zero past the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def is_strict(lam: Partition) -> bool:
    return all(a > b for a, b in zip(lam, lam[1:]))


def in_hook(lam: Partition, m: int, n: int) -> bool:
    return part(lam, m + 1) <= n


def _partitions(d: int, max_part: int) -> Iterator[Partition]:
    if d == 0:
        yield ()
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in _partitions(d - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def all_partitions(d: int) -> tuple[Partition, ...]:
    """Partitions of d in descending lexicographic order."""
    return tuple(_partitions(d, d))


def enumerate_hook(m: int, n: int, d: int) -> list[Partition]:
    if min(m, n, d) < 0:
        raise ValueError("m, n, d must be non-negative")
    return [lam for lam in all_partitions(d) if in_hook(lam, m, n)]


def enumerate_strict(n: int, d: int) -> list[Partition]:
    if min(n, d) < 0:
        raise ValueError("n, d must be non-negative")
    return [lam for lam in all_partitions(d) if is_strict(lam) and len(lam) <= n]


def hook_product_theta(lam: Partition, theta) -> Fraction:
    r"""H_theta(lambda) = prod over boxes (i,j) of (lambda_i - j + theta (lambda'_j - i) + 1)."""
    theta = Q(theta)
    conj = transpose(lam)
    h = Fraction(1)
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            h *= row - j + theta * (conj[j - 1] - i) + 1
    if h == 0:
        raise CapelliError("ZERO_NORMALIZER", f"H_theta({list(lam)}) vanishes at theta={theta}")
    return h


def hook_product_q(lam: Partition) -> Fraction:
    """H(lambda) = lambda! prod_{i<j} (lambda_i + lambda_j)/(lambda_i - lambda_j) for strict lambda."""
    if not is_strict(lam):
        raise CapelliError("NOT_STRICT", f"{list(lam)} has repeated parts")
    h = Fraction(prod(factorial(p) for p in lam))
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            h *= Fraction(lam[i] + lam[j], lam[i] - lam[j])
    return h


def classical_hook_product(lam: Partition) -> int:
    conj = transpose(lam)
    return prod((row - j) + (conj[j - 1] - i) + 1 for i, row in enumerate(lam, start=1) for j in range(1, row + 1))


@dataclass(frozen=True)
class FrobeniusCoords:
    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]
    theta: Fraction

    def point(self) -> tuple[Fraction, ...]:
        return self.x + self.y


def frobenius_coords(lam: Partition, m: int, n: int, theta) -> FrobeniusCoords:
    theta = Q(theta)
    if not in_hook(lam, m, n):
        raise CapelliError("NOT_IN_HOOK", f"{list(lam)} is not an ({m},{n})-hook partition")
    if n > 0 and theta == 0:
        raise CapelliError("THETA_ZERO", "theta must be nonzero when n > 0")
    half = Fraction(1, 2)
    x = tuple(part(lam, i) - theta * (i - half) - (n - theta * m) / 2 for i in range(1, m + 1))
    y: tuple[Fraction, ...] = ()
    if n:
        conj = transpose(lam)
        inv = 1 / theta
        # <lambda'_j - m> = max(lambda'_j - m, 0), integers only
        y = tuple(max(part(conj, j) - m, 0) - inv * (j - half) + (inv * n + m) / 2 for j in range(1, n + 1))
    return FrobeniusCoords(x, y, theta)
