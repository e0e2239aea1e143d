"""Exponent vectors and the monomials they encode.

A monomial ``x1^a1 * ... * xn^an`` is stored as the tuple ``(a1, ..., an)``.
Indices are 0-based in code and 1-based in every text format.
"""
from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

ExponentVector = tuple[int, ...]


class NotDivisibleError(ValueError):
    """Raised when a monomial quotient would have a negative exponent."""


def _check_lengths(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")


def vector(entries: Iterable[int]) -> ExponentVector:
    """Validate and freeze ``entries`` as an exponent vector."""
    a = tuple(int(e) for e in entries)
    if any(e < 0 for e in a):
        raise ValueError(f"negative exponent in {a}")
    return a


def zero(n: int) -> ExponentVector:
    return (0,) * n


def unit(n: int, i: int) -> ExponentVector:
    """The vector of the variable with 0-based index ``i``."""
    return tuple(1 if k == i else 0 for k in range(n))


def total_degree(a: Sequence[int]) -> int:
    return sum(a)


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``x^a`` divides ``x^b``."""
    _check_lengths(a, b)
    return all(x <= y for x, y in zip(a, b))


def meet(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    _check_lengths(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def join(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    _check_lengths(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def add(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    _check_lengths(a, b)
    return tuple(x + y for x, y in zip(a, b))


def subtract(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    """Return ``a - b``; the monomial quotient ``x^a / x^b``."""
    _check_lengths(a, b)
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise NotDivisibleError(f"{format_monomial(b)} does not divide {format_monomial(a)}")
    return out


def excess(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    """Positive part of ``a - b``, i.e. ``x^a / gcd(x^a, x^b)``."""
    _check_lengths(a, b)
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def shift(a: Sequence[int], out: int, into: int) -> ExponentVector | None:
    """``a - e_out + e_into``, or None when ``a[out] == 0``."""
    if a[out] == 0:
        return None
    b = list(a)
    b[out] -= 1
    b[into] += 1
    return tuple(b)


def sort_key(a: Sequence[int]) -> tuple:
    """Repo-wide order: by degree, then lexicographically descending.

    ``x1^2 < x1*x3 < x3^2 < x1*x2*x4`` in four variables.
    """
    return (sum(a), tuple(-e for e in a))


def sorted_vectors(vectors: Iterable[Sequence[int]]) -> list[ExponentVector]:
    return sorted((tuple(v) for v in vectors), key=sort_key)


def enumerate_degree(n: int, d: int) -> list[ExponentVector]:
    """All length-``n`` vectors of total degree ``d``, lexicographically descending."""
    if n < 1:
        raise ValueError("need at least one variable")
    if d < 0:
        return []
    return list(_compositions(n, d))


def _compositions(n: int, d: int) -> Iterator[ExponentVector]:
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(n - 1, d - first):
            yield (first,) + rest


def enumerate_up_to(n: int, cap: int) -> list[ExponentVector]:
    """All vectors of degree ``0..cap`` in repo order."""
    out: list[ExponentVector] = []
    for d in range(cap + 1):
        out.extend(enumerate_degree(n, d))
    return out


_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_monomial(text: str, n: int) -> ExponentVector:
    """Parse ``x1^2*x3`` style text (or ``1``) into a length-``n`` vector."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty monomial text")
    a = [0] * n
    if s == "1":
        return tuple(a)
    for factor in s.split("*"):
        m = _FACTOR.fullmatch(factor)
        if m is None:
            raise ValueError(f"malformed factor {factor!r} in {text!r}")
        idx = int(m.group(1))
        if not 1 <= idx <= n:
            raise ValueError(f"variable index x{idx} out of range 1..{n}")
        a[idx - 1] += int(m.group(2)) if m.group(2) is not None else 1
    return tuple(a)


def max_index(text: str) -> int:
    """Largest 1-based variable index occurring in monomial text (0 for ``1``)."""
    return max((int(m.group(1)) for m in _FACTOR.finditer(text)), default=0)


def format_monomial(a: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(a):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"
