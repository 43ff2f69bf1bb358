"""Integer partitions and the primitive operations on them.

A partition is stored as its tuple of parts (non-increasing, positive).
Multiplicity views are computed on demand; ranks in this package are small.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import ParameterError, PartitionParseError

#: Distinguished value for an infinite modulus (d = ∞, ℓ = ∞).
INF = math.inf


def is_inf(d) -> bool:
    return d == INF


def check_modulus(d, name: str = "d", allow_inf: bool = True):
    """Validate a modulus: an integer ≥ 2, or ``INF`` when allowed."""
    if is_inf(d):
        if not allow_inf:
            raise ParameterError(f"{name} must be finite here")
        return INF
    if isinstance(d, bool) or not isinstance(d, int):
        raise ParameterError(f"{name} must be an integer >= 2 or inf, got {d!r}")
    if d < 2:
        raise ParameterError(f"{name} must be >= 2, got {d}")
    return d


def parse_modulus(text: str):
    """Parse a modulus as written on the command line ("3", "inf")."""
    t = text.strip().lower()
    if t in ("inf", "infinity", "oo", "∞"):
        return INF
    try:
        return check_modulus(int(t))
    except ValueError as exc:
        raise ParameterError(f"invalid modulus {text!r}") from exc


def format_modulus(d) -> str:
    return "inf" if is_inf(d) else str(d)


class Node(NamedTuple):
    """A cell (row, col) of a Young diagram, both 1-based."""

    row: int
    col: int


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for k, p in enumerate(parts):
            if isinstance(p, bool) or not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {parts!r}")
            if k and p > parts[k - 1]:
                raise ValueError(f"parts must be non-increasing, got {parts!r}")

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> "Partition":
        parts: list[int] = []
        for size in sorted(mult, reverse=True):
            if mult[size] < 0:
                raise ValueError("negative multiplicity")
            parts.extend([size] * mult[size])
        return cls(tuple(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def rank(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """Map part size i -> r_i, for parts actually present."""
        return dict(Counter(self.parts))

    def row(self, a: int) -> int:
        """Length of row ``a`` (1-based), 0 beyond the last row."""
        return self.parts[a - 1] if 1 <= a <= len(self.parts) else 0

    def __contains__(self, node) -> bool:
        a, b = node
        return 1 <= a <= len(self.parts) and 1 <= b <= self.parts[a - 1]

    def nodes(self) -> Iterator[Node]:
        for a, p in enumerate(self.parts, start=1):
            for b in range(1, p + 1):
                yield Node(a, b)

    def addable_nodes(self) -> list[Node]:
        """Addable nodes, top row first."""
        out = []
        for a in range(1, len(self.parts) + 2):
            if a == 1 or self.row(a - 1) > self.row(a):
                out.append(Node(a, self.row(a) + 1))
        return out

    def removable_nodes(self) -> list[Node]:
        """Removable nodes, top row first."""
        return [
            Node(a, p)
            for a, p in enumerate(self.parts, start=1)
            if p > self.row(a + 1)
        ]

    def add_node(self, node: Node) -> "Partition":
        a, b = node
        if b != self.row(a) + 1 or (a > 1 and self.row(a - 1) < b):
            raise ValueError(f"{node} is not addable to {self.parts}")
        parts = list(self.parts)
        if a == len(parts) + 1:
            parts.append(1)
        else:
            parts[a - 1] += 1
        return Partition(tuple(parts))

    def remove_node(self, node: Node) -> "Partition":
        a, b = node
        if b != self.row(a) or b == 0 or self.row(a + 1) >= b:
            raise ValueError(f"{node} is not removable from {self.parts}")
        parts = list(self.parts)
        parts[a - 1] -= 1
        if parts[a - 1] == 0:
            parts.pop()
        return Partition(tuple(parts))


EMPTY = Partition(())


# -- text forms ------------------------------------------------------------

_INT = re.compile(r"^[0-9]+$")


def _to_int(token: str, text: str) -> int:
    if not _INT.match(token):
        raise PartitionParseError(f"bad token {token!r} in {text!r}")
    return int(token)


def parse_partition(text: str) -> Partition:
    """Parse ``"3^2.1^7"``, ``"(3,3,1)"`` or ``"0"`` (the empty partition)."""
    s = "".join(text.split())
    if s in ("0", "()", "∅"):
        return EMPTY
    if not s:
        raise PartitionParseError("empty partition text (use '0' for the empty partition)")
    if s.startswith("(") or s.endswith(")"):
        if not (s.startswith("(") and s.endswith(")")):
            raise PartitionParseError(f"unbalanced parentheses in {text!r}")
        parts = []
        for token in s[1:-1].split(","):
            p = _to_int(token, text)
            if p == 0:
                raise PartitionParseError(f"zero part {token!r} in {text!r}")
            if parts and p > parts[-1]:
                raise PartitionParseError(f"part {token!r} breaks non-increasing order in {text!r}")
            parts.append(p)
        return Partition(tuple(parts))

    mult: dict[int, int] = {}
    previous = None
    for term in s.split("."):
        base, caret, exp = term.partition("^")
        size = _to_int(base, text)
        count = _to_int(exp, text) if caret else 1
        if size == 0:
            raise PartitionParseError(f"zero part {term!r} in {text!r}")
        if count == 0:
            raise PartitionParseError(f"zero exponent {term!r} in {text!r}")
        if previous is not None and size >= previous:
            raise PartitionParseError(f"term {term!r} must be smaller than the previous part in {text!r}")
        previous = size
        mult[size] = count
    return Partition.from_multiplicities(mult)


def format_partition(lam: Partition, style: str = "exponent") -> str:
    if style == "comma":
        return "(" + ",".join(map(str, lam.parts)) + ")" if lam else "0"
    if style != "exponent":
        raise ParameterError(f"unknown partition style {style!r}")
    if not lam:
        return "0"
    mult = lam.multiplicities()
    return ".".join(
        str(i) if mult[i] == 1 else f"{i}^{mult[i]}" for i in sorted(mult, reverse=True)
    )


# -- operations --------------------------------------------------------------

def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(tuple(sum(1 for p in lam.parts if p >= a) for a in range(1, lam.parts[0] + 1)))


def concat(*lams: Partition) -> Partition:
    """Multiset union of parts (λ ⊔ μ ⊔ ...)."""
    parts: list[int] = []
    for lam in lams:
        parts.extend(lam.parts)
    return Partition(tuple(sorted(parts, reverse=True)))


def power(lam: Partition, k: int) -> Partition:
    """λ^k: every multiplicity multiplied by k."""
    if k < 0:
        raise ParameterError("power exponent must be non-negative")
    return Partition(tuple(p for p in lam.parts for _ in range(k)))


def is_regular(lam: Partition, d) -> bool:
    """True iff no part is repeated d or more times."""
    d = check_modulus(d)
    if is_inf(d):
        return True
    return all(r < d for r in lam.multiplicities().values())


# -- enumeration -------------------------------------------------------------

def partitions(n: int, max_part: int | None = None, max_mult=None) -> Iterator[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order.

    ``max_mult`` bounds every multiplicity (so ``max_mult=d-1`` lists the
    d-regular partitions).
    """
    if n < 0:
        return
    if max_part is None:
        max_part = n
    cap = n if max_mult is None or is_inf(max_mult) else max_mult

    def rec(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for size in range(min(largest, remaining), 0, -1):
            for count in range(min(cap, remaining // size), 0, -1):
                for rest in rec(remaining - size * count, size - 1):
                    yield (size,) * count + rest

    for parts in rec(n, max_part):
        yield Partition(parts)


def regular_partitions(n: int, d) -> Iterator[Partition]:
    d = check_modulus(d)
    return partitions(n, max_mult=None if is_inf(d) else d - 1)


def partitions_up_to(n_max: int) -> Iterator[Partition]:
    """All partitions of rank 0..n_max, by rank then decreasing lex order."""
    for n in range(n_max + 1):
        yield from partitions(n)
