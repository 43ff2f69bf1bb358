"""The e-ℓ-adic decomposition of partitions and Harish-Chandra series labels.

Every multiplicity r_i of a partition is written in mixed radix,

    r_i = r_{i,-1} + e*r_{i,0} + e*ℓ*r_{i,1} + e*ℓ^2*r_{i,2} + ...

with 0 <= r_{i,-1} < e and 0 <= r_{i,j} < ℓ.  Component j collects the
digits r_{i,j}.  For ℓ = ∞ there are only the components -1 and 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .errors import DomainError, InvariantError, ParameterError
from .partitions import (
    EMPTY,
    Partition,
    check_modulus,
    concat,
    format_modulus,
    format_partition,
    is_inf,
    is_regular,
    parse_modulus,
    parse_partition,
    power,
    regular_partitions,
)


def check_pair(e, ell):
    e = check_modulus(e, "e", allow_inf=False)
    ell = check_modulus(ell, "ell")
    return e, ell


def level(e, ell, j: int) -> int:
    """Multiplier of component j: 1 for j = -1, e*ℓ^j for j >= 0."""
    if j == -1:
        return 1
    if j == 0:
        return e
    if is_inf(ell):
        raise ParameterError("only components -1 and 0 exist for ell = inf")
    return e * ell**j


def split_regular_singular(lam: Partition, d: int) -> tuple[Partition, Partition]:
    """Write λ = μ ⊔ ν^d with μ d-regular; returns (μ, ν)."""
    d = check_modulus(d, allow_inf=False)
    mult = lam.multiplicities()
    mu = Partition.from_multiplicities({i: r % d for i, r in mult.items()})
    nu = Partition.from_multiplicities({i: r // d for i, r in mult.items()})
    return mu, nu


@dataclass(frozen=True)
class EllAdicDecomposition:
    e: int
    ell: int | float
    comp_minus1: Partition = EMPTY
    comps: dict[int, Partition] = field(default_factory=dict)

    def __post_init__(self):
        check_pair(self.e, self.ell)
        # drop empty entries so equal decompositions compare equal
        comps = {j: p for j, p in sorted(self.comps.items()) if p}
        object.__setattr__(self, "comps", comps)
        if not is_regular(self.comp_minus1, self.e):
            raise InvariantError(f"component -1 = {self.comp_minus1} is not {self.e}-regular")
        for j, p in comps.items():
            if j < 0 or (is_inf(self.ell) and j > 0):
                raise InvariantError(f"invalid component index {j}")
            if not is_regular(p, self.ell):
                raise InvariantError(f"component {j} = {p} is not {format_modulus(self.ell)}-regular")

    def __hash__(self):
        return hash((self.e, self.ell, self.comp_minus1, tuple(self.comps.items())))

    def component(self, j: int) -> Partition:
        return self.comp_minus1 if j == -1 else self.comps.get(j, EMPTY)

    def replace(self, j: int, new: Partition) -> "EllAdicDecomposition":
        if j == -1:
            return EllAdicDecomposition(self.e, self.ell, new, self.comps)
        comps = dict(self.comps)
        comps[j] = new
        return EllAdicDecomposition(self.e, self.ell, self.comp_minus1, comps)

    @property
    def top(self) -> int:
        """Largest index of a nonempty component (-1 if only λ₍₋₁₎ may be nonempty)."""
        return max(self.comps, default=-1)

    def components(self) -> list[tuple[int, Partition]]:
        """(j, λ₍ⱼ₎) for j = -1, 0, ..., top."""
        return [(j, self.component(j)) for j in range(-1, self.top + 1)]

    def to_json(self) -> dict:
        comps = {"-1": format_partition(self.comp_minus1)}
        comps.update({str(j): format_partition(p) for j, p in self.comps.items()})
        return {"e": self.e, "ell": self.ell if not is_inf(self.ell) else "inf", "components": comps}

    @classmethod
    def from_json(cls, data: dict) -> "EllAdicDecomposition":
        ell = data["ell"]
        ell = parse_modulus(ell) if isinstance(ell, str) else ell
        comps = {int(j): parse_partition(t) for j, t in data["components"].items()}
        return cls(data["e"], ell, comps.pop(-1, EMPTY), comps)


def el_adic_decompose(lam: Partition, e: int, ell) -> EllAdicDecomposition:
    e, ell = check_pair(e, ell)
    digits: dict[int, dict[int, int]] = {}
    for i, r in lam.multiplicities().items():
        digits.setdefault(-1, {})[i] = r % e
        r //= e
        j = 0
        while r:
            if is_inf(ell):
                digits.setdefault(0, {})[i] = r
                break
            digits.setdefault(j, {})[i] = r % ell
            r //= ell
            j += 1
    comps = {j: Partition.from_multiplicities(m) for j, m in digits.items()}
    return EllAdicDecomposition(e, ell, comps.pop(-1, EMPTY), comps)


def el_adic_compose(dec: EllAdicDecomposition) -> Partition:
    """Inverse of :func:`el_adic_decompose`."""
    pieces = [dec.comp_minus1]
    for j, p in dec.comps.items():
        pieces.append(power(p, level(dec.e, dec.ell, j)))
    return concat(*pieces)


def tail(lam: Partition, e: int, ell: int, j: int) -> Partition:
    """λ₍ⱼ₎ ⊔ (λ₍ⱼ₊₁₎)^ℓ ⊔ (λ₍ⱼ₊₂₎)^{ℓ²} ⊔ ... (not necessarily ℓ-regular)."""
    dec = el_adic_decompose(lam, e, ell)
    return concat(*(power(p, ell ** (k - j)) for k, p in dec.comps.items() if k >= j))


# -- Harish-Chandra series ---------------------------------------------------

@dataclass(frozen=True, order=True)
class SeriesLabel:
    """The tuple m = (m₋₁, m₀, m₁, ...) with trailing zeros dropped."""

    m: tuple[int, ...] = (0,)

    def __post_init__(self):
        m = list(self.m) or [0]
        if any(x < 0 for x in m):
            raise ValueError("series label entries must be non-negative")
        while len(m) > 1 and m[-1] == 0:
            m.pop()
        object.__setattr__(self, "m", tuple(m))

    def __getitem__(self, j: int) -> int:
        """Entry m_j for j >= -1 (zero beyond the stored length)."""
        k = j + 1
        return self.m[k] if 0 <= k < len(self.m) else 0

    def rank(self, e: int, ell) -> int:
        return sum(x * level(e, ell, k - 1) for k, x in enumerate(self.m) if x)

    def __str__(self) -> str:
        return "(" + ", ".join(f"m{k - 1}={x}" for k, x in enumerate(self.m)) + ")"

    def to_json(self) -> list[int]:
        return list(self.m)

    @classmethod
    def parse(cls, text: str) -> "SeriesLabel":
        """Parse "1,2,1", "[1,2,1]" or "(m-1=1, m0=2, m1=1)"."""
        s = text.strip().strip("[]()")
        values = []
        for k, token in enumerate(s.split(",")):
            token = token.strip()
            if "=" in token:
                key, _, token = token.partition("=")
                if key.strip() != f"m{k - 1}":
                    raise ParameterError(f"series label entry {key!r} out of order")
            try:
                values.append(int(token))
            except ValueError as exc:
                raise ParameterError(f"bad series label {text!r}") from exc
        return cls(tuple(values))


def hc_label(lam: Partition, e: int, ell) -> SeriesLabel:
    dec = el_adic_decompose(lam, e, ell)
    return SeriesLabel(tuple(p.rank for _, p in dec.components()))


def enumerate_fiber(m: SeriesLabel, e: int, ell) -> list[Partition]:
    """All partitions λ with hc_label(λ) = m, in lexicographic component order."""
    e, ell = check_pair(e, ell)
    if is_inf(ell) and len(m.m) > 2:
        return []
    choices = [
        list(regular_partitions(size, e if k == 0 else ell)) for k, size in enumerate(m.m)
    ]
    out = []
    for combo in itertools.product(*choices):
        comps = {k - 1: p for k, p in enumerate(combo) if k}
        out.append(el_adic_compose(EllAdicDecomposition(e, ell, combo[0], comps)))
    return out


def series_labels(n: int, e: int, ell) -> Iterator[SeriesLabel]:
    """All m in N(n) (trailing zeros dropped)."""
    e, ell = check_pair(e, ell)
    levels = [1]
    while not is_inf(ell) or len(levels) < 2:
        nxt = level(e, ell, len(levels) - 1)
        if nxt > n:
            break
        levels.append(nxt)

    def rec(k: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            yield (remaining,)
            return
        for x in range(remaining // levels[k] + 1):
            for rest in rec(k - 1, remaining - x * levels[k]):
                yield rest + (x,)

    yield from sorted(SeriesLabel(t) for t in rec(len(levels) - 1, n)) if n else [SeriesLabel()]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def compute_e(q: int, ell: int) -> int:
    """Smallest i >= 1 with 1 + q + ... + q^(i-1) ≡ 0 (mod ℓ)."""
    if q < 2:
        raise ParameterError(f"q must be >= 2, got {q}")
    if not is_prime(ell):
        raise ParameterError(f"ell must be prime, got {ell}")
    if q % ell == 0:
        raise DomainError(f"non-defining characteristic required: {ell} divides q={q}")
    total, i = 1 % ell, 1
    while total:
        total = (total * q + 1) % ell
        i += 1
    return i


def levi_description(m: SeriesLabel, e: int, ell) -> str:
    """Text form of the standard Levi subgroup L_m, e.g. "GL1^1 x GL2^2 x GL6^1"."""
    factors = [
        f"GL{level(e, ell, k - 1)}^{x}" for k, x in enumerate(m.m) if x
    ]
    return " x ".join(factors) if factors else "GL0"
