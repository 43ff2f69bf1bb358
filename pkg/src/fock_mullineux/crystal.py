"""Kashiwara crystal operators on the Fock space of partitions.

Three families of operators act on partitions:

* ``E``   the level-1 ŝl_e operators F̃_{i,e}, Ẽ_{i,e} on the whole partition
          (they only ever change the e-regular component λ₍₋₁₎);
* ``L``   F̃_{i,ℓ,j}, Ẽ_{i,ℓ,j}: the ŝl_ℓ operators applied to component
          λ₍ⱼ₎ of the e-ℓ-adic decomposition (level e·ℓ^j);
* ``INF`` F̃_{i,∞,0}, Ẽ_{i,∞,0}: sl_∞ operators on λ₍₀₎ of the (e, ∞)
          decomposition (level e).

A crystal operator that does not act returns ``None``; that is the zero
vector of the Fock space, not an error.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .adic import el_adic_compose, el_adic_decompose, level
from .errors import DomainError, InvariantError, ParameterError
from .partitions import (
    EMPTY,
    INF,
    Node,
    Partition,
    check_modulus,
    format_modulus,
    format_partition,
    is_inf,
    is_regular,
    parse_partition,
    partitions_up_to,
)

ADDABLE = "A"
REMOVABLE = "R"


def residue(node: Node, d):
    """b - a, reduced into [0, d) unless d is infinite."""
    c = node[1] - node[0]
    return c if is_inf(d) else c % d


def reduce_residue(i: int, d):
    return i if is_inf(d) else i % d


@dataclass(frozen=True)
class SignatureWord:
    """Addable/removable i-nodes in increasing node order (bottom row first)."""

    entries: tuple[tuple[Node, str], ...] = ()

    @property
    def letters(self) -> str:
        return "".join(letter for _, letter in self.entries)

    def __len__(self):
        return len(self.entries)


def signature_word(lam: Partition, i: int, d) -> SignatureWord:
    d = check_modulus(d)
    i = reduce_residue(i, d)
    entries = [(n, ADDABLE) for n in lam.addable_nodes() if residue(n, d) == i]
    entries += [(n, REMOVABLE) for n in lam.removable_nodes() if residue(n, d) == i]
    # γ > γ' iff γ lies in a higher row, so increasing order = decreasing row index
    entries.sort(key=lambda entry: -entry[0].row)
    return SignatureWord(tuple(entries))


def good_nodes(word: SignatureWord | Iterable[tuple[Node, str]]):
    """Cancel RA pairs; return (good addable, good removable), ``None`` when absent.

    A single scan: R's wait on a stack, each A cancels the most recent
    pending R.  Surviving A's all precede the surviving R's.
    """
    entries = word.entries if isinstance(word, SignatureWord) else word
    pending_r: list[Node] = []
    good_a = None
    for node, letter in entries:
        if letter == REMOVABLE:
            pending_r.append(node)
        elif pending_r:
            pending_r.pop()
        else:
            good_a = node
    return good_a, (pending_r[0] if pending_r else None)


def f_level1(lam: Partition, i: int, d) -> Partition | None:
    """F̃_{i,d}: add the good addable i-node."""
    node, _ = good_nodes(signature_word(lam, i, d))
    return None if node is None else lam.add_node(node)


def e_level1(lam: Partition, i: int, d) -> Partition | None:
    """Ẽ_{i,d}: remove the good removable i-node."""
    _, node = good_nodes(signature_word(lam, i, d))
    return None if node is None else lam.remove_node(node)


def active_residues(lam: Partition, d, raising: bool = True) -> list[int]:
    """Residues carrying at least one addable (raising) or removable node."""
    nodes = lam.addable_nodes() if raising else lam.removable_nodes()
    return sorted({residue(n, d) for n in nodes})


# -- operator identifiers ----------------------------------------------------

class Family(str, enum.Enum):
    E = "e"
    L = "l"
    INF = "inf"


_FAMILY_ORDER = {Family.E: 0, Family.L: 1, Family.INF: 2}


@dataclass(frozen=True)
class OperatorId:
    """One crystal operator: family, component index j and residue i.

    j is -1 for the ``E`` family and 0 for ``INF``.
    """

    family: Family
    i: int
    j: int = -1

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        if family is Family.E and self.j != -1:
            object.__setattr__(self, "j", -1)
        elif family is Family.INF:
            object.__setattr__(self, "j", 0)
        elif family is Family.L and self.j < 0:
            raise ParameterError(f"component index must be >= 0, got {self.j}")

    @classmethod
    def level1(cls, i: int) -> "OperatorId":
        return cls(Family.E, i, -1)

    @classmethod
    def llevel(cls, j: int, i: int) -> "OperatorId":
        return cls(Family.L, i, j)

    @classmethod
    def inf(cls, i: int) -> "OperatorId":
        return cls(Family.INF, i, 0)

    def sort_key(self):
        return (_FAMILY_ORDER[self.family], self.j, self.i)

    def label(self) -> str:
        if self.family is Family.E:
            return f"F[e]:{self.i}"
        if self.family is Family.L:
            return f"F[l,{self.j}]:{self.i}"
        return f"F[inf]:{self.i}"

    def __str__(self):
        return self.label()

    def to_json(self) -> dict:
        return {"family": self.family.value, "j": self.j, "i": self.i}

    @classmethod
    def from_json(cls, data: dict) -> "OperatorId":
        return cls(Family(data["family"]), int(data["i"]), int(data["j"]))


@dataclass(frozen=True)
class CrystalConfig:
    e: int | float = 2
    ell: int | float = INF

    def __post_init__(self):
        check_modulus(self.e, "e")
        check_modulus(self.ell, "ell")

    def modulus(self, op: OperatorId):
        if op.family is Family.E:
            return self.e
        if op.family is Family.L:
            return self.ell
        return INF

    def check(self, op: OperatorId) -> None:
        if op.family is Family.L:
            if is_inf(self.e) or is_inf(self.ell):
                raise ParameterError(f"{op} requires finite e and ell")
        elif op.family is Family.INF and is_inf(self.e):
            raise ParameterError(f"{op} requires finite e")

    def normalize(self, op: OperatorId) -> OperatorId:
        self.check(op)
        return OperatorId(op.family, reduce_residue(op.i, self.modulus(op)), op.j)

    def negate(self, op: OperatorId) -> OperatorId:
        """(i, p, k) -> (-i, p, k)."""
        return self.normalize(OperatorId(op.family, -op.i, op.j))

    def level(self, op: OperatorId) -> int:
        """Rank added by one application of ``op``."""
        if op.family is Family.E:
            return 1
        if op.family is Family.INF:
            return self.e
        return level(self.e, self.ell, op.j)


def _apply(lam: Partition, op: OperatorId, cfg: CrystalConfig, step) -> Partition | None:
    cfg.check(op)
    if op.family is Family.E:
        # eq. (4.1): acting on λ equals acting on λ₍₋₁₎; no decomposition needed
        return step(lam, op.i, cfg.e)
    ell = INF if op.family is Family.INF else cfg.ell
    dec = el_adic_decompose(lam, cfg.e, ell)
    new = step(dec.component(op.j), op.i, ell)
    if new is None:
        return None
    return el_adic_compose(dec.replace(op.j, new))


def apply_f(lam: Partition, op: OperatorId, cfg: CrystalConfig) -> Partition | None:
    return _apply(lam, op, cfg, f_level1)


def apply_e(lam: Partition, op: OperatorId, cfg: CrystalConfig) -> Partition | None:
    return _apply(lam, op, cfg, e_level1)


def apply_path(ops: Sequence[OperatorId], cfg: CrystalConfig, start: Partition = EMPTY) -> Partition | None:
    """Apply F̃ operators right to left, as in F̃_{op₁}⋯F̃_{opₙ}·start."""
    lam = start
    for op in reversed(ops):
        lam = apply_f(lam, op, cfg)
        if lam is None:
            return None
    return lam


def operators(lam: Partition, cfg: CrystalConfig, families=(Family.E, Family.L),
              raising: bool = True, budget: int | None = None) -> list[OperatorId]:
    """Operators worth trying on ``lam``.

    Finite moduli contribute every residue; infinite ones only the active
    residues of the relevant component.  For raising operators, ``budget``
    limits the rank increase; lowering operators are restricted to nonempty
    components.
    """
    families = [Family(f) for f in families]
    ops: list[OperatorId] = []
    if Family.E in families:
        if is_inf(cfg.e):
            ops += [OperatorId.level1(i) for i in active_residues(lam, INF, raising)]
        elif budget is None or budget >= 1:
            ops += [OperatorId.level1(i) for i in range(cfg.e)]
    if is_inf(cfg.e):
        return ops
    if Family.L in families and not is_inf(cfg.ell):
        dec = el_adic_decompose(lam, cfg.e, cfg.ell)
        if not raising:
            js = list(dec.comps)
        elif budget is None:
            js = range(dec.top + 2)
        else:
            js = itertools.takewhile(lambda j: level(cfg.e, cfg.ell, j) <= budget, itertools.count())
        ops += [OperatorId.llevel(j, i) for j in js for i in range(cfg.ell)]
    if Family.INF in families and (budget is None or budget >= cfg.e):
        comp0 = el_adic_decompose(lam, cfg.e, INF).component(0)
        ops += [OperatorId.inf(i) for i in active_residues(comp0, INF, raising)]
    return ops


def generalized_families(cfg: CrystalConfig) -> tuple[Family, ...]:
    """E plus L (finite ℓ) or INF (ℓ = ∞): the combined crystal structure."""
    return (Family.E, Family.INF) if is_inf(cfg.ell) else (Family.E, Family.L)


def is_highest_weight(lam: Partition, e, ell) -> bool:
    cfg = CrystalConfig(e, ell)
    if is_inf(cfg.e):
        raise ParameterError("e must be finite")
    families = generalized_families(cfg)
    return all(apply_e(lam, op, cfg) is None for op in operators(lam, cfg, families, raising=False))


# -- paths -------------------------------------------------------------------

def _smallest(candidates: list[int]) -> int:
    return min(candidates)


def path_to_empty(lam: Partition, d, choose: Callable[[list[int]], int] | None = None) -> tuple[int, ...]:
    """Residues (i₁, ..., iₙ) with F̃_{i₁,d}⋯F̃_{iₙ,d}·∅ = λ.

    Built by repeatedly removing a good removable node; ``choose`` picks
    among the admissible residues (default: the smallest).
    """
    d = check_modulus(d)
    if not is_regular(lam, d):
        raise DomainError(f"{format_partition(lam)} is not {format_modulus(d)}-regular; no path from the empty partition")
    choose = choose or _smallest
    path = []
    while lam:
        candidates = {}
        for i in active_residues(lam, d, raising=False):
            mu = e_level1(lam, i, d)
            if mu is not None:
                candidates[i] = mu
        if not candidates:
            raise InvariantError(f"regular partition {format_partition(lam)} has no good removable node")
        i = choose(sorted(candidates))
        path.append(i)
        lam = candidates[i]
    return tuple(path)


def generalized_path_to_empty(lam: Partition, e, ell, choose=None) -> list[OperatorId]:
    """Mixed-family operators whose composite applied to ∅ yields λ.

    Application order (right to left) builds λ₍₋₁₎ first, then λ₍₀₎, λ₍₁₎, ...
    """
    cfg = CrystalConfig(e, ell)
    dec = el_adic_decompose(lam, cfg.e, cfg.ell)
    path: list[OperatorId] = []
    for j, comp in reversed(dec.components()):
        if j == -1:
            path += [OperatorId.level1(i) for i in path_to_empty(comp, cfg.e, choose)]
        elif is_inf(cfg.ell):
            path += [OperatorId.inf(i) for i in path_to_empty(comp, INF, choose)]
        else:
            path += [OperatorId.llevel(j, i) for i in path_to_empty(comp, cfg.ell, choose)]
    return path


# -- graphs ------------------------------------------------------------------

def vertex_key(lam: Partition):
    """Rank first, then decreasing lexicographic order."""
    return (lam.rank, tuple(-p for p in lam.parts), len(lam))


@dataclass(frozen=True)
class CrystalGraph:
    vertices: tuple[Partition, ...]
    edges: tuple[tuple[Partition, OperatorId, Partition], ...]

    def to_json(self) -> dict:
        return {
            "vertices": [format_partition(v) for v in self.vertices],
            "edges": [
                {"src": format_partition(s), "op": op.to_json(), "dst": format_partition(t)}
                for s, op, t in self.edges
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CrystalGraph":
        return cls(
            tuple(parse_partition(v) for v in data["vertices"]),
            tuple(
                (parse_partition(x["src"]), OperatorId.from_json(x["op"]), parse_partition(x["dst"]))
                for x in data["edges"]
            ),
        )


def crystal_graph(n_max: int, cfg: CrystalConfig, families=(Family.E,)) -> CrystalGraph:
    """Partitions of rank <= n_max with every F̃ edge that stays within that range."""
    if n_max < 0:
        raise ParameterError("n_max must be >= 0")
    families = tuple(Family(f) for f in families)
    vertices = sorted(partitions_up_to(n_max), key=vertex_key)
    edges = []
    for lam in vertices:
        budget = n_max - lam.rank
        for op in operators(lam, cfg, families, raising=True, budget=budget):
            if cfg.level(op) > budget:
                continue
            mu = apply_f(lam, op, cfg)
            if mu is not None:
                edges.append((lam, op, mu))
    return CrystalGraph(tuple(vertices), tuple(edges))
