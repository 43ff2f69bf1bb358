"""Mullineux involutions computed from crystal paths.

M_d(λ) is obtained by reading a path ∅ → λ in the ŝl_d crystal and
replaying it with every residue negated.  The generalized involution
M_{e,ℓ} applies M_e to λ₍₋₁₎ and M_ℓ to every λ₍ⱼ₎, j >= 0; for ℓ = ∞,
M_∞ is conjugation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .adic import compute_e, el_adic_compose, el_adic_decompose
from .crystal import (
    CrystalConfig,
    OperatorId,
    apply_path,
    f_level1,
    generalized_path_to_empty,
    path_to_empty,
    reduce_residue,
)
from .errors import DomainError, InvariantError, ParameterError
from .partitions import (
    EMPTY,
    Partition,
    check_modulus,
    conjugate,
    format_modulus,
    format_partition,
    is_inf,
    is_regular,
)


@dataclass(frozen=True)
class MullineuxResult:
    image: Partition
    witness_path: tuple[OperatorId, ...] = ()
    negated_path: tuple[OperatorId, ...] = field(default=())


def mullineux(lam: Partition, d, choose=None) -> Partition:
    """M_d(λ) for a d-regular λ."""
    d = check_modulus(d)
    path = path_to_empty(lam, d, choose)
    mu = EMPTY
    for i in reversed(path):
        mu = f_level1(mu, reduce_residue(-i, d), d)
        if mu is None:
            raise InvariantError(f"negated path of {format_partition(lam)} leaves the crystal")
    return mu


def generalized_mullineux(lam: Partition, e, ell) -> Partition:
    """M_{e,ℓ}(λ), computed componentwise on the e-ℓ-adic decomposition."""
    dec = el_adic_decompose(lam, e, ell)
    out = dec.replace(-1, mullineux(dec.comp_minus1, dec.e))
    for j, comp in dec.comps.items():
        out = out.replace(j, conjugate(comp) if is_inf(dec.ell) else mullineux(comp, dec.ell))
    return el_adic_compose(out)


def generalized_mullineux_via_path(lam: Partition, e, ell, choose=None) -> MullineuxResult:
    """M_{e,ℓ}(λ) by negating a mixed-family path from ∅ to λ."""
    cfg = CrystalConfig(e, ell)
    path = tuple(generalized_path_to_empty(lam, e, ell, choose))
    negated = tuple(cfg.negate(op) for op in path)
    image = apply_path(negated, cfg)
    if image is None:
        raise InvariantError(f"negated path of {format_partition(lam)} leaves the crystal")
    return MullineuxResult(image, path, negated)


def acd_dual(lam: Partition, q: int, ell: int) -> Partition:
    """Label of the Alvis-Curtis dual d_G(S(λ)) for GL_n(q) in characteristic ℓ."""
    return generalized_mullineux(lam, compute_e(q, ell), ell)


# -- exhaustive oracle ---------------------------------------------------------
# Deliberately shares nothing with the crystal module: nodes come from the
# diagram as a set of cells and good nodes from literal RA deletion.

def _cells(lam: Partition) -> set[tuple[int, int]]:
    return {(a, b) for a, p in enumerate(lam.parts, 1) for b in range(1, p + 1)}


def _from_cells(cells: set[tuple[int, int]]) -> Partition:
    rows: dict[int, int] = {}
    for a, _ in cells:
        rows[a] = rows.get(a, 0) + 1
    return Partition(tuple(rows[a] for a in sorted(rows)))


def _word(cells, i, d):
    rows = max((a for a, _ in cells), default=0)
    cols = max((b for _, b in cells), default=0)
    letters = []
    for a in range(rows + 1, 0, -1):
        for b in range(1, cols + 2):
            if (b - a - i) % d:
                continue
            if (a, b) in cells:
                if (a + 1, b) not in cells and (a, b + 1) not in cells:
                    letters.append(["R", (a, b)])
            elif (a == 1 or (a - 1, b) in cells) and (b == 1 or (a, b - 1) in cells):
                letters.append(["A", (a, b)])
    return letters


def _reduce(letters):
    changed = True
    while changed:
        changed = False
        for k in range(len(letters) - 1):
            if letters[k][0] == "R" and letters[k + 1][0] == "A":
                del letters[k:k + 2]
                changed = True
                break
    return letters


def _oracle_e(cells, i, d):
    rs = [node for letter, node in _reduce(_word(cells, i, d)) if letter == "R"]
    return None if not rs else cells - {rs[0]}


def _oracle_f(cells, i, d):
    As = [node for letter, node in _reduce(_word(cells, i, d)) if letter == "A"]
    return None if not As else cells | {As[-1]}


def all_paths_to_empty(lam: Partition, d: int):
    """Every maximal sequence of good-node removals starting at λ."""
    def rec(cells):
        stuck = True
        for i in range(d):
            smaller = _oracle_e(cells, i, d)
            if smaller is not None:
                stuck = False
                for rest in rec(smaller):
                    yield (i,) + rest
        if stuck:
            if cells:
                raise InvariantError(f"path from {format_partition(lam)} stops at {_from_cells(cells)}")
            yield ()

    yield from rec(frozenset(_cells(lam)))


def mullineux_oracle(lam: Partition, d: int, max_rank: int = 8) -> Partition:
    """M_d(λ) by negating every path from λ to ∅ and checking they agree."""
    d = check_modulus(d, allow_inf=False)
    if lam.rank > max_rank:
        raise ParameterError(f"oracle limited to rank <= {max_rank}")
    if not is_regular(lam, d):
        raise DomainError(f"{format_partition(lam)} is not {format_modulus(d)}-regular")
    images = set()
    for path in all_paths_to_empty(lam, d):
        cells = frozenset()
        for i in reversed(path):
            cells = _oracle_f(cells, (-i) % d, d)
            if cells is None:
                raise InvariantError(f"negated path {path} of {format_partition(lam)} is undefined")
        images.add(_from_cells(cells))
    if len(images) != 1:
        raise InvariantError(f"paths of {format_partition(lam)} disagree: {sorted(map(str, images))}")
    return images.pop()
