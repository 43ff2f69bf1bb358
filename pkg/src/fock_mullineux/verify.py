"""Exhaustive verification harness.

Every property is checked on all partitions up to a rank bound and
reported as one line.  The report order is fixed; it does not depend on
timing or on the order properties happen to finish.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass, field
from typing import Callable

from . import adic
from .adic import (
    el_adic_compose,
    el_adic_decompose,
    enumerate_fiber,
    hc_label,
    series_labels,
    split_regular_singular,
)
from .crystal import (
    CrystalConfig,
    OperatorId,
    apply_e,
    apply_f,
    apply_path,
    f_level1,
    generalized_families,
    is_highest_weight,
    operators,
    path_to_empty,
)
from .errors import DomainError, ParameterError
from .mullineux import (
    generalized_mullineux,
    generalized_mullineux_via_path,
    mullineux,
    mullineux_oracle,
)
from .partitions import (
    EMPTY,
    INF,
    concat,
    conjugate,
    format_modulus,
    format_partition,
    is_inf,
    is_regular,
    parse_partition,
    partitions,
    partitions_up_to,
    power,
    regular_partitions,
)

DEFAULT_MAX_N = 12
ORACLE_MAX_N = 8
DEFAULT_PARAMS = ((2, 3), (3, 2), (2, 5), (5, 2), (3, 3), (4, 3), (2, INF), (3, INF))


def max_n() -> int:
    return int(os.environ.get("FOCK_MULLINEUX_MAX_N", DEFAULT_MAX_N))


@dataclass
class PropertyResult:
    name: str
    params: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, detail) -> None:
        self.instances += 1
        if not condition and len(self.failures) < 5:
            self.failures.append(detail() if callable(detail) else str(detail))
        elif not condition:
            self.failures.append("")

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status}  {self.name:<38} {self.params:<14} instances={self.instances}"
        if not self.ok:
            text += f" failures={len(self.failures)} first: {self.failures[0]}"
        return text


@dataclass
class Report:
    n_max: int
    results: list[PropertyResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def render(self) -> str:
        lines = [f"verify: n <= {self.n_max}"]
        lines += [r.line() for r in self.results]
        passed = sum(r.ok for r in self.results)
        lines.append(f"{passed}/{len(self.results)} properties passed")
        return "\n".join(lines) + "\n"


def _fmt(lam) -> str:
    return "none" if lam is None else format_partition(lam)


def _params_text(e, ell) -> str:
    return f"e={e} ell={format_modulus(ell)}"


def _moduli(e, ell):
    return [e] if is_inf(ell) else sorted({e, ell})


# -- parameter-free properties ---------------------------------------------------

def check_concat_rank(n, res):
    lams = list(partitions_up_to(n))
    for lam, mu in itertools.product(lams, repeat=2):
        if lam.rank + mu.rank <= n:
            res.check(concat(lam, mu).rank == lam.rank + mu.rank, lambda: f"{lam} ⊔ {mu}")


def check_conjugate_involution(n, res):
    for lam in partitions_up_to(n):
        res.check(conjugate(conjugate(lam)) == lam, lambda: _fmt(lam))


def check_power_concat(n, res):
    for lam in partitions_up_to(min(n, 10)):
        for k in range(6):
            res.check(power(lam, k) == concat(*([lam] * k)), lambda: f"{lam}^{k}")


def check_parse_format(n, res):
    for lam in partitions_up_to(min(n, 15)):
        for style in ("exponent", "comma"):
            text = format_partition(lam, style)
            res.check(parse_partition(text) == lam, lambda: text)


def check_conjugation_regime(n, res):
    for lam in partitions_up_to(min(n, ORACLE_MAX_N)):
        d = lam.rank + 1
        if d >= 2:
            res.check(mullineux(lam, d) == conjugate(lam), lambda: f"M_{d}({lam})")


GLOBAL_PROPERTIES: list[tuple[str, Callable]] = [
    ("partition.concat_rank", check_concat_rank),
    ("partition.conjugate_involution", check_conjugate_involution),
    ("partition.power_is_iterated_concat", check_power_concat),
    ("partition.parse_format_round_trip", check_parse_format),
    ("mullineux.conjugation_regime", check_conjugation_regime),
]


# -- per-(e, ell) properties ------------------------------------------------------

def check_adic_round_trip(n, e, ell, res):
    for lam in partitions_up_to(n):
        res.check(el_adic_compose(el_adic_decompose(lam, e, ell)) == lam, lambda: _fmt(lam))


def check_adic_injective(n, e, ell, res):
    seen = {}
    for lam in partitions_up_to(min(n, 12)):
        dec = el_adic_decompose(lam, e, ell)
        res.check(dec not in seen, lambda: f"{lam} and {seen[dec]}")
        seen[dec] = lam


def check_hc_in_n(n, e, ell, res):
    for lam in partitions_up_to(n):
        res.check(hc_label(lam, e, ell).rank(e, ell) == lam.rank, lambda: _fmt(lam))


def check_fibers(n, e, ell, res):
    for k in range(min(n, 12) + 1):
        union = []
        for m in series_labels(k, e, ell):
            fiber = enumerate_fiber(m, e, ell)
            union += fiber
            for lam in fiber:
                res.check(hc_label(lam, e, ell) == m, lambda: f"{lam} not over {m}")
        everything = list(partitions(k))
        res.check(len(union) == len(set(union)) == len(everything) and set(union) == set(everything),
                  lambda: f"fibers of rank {k} do not partition P({k})")


def check_split_consistent(n, e, ell, res):
    for lam in partitions_up_to(n):
        mu, nu = split_regular_singular(lam, e)
        dec = el_adic_decompose(lam, e, INF)
        res.check((mu, nu) == (dec.comp_minus1, dec.component(0)), lambda: _fmt(lam))


def _ops(lam, cfg, raising=True):
    return operators(lam, cfg, generalized_families(cfg), raising=raising)


def check_adjointness(n, e, ell, res):
    cfg = CrystalConfig(e, ell)
    for lam in partitions_up_to(n):
        for op in _ops(lam, cfg):
            mu = apply_f(lam, op, cfg)
            if mu is not None:
                res.check(apply_e(mu, op, cfg) == lam, lambda: f"{op} on {lam}")
        for op in _ops(lam, cfg, raising=False):
            nu = apply_e(lam, op, cfg)
            if nu is not None:
                res.check(apply_f(nu, op, cfg) == lam, lambda: f"E {op} on {lam}")


def check_regularity_closure(n, e, ell, res):
    for d in _moduli(e, ell):
        for lam in partitions_up_to(n):
            if is_regular(lam, d):
                for i in range(d):
                    mu = f_level1(lam, i, d)
                    if mu is not None:
                        res.check(is_regular(mu, d), lambda: f"F_{i},{d} {lam}")


def check_reachability(n, e, ell, res):
    for d in _moduli(e, ell):
        reached = {EMPTY}
        frontier = [EMPTY]
        for _ in range(min(n, 10)):
            frontier = list({mu for lam in frontier for i in range(d)
                             if (mu := f_level1(lam, i, d)) is not None})
            reached.update(frontier)
        for lam in partitions_up_to(min(n, 10)):
            regular = is_regular(lam, d)
            res.check((lam in reached) == regular, lambda: f"{lam} d={d}")
            try:
                path = path_to_empty(lam, d)
                ok = regular and apply_path([OperatorId.level1(i) for i in path], CrystalConfig(d)) == lam
            except DomainError:
                ok = not regular
            res.check(ok, lambda: f"path_to_empty({lam}, {d})")


def check_transparency(n, e, ell, res):
    for lam in partitions_up_to(n):
        dec = el_adic_decompose(lam, e, INF)
        for i in range(e):
            full = f_level1(lam, i, e)
            part = f_level1(dec.comp_minus1, i, e)
            expected = None if part is None else el_adic_compose(dec.replace(-1, part))
            res.check(full == expected, lambda: f"F_{i},{e} {lam}")


def check_tail_form(n, e, ell, res):
    if is_inf(ell):
        return
    cfg = CrystalConfig(e, ell)
    for lam in partitions_up_to(n):
        dec = el_adic_decompose(lam, e, ell)
        for j in range(dec.top + 2):
            t = adic.tail(lam, e, ell, j)
            for i in range(ell):
                got = f_level1(t, i, ell)
                mu = apply_f(lam, OperatorId.llevel(j, i), cfg)
                expected = None if mu is None else adic.tail(mu, e, ell, j)
                res.check(got == expected, lambda: f"F_{i},{ell},{j} {lam}")


def _step(fn, lam, op, cfg):
    return None if lam is None else fn(lam, op, cfg)


def check_commutation(n, e, ell, res):
    cfg = CrystalConfig(e, ell)
    for lam in partitions_up_to(min(n, 10)):
        ops = _ops(lam, cfg)
        for a, b in itertools.combinations(ops, 2):
            if (a.family, a.j) == (b.family, b.j):
                continue
            for fa, fb in ((apply_f, apply_f), (apply_e, apply_e), (apply_f, apply_e), (apply_e, apply_f)):
                x = _step(fa, _step(fb, lam, b, cfg), a, cfg)
                y = _step(fb, _step(fa, lam, a, cfg), b, cfg)
                res.check(x == y, lambda: f"{a}, {b} on {lam}")


def check_highest_weight(n, e, ell, res):
    for lam in partitions_up_to(min(n, 10)):
        res.check(is_highest_weight(lam, e, ell) == (not lam), lambda: _fmt(lam))


def check_rank_grading(n, e, ell, res):
    cfg = CrystalConfig(e, ell)
    for lam in partitions_up_to(n):
        for op in _ops(lam, cfg):
            mu = apply_f(lam, op, cfg)
            if mu is not None:
                res.check(mu.rank == lam.rank + cfg.level(op), lambda: f"{op} on {lam}")


def check_ell_big(n, e, ell, res):
    """For ℓ' > n, the ŝl_ℓ' operators on component 0 agree with sl_∞."""
    if not is_inf(ell):
        return
    big = n + 3
    cfg = CrystalConfig(e, big)
    # one representative per class mod ℓ', centred so it covers every content of λ₍₀₎
    window = range(-(big // 2), big - big // 2)
    for lam in partitions_up_to(n):
        for i in window:
            for fn in (apply_f, apply_e):
                x = fn(lam, OperatorId.inf(i), cfg)
                y = fn(lam, OperatorId.llevel(0, i % big), cfg)
                res.check(x == y, lambda: f"{fn.__name__} i={i} on {lam}")


def check_involution(n, e, ell, res):
    for lam in partitions_up_to(n):
        res.check(generalized_mullineux(generalized_mullineux(lam, e, ell), e, ell) == lam, lambda: _fmt(lam))


def check_path_agreement(n, e, ell, res):
    for lam in partitions_up_to(min(n, 10)):
        res.check(generalized_mullineux_via_path(lam, e, ell).image == generalized_mullineux(lam, e, ell),
                  lambda: _fmt(lam))


def check_restriction(n, e, ell, res):
    for k in range(n + 1):
        for lam in regular_partitions(k, e):
            res.check(generalized_mullineux(lam, e, ell) == mullineux(lam, e), lambda: _fmt(lam))


def check_series(n, e, ell, res):
    for lam in partitions_up_to(n):
        res.check(hc_label(generalized_mullineux(lam, e, ell), e, ell) == hc_label(lam, e, ell), lambda: _fmt(lam))


def check_path_independence(n, e, ell, res):
    rng = random.Random(0)
    strategies = [min, max, lambda c: rng.choice(c)]
    for d in _moduli(e, ell):
        for k in range(min(n, ORACLE_MAX_N) + 1):
            for lam in regular_partitions(k, d):
                images = {mullineux(lam, d, choose) for choose in strategies}
                images.add(mullineux_oracle(lam, d))
                res.check(len(images) == 1, lambda: f"M_{d}({lam})")


def check_bezrukavnikov_losev(n, e, ell, res):
    for lam in partitions_up_to(min(n, ORACLE_MAX_N)):
        if not is_inf(ell) and e * ell <= lam.rank:
            continue
        dec = el_adic_decompose(lam, e, INF)
        expected = concat(mullineux(dec.comp_minus1, e), power(conjugate(dec.component(0)), e))
        res.check(generalized_mullineux(lam, e, ell) == expected, lambda: _fmt(lam))


def check_image_regular(n, e, ell, res):
    for d in _moduli(e, ell):
        for k in range(min(n, 10) + 1):
            regs = set(regular_partitions(k, d))
            images = {mullineux(lam, d) for lam in regs}
            res.check(images == regs, lambda: f"M_{d} on Reg_{d}({k})")


PAIR_PROPERTIES: list[tuple[str, Callable]] = [
    ("adic.round_trip", check_adic_round_trip),
    ("adic.injective", check_adic_injective),
    ("adic.hc_in_N", check_hc_in_n),
    ("adic.fibers_partition_P(n)", check_fibers),
    ("adic.split_matches_decomposition", check_split_consistent),
    ("crystal.adjointness", check_adjointness),
    ("crystal.regularity_closure", check_regularity_closure),
    ("crystal.reachability_iff_regular", check_reachability),
    ("crystal.decomposition_transparency", check_transparency),
    ("crystal.tail_form", check_tail_form),
    ("crystal.commutation", check_commutation),
    ("crystal.unique_highest_weight", check_highest_weight),
    ("crystal.rank_grading", check_rank_grading),
    ("crystal.ell_big_equals_inf", check_ell_big),
    ("mullineux.involution", check_involution),
    ("mullineux.path_agreement", check_path_agreement),
    ("mullineux.restriction", check_restriction),
    ("mullineux.series_preservation", check_series),
    ("mullineux.path_independence", check_path_independence),
    ("mullineux.bezrukavnikov_losev", check_bezrukavnikov_losev),
    ("mullineux.image_regular", check_image_regular),
]


def verify_suite(n_max: int, params=DEFAULT_PARAMS) -> Report:
    ceiling = max_n()
    if n_max > ceiling:
        raise ParameterError(f"n = {n_max} exceeds the ceiling {ceiling} (set FOCK_MULLINEUX_MAX_N to raise it)")
    if n_max < 0:
        raise ParameterError("n must be >= 0")
    results = []
    for name, fn in GLOBAL_PROPERTIES:
        res = PropertyResult(name, "-")
        fn(n_max, res)
        results.append(res)
    for e, ell in params:
        e, ell = adic.check_pair(e, ell)
        for name, fn in PAIR_PROPERTIES:
            if name == "crystal.tail_form" and is_inf(ell):
                continue
            if name == "crystal.ell_big_equals_inf" and not is_inf(ell):
                continue
            res = PropertyResult(name, _params_text(e, ell))
            fn(n_max, e, ell, res)
            results.append(res)
    return Report(n_max, results)
