import random

import pytest

from fock_mullineux import (
    EMPTY,
    INF,
    CrystalConfig,
    DomainError,
    OperatorId,
    apply_path,
    acd_dual,
    concat,
    conjugate,
    el_adic_decompose,
    generalized_mullineux,
    generalized_mullineux_via_path,
    hc_label,
    mullineux,
    mullineux_oracle,
    parse_partition as P,
    power,
)
from fock_mullineux.partitions import Partition, partitions_up_to, regular_partitions

LAM = P("2^2.1^7")
PAIRS = [(2, 3), (3, 2), (2, 5), (5, 2), (3, 3), (4, 3), (2, INF), (3, INF)]

# Generated once by mullineux_oracle (all good-node paths, literal RA deletion).
GOLDEN = {
    3: {
        "4": "2^2", "3.1": "2.1^2", "2^2": "4", "2.1^2": "3.1",
        "5": "3.2", "4.1": "2^2.1", "3.2": "5", "3.1^2": "3.1^2", "2^2.1": "4.1",
        "6": "3^2", "5.1": "3.2.1", "4.2": "2^2.1^2", "4.1^2": "4.1^2", "3^2": "6",
        "3.2.1": "5.1", "2^2.1^2": "4.2",
    },
    4: {
        "7": "3.2^2", "6.1": "2^3.1", "5.2": "2^2.1^3", "5.1^2": "3.2.1^2", "4.3": "4.3",
        "4.2.1": "3^2.1", "4.1^3": "4.1^3", "3^2.1": "4.2.1", "3.2^2": "7",
        "3.2.1^2": "5.1^2", "2^3.1": "6.1", "2^2.1^3": "5.2",
    },
    5: {
        "8": "2^4", "7.1": "2^3.1^2", "6.2": "2^2.1^4", "6.1^2": "3.2.1^3", "5.3": "3^2.2",
        "5.2.1": "3^2.1^2", "5.1^3": "4.1^4", "4^2": "4.2^2", "4.3.1": "3.2^2.1",
        "4.2^2": "4^2", "4.2.1^2": "4.2.1^2", "4.1^4": "5.1^3", "3^2.2": "5.3",
        "3^2.1^2": "5.2.1", "3.2^2.1": "4.3.1", "3.2.1^3": "6.1^2", "2^4": "8",
        "2^3.1^2": "7.1", "2^2.1^4": "6.2",
    },
}


@pytest.mark.parametrize("d, lam, image", [(d, k, v) for d, table in GOLDEN.items() for k, v in table.items()])
def test_golden_values(d, lam, image):
    assert mullineux(P(lam), d) == P(image)


def regularize(lam, d):
    """James's d-regularization: slide nodes to the top of their ladders."""
    ladders = {}
    for a, b in lam.nodes():
        k = a + (d - 1) * (b - 1)
        ladders[k] = ladders.get(k, 0) + 1
    rows = {}
    for k, count in ladders.items():
        for b in range((k - 1) // (d - 1) + 1, 0, -1):
            if count == 0:
                break
            a = k - (d - 1) * (b - 1)
            rows[a] = max(rows.get(a, 0), b)
            count -= 1
    return Partition(tuple(sorted(rows.values(), reverse=True)))


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_trivial_maps_to_regularized_sign(d):
    # D((n)) ⊗ sign = D((1^n)^R): an independent check of M_d((n))
    for n in range(1, 13):
        assert mullineux(Partition((n,)), d) == regularize(Partition((1,) * n), d)


def test_mullineux_examples():
    assert mullineux(P("2.1"), 3) == P("3")
    assert mullineux(P("3.1"), 5) == P("2.1^2")
    for lam in partitions_up_to(10):
        if all(r < 2 for r in lam.multiplicities().values()):
            assert mullineux(lam, 2) == lam
    with pytest.raises(DomainError):
        mullineux(P("1^3"), 2)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_involution_onto_regular(d):
    for n in range(11):
        regs = set(regular_partitions(n, d))
        images = {mullineux(lam, d) for lam in regs}
        assert images == regs
        assert all(mullineux(mullineux(lam, d), d) == lam for lam in regs)


def test_conjugation_regime():
    for lam in partitions_up_to(8):
        d = lam.rank + 1
        if d >= 2:
            assert mullineux(lam, d) == conjugate(lam)
    assert mullineux(P("3.1^2"), INF) == P("3.1^2")
    assert mullineux(P("4.1"), INF) == P("2.1^3")


def test_oracle_examples():
    assert mullineux_oracle(P("2.1"), 3) == P("3")
    assert mullineux_oracle(P("1"), 4) == P("1")
    assert mullineux_oracle(P("2^2"), 3) == P("4")
    with pytest.raises(DomainError):
        mullineux_oracle(P("1^2"), 2)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_path_independence(d):
    rng = random.Random(d)
    for n in range(9):
        for lam in regular_partitions(n, d):
            oracle = mullineux_oracle(lam, d)
            for choose in (min, max, rng.choice):
                assert mullineux(lam, d, choose) == oracle


def test_generalized_examples():
    assert generalized_mullineux(LAM, 2, 3) == P("1^11")
    assert generalized_mullineux(P("4.2.1"), 2, 3) == mullineux(P("4.2.1"), 2)
    assert generalized_mullineux(EMPTY, 2, 3) == EMPTY
    # components ((1),(2),(1)) -> ((1),(1,1),(1))
    dec = el_adic_decompose(generalized_mullineux(LAM, 2, 3), 2, 3)
    assert [str(p) for _, p in dec.components()] == ["1", "1^2", "1"]


def test_generalized_via_path_examples():
    res = generalized_mullineux_via_path(LAM, 2, 3)
    assert res.image == P("1^11")
    cfg = CrystalConfig(2, 3)
    assert apply_path(res.witness_path, cfg) == LAM
    assert apply_path(res.negated_path, cfg) == res.image
    assert res.negated_path == tuple(cfg.negate(op) for op in res.witness_path)

    res = generalized_mullineux_via_path(EMPTY, 2, 3)
    assert (res.image, res.witness_path, res.negated_path) == (EMPTY, (), ())

    res = generalized_mullineux_via_path(P("1^3"), 2, 3)
    assert res.image == P("1^3")
    assert res.witness_path == res.negated_path == (OperatorId.llevel(0, 0), OperatorId.level1(0))


@pytest.mark.parametrize("e, ell", PAIRS)
def test_generalized_properties(e, ell):
    for lam in partitions_up_to(10):
        image = generalized_mullineux(lam, e, ell)
        assert generalized_mullineux(image, e, ell) == lam
        assert hc_label(image, e, ell) == hc_label(lam, e, ell)
        assert generalized_mullineux_via_path(lam, e, ell).image == image


@pytest.mark.parametrize("e, ell", [(2, 11), (3, 7), (2, INF)])
def test_bezrukavnikov_losev_form(e, ell):
    for lam in partitions_up_to(8):
        dec = el_adic_decompose(lam, e, INF)
        expected = concat(mullineux(dec.comp_minus1, e), power(conjugate(dec.component(0)), e))
        assert generalized_mullineux(lam, e, ell) == expected


def test_acd_dual():
    assert acd_dual(LAM, 2, 3) == P("1^11")
    # e = 3 for (q, ℓ) = (2, 7); (n) with e > n is sent to (1^n)
    assert acd_dual(P("2"), 2, 7) == P("1^2")
    assert acd_dual(EMPTY, 2, 3) == EMPTY
    with pytest.raises(DomainError):
        acd_dual(LAM, 3, 3)


def test_acd_dual_trivial_module():
    # (n) is e-regular, so its dual label is M_e((n)); q=4, ℓ=3 gives e=3
    for n in range(1, 10):
        assert acd_dual(Partition((n,)), 4, 3) == mullineux(Partition((n,)), 3)
        assert acd_dual(Partition((n,)), 2, 3) == mullineux(Partition((n,)), 2)
