from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bottsum.actiondata import ManifoldInvariants, sphere_action
from bottsum.exactalg import Partition, evaluate, l_genus, partitions_of
from bottsum.localize import invariants, verify_isolated_singularities
from bottsum.obstruct import (
    CatalogLookupError,
    InconsistentInvariantsError,
    OutOfScopeError,
    catalog,
    check_domain,
    combine_connected_sum,
    combine_product,
    surface,
)

from generators import final_datasets, unit_spheres

P1 = Partition([1])


def test_k3_blocked_by_signature():
    verdict = check_domain(catalog("K3"))
    assert verdict.admissible == "no"
    assert verdict.to_json() == {
        "admissible": "no",
        "violations": [{"condition": "signature=0", "anchor": "Theorem 3.3", "observed": -16}],
        "critical_points": None,
    }


def test_cp2_blocked_by_odd_euler():
    verdict = check_domain(catalog("CP^2"))
    assert ("euler even", "Theorem 3.3", 3) in verdict.violations


def test_torus_admissible():
    verdict = check_domain(catalog("T^4"))
    assert verdict.admissible == "yes" and verdict.critical_points == 0


@pytest.mark.parametrize("g", [2, 3, 7])
def test_sphere_times_surface_blocked(g):
    inv = catalog(f"S^4xP_{g}")
    assert inv.euler == 4 * (1 - g) < 0
    assert check_domain(inv).admissible == "no"


def test_four_dimensional_negative_euler():
    inv = ManifoldInvariants(4, -2, 0, {P1: 0})
    assert [v[0] for v in check_domain(inv).violations] == ["euler>=0"]


def test_dimension_below_four():
    with pytest.raises(OutOfScopeError):
        check_domain(catalog("CP^1"))


def test_inconsistent_signature_rejected():
    with pytest.raises(InconsistentInvariantsError):
        check_domain(ManifoldInvariants(4, 2, 1, {P1: 0}))


def test_inconclusive_when_unknown():
    verdict = check_domain(ManifoldInvariants(4, None, 0, {}))
    assert verdict.admissible == "inconclusive"
    assert verdict.missing == ("euler",)
    verdict = check_domain(ManifoldInvariants(6, None, 0, {}))
    assert verdict.admissible == "inconclusive"


def test_catalog_values():
    assert catalog("CP^3").euler == 4
    k3 = catalog("K3")
    assert (k3.signature, k3.euler) == (-16, None)
    mixed = catalog("CP2#-CP2")
    assert (mixed.signature, mixed.euler) == (0, 4)
    assert catalog("S^6").euler == 2
    with pytest.raises(CatalogLookupError):
        catalog("Enriques")


def test_connected_sum_combinator():
    cp2 = catalog("CP^2")
    out = combine_connected_sum(cp2, cp2.reversed())
    assert (out.signature, out.euler, out.pontryagin[P1]) == (0, 4, 0)
    s4 = catalog("S^4")
    same = combine_connected_sum(cp2, s4)
    assert (same.euler, same.signature) == (cp2.euler, cp2.signature)
    k3k3 = combine_connected_sum(catalog("K3"), catalog("K3"))
    assert (k3k3.signature, k3k3.euler) == (-32, None)
    with pytest.raises(ValueError):
        combine_connected_sum(cp2, catalog("S^6"))


def test_product_combinator():
    assert combine_product(catalog("S^4"), surface(2)).euler == -4
    t4 = combine_product(catalog("T^3"), catalog("T^1"))
    assert (t4.euler, t4.signature, t4.pontryagin[P1]) == (0, 0, 0)
    s2s2 = combine_product(catalog("S^2"), catalog("S^2"))
    assert (s2s2.euler, s2s2.signature) == (4, 0)
    assert s2s2.pontryagin[P1] is None


def _with_signature(dim, euler, values):
    pont = {}
    sig = None
    if dim % 4 == 0:
        pont = {p: Fraction(v) for p, v in zip(partitions_of(dim // 4), values)}
        value = evaluate(l_genus(dim // 4), pont)
        sig = int(value) if value.denominator == 1 else None
    return ManifoldInvariants(dim, euler, sig, pont)


known_invariants = st.builds(
    _with_signature,
    st.sampled_from([4, 5, 6, 8, 10, 12]),
    st.integers(-6, 6),
    st.lists(st.integers(-3, 3), min_size=3, max_size=3),
)


def _forget(inv, mask):
    keys = list(inv.pontryagin)
    pont = {k: (None if mask[i + 2] else inv.pontryagin[k]) for i, k in enumerate(keys)}
    return ManifoldInvariants(inv.dimension, None if mask[0] else inv.euler,
                              None if mask[1] else inv.signature, pont)


@given(known_invariants, st.lists(st.booleans(), min_size=8, max_size=8),
       st.lists(st.booleans(), min_size=8, max_size=8))
def test_monotone_in_knowledge(inv, mask, extra):
    # partial knows less than fuller, which knows less than inv
    fuller_mask = [m and e for m, e in zip(mask, extra)]
    partial, fuller = _forget(inv, mask), _forget(inv, fuller_mask)
    if check_domain(partial).admissible == "no":
        assert check_domain(fuller).admissible == "no"
        assert check_domain(inv).admissible == "no"
    if check_domain(fuller).admissible == "yes":
        assert check_domain(partial).admissible in ("yes", "inconclusive")


@given(st.sampled_from(["CP^2", "K3", "T^4", "S^4", "CP2#-CP2", "S^2xP_3", "CP^4"]),
       st.sampled_from(["CP^2", "K3", "T^4", "S^4", "CP2#-CP2", "S^2xP_0", "CP^2"]),
       st.sampled_from(["CP^2", "T^4", "S^4"]))
def test_combinators_commute_and_associate(a, b, c):
    a, b, c = catalog(a), catalog(b), catalog(c)

    def numbers(inv):
        return inv.dimension, inv.euler, inv.signature, inv.pontryagin

    if a.dimension == b.dimension == c.dimension:
        assert numbers(combine_connected_sum(a, b)) == numbers(combine_connected_sum(b, a))
        left = combine_connected_sum(combine_connected_sum(a, b), c)
        right = combine_connected_sum(a, combine_connected_sum(b, c))
        assert numbers(left) == numbers(right)
    assert numbers(combine_product(a, b)) == numbers(combine_product(b, a))


def test_theorem_one_one_data_never_blocked_in_dimension_four():
    for data in final_datasets(11, 60, unit_spheres(), 6, blowups=False):
        if data.half_dimension == 2 and verify_isolated_singularities(data).passed:
            assert check_domain(invariants(data)).admissible != "no"


def test_fixed_points_above_dimension_four_still_block():
    # S^6 passes the isolated-singularity checks, but above dimension 4 the
    # Euler number has to vanish
    s6 = sphere_action([1, 1, 1])
    assert verify_isolated_singularities(s6).passed
    assert check_domain(invariants(s6)).admissible == "no"
