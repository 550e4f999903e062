from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy

from chi_lab import (
    MissingInvariantError,
    Q4,
    ValidationError,
    bound_cor5,
    bound_cor6,
    bound_cor7,
    bound_cor9,
    bound_cor10,
    bound_cor11,
    bound_prop1,
    bound_prop2,
    bound_prop3,
    bound_prop4,
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_labeled,
    eps_bound,
    eps_bound_holds,
    graph_from_edge_mask,
    induced_subgraph,
    invariant_report,
    mask_of,
    minimal_cut_sets,
    complement,
    petersen_graph,
    prop12_threshold,
    prop12_threshold_met,
    ramsey_upper,
    reed_bound,
)
from chi_lab.bounds import cor5_quarters, prop3_quarters, prop4_quarters


def random_reports(seed, count, max_n, with_excess=False):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        g = graph_from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
        yield g, invariant_report(g, with_excess=with_excess)


# -- Q4 ------------------------------------------------------------------------


def test_q4_arithmetic():
    assert Q4.from_int(3) + Q4(1) == Q4(13)
    assert Q4(13) - 3 == Q4(1)
    assert -Q4(5) == Q4(-5)
    assert Q4(13).at_least(3)
    assert not Q4(11).at_least(3)
    assert Q4(13).compare(Q4(13)) == 0


def test_q4_ceil():
    assert Q4(13).ceil() == 4
    assert Q4(12).ceil() == 3
    assert Q4(-9).ceil() == -2


def test_q4_strings():
    assert Q4(13).exact_str() == "13/4"
    assert Q4(13).decimal_str() == "3.25"
    assert Q4(-9).decimal_str() == "-2.25"
    assert Q4(6).decimal_str() == "1.5"
    assert Q4(8).decimal_str() == "2"
    assert Q4(13).as_fraction() == Fraction(13, 4)


def test_q4_rejects_mixed_types():
    with pytest.raises(TypeError):
        Q4(1) + 0.5  # type: ignore[operator]


# -- reed ----------------------------------------------------------------------


def test_reed_examples():
    assert reed_bound(invariant_report(cycle_graph(5))) == 3
    for n in range(1, 8):
        assert reed_bound(invariant_report(complete_graph(n))) == n
    assert reed_bound(invariant_report(petersen_graph())) == 3


# -- prop1 ----------------------------------------------------------------------


def test_prop1_c5_two_sets():
    v = bound_prop1(cycle_graph(5), [mask_of([0, 2]), mask_of([1, 3])])
    assert v == Q4.from_int(3)


def test_prop1_k3_singleton():
    assert bound_prop1(complete_graph(3), [mask_of([0])]) == Q4.from_int(3)


def test_prop1_singleton_family_closed_form():
    rng = random.Random(3)
    for g, r in random_reports(3, 20, 8):
        m = rng.randint(1, g.n)
        sets = [1 << v for v in range(m)]
        v = bound_prop1(g, sets, clique=r.clique)
        assert v == Q4(2 * (r.clique + g.n + m - 1))


def test_prop1_adding_singleton_adds_half():
    for g, r in random_reports(9, 20, 8):
        base = [r.independent_set]
        outside = [v for v in range(g.n) if not r.independent_set >> v & 1]
        if not outside:
            continue
        extended = base + [1 << outside[0]]
        delta = bound_prop1(g, extended, clique=r.clique) - bound_prop1(
            g, base, clique=r.clique
        )
        assert delta == Q4(2)  # exactly +1/2


def test_prop1_validation():
    c5 = cycle_graph(5)
    with pytest.raises(ValidationError, match="set 1 overlaps"):
        bound_prop1(c5, [mask_of([0, 2]), mask_of([2, 4])])
    with pytest.raises(ValidationError, match="set 0 is not independent"):
        bound_prop1(c5, [mask_of([0, 1])])
    with pytest.raises(ValidationError, match="set 0 is empty"):
        bound_prop1(c5, [0])


# -- prop2 / prop3 -----------------------------------------------------------------


def test_prop2_examples():
    assert bound_prop2(invariant_report(cycle_graph(5))) == Q4.from_int(3)
    for n in range(1, 8):
        assert bound_prop2(invariant_report(complete_graph(n))) == Q4.from_int(n)
    # omega=1, n=5, Delta=0: (1/2)(1 + 6/2) = 2
    assert bound_prop2(invariant_report(empty_graph(5))) == Q4.from_int(2)


def test_prop3_examples():
    c5 = cycle_graph(5)
    r = invariant_report(c5)
    h_pair = invariant_report(induced_subgraph(c5, mask_of([0, 2])))
    assert bound_prop3(r, h_pair) == Q4(13)  # 3.25
    assert bound_prop3(r, r) == Q4.from_int(4)


def test_prop3_single_vertex_adds_half():
    for g, r in random_reports(15, 20, 8):
        h = invariant_report(induced_subgraph(g, 1))
        assert bound_prop3(r, h) - bound_prop2(r) == Q4(2)


# -- prop4 / cor5 / cor6 -------------------------------------------------------------


def test_prop4_c5_examples():
    c5 = cycle_graph(5)
    k = mask_of([0, 4])
    assert bound_prop4(c5, k, c5.all_mask) == Q4(21)  # 5.25
    assert bound_prop4(c5, k, mask_of([1, 3])) == Q4(19)  # 4.75


def test_prop4_validation():
    c5 = cycle_graph(5)
    with pytest.raises(ValidationError, match="not a cut-set"):
        bound_prop4(c5, mask_of([2]), c5.all_mask)
    with pytest.raises(ValidationError, match="H is empty"):
        bound_prop4(c5, mask_of([0, 4]), 0)
    with pytest.raises(ValidationError, match="empty"):
        bound_prop4(c5, mask_of([0, 4]), mask_of([0, 4]))


def test_cor5_examples():
    c5 = cycle_graph(5)
    r = invariant_report(c5)
    h_pair = invariant_report(induced_subgraph(c5, mask_of([0, 2])))
    assert bound_cor5(r, h_pair) == Q4(21)  # 5.25
    assert bound_cor5(r, r) == Q4.from_int(6)
    k4 = complete_graph(4)
    r4 = invariant_report(k4)
    h1 = invariant_report(induced_subgraph(k4, 1))
    assert bound_cor5(r4, h1) == Q4(18)  # 4.5


def test_cor6_example_and_rejection():
    c5 = cycle_graph(5)
    assert bound_cor6(c5, mask_of([0, 4])) == Q4.from_int(5)
    # {1,4} does not cut the complement 5-cycle
    with pytest.raises(ValidationError):
        bound_cor6(c5, mask_of([1, 4]))


def test_prop4_cor6_accept_empty_cut_when_complement_disconnected():
    k4 = complete_graph(4)
    r = invariant_report(k4)
    # complement of K_4 is disconnected, the empty set is its minimal cut
    v = bound_prop4(k4, 0, k4.all_mask)
    assert v == bound_cor5(r, r)
    assert bound_cor6(k4, 0) == Q4(2 * (4 + 3 + 1) + 3 - 1)


# -- cor7 -----------------------------------------------------------------------------


def test_cor7_examples():
    assert bound_cor7(invariant_report(cycle_graph(5))) == Q4.from_int(5)
    for n in range(1, 8):
        # kappa_bar = 0, alpha = 1: n + 3/4
        assert bound_cor7(invariant_report(complete_graph(n))) == Q4(4 * n + 3)
    p = invariant_report(petersen_graph())
    assert p.kappa_bar == 6
    assert bound_cor7(p) == Q4(2 * 6 + 4 * 6 + 4 - 4)  # 9.0 via full pipeline


# -- cor9 / cor10 / cor11 ----------------------------------------------------------------


def test_cor9_examples():
    assert bound_cor9(invariant_report(cycle_graph(5), with_excess=True)) == Q4(13)
    # omega=1, n=5, Delta=0, eta=2: 2 - 1/2 = 1.5
    assert bound_cor9(invariant_report(empty_graph(5), with_excess=True)) == Q4(6)
    assert bound_cor9(invariant_report(complete_graph(4), with_excess=True)) == Q4(18)


def test_cor10_matches_cor9_exactly():
    for g, r in random_reports(21, 40, 8, with_excess=True):
        assert bound_cor9(r) == bound_cor10(r)


def test_cor11_examples():
    assert bound_cor11(invariant_report(cycle_graph(5), with_excess=True)) == Q4(21)
    assert bound_cor11(invariant_report(complete_graph(4), with_excess=True)) == Q4(18)
    assert bound_cor11(invariant_report(empty_graph(5), with_excess=True)) == Q4(22)


def test_excess_bounds_require_excess():
    r = invariant_report(cycle_graph(5), with_excess=False)
    for fn in (bound_cor9, bound_cor10, bound_cor11):
        with pytest.raises(MissingInvariantError):
            fn(r)


def test_cor9_is_min_of_prop3_small_exhaustive():
    for n in range(1, 5):
        for g in enumerate_labeled(n):
            r = invariant_report(g, with_excess=True)
            best = min(
                prop3_quarters(
                    r.clique,
                    r.n,
                    r.max_degree,
                    invariant_report(induced_subgraph(g, h)).chromatic,
                    h.bit_count(),
                )
                for h in range(1, 1 << n)
            )
            assert bound_cor9(r).quarters == best


def test_cor9_is_min_of_prop3_sampled_to_n10():
    from chi_lab import chromatic_number

    for g, r in random_reports(77, 25, 10, with_excess=True):
        best = min(
            prop3_quarters(
                r.clique,
                r.n,
                r.max_degree,
                chromatic_number(induced_subgraph(g, h))[0],
                h.bit_count(),
            )
            for h in range(1, 1 << g.n)
        )
        assert bound_cor9(r).quarters == best


def test_relaxation_chain_prop4_below_cor5():
    # minimum cuts of the complement relax prop4 up to cor5
    for n in range(2, 6):
        for g in enumerate_labeled(n):
            r = invariant_report(g)
            comp = complement(g)
            cuts = [k for k in minimal_cut_sets(comp) if k.bit_count() == r.kappa_bar]
            for k in cuts:
                for h in range(1, 1 << n):
                    rest = h & ~k
                    if rest == 0:
                        continue
                    chi_k = (
                        invariant_report(induced_subgraph(g, k)).chromatic if k else 0
                    )
                    chi_rest = invariant_report(induced_subgraph(g, rest)).chromatic
                    chi_h = invariant_report(induced_subgraph(g, h)).chromatic
                    p4 = prop4_quarters(
                        r.clique, r.max_degree, chi_k, chi_rest, rest.bit_count()
                    )
                    c5v = cor5_quarters(
                        r.clique, r.max_degree, r.kappa_bar, chi_h, h.bit_count()
                    )
                    assert p4 <= c5v


def test_relaxation_chain_sampled_n6_n7():
    from chi_lab import chromatic_number

    rng = random.Random(81)
    checked = 0
    while checked < 40:
        n = rng.choice([6, 7])
        g = graph_from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
        r = invariant_report(g)
        comp = complement(g)
        cuts = [k for k in minimal_cut_sets(comp) if k.bit_count() == r.kappa_bar]
        if not cuts:
            continue  # complement complete, no cut to relax through
        chi_by_mask = {
            h: chromatic_number(induced_subgraph(g, h))[0] for h in range(1, 1 << n)
        }
        for k in cuts:
            chi_k = chi_by_mask[k] if k else 0
            for h in range(1, 1 << n):
                rest = h & ~k
                if rest == 0:
                    continue
                p4 = prop4_quarters(
                    r.clique, r.max_degree, chi_k, chi_by_mask[rest], rest.bit_count()
                )
                c5v = cor5_quarters(
                    r.clique, r.max_degree, r.kappa_bar, chi_by_mask[h], h.bit_count()
                )
                assert p4 <= c5v
        checked += 1


# -- soundness on random graphs -------------------------------------------------------------


def test_all_parameterless_bounds_sound_random():
    for g, r in random_reports(33, 60, 9, with_excess=True):
        chi = r.chromatic
        for value in (
            bound_prop2(r),
            bound_cor7(r),
            bound_cor9(r),
            bound_cor10(r),
            bound_cor11(r),
        ):
            assert value.at_least(chi), (g, value)


# -- eps bound ---------------------------------------------------------------------------------


def test_eps_bound_examples():
    r = invariant_report(cycle_graph(5))
    assert eps_bound(r, Fraction(1, 4)) == Fraction(7, 2)
    for n in (1, 3, 6):
        rn = invariant_report(complete_graph(n))
        assert eps_bound(rn, 1) == Fraction(3 * n, 2) + Fraction(n + 1, 2)
    r5 = invariant_report(empty_graph(5))
    assert eps_bound(r5, Fraction(1, 4)) == Fraction(7, 4)
    assert eps_bound(r5, Fraction(1, 4)) >= r5.chromatic


def test_eps_bound_limit_is_reed_plus_half():
    # eps -> 0 recovers (1/2)(omega + Delta + 1) + 1/2
    for g, r in random_reports(43, 25, 8):
        base = Fraction(r.clique + r.max_degree + 1, 2) + Fraction(1, 2)
        eps = Fraction(1, 10**9)
        assert eps_bound(r, eps) == base + eps * r.clique


def test_eps_bound_monotone_in_eps():
    for g, r in random_reports(47, 25, 8):
        assert eps_bound(r, Fraction(1, 2)) > eps_bound(r, Fraction(1, 4))


def test_eps_bound_rejects_nonpositive():
    r = invariant_report(cycle_graph(5))
    with pytest.raises(ValidationError):
        eps_bound(r, 0)


def test_eps_bound_holds_matches_fraction_comparison():
    for g, r in random_reports(49, 40, 8):
        for eps in (Fraction(1, 10), Fraction(1, 4), Fraction(1, 2)):
            expected = r.chromatic <= eps_bound(r, eps)
            got = eps_bound_holds(
                r.chromatic, r.clique, r.max_degree, eps.numerator, eps.denominator
            )
            assert got == expected


# -- ramsey ---------------------------------------------------------------------------------------


def test_ramsey_values():
    assert ramsey_upper(3, 3) == 6
    assert ramsey_upper(2, 7) == 7
    assert ramsey_upper(4, 4) == 20


def test_ramsey_bounds_order_of_random_graphs():
    for g, r in random_reports(53, 60, 10):
        assert g.n < ramsey_upper(r.independence + 1, r.clique + 1)
        assert ramsey_upper(r.independence + 1, r.clique + 1) <= 2 ** (
            r.independence + r.clique
        )


# -- prop12 threshold -------------------------------------------------------------------------------


def test_threshold_clamps_small_n():
    assert prop12_threshold(2, Fraction(1, 4)) == 0.0
    assert prop12_threshold(8, Fraction(1, 4)) == 0.0


def test_threshold_value():
    # eps = 1/4: T = (log2 n - 4) / 8
    assert prop12_threshold(4096, Fraction(1, 4)) == pytest.approx(1.0)


def test_threshold_rejects_bad_inputs():
    with pytest.raises(ValidationError):
        prop12_threshold(1, Fraction(1, 4))
    with pytest.raises(ValidationError):
        prop12_threshold(10, 0)


def test_threshold_met_agrees_with_float():
    rng = random.Random(61)
    for _ in range(300):
        n = rng.randint(2, 10**6)
        kappa = rng.randint(0, 40)
        eps = Fraction(rng.randint(1, 9), rng.randint(10, 99))
        exact = prop12_threshold_met(n, eps, kappa)
        approx = kappa >= prop12_threshold(n, eps)
        # the float comparison can only disagree within rounding slack
        if exact != approx:
            t = prop12_threshold(n, eps)
            assert abs(kappa - t) < 1e-9
        else:
            assert exact == approx


def test_sympy_rederivation_of_violation_gap():
    # cor7 minus the eps bound collapses to kappa_bar + 1/2 - eps*omega - alpha/4,
    # so a violator has eps*omega + alpha/4 < kappa_bar + 1/2
    w, d, a, k, eps = sympy.symbols("w d a k eps", positive=True)
    cor7 = sympy.Rational(1, 2) * (w + d + 1) + k + 1 - a / 4
    relaxed = (sympy.Rational(1, 2) + eps) * w + (d + 2) / 2
    gap = sympy.simplify(cor7 - relaxed - (k + sympy.Rational(1, 2) - eps * w - a / 4))
    assert gap == 0


def test_sympy_threshold_solves_the_chain():
    # T is exactly the kappa solving log2(n) = (4 + 1/eps)*kappa + 2 + 1/(2 eps)
    kappa, L, eps = sympy.symbols("kappa L eps", positive=True)
    solution = sympy.solve(
        sympy.Eq(L, (4 + 1 / eps) * kappa + 2 + 1 / (2 * eps)), kappa
    )[0]
    candidate = (L - 2 - 1 / (2 * eps)) / (4 + 1 / eps)
    assert sympy.simplify(solution - candidate) == 0


def test_dichotomy_exhaustive_tiny():
    for n in range(1, 6):
        for g in enumerate_labeled(n):
            r = invariant_report(g)
            for eps in (Fraction(1, 10), Fraction(1, 4), Fraction(1, 2)):
                holds = r.chromatic <= eps_bound(r, eps)
                assert holds or prop12_threshold_met(g.n, eps, r.kappa_bar)


def test_violators_satisfy_connectivity_gap_random():
    # on any graph where the eps bound fails, the cor7 chain inequality holds
    for g, r in random_reports(71, 120, 8):
        for eps in (Fraction(1, 100), Fraction(1, 10)):
            if r.chromatic > eps_bound(r, eps):
                assert eps * r.clique + Fraction(r.independence, 4) < r.kappa_bar + Fraction(1, 2)
