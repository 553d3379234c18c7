"""Brute-force verifiers against the closure-system implementations.

The subset scan, the module-category closure axioms, the relation sweeps,
the small-lattice census, and the realization search all cross-check the
primary code paths.  Counts below (25 factorizable relations on 3 bricks,
census sizes 1,1,1,2,5,15, and so on) are frozen from exhaustive runs and
double-checked against hand arguments where small enough.
"""

from __future__ import annotations

import pytest

from torslat.galois import (
    all_torsion_pairs,
    factorizability_violation,
    is_factorizable,
    relation_from_arrows,
)
from torslat.lattice import (
    are_isomorphic,
    is_semidistributive,
    join_irreducibles,
    poset_from_pairs,
    try_lattice,
)
from torslat.oracle import (
    BudgetExceeded,
    SearchBudget,
    _quick_factorizable,
    _rows_of_mask,
    brute_torsion_pairs,
    closure_axiom_check,
    lattice_census,
    realize_sd_lattice,
    same_tors,
    subset_is_torsion_closed,
    surjection_dichotomy_sweep,
    sweep_factorizable,
)
from torslat.quiver import QuiverPresentation

A2L = QuiverPresentation(2, ("left",))
A3R = QuiverPresentation(3, ("right", "right"))


def lattice_from_covers(n, pairs):
    return try_lattice(poset_from_pairs(n, pairs))


def corpus_relations():
    yield relation_from_arrows(["b0", "b1", "b2"], [(0, 1), (1, 2)])
    yield relation_from_arrows(["x", "y"], [])
    yield relation_from_arrows(["x", "y"], [(0, 1), (1, 0)])
    yield relation_from_arrows(list("abcd"), [(0, 1), (1, 2), (2, 3)])
    from torslat.quiver import hom_relation

    yield hom_relation(A3R)
    yield hom_relation(QuiverPresentation(3, ("right", "left")))
    yield hom_relation(QuiverPresentation(3, ("right", "right"), ((0, 1),)))
    yield hom_relation(QuiverPresentation(4, ("right", "right", "right")))


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_brick_set_size=0)
    with pytest.raises(ValueError):
        SearchBudget(time_limit=0)


def test_brute_matches_closure_method():
    for R in corpus_relations():
        assert same_tors(brute_torsion_pairs(R), all_torsion_pairs(R))


def test_brute_diagonal_is_boolean():
    R = relation_from_arrows(["a", "b", "c"], [])
    TL = brute_torsion_pairs(R)
    assert TL.n == 8
    assert sorted(p.tset for p in TL.pairs) == list(range(8))


def test_brute_budget():
    R = relation_from_arrows([f"b{i}" for i in range(21)], [])
    with pytest.raises(BudgetExceeded):
        brute_torsion_pairs(R)


def test_subset_closure_axioms_two_vertex_cases():
    # bricks of 1 <- 2 in order [10], [11], [01]
    assert subset_is_torsion_closed(A2L, 0b110)
    assert not subset_is_torsion_closed(A2L, 0b010)  # missing quotient [01]
    assert not subset_is_torsion_closed(A2L, 0b101)  # missing extension [11]
    assert subset_is_torsion_closed(A2L, 0b000)
    assert subset_is_torsion_closed(A2L, 0b111)


@pytest.mark.parametrize(
    "q",
    [
        A2L,
        A3R,
        QuiverPresentation(3, ("right", "right"), ((0, 1),)),
    ],
)
def test_closure_axioms_match_perp_enumeration(q):
    from torslat.bridge import tors_of_algebra

    assert closure_axiom_check(q, tors_of_algebra(q).tors)


def test_quick_factorizable_matches_full():
    for m in (1, 2, 3):
        for mask in range(1 << (m * (m - 1))):
            rows = _rows_of_mask(mask, m)
            R = relation_from_arrows(
                [f"b{i}" for i in range(m)],
                [
                    (x, y)
                    for x in range(m)
                    for y in range(m)
                    if x != y and rows[x] >> y & 1
                ],
            )
            assert _quick_factorizable(rows) == is_factorizable(R)
            assert _quick_factorizable(rows, True) == is_factorizable(
                R, literal_mono=True
            )


def test_sweep_counts_small():
    rep = sweep_factorizable(SearchBudget(max_brick_set_size=3))
    assert rep["per_m"] == {
        "1": {"relations": 1, "factorizable": 1},
        "2": {"relations": 4, "factorizable": 3},
        "3": {"relations": 64, "factorizable": 25},
    }
    assert rep["violations"] == []
    assert rep["abstract_dichotomy_failures"] == 0
    assert not rep["literal_mono"]


def test_sweep_literal_reading_counts():
    rep = sweep_factorizable(SearchBudget(max_brick_set_size=2), literal_mono=True)
    assert rep["per_m"]["2"] == {"relations": 4, "factorizable": 1}


def test_sweep_workers_deterministic():
    serial = sweep_factorizable(SearchBudget(max_brick_set_size=3))
    parallel = sweep_factorizable(SearchBudget(max_brick_set_size=3), workers=2)
    for rep in (serial, parallel):
        rep.pop("runtime_seconds")
    assert serial == parallel


def test_sweep_budget_caps():
    with pytest.raises(BudgetExceeded):
        sweep_factorizable(SearchBudget(max_brick_set_size=6))
    with pytest.raises(BudgetExceeded):
        sweep_factorizable(SearchBudget(max_brick_set_size=3, time_limit=1e-9))


def test_census_counts():
    census = lattice_census(SearchBudget(max_lattice_size=6))
    by_size: dict[int, int] = {}
    for L in census:
        by_size[L.n] = by_size.get(L.n, 0) + 1
    assert by_size == {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15}
    sd = [L for L in census if is_semidistributive(L)]
    assert len(sd) == 18
    assert max(len(join_irreducibles(L)) for L in sd) == 5


def test_census_contains_classics():
    census = [L for L in lattice_census(SearchBudget(max_lattice_size=5)) if L.n == 5]
    n5 = lattice_from_covers(5, [(0, 1), (0, 2), (2, 3), (3, 4), (1, 4)])
    m3 = lattice_from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    assert any(are_isomorphic(L, n5) for L in census)
    assert any(are_isomorphic(L, m3) for L in census)
    assert sum(not is_semidistributive(L) for L in census) == 1  # only M3


def test_census_budget_cap():
    with pytest.raises(BudgetExceeded):
        lattice_census(SearchBudget(max_lattice_size=8))


def test_realize_trivial_lattices():
    point = lattice_from_covers(1, [])
    chain2 = lattice_from_covers(2, [(0, 1)])
    assert realize_sd_lattice(point).row_masks == ()
    assert realize_sd_lattice(chain2).row_masks == (1,)


def test_realize_pentagon():
    n5 = lattice_from_covers(5, [(0, 1), (0, 2), (2, 3), (3, 4), (1, 4)])
    R = realize_sd_lattice(n5)
    assert R is not None
    assert R.row_masks == (1, 3, 6)
    assert is_factorizable(R)
    assert are_isomorphic(all_torsion_pairs(R).lattice, n5)


def test_realize_m3_needs_unfiltered():
    m3 = lattice_from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    budget = SearchBudget(max_brick_set_size=3)
    assert realize_sd_lattice(m3, budget) is None
    R = realize_sd_lattice(m3, budget, factorizable_only=False)
    assert R is not None
    assert R.row_masks == (3, 6, 5)
    assert factorizability_violation(R) == ("unfactorized-arrow", 0, 1)
    assert are_isomorphic(all_torsion_pairs(R).lattice, m3)


def test_realize_seven_element_example():
    seven = lattice_from_covers(
        7, [(0, 1), (0, 2), (1, 3), (1, 4), (3, 5), (4, 5), (5, 6), (2, 6)]
    )
    assert is_semidistributive(seven)
    R = realize_sd_lattice(seven)
    assert R is not None
    assert R.m == 4
    assert R.row_masks == (1, 3, 5, 14)
    assert is_factorizable(R)
    assert are_isomorphic(all_torsion_pairs(R).lattice, seven)


def test_realize_budget():
    chain6 = lattice_from_covers(6, [(i, i + 1) for i in range(5)])
    with pytest.raises(BudgetExceeded):
        realize_sd_lattice(chain6, SearchBudget(max_brick_set_size=4))
    R = realize_sd_lattice(chain6, SearchBudget(max_brick_set_size=5))
    assert R is not None and R.row_masks == (1, 3, 7, 15, 31)


@pytest.mark.parametrize(
    "q,pairs",
    [
        (A2L, 4),
        (A3R, 10),
        (QuiverPresentation(3, ("right", "left")), 10),
        (QuiverPresentation(3, ("right", "right"), ((0, 1),)), 7),
    ],
)
def test_surjection_dichotomy(q, pairs):
    rep = surjection_dichotomy_sweep(q)
    assert rep["pairs_checked"] == pairs
    assert rep["violations"] == []
