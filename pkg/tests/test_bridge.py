"""Algebra-to-lattice bridge: torsion lattices of quivers and their quotients.

The two-vertex quotient (kill the only arrow) sends the pentagon onto the
Boolean square, collapsing exactly one pair of classes.  The three-vertex
linear quotient by the composite path sends the 14-class lattice onto a
12-class one, collapsing two pairs.  Fiber and label checks are theorems
for these maps, so they must pass on every comparable pair.
"""

from __future__ import annotations

import pytest

from torslat.bridge import (
    InvalidIdeal,
    fiber_check,
    label_preservation_check,
    quotient_map,
    tors_of_algebra,
)
from torslat.lattice import NotComparable, join_irreducibles, meet_irreducibles
from torslat.quiver import QuiverPresentation, UnsupportedAlgebra

A2L = QuiverPresentation(2, ("left",))
A3R = QuiverPresentation(3, ("right", "right"))


def test_tors_of_algebra_pentagon():
    alg = tors_of_algebra(A2L)
    assert [m.label(2) for m in alg.bricks] == ["[10]", "[11]", "[01]"]
    assert alg.tors.n == 5
    assert [p.tset for p in alg.tors.pairs] == [0b000, 0b001, 0b100, 0b110, 0b111]


@pytest.mark.parametrize(
    "q,size",
    [
        (A2L, 5),
        (A3R, 14),
        (QuiverPresentation(3, ("right", "left")), 14),
        (QuiverPresentation(3, ("left", "right")), 14),
        (QuiverPresentation(4, ("right",) * 3), 42),
    ],
)
def test_tors_sizes(q, size):
    assert tors_of_algebra(q).tors.n == size


def test_quotient_two_vertices():
    qm = quotient_map(A2L, ((0,),))
    assert qm.element_map == (0, 1, 2, 2, 3)
    assert qm.brick_map == (0, None, 1)
    assert [m.label(2) for m in qm.target.bricks] == ["[10]", "[01]"]
    assert qm.target.tors.n == 4
    fibers: dict[int, list[int]] = {}
    for i, t in enumerate(qm.element_map):
        fibers.setdefault(t, []).append(i)
    assert sorted(len(v) for v in fibers.values()) == [1, 1, 1, 2]
    assert fibers[qm.element_map[2]] == [2, 3]
    assert label_preservation_check(qm)


def test_quotient_two_vertices_fibers():
    qm = quotient_map(A2L, ((0,),))
    L = qm.source.tors.lattice
    for u in range(L.n):
        for v in range(L.n):
            if L.leq[u, v]:
                assert fiber_check(qm, u, v)
    with pytest.raises(NotComparable):
        fiber_check(qm, 1, 2)


def test_quotient_three_vertices():
    qm = quotient_map(A3R, ((0, 1),))
    assert qm.source.tors.n == 14
    assert qm.target.tors.n == 12
    assert qm.brick_map == (0, 1, None, 2, 3, 4)
    assert [m.label(3) for m in qm.source.bricks] == [
        "[100]", "[110]", "[111]", "[010]", "[011]", "[001]",
    ]
    fibers: dict[int, list[int]] = {}
    for i, t in enumerate(qm.element_map):
        fibers.setdefault(t, []).append(i)
    assert sorted(len(v) for v in fibers.values()) == [1] * 10 + [2, 2]
    assert label_preservation_check(qm)
    L = qm.source.tors.lattice
    assert all(
        fiber_check(qm, u, v)
        for u in range(L.n)
        for v in range(L.n)
        if L.leq[u, v]
    )


def test_quotient_target_irreducibles():
    qm = quotient_map(A3R, ((0, 1),))
    L = qm.target.tors.lattice
    assert len(join_irreducibles(L)) == 5
    assert len(meet_irreducibles(L)) == 5


def test_identity_quotient():
    qm = quotient_map(A2L, ())
    assert qm.element_map == (0, 1, 2, 3, 4)
    assert qm.brick_map == (0, 1, 2)
    assert label_preservation_check(qm)


def test_iterated_quotient():
    base = QuiverPresentation(3, ("right", "right"), ((0, 1),))
    qm = quotient_map(base, ((1,),))
    assert len(qm.target.bricks) == 4
    assert label_preservation_check(qm)


def test_invalid_ideals():
    with pytest.raises(InvalidIdeal):
        quotient_map(A3R, ((1, 0),))
    with pytest.raises(InvalidIdeal):
        quotient_map(A3R, ((5,),))
    with pytest.raises(InvalidIdeal):
        quotient_map(
            QuiverPresentation(3, ("right", "right"), ((0, 1),)), ((0, 1),)
        )
    with pytest.raises(UnsupportedAlgebra):
        quotient_map(QuiverPresentation(3, ("right", "left")), ((0,),))
