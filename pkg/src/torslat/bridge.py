"""From an algebra to its lattice of torsion classes, and down quotients.

``tors_of_algebra`` composes the quiver layer (bricks and exact Hom) with
the Galois layer (torsion pairs of the hom-nonzero relation).  Killing
extra monomial paths gives a quotient algebra; restricting each torsion
class to the surviving bricks induces a surjective lattice map onto the
quotient's torsion lattice.  ``fiber_check`` and
``label_preservation_check`` test the structure theory of that map:
collapsing is detected by the killed bricks between two classes, and
surviving covers keep their brick labels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .galois import (
    BrickRelation,
    TorsLattice,
    all_torsion_pairs,
    cover_brick_label,
)
from .lattice import CoverEdge, InternalInconsistency, NotComparable, is_lattice_quotient
from .quiver import (
    IntervalModule,
    QuiverPresentation,
    annihilated_by,
    bricks,
    hom_relation,
)


class InvalidIdeal(Exception):
    """The extra relation paths do not define a usable quotient ideal."""


@dataclass(frozen=True)
class AlgebraTors:
    """An algebra's bricks, hom relation, and torsion lattice, together."""

    quiver: QuiverPresentation
    bricks: tuple[IntervalModule, ...]
    relation: BrickRelation
    tors: TorsLattice


def tors_of_algebra(Q: QuiverPresentation) -> AlgebraTors:
    bs = bricks(Q)
    R = hom_relation(Q)
    return AlgebraTors(Q, bs, R, all_torsion_pairs(R))


@dataclass(frozen=True)
class QuotientMap:
    """The induced map from tors of an algebra onto tors of its quotient.

    ``element_map[i]`` is the target index of source torsion class i;
    ``brick_map[b]`` is the target brick index of source brick b, or None
    when the extra relations kill it.
    """

    source: AlgebraTors
    target: AlgebraTors
    extra_paths: tuple[tuple[int, ...], ...]
    element_map: tuple[int, ...]
    brick_map: tuple[int | None, ...]


def quotient_map(
    Q: QuiverPresentation, extra_paths: tuple[tuple[int, ...], ...]
) -> QuotientMap:
    """Quotient by the monomial ideal the paths generate; map tors onto tors.

    The element map restricts a torsion class to the bricks that survive;
    the result is checked to be a surjective lattice homomorphism.
    """
    extra = tuple(tuple(p) for p in extra_paths)
    try:
        target_q = QuiverPresentation(Q.n, Q.orientation, Q.relations + extra)
    except ValueError as exc:
        raise InvalidIdeal(str(exc)) from exc
    source = tors_of_algebra(Q)
    target = tors_of_algebra(target_q)
    target_index = {M: i for i, M in enumerate(target.bricks)}
    brick_map: list[int | None] = []
    for M in source.bricks:
        if annihilated_by(Q, M, extra):
            brick_map.append(target_index[M])
        else:
            brick_map.append(None)
    element_map = []
    for pair in source.tors.pairs:
        mask = 0
        for b, tb in enumerate(brick_map):
            if tb is not None and pair.tset >> b & 1:
                mask |= 1 << tb
        idx = target.tors.index_of_tset.get(mask)
        if idx is None:
            raise InternalInconsistency(
                f"restricted class {mask:b} is not a torsion class of the quotient"
            )
        element_map.append(idx)
    if not is_lattice_quotient(element_map, source.tors.lattice, target.tors.lattice):
        raise InternalInconsistency(
            "restriction map is not a surjective lattice homomorphism"
        )
    return QuotientMap(source, target, extra, tuple(element_map), tuple(brick_map))


def fiber_check(qm: QuotientMap, u: int, v: int) -> bool:
    """For source classes u <= v, the three collapse criteria must agree.

    (i) u and v map to the same quotient class;
    (ii) every brick in fset(u) & tset(v) is killed;
    (iii) every cover between u and v has a killed label brick.
    Returns True when all three have the same truth value.
    """
    TL = qm.source.tors
    L = TL.lattice
    if not L.leq[u, v]:
        raise NotComparable(f"{u} is not below {v}")
    same_image = qm.element_map[u] == qm.element_map[v]
    between = TL.fset(u) & TL.tset(v)
    killed_gap = all(
        qm.brick_map[b] is None for b in range(TL.relation.m) if between >> b & 1
    )
    killed_covers = all(
        qm.brick_map[cover_brick_label(TL, c)] is None
        for c in L.poset.covers
        if L.leq[u, c.lower] and L.leq[c.upper, v]
    )
    return same_image == killed_gap == killed_covers


def label_preservation_check(qm: QuotientMap) -> bool:
    """Covers that survive stay covers and keep their brick labels."""
    src = qm.source.tors
    dst = qm.target.tors
    for c in src.lattice.poset.covers:
        x, y = qm.element_map[c.lower], qm.element_map[c.upper]
        if x == y:
            continue
        if CoverEdge(x, y) not in dst.lattice.poset.covers:
            return False
        src_brick = qm.brick_map[cover_brick_label(src, c)]
        if src_brick != cover_brick_label(dst, CoverEdge(x, y)):
            return False
    return True
