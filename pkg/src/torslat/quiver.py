"""Interval modules over small type-A quiver algebras.

Supported algebras: path algebras of a linearly ordered quiver
``1 - 2 - ... - n`` with arbitrary arrow orientations and no relations
(hereditary), or with all arrows oriented the same way and monomial path
relations.  Anything else raises UnsupportedAlgebra.

Arrow ``k`` (for ``k = 0..n-2``) joins vertices ``k+1`` and ``k+2``;
``orientation[k] == "right"`` points it ``k+1 -> k+2`` and ``"left"``
points it ``k+2 -> k+1``.

Every indecomposable here is an interval module ``[a, b]``: one copy of
the ground field at each vertex of ``a..b`` and identity maps on arrows
inside the support.  An interval is a module of the algebra exactly when
no relation path lies inside its support.  Hom spaces are computed from
the defining linear system (graded-piece equations ``f . M = N . f``)
over exact rationals, never from a formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .galois import BrickRelation, relation_from_arrows
from .lattice import InternalInconsistency


class UnsupportedAlgebra(Exception):
    """The presentation is outside the supported type-A family."""


class UnexpectedHomDim(Exception):
    """A Hom space exceeded the dimension bound this code relies on."""

    def __init__(self, dim: int):
        self.dim = dim
        super().__init__(f"hom space has dimension {dim}; expected 0 or 1")


@dataclass(frozen=True, order=True)
class IntervalModule:
    """The interval module supported on vertices a..b (1-based, a <= b)."""

    a: int
    b: int

    def __post_init__(self):
        if not (1 <= self.a <= self.b):
            raise ValueError(f"bad interval [{self.a}, {self.b}]")

    @property
    def vertices(self) -> range:
        return range(self.a, self.b + 1)

    def label(self, n: int) -> str:
        """Dimension vector as a bracketed 0/1 string, vertex 1 first."""
        return "[" + "".join(
            "1" if self.a <= v <= self.b else "0" for v in range(1, n + 1)
        ) + "]"


@dataclass(frozen=True)
class QuiverPresentation:
    """A type-A quiver with monomial relations given as arrow paths."""

    n: int
    orientation: tuple[str, ...]
    relations: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "orientation", tuple(self.orientation))
        object.__setattr__(
            self, "relations", tuple(tuple(p) for p in self.relations)
        )
        if self.n < 1:
            raise ValueError(f"need at least one vertex, got n={self.n}")
        if len(self.orientation) != self.n - 1:
            raise ValueError(
                f"need {self.n - 1} orientations, got {len(self.orientation)}"
            )
        if any(o not in ("left", "right") for o in self.orientation):
            raise ValueError("orientation entries must be 'left' or 'right'")
        seen = set()
        for path in self.relations:
            if len(path) < 1:
                raise ValueError("relation paths must contain an arrow")
            if any(not (0 <= k < self.n - 1) for k in path):
                raise ValueError(f"relation path {path} has an arrow out of range")
            for k, k2 in zip(path, path[1:]):
                if arrow_ends(self, k)[1] != arrow_ends(self, k2)[0]:
                    raise ValueError(f"relation path {path} is not composable")
            if path in seen:
                raise ValueError(f"duplicate relation path {path}")
            seen.add(path)
        if self.relations and len(set(self.orientation)) > 1:
            raise UnsupportedAlgebra(
                "relations are only supported on linearly oriented quivers"
            )

    @cached_property
    def arrows(self) -> tuple[tuple[int, int], ...]:
        """(tail, head) of every arrow in index order."""
        return tuple(arrow_ends(self, k) for k in range(self.n - 1))


def arrow_ends(Q: QuiverPresentation, k: int) -> tuple[int, int]:
    if Q.orientation[k] == "right":
        return (k + 1, k + 2)
    return (k + 2, k + 1)


def path_vertices(Q: QuiverPresentation, path: Iterable[int]) -> frozenset[int]:
    out = set()
    for k in path:
        out.update((k + 1, k + 2))
    return frozenset(out)


def is_valid_interval(Q: QuiverPresentation, M: IntervalModule) -> bool:
    """Whether the interval avoids every relation path."""
    if M.b > Q.n:
        return False
    supp = set(M.vertices)
    return all(not path_vertices(Q, p) <= supp for p in Q.relations)


def indecomposables(Q: QuiverPresentation) -> tuple[IntervalModule, ...]:
    """All interval modules of the algebra, sorted by (a, b).

    Each one is confirmed to have a one-dimensional endomorphism space.
    """
    out = tuple(
        M
        for a in range(1, Q.n + 1)
        for b in range(a, Q.n + 1)
        if is_valid_interval(Q, M := IntervalModule(a, b))
    )
    for M in out:
        if hom_dim(Q, M, M).dim != 1:
            raise InternalInconsistency(
                f"interval {M} has endomorphism dimension != 1"
            )
    return out


@dataclass(frozen=True)
class HomSpace:
    """A Hom space: its dimension and a rational basis.

    Each basis vector lists the scalar of the vertex map at vertices
    1..n in order (zero wherever either module vanishes).
    """

    dim: int
    basis: tuple[tuple[Fraction, ...], ...]


def hom_dim(Q: QuiverPresentation, M: IntervalModule, N: IntervalModule) -> HomSpace:
    """Solve the morphism equations f_head . M_k = N_k . f_tail exactly."""
    common = sorted(set(M.vertices) & set(N.vertices))
    col = {v: i for i, v in enumerate(common)}
    rows: list[list[Fraction]] = []
    for k in range(Q.n - 1):
        t, h = arrow_ends(Q, k)
        m_act = t in M.vertices and h in M.vertices
        n_act = t in N.vertices and h in N.vertices
        row = [Fraction(0)] * len(common)
        if m_act and h in col:
            row[col[h]] += 1
        if n_act and t in col:
            row[col[t]] -= 1
        if any(row):
            rows.append(row)
    basis_vecs = _nullspace(rows, len(common))
    basis = []
    for vec in basis_vecs:
        full = [Fraction(0)] * Q.n
        for v, x in zip(common, vec):
            full[v - 1] = x
        basis.append(tuple(full))
    return HomSpace(len(basis), tuple(basis))


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the solution space of rows . x = 0, by exact elimination."""
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for c in free:
        vec = [Fraction(0)] * ncols
        vec[c] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][c]
        basis.append(vec)
    return basis


def is_brick(Q: QuiverPresentation, M: IntervalModule) -> bool:
    return hom_dim(Q, M, M).dim == 1


def bricks(Q: QuiverPresentation) -> tuple[IntervalModule, ...]:
    """Indecomposables with one-dimensional endomorphism ring."""
    return tuple(M for M in indecomposables(Q) if is_brick(Q, M))


def hom_relation(Q: QuiverPresentation) -> BrickRelation:
    """The reflexive relation "Hom(x, y) is nonzero" on the bricks of Q."""
    bs = bricks(Q)
    arrows = [
        (i, j)
        for i, M in enumerate(bs)
        for j, N in enumerate(bs)
        if i != j and hom_dim(Q, M, N).dim > 0
    ]
    return relation_from_arrows((M.label(Q.n) for M in bs), arrows)


def submodules(Q: QuiverPresentation, M: IntervalModule) -> tuple[tuple[int, ...], ...]:
    """Vertex sets of submodules: subsets closed under arrows inside the support."""
    supp = list(M.vertices)
    inside = [
        (t, h) for t, h in Q.arrows if t in M.vertices and h in M.vertices
    ]
    out = []
    for bits in range(1 << len(supp)):
        sub = {v for i, v in enumerate(supp) if bits >> i & 1}
        if all(h in sub for t, h in inside if t in sub):
            out.append(tuple(sorted(sub)))
    return tuple(sorted(out, key=lambda s: (len(s), s)))


def quotients(Q: QuiverPresentation, M: IntervalModule) -> tuple[tuple[int, ...], ...]:
    """Vertex sets of quotients, complementing submodules(Q, M) entrywise."""
    supp = set(M.vertices)
    return tuple(
        tuple(sorted(supp - set(s))) for s in submodules(Q, M)
    )


def summands(vertices: Iterable[int]) -> tuple[IntervalModule, ...]:
    """Decompose a vertex set into maximal runs of consecutive vertices."""
    vs = sorted(set(vertices))
    out = []
    i = 0
    while i < len(vs):
        j = i
        while j + 1 < len(vs) and vs[j + 1] == vs[j] + 1:
            j += 1
        out.append(IntervalModule(vs[i], vs[j]))
        i = j + 1
    return tuple(out)


def exists_surjection(
    Q: QuiverPresentation, M: IntervalModule, N: IntervalModule
) -> bool:
    """Whether some morphism M -> N is surjective at every vertex of N.

    Relies on Hom spaces here being at most one-dimensional: a nonzero
    multiple of the basis vector vanishes exactly where it does.
    """
    hom = hom_dim(Q, M, N)
    if hom.dim == 0:
        return False
    if hom.dim > 1:
        raise UnexpectedHomDim(hom.dim)
    vec = hom.basis[0]
    return all(vec[v - 1] != 0 for v in N.vertices)


def torsion_subobject(
    Q: QuiverPresentation, T: Iterable[IntervalModule], X: IntervalModule
) -> tuple[int, ...]:
    """Vertex set of the largest submodule of X with all summands in T."""
    tset = set(T)
    best: set[int] = set()
    for sub in submodules(Q, X):
        if all(s in tset for s in summands(sub)):
            best.update(sub)
    if not all(s in tset for s in summands(best)):
        raise ValueError("summand set is not closed under submodule sums")
    return tuple(sorted(best))


def annihilated_by(
    Q: QuiverPresentation, M: IntervalModule, paths: Iterable[tuple[int, ...]]
) -> bool:
    """Whether every given arrow path acts as zero on M.

    A monomial path acts nonzero on an interval module exactly when all
    its arrows lie inside the support.
    """
    supp = set(M.vertices)
    return all(not path_vertices(Q, tuple(p)) <= supp for p in paths)
