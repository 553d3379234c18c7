"""Finite posets and lattices.

Elements are integers ``0..n-1``.  A poset is stored as a dense boolean
matrix ``leq`` with ``leq[x, y]`` meaning ``x <= y``; a lattice adds the
join and meet tables.  Everything here is sized for exhaustive small-case
work (tens to low hundreds of elements), so the algorithms favour clarity
and determinism over asymptotics.

The labelling machinery (``gamma_label``, ``mu_label``, ``kappa``,
``kappa_dual``) follows the standard theory of semidistributive lattices:
on a join-semidistributive lattice every cover ``x <| y`` determines a
unique join-irreducible ``j`` with ``x v j = y`` and ``x v j_* = x``, and
dually.  ``kappa`` sends a join-irreducible ``j`` to ``mu`` of the cover
``j_* <| j`` and is a bijection onto the meet-irreducibles whenever the
lattice is semidistributive.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np


class AntisymmetryViolation(Exception):
    """Raised when a relation contains x <= y <= x for distinct x, y."""

    def __init__(self, x: int, y: int):
        self.pair = (x, y)
        super().__init__(f"antisymmetry violated: {x} <= {y} and {y} <= {x}")


class NotALattice(Exception):
    """Raised when a poset lacks a join or meet for some pair."""

    def __init__(self, x: int, y: int, kind: str):
        self.pair = (x, y)
        self.kind = kind
        super().__init__(f"no {kind} for elements {x} and {y}")


class NotIrreducible(Exception):
    """Raised when an element is not (join/meet) irreducible as required."""


class NotSemidistributive(Exception):
    """Raised when an operation requires semidistributivity that fails."""

    def __init__(self, message: str, witness: tuple[int, int, int] | None = None):
        self.witness = witness
        super().__init__(message)


class NotComparable(Exception):
    """Raised when an interval endpoint pair is not comparable."""


class InternalInconsistency(Exception):
    """Two characterizations that must agree did not; an implementation bug."""


class CoverEdge(NamedTuple):
    lower: int
    upper: int


@dataclass(frozen=True)
class FinitePoset:
    """A finite poset given by its full order relation."""

    n: int
    leq: np.ndarray

    def __post_init__(self):
        leq = np.ascontiguousarray(np.asarray(self.leq, dtype=bool))
        if leq.shape != (self.n, self.n):
            raise ValueError(f"leq must be {self.n}x{self.n}, got {leq.shape}")
        if not leq.diagonal().all():
            raise ValueError("order relation must be reflexive")
        clash = leq & leq.T & ~np.eye(self.n, dtype=bool)
        if clash.any():
            x, y = map(int, np.argwhere(clash)[0])
            raise AntisymmetryViolation(x, y)
        if ((leq @ leq) & ~leq).any():
            raise ValueError("order relation must be transitive")
        leq.setflags(write=False)
        object.__setattr__(self, "leq", leq)

    @cached_property
    def covers(self) -> tuple[CoverEdge, ...]:
        """Cover pairs (x, y) with x < y and nothing strictly between."""
        strict = self.leq & ~np.eye(self.n, dtype=bool)
        cov = strict & ~(strict @ strict)
        return tuple(CoverEdge(int(x), int(y)) for x, y in np.argwhere(cov))


def poset_from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> FinitePoset:
    """Build a poset from generating pairs x <= y, taking the closure."""
    leq = np.eye(n, dtype=bool)
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise ValueError(f"pair ({x}, {y}) out of range for n={n}")
        leq[x, y] = True
    while True:
        closed = leq | (leq @ leq)
        if (closed == leq).all():
            break
        leq = closed
    return FinitePoset(n, leq)


@dataclass(frozen=True)
class FiniteLattice:
    """A finite lattice: a poset together with its join and meet tables."""

    poset: FinitePoset
    join: np.ndarray
    meet: np.ndarray
    bottom: int
    top: int

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def leq(self) -> np.ndarray:
        return self.poset.leq

    def join_of(self, xs: Iterable[int]) -> int:
        out = self.bottom
        for x in xs:
            out = int(self.join[out, x])
        return out

    def meet_of(self, xs: Iterable[int]) -> int:
        out = self.top
        for x in xs:
            out = int(self.meet[out, x])
        return out

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        lc: list[list[int]] = [[] for _ in range(self.n)]
        for x, y in self.poset.covers:
            lc[y].append(x)
        return tuple(tuple(v) for v in lc)

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        uc: list[list[int]] = [[] for _ in range(self.n)]
        for x, y in self.poset.covers:
            uc[x].append(y)
        return tuple(tuple(v) for v in uc)


def try_lattice(p: FinitePoset) -> FiniteLattice:
    """Check that every pair has a join and a meet; return the tables.

    Raises NotALattice naming the first offending pair otherwise.
    """
    n, leq = p.n, p.leq
    if n == 0:
        raise NotALattice(0, 0, "join")
    join = np.zeros((n, n), dtype=np.intp)
    meet = np.zeros((n, n), dtype=np.intp)
    for x in range(n):
        for y in range(x, n):
            ub = leq[x] & leq[y]
            j = _least_of(leq, ub)
            if j is None:
                raise NotALattice(x, y, "join")
            lb = leq[:, x] & leq[:, y]
            m = _greatest_of(leq, lb)
            if m is None:
                raise NotALattice(x, y, "meet")
            join[x, y] = join[y, x] = j
            meet[x, y] = meet[y, x] = m
    bottom = int(np.argwhere(leq.all(axis=1))[0][0])
    top = int(np.argwhere(leq.all(axis=0))[0][0])
    return FiniteLattice(p, join, meet, bottom, top)


def _least_of(leq: np.ndarray, members: np.ndarray) -> int | None:
    """Least element of the member set, or None (vacuous set gives None)."""
    for z in np.flatnonzero(members):
        if not (members & ~leq[z]).any():
            return int(z)
    return None


def _greatest_of(leq: np.ndarray, members: np.ndarray) -> int | None:
    for z in np.flatnonzero(members):
        if not (members & ~leq[:, z]).any():
            return int(z)
    return None


def covers(L: FiniteLattice) -> tuple[CoverEdge, ...]:
    return L.poset.covers


def join_irreducibles(L: FiniteLattice) -> tuple[int, ...]:
    """Elements with exactly one lower cover.

    Cross-checked against the definition (not a join of strictly smaller
    elements); a mismatch would mean a bug in the cover or join tables.
    """
    by_cover = tuple(
        x for x in range(L.n) if x != L.bottom and len(L.lower_covers[x]) == 1
    )
    by_def = []
    for x in range(L.n):
        if x == L.bottom:
            continue
        below = [y for y in range(L.n) if L.leq[y, x] and y != x]
        if L.join_of(below) != x:
            by_def.append(x)
    if by_cover != tuple(by_def):
        raise InternalInconsistency(
            f"join-irreducible characterizations disagree: {by_cover} vs {tuple(by_def)}"
        )
    return by_cover


def meet_irreducibles(L: FiniteLattice) -> tuple[int, ...]:
    by_cover = tuple(
        x for x in range(L.n) if x != L.top and len(L.upper_covers[x]) == 1
    )
    by_def = []
    for x in range(L.n):
        if x == L.top:
            continue
        above = [y for y in range(L.n) if L.leq[x, y] and y != x]
        if L.meet_of(above) != x:
            by_def.append(x)
    if by_cover != tuple(by_def):
        raise InternalInconsistency(
            f"meet-irreducible characterizations disagree: {by_cover} vs {tuple(by_def)}"
        )
    return by_cover


def j_star(L: FiniteLattice, j: int) -> int:
    """The unique lower cover of a join-irreducible."""
    if j not in join_irreducibles(L):
        raise NotIrreducible(f"element {j} is not join-irreducible")
    return L.lower_covers[j][0]


def m_star(L: FiniteLattice, m: int) -> int:
    """The unique upper cover of a meet-irreducible."""
    if m not in meet_irreducibles(L):
        raise NotIrreducible(f"element {m} is not meet-irreducible")
    return L.upper_covers[m][0]


def join_semidistributivity_violation(
    L: FiniteLattice,
) -> tuple[int, int, int] | None:
    """First triple (x, y, z) with x v y = x v z but x v (y ^ z) != x v y.

    Also verifies the minimum-element characterization: for every x and t
    the set {y : x v y = t} has a minimum whenever it is nonempty.  The two
    views must agree; a disagreement is an implementation bug.
    """
    join, meet = L.join, L.meet
    witness = None
    for x in range(L.n):
        for y in range(L.n):
            for z in range(L.n):
                if join[x, y] == join[x, z] and join[x, meet[y, z]] != join[x, y]:
                    witness = (x, y, z)
                    break
            if witness:
                break
        if witness:
            break
    has_minima = True
    for x in range(L.n):
        row = np.asarray(join[x])
        for t in set(row.tolist()):
            fiber = [y for y in range(L.n) if join[x, y] == t]
            m = L.meet_of(fiber)
            if int(join[x, m]) != t:
                has_minima = False
                break
        if not has_minima:
            break
    if (witness is None) != has_minima:
        raise InternalInconsistency(
            "join-semidistributivity characterizations disagree: "
            f"triple witness {witness}, fibers-have-minima {has_minima}"
        )
    return witness


def meet_semidistributivity_violation(
    L: FiniteLattice,
) -> tuple[int, int, int] | None:
    join, meet = L.join, L.meet
    witness = None
    for x in range(L.n):
        for y in range(L.n):
            for z in range(L.n):
                if meet[x, y] == meet[x, z] and meet[x, join[y, z]] != meet[x, y]:
                    witness = (x, y, z)
                    break
            if witness:
                break
        if witness:
            break
    has_maxima = True
    for x in range(L.n):
        row = np.asarray(meet[x])
        for t in set(row.tolist()):
            fiber = [y for y in range(L.n) if meet[x, y] == t]
            j = L.join_of(fiber)
            if int(meet[x, j]) != t:
                has_maxima = False
                break
        if not has_maxima:
            break
    if (witness is None) != has_maxima:
        raise InternalInconsistency(
            "meet-semidistributivity characterizations disagree: "
            f"triple witness {witness}, fibers-have-maxima {has_maxima}"
        )
    return witness


def is_join_semidistributive(L: FiniteLattice) -> bool:
    return _jsd_cache(L) is None


def is_meet_semidistributive(L: FiniteLattice) -> bool:
    return _msd_cache(L) is None


def is_semidistributive(L: FiniteLattice) -> bool:
    return is_join_semidistributive(L) and is_meet_semidistributive(L)


def _jsd_cache(L: FiniteLattice) -> tuple[int, int, int] | None:
    cache = L.__dict__
    if "_jsd_witness" not in cache:
        cache["_jsd_witness"] = join_semidistributivity_violation(L)
    return cache["_jsd_witness"]


def _msd_cache(L: FiniteLattice) -> tuple[int, int, int] | None:
    cache = L.__dict__
    if "_msd_witness" not in cache:
        cache["_msd_witness"] = meet_semidistributivity_violation(L)
    return cache["_msd_witness"]


def gamma_label(L: FiniteLattice, c: CoverEdge) -> int:
    """The unique join-irreducible j with lower v j = upper, lower v j_* = lower.

    Requires join-semidistributivity; the cover then determines j uniquely.
    """
    x, y = c
    if not (L.leq[x, y] and c in L.poset.covers):
        raise ValueError(f"({x}, {y}) is not a cover")
    w = _jsd_cache(L)
    if w is not None:
        raise NotSemidistributive(
            f"lattice is not join-semidistributive, witness {w}", w
        )
    hits = [
        j
        for j in join_irreducibles(L)
        if L.join[x, j] == y and L.join[x, j_star(L, j)] == x
    ]
    if len(hits) != 1:
        raise InternalInconsistency(
            f"cover ({x}, {y}) has {len(hits)} gamma labels; expected exactly 1"
        )
    return hits[0]


def mu_label(L: FiniteLattice, c: CoverEdge) -> int:
    """The unique meet-irreducible m with upper ^ m = lower, upper ^ m^* = upper."""
    x, y = c
    if not (L.leq[x, y] and c in L.poset.covers):
        raise ValueError(f"({x}, {y}) is not a cover")
    w = _msd_cache(L)
    if w is not None:
        raise NotSemidistributive(
            f"lattice is not meet-semidistributive, witness {w}", w
        )
    hits = [
        m
        for m in meet_irreducibles(L)
        if L.meet[y, m] == x and L.meet[y, m_star(L, m)] == y
    ]
    if len(hits) != 1:
        raise InternalInconsistency(
            f"cover ({x}, {y}) has {len(hits)} mu labels; expected exactly 1"
        )
    return hits[0]


def kappa(L: FiniteLattice, j: int) -> int:
    """kappa(j) = mu of the cover j_* <| j; bijection ji -> mi when SD."""
    if not is_semidistributive(L):
        raise NotSemidistributive("kappa requires a semidistributive lattice")
    return mu_label(L, CoverEdge(j_star(L, j), j))


def kappa_dual(L: FiniteLattice, m: int) -> int:
    """kappa_dual(m) = gamma of the cover m <| m^*; inverse of kappa."""
    if not is_semidistributive(L):
        raise NotSemidistributive("kappa_dual requires a semidistributive lattice")
    return gamma_label(L, CoverEdge(m, m_star(L, m)))


def check_kappa_bijection(L: FiniteLattice) -> bool:
    """kappa is a bijection ji -> mi with kappa_dual as inverse."""
    jis = join_irreducibles(L)
    mis = meet_irreducibles(L)
    image = [kappa(L, j) for j in jis]
    if sorted(image) != sorted(mis):
        return False
    return all(kappa_dual(L, kappa(L, j)) == j for j in jis)


def check_mu_eq_kappa_gamma(L: FiniteLattice) -> bool:
    """mu = kappa o gamma on every cover of a semidistributive lattice."""
    return all(
        mu_label(L, c) == kappa(L, gamma_label(L, c)) for c in L.poset.covers
    )


def interval_sublattice(
    L: FiniteLattice, u: int, v: int
) -> tuple[FiniteLattice, tuple[int, ...]]:
    """The interval [u, v] as a lattice plus its elements in L's indexing."""
    if not L.leq[u, v]:
        raise NotComparable(f"{u} is not below {v}")
    members = tuple(
        int(x) for x in np.flatnonzero(L.leq[u] & L.leq[:, v])
    )
    sub = FinitePoset(len(members), L.leq[np.ix_(members, members)])
    return try_lattice(sub), members


def are_isomorphic(L1: FiniteLattice, L2: FiniteLattice) -> bool:
    """Order isomorphism test by invariant-pruned backtracking."""
    if L1.n != L2.n:
        return False
    inv1 = _element_invariants(L1)
    inv2 = _element_invariants(L2)
    if sorted(inv1) != sorted(inv2):
        return False
    order = sorted(range(L1.n), key=lambda x: (inv1[x], x))
    buckets = {inv: [y for y in range(L2.n) if inv2[y] == inv] for inv in set(inv1)}
    mapping: dict[int, int] = {}
    used = [False] * L2.n

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        for y in buckets[inv1[x]]:
            if used[y]:
                continue
            ok = all(
                L1.leq[u, x] == L2.leq[v, y] and L1.leq[x, u] == L2.leq[y, v]
                for u, v in mapping.items()
            )
            if ok:
                mapping[x] = y
                used[y] = True
                if extend(k + 1):
                    return True
                del mapping[x]
                used[y] = False
        return False

    return extend(0)


def _element_invariants(L: FiniteLattice) -> list[tuple[int, int, int, int]]:
    down = L.leq.sum(axis=0)
    up = L.leq.sum(axis=1)
    return [
        (
            int(down[x]),
            int(up[x]),
            len(L.lower_covers[x]),
            len(L.upper_covers[x]),
        )
        for x in range(L.n)
    ]


def is_lattice_quotient(
    f: Iterable[int], L1: FiniteLattice, L2: FiniteLattice
) -> bool:
    """Whether f: L1 -> L2 is surjective and preserves joins and meets.

    For finite lattices, preserving binary joins and meets gives
    preservation of all joins and meets.
    """
    fmap = list(f)
    if len(fmap) != L1.n:
        raise ValueError(f"map has {len(fmap)} entries for a {L1.n}-element lattice")
    if any(not (0 <= y < L2.n) for y in fmap):
        raise ValueError("map image out of range")
    if set(fmap) != set(range(L2.n)):
        return False
    for x in range(L1.n):
        for y in range(x, L1.n):
            if fmap[L1.join[x, y]] != L2.join[fmap[x], fmap[y]]:
                return False
            if fmap[L1.meet[x, y]] != L2.meet[fmap[x], fmap[y]]:
                return False
    return True


def to_dot(
    L: FiniteLattice,
    node_labels: Iterable[str] | None = None,
    edge_labels: dict[CoverEdge, str] | None = None,
) -> str:
    """Deterministic DOT rendering of the Hasse diagram, edges upward."""
    names = (
        [str(x) for x in range(L.n)]
        if node_labels is None
        else [str(s) for s in node_labels]
    )
    if len(names) != L.n:
        raise ValueError(f"expected {L.n} node labels, got {len(names)}")
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for x in range(L.n):
        lines.append(f'  n{x} [label="{_dot_escape(names[x])}"];')
    for c in sorted(L.poset.covers):
        attr = ""
        if edge_labels is not None and c in edge_labels:
            attr = f' [label="{_dot_escape(edge_labels[c])}"]'
        lines.append(f"  n{c.lower} -> n{c.upper}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')
