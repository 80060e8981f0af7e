"""Finite Priestley/Birkhoff duality.

Lattice side: finite bounded distributive lattices with explicit meet
and join tables, validated triple by triple.  Space side: the dual
poset of prime filters, realized through join-irreducible elements
(every prime filter of a finite distributive lattice is the principal
upset of a unique join-irreducible).  The Stone map sends an element to
the set of prime filters containing it; with the dual ordered by filter
inclusion the image is always an upset, no orientation flip needed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    NotALattice,
    NotAnUpset,
    NotDistributive,
    SpaceMismatch,
    Unbounded,
    UnknownElement,
    UnknownLabel,
)
from .poset import FinitePoset, build_poset, enumerate_upsets, order_closure


class DistLattice:
    """Finite bounded distributive lattice with validated operation tables."""

    __slots__ = ("labels", "leq", "meet", "join", "bottom", "top",
                 "space", "member_sets", "_index", "_dual")

    def __init__(self, labels, leq, meet, join, bottom, top):
        self.labels = tuple(labels)
        self.leq = leq
        self.meet = meet
        self.join = join
        self.bottom = int(bottom)
        self.top = int(top)
        self.space = None        # set by clopen_upset_lattice
        self.member_sets = None  # parallel tuple of frozensets, same source
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._dual = None

    @property
    def n(self):
        return len(self.labels)

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElement(f"unknown lattice element {label!r}") from None

    def le(self, a, b):
        return bool(self.leq[a, b])

    def __repr__(self):
        return f"DistLattice({self.n} elements, bottom={self.labels[self.bottom]!r}, top={self.labels[self.top]!r})"


@dataclass(frozen=True)
class ClopenUpset:
    """An upward-closed point set of a finite Priestley space."""

    space: FinitePoset
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        self.space._check_points(self.members)
        if not self.space.is_upset(self.members):
            raise NotAnUpset(f"{sorted(self.members)} is not an upset")

    def labels(self):
        return sorted(self.space.labels[i] for i in self.members)


def validate_lattice(P, bottom=None, top=None):
    """Check that a finite poset is a bounded distributive lattice.

    Fills the meet/join tables; on failure the error names a witness
    pair (missing meet or join) or triple (distributivity).
    """
    n = P.n
    if n == 0:
        raise Unbounded("empty order has no bounds")
    leq = P.leq
    meet = np.zeros((n, n), dtype=np.int64)
    join = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            lower = leq[:, a] & leq[:, b]
            cand = [c for c in np.flatnonzero(lower) if leq[lower, c].all()]
            if len(cand) != 1:
                raise NotALattice("meet", (P.labels[a], P.labels[b]))
            meet[a, b] = cand[0]
            upper = leq[a, :] & leq[b, :]
            cand = [c for c in np.flatnonzero(upper) if leq[c, upper].all()]
            if len(cand) != 1:
                raise NotALattice("join", (P.labels[a], P.labels[b]))
            join[a, b] = cand[0]
    bot_candidates = np.flatnonzero(leq[:, :].all(axis=1))
    top_candidates = np.flatnonzero(leq[:, :].all(axis=0))
    if len(bot_candidates) != 1 or len(top_candidates) != 1:
        raise Unbounded("order lacks a unique bottom or top")
    bot, top_ = int(bot_candidates[0]), int(top_candidates[0])
    if bottom is not None and P.index(bottom) != bot:
        raise Unbounded(f"declared bottom {bottom!r} is not the least element")
    if top is not None and P.index(top) != top_:
        raise Unbounded(f"declared top {top!r} is not the greatest element")
    # a /\ (b \/ c) == (a /\ b) \/ (a /\ c), all triples at once
    idx = np.arange(n)
    lhs = meet[idx[:, None, None], join[None, :, :]]
    rhs = join[meet[:, :, None], meet[:, None, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        a, b, c = bad[0]
        raise NotDistributive((P.labels[a], P.labels[b], P.labels[c]))
    meet.flags.writeable = False
    join.flags.writeable = False
    return DistLattice(P.labels, leq, meet, join, bot, top_)


def _join_irreducibles(D):
    """Elements with exactly one lower cover (excludes the bottom)."""
    n = D.n
    lt = D.leq & ~np.eye(n, dtype=bool)
    covers_below = lt & ~np.matmul(lt, lt)
    return [j for j in range(n) if covers_below[:, j].sum() == 1]


def priestley_dual(D):
    """The dual poset of prime filters, ordered by inclusion.

    Prime filters of a finite distributive lattice are exactly the
    principal upsets of join-irreducibles; filter inclusion reverses the
    lattice order on the irreducibles.
    """
    if D._dual is not None:
        return D._dual[0]
    ji = _join_irreducibles(D)
    m = len(ji)
    mat = np.zeros((m, m), dtype=bool)
    for i, p in enumerate(ji):
        for j, q in enumerate(ji):
            # up(p) included in up(q)  iff  q <= p
            mat[i, j] = D.leq[q, p]
    space = FinitePoset([D.labels[p] for p in ji], mat)
    D._dual = (space, ji)
    return space


def stone_map(D, a):
    """phi(a): the prime filters containing a, as an upset of the dual."""
    if isinstance(a, str):
        a = D.index(a)
    if not 0 <= a < D.n:
        raise UnknownElement(f"element index {a} out of range")
    space = priestley_dual(D)
    ji = D._dual[1]
    members = frozenset(i for i, p in enumerate(ji) if D.leq[p, a])
    return ClopenUpset(space, members)


def clopen_upset_lattice(X):
    """The finite frame of all upsets of X under intersection and union."""
    upsets = enumerate_upsets(X)
    index = {u: i for i, u in enumerate(upsets)}
    n = len(upsets)
    leq = np.zeros((n, n), dtype=bool)
    meet = np.zeros((n, n), dtype=np.int64)
    join = np.zeros((n, n), dtype=np.int64)
    for i, u in enumerate(upsets):
        for j, v in enumerate(upsets):
            leq[i, j] = u <= v
            meet[i, j] = index[u & v]
            join[i, j] = index[u | v]
    leq.flags.writeable = False
    meet.flags.writeable = False
    join.flags.writeable = False
    labels = [_upset_label(X, u) for u in upsets]
    D = DistLattice(labels, leq, meet, join, index[frozenset()],
                    index[frozenset(range(X.n))])
    D.space = X
    D.member_sets = tuple(upsets)
    return D


def _upset_label(X, members):
    if not members:
        return "{}"
    return "{" + ",".join(sorted(X.labels[i] for i in members)) + "}"


# -- Heyting structure on upsets ---------------------------------------


def pseudocomplement_set(X, members):
    """U* = X minus the downset of U (as index sets)."""
    full = frozenset(range(X.n))
    return full - order_closure(X, members, "down")


def implies_set(X, u, v):
    """U -> V = X minus the downset of (U minus V)."""
    full = frozenset(range(X.n))
    return full - order_closure(X, u - v, "down")


def heyting(X, U, V=None, op="implies"):
    """Heyting operations on clopen upsets of a finite space.

    ``op='pseudocomplement'`` ignores V and returns U*; ``op='implies'``
    returns U -> V.
    """
    if U.space is not X:
        raise SpaceMismatch("U lives on a different space")
    if op == "pseudocomplement":
        return ClopenUpset(X, pseudocomplement_set(X, U.members))
    if op == "implies":
        if V is None or V.space is not X:
            raise SpaceMismatch("V missing or on a different space")
        return ClopenUpset(X, implies_set(X, U.members, V.members))
    raise ValueError(f"unknown Heyting op {op!r}")


# -- JSON interchange ---------------------------------------------------


def lattice_from_json(obj):
    """Read a lattice presented like a poset, with optional bottom/top."""
    if not isinstance(obj, dict) or "points" not in obj:
        raise UnknownLabel("lattice JSON must have a 'points' field")
    P = build_poset(obj["points"], [tuple(c) for c in obj.get("covers", [])])
    return validate_lattice(P, bottom=obj.get("bottom"), top=obj.get("top"))
