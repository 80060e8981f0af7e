"""Finite posets: the substrate for every finite Priestley-space computation.

Points carry opaque string labels but are addressed by dense integer
indices everywhere else.  The order is a read-only boolean matrix,
validated for reflexivity, transitivity and antisymmetry at
construction.  Subsets are exact ``frozenset``s of indices; equality is
always exact, never tolerance-based.  Iteration orders are
deterministic so downstream reports are byte-identical across runs.
"""

from __future__ import annotations

import itertools
import json

import numpy as np

from .errors import (
    CycleDetected,
    DuplicateLabel,
    UnknownLabel,
    UnknownPoint,
)


class FinitePoset:
    """Immutable finite partial order.

    ``leq[i, j]`` is True iff point i lies below point j.  In the finite
    Priestley picture the topology is discrete, so the order carries all
    the structure.
    """

    __slots__ = ("labels", "leq", "_index", "_down", "_up", "_upsets", "_covers")

    def __init__(self, labels, leq):
        labels = tuple(labels)
        leq = np.asarray(leq, dtype=bool)
        n = len(labels)
        if len(set(labels)) != n:
            raise DuplicateLabel(f"labels are not unique: {labels}")
        if leq.shape != (n, n):
            raise ValueError(f"leq must be {n}x{n}, got {leq.shape}")
        if n and not leq[np.diag_indices(n)].all():
            raise ValueError("order is not reflexive")
        if np.any(leq & leq.T & ~np.eye(n, dtype=bool)):
            i, j = np.argwhere(leq & leq.T & ~np.eye(n, dtype=bool))[0]
            raise CycleDetected(f"{labels[i]} and {labels[j]} lie below each other")
        if np.any(np.matmul(leq, leq) & ~leq):
            raise ValueError("order is not transitive")
        leq.flags.writeable = False
        self.labels = labels
        self.leq = leq
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._down = None
        self._up = None
        self._upsets = None
        self._covers = None

    # -- basic accessors --------------------------------------------

    @property
    def n(self):
        return len(self.labels)

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"unknown point label {label!r}") from None

    def le(self, i, j):
        return bool(self.leq[i, j])

    def down_set(self, i):
        """All points below i, as a frozenset (principal downset)."""
        if self._down is None:
            self._down = tuple(
                frozenset(np.flatnonzero(self.leq[:, j]).tolist())
                for j in range(self.n)
            )
        return self._down[i]

    def up_set(self, i):
        if self._up is None:
            self._up = tuple(
                frozenset(np.flatnonzero(self.leq[j, :]).tolist())
                for j in range(self.n)
            )
        return self._up[i]

    def covers(self):
        """Cover pairs (i, j) with j covering i, for Hasse diagrams."""
        if self._covers is None:
            lt = self.leq & ~np.eye(self.n, dtype=bool)
            strict2 = np.matmul(lt, lt)
            cov = lt & ~strict2
            self._covers = tuple(
                (int(i), int(j)) for i, j in np.argwhere(cov)
            )
        return self._covers

    def is_upset(self, members):
        return all(self.up_set(i) <= members for i in members)

    def _check_points(self, members):
        for i in members:
            if not (isinstance(i, (int, np.integer)) and 0 <= i < self.n):
                raise UnknownPoint(f"point index {i!r} out of range")

    # -- equality / hashing -----------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FinitePoset)
            and self.labels == other.labels
            and np.array_equal(self.leq, other.leq)
        )

    def __hash__(self):
        return hash((self.labels, self.leq.tobytes()))

    def __repr__(self):
        return f"FinitePoset({list(self.labels)}, covers={[(self.labels[i], self.labels[j]) for i, j in self.covers()]})"


# -- construction -----------------------------------------------------


def build_poset(labels, covers):
    """Build a poset from labels and generating pairs.

    The order is the reflexive-transitive closure of ``covers``; cycles
    are rejected (antisymmetry would fail).
    """
    labels = list(labels)
    if len(set(labels)) != len(labels):
        seen = set()
        for lab in labels:
            if lab in seen:
                raise DuplicateLabel(f"duplicate label {lab!r}")
            seen.add(lab)
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    rel = np.eye(n, dtype=bool)
    for a, b in covers:
        if a not in index:
            raise UnknownLabel(f"unknown point label {a!r}")
        if b not in index:
            raise UnknownLabel(f"unknown point label {b!r}")
        rel[index[a], index[b]] = True
    # Warshall closure
    for k in range(n):
        rel |= np.outer(rel[:, k], rel[k, :])
    return FinitePoset(labels, rel)


def order_closure(P, members, direction):
    """Upward or downward closure of a point set."""
    members = frozenset(members)
    P._check_points(members)
    if direction == "up":
        out = set(members)
        for i in members:
            out |= P.up_set(i)
    elif direction == "down":
        out = set(members)
        for i in members:
            out |= P.down_set(i)
    else:
        raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
    return frozenset(out)


def extrema(P, members, which):
    """Minimal or maximal elements of a subset in the induced order."""
    members = frozenset(members)
    P._check_points(members)
    if which == "min":
        return frozenset(
            i for i in members
            if not any(P.leq[j, i] and j != i for j in members)
        )
    if which == "max":
        return frozenset(
            i for i in members
            if not any(P.leq[i, j] and j != i for j in members)
        )
    raise ValueError(f"which must be 'min' or 'max', got {which!r}")


def enumerate_upsets(P):
    """All upward-closed subsets, sorted by size then lexicographically.

    In the finite case every upset is clopen, so this is the full frame
    of clopen upsets of the space.
    """
    if P._upsets is not None:
        return list(P._upsets)
    n = P.n
    found = []
    for bits in itertools.product((0, 1), repeat=n):
        members = frozenset(i for i in range(n) if bits[i])
        if P.is_upset(members):
            found.append(members)
    found.sort(key=lambda s: (len(s), sorted(s)))
    P._upsets = tuple(found)
    return list(found)


# -- canonical forms ---------------------------------------------------


def _canonical(P):
    """Return (key, perm): the minimal relabelled order matrix and a
    permutation realizing it.

    Iterated invariant refinement first, then a minimum over the
    refinement-respecting relabelings only, which keeps the search tiny
    for every poset of workbench size.
    """
    n = P.n
    leq = P.leq
    colors = [(len(P.down_set(i)), len(P.up_set(i))) for i in range(n)]
    for _ in range(n):
        new = []
        for i in range(n):
            below = sorted(colors[j] for j in P.down_set(i) if j != i)
            above = sorted(colors[j] for j in P.up_set(i) if j != i)
            new.append((colors[i], tuple(below), tuple(above)))
        ranking = {c: r for r, c in enumerate(sorted(set(new)))}
        new = [(ranking[c],) for c in new]
        if new == colors:
            break
        colors = new
    groups = {}
    for i in range(n):
        groups.setdefault(colors[i], []).append(i)
    ordered_groups = [groups[c] for c in sorted(groups)]
    best = None
    best_perm = None
    for perm_parts in itertools.product(
        *(itertools.permutations(g) for g in ordered_groups)
    ):
        perm = [i for part in perm_parts for i in part]
        key = tuple(
            bool(leq[perm[i], perm[j]]) for i in range(n) for j in range(n)
        )
        if best is None or key < best:
            best = key
            best_perm = perm
    return (n, best), best_perm


def canonical_form(P):
    """A label-independent key: equal iff the posets are isomorphic.

    Used only for deduplication during enumeration, not as a general
    isomorphism service.
    """
    key, _ = _canonical(P)
    return key


def relabel_canonically(P, prefix="p"):
    """Return an isomorphic copy with labels p0..p{n-1} in canonical order."""
    n = P.n
    _, perm = _canonical(P)
    if perm is None:
        return FinitePoset([], np.zeros((0, 0), dtype=bool))
    mat = np.array(
        [[P.leq[perm[i], perm[j]] for j in range(n)] for i in range(n)],
        dtype=bool,
    )
    return FinitePoset([f"{prefix}{i}" for i in range(n)], mat)


# -- JSON interchange ---------------------------------------------------


def poset_to_json(P):
    return {
        "points": list(P.labels),
        "covers": [[P.labels[i], P.labels[j]] for i, j in P.covers()],
    }


def poset_from_json(obj):
    """Read {"points": [...], "covers": [[a,b],...]}; closure is applied."""
    if not isinstance(obj, dict) or "points" not in obj:
        raise UnknownLabel("poset JSON must have a 'points' field")
    return build_poset(obj["points"], [tuple(c) for c in obj.get("covers", [])])


def load_poset(path):
    with open(path, "r", encoding="utf-8") as fh:
        return poset_from_json(json.load(fh))
