"""Shells, histories and the causal order on the spacetime lattice.

A vertex lives in the nonnegative-time solid light cone; the shell at time
t collects the vertices at that height of the cone.  The order is the
Minkowski one (later time, nonnegative interval).  Links are the 13
one-step moves (rest, or one of the 12 unit directions).

The machine checks here deliberately distinguish the *order* from the
*link-reachability*: from t = 3 on, shells contain vertices that are
causally after the origin yet cannot be reached by any chain of links.
Reports carry those counterexamples rather than assuming the two notions
agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import paperdata
from .lattice import (
    Vec4,
    norm_sq3,
    norm_sq4,
    unit_vectors3,
    vectors_with_norm_up_to,
)
from .symmetry import GroupElement, apply4

__all__ = [
    "ORIGIN",
    "in_cone",
    "shell",
    "shell_sizes",
    "History",
    "history",
    "precedes",
    "children",
    "parents",
    "parent_histogram",
    "path_lengths",
    "CovarianceReport",
    "covariance_diagnostics",
    "construction_cross_check",
    "average_speeds",
    "speeds_paper_diff",
]

ORIGIN = Vec4(0, 0, 0, 0)

_STEPS = tuple(
    [Vec4(1, 0, 0, 0)] + [Vec4(1, u.n, u.p, u.q) for u in unit_vectors3()]
)


def in_cone(v: Vec4) -> bool:
    """Membership in the forward solid light cone of the origin."""
    return v.t >= 0 and norm_sq4(v) >= 0


def shell(t: int) -> tuple[Vec4, ...]:
    """All vertices at time t, lexicographically ordered by coordinates."""
    if t < 0:
        raise ValueError("time must be nonnegative")
    out = [Vec4(t, v.n, v.p, v.q) for v in vectors_with_norm_up_to(t * t)]
    out.sort(key=Vec4.coords)
    return tuple(out)


def shell_sizes(t_max: int) -> list[int]:
    return [len(shell(t)) for t in range(t_max + 1)]


@dataclass(frozen=True)
class History:
    """The union of shells 0..t with membership index."""

    horizon: int
    shells: tuple[tuple[Vec4, ...], ...]

    @property
    def vertices(self) -> tuple[Vec4, ...]:
        return tuple(v for sh in self.shells for v in sh)

    def __contains__(self, v: Vec4) -> bool:
        return 0 <= v.t <= self.horizon and norm_sq4(v) >= 0

    def size(self) -> int:
        return sum(len(sh) for sh in self.shells)


def history(t: int) -> History:
    if t < 0:
        raise ValueError("time must be nonnegative")
    return History(horizon=t, shells=tuple(shell(s) for s in range(t + 1)))


def precedes(u: Vec4, v: Vec4) -> bool:
    """Causal order: strictly later time and nonnegative squared interval."""
    return u.t < v.t and norm_sq4(v - u) >= 0


def children(u: Vec4) -> tuple[Vec4, ...]:
    """The 13 one-step successors of a cone vertex, lexicographic order."""
    out = [u + s for s in _STEPS]
    out.sort(key=Vec4.coords)
    return tuple(out)


def parents(u: Vec4) -> tuple[Vec4, ...]:
    """Cone vertices one step before u; may be empty even for u.t >= 1."""
    if u.t <= 0:
        return ()
    out = [w for w in (u - s for s in _STEPS) if norm_sq4(w) >= 0]
    out.sort(key=Vec4.coords)
    return tuple(out)


def path_lengths(u: Vec4, v: Vec4, sample_limit: int = 1000) -> frozenset[int]:
    """Lengths of link chains from u to v found by depth-first search.

    At most ``sample_limit`` complete chains are enumerated, in the
    deterministic order induced by sorted children.  The result may be empty:
    comparability does not imply link reachability on this lattice.
    """
    if not precedes(u, v):
        raise ValueError("path enumeration requires u strictly before v")
    lengths: set[int] = set()
    found = 0
    stack = [(u, 0)]
    while stack and found < sample_limit:
        w, depth = stack.pop()
        for c in reversed(children(w)):
            if c == v:
                lengths.add(depth + 1)
                found += 1
                if found >= sample_limit:
                    break
            elif c.t < v.t and precedes(c, v):
                stack.append((c, depth + 1))
    return frozenset(lengths)


def parent_histogram(hist: History) -> dict[int, dict[int, int]]:
    """Per-shell histogram of in-history parent counts (answers an open count)."""
    vset = set(hist.vertices)
    histogram: dict[int, dict[int, int]] = {}
    for v in hist.vertices:
        counts = histogram.setdefault(v.t, {})
        k = len([w for w in parents(v) if w in vset])
        counts[k] = counts.get(k, 0) + 1
    return histogram


def _reachable_from(u: Vec4, hist: History) -> set[Vec4]:
    reach = {u}
    frontier = [u]
    while frontier:
        nxt = []
        for w in frontier:
            if w.t >= hist.horizon:
                continue
            for c in children(w):
                if c in hist and c not in reach:
                    reach.add(c)
                    nxt.append(c)
        frontier = nxt
    return reach


@dataclass(frozen=True)
class CovarianceReport:
    horizon: int
    vertex_count: int
    comparable_pairs: int
    weakly_covariant: bool
    covariant: bool
    covariance_witness: tuple[Vec4, Vec4] | None
    orphan_count: int
    orphans_sample: tuple[Vec4, ...]
    height_mismatch_count: int
    pathless_comparable_pairs: int
    pathless_sample: tuple[tuple[Vec4, Vec4], ...]
    parent_histogram: dict[int, dict[int, int]]


def covariance_diagnostics(hist: History) -> CovarianceReport:
    """Heights, weak covariance, covariance witness and reachability defects."""
    verts = hist.vertices
    vset = set(verts)

    heights: dict[Vec4, int] = {}
    for v in verts:  # shells are emitted in time order, so parents come first
        ps = [w for w in parents(v) if w in vset]
        heights[v] = 0 if not ps else 1 + max(heights[w] for w in ps)

    orphans = tuple(v for v in verts if v.t > 0 and not parents(v))
    height_mismatches = sum(1 for v in verts if heights[v] != v.t)

    comparable = 0
    pathless: list[tuple[Vec4, Vec4]] = []
    for u in verts:
        reach = _reachable_from(u, hist)
        for v in verts:
            if precedes(u, v):
                comparable += 1
                if v not in reach:
                    pathless.append((u, v))
    # every link advances time by one step, so any existing chain from u to v
    # has length v.t - u.t; weak covariance can only fail if a link skipped a
    # shell, which the construction forbids
    weakly_covariant = all(c.t == w.t + 1 for w in verts for c in children(w))

    witness = None
    for u in verts:
        for v in verts:
            if heights[u] < heights[v] and not precedes(u, v):
                witness = (u, v)
                break
        if witness:
            break

    histogram = parent_histogram(hist)

    return CovarianceReport(
        horizon=hist.horizon,
        vertex_count=len(verts),
        comparable_pairs=comparable,
        weakly_covariant=weakly_covariant,
        covariant=witness is None,
        covariance_witness=witness,
        orphan_count=len(orphans),
        orphans_sample=orphans[:5],
        height_mismatch_count=height_mismatches,
        pathless_comparable_pairs=len(pathless),
        pathless_sample=tuple(pathless[:5]),
        parent_histogram=histogram,
    )


def construction_cross_check(t_max: int) -> list[dict]:
    """Shell sizes by norm enumeration versus iterated one-step construction.

    The published account treats the two as interchangeable; they agree only
    up to t = 2, and the per-timestep report makes the divergence explicit.
    """
    reachable = {ORIGIN}
    rows = []
    for t in range(t_max + 1):
        if t > 0:
            reachable = {w + s for w in reachable for s in _STEPS}
        enum_size = len(shell(t))
        rows.append(
            {
                "t": t,
                "enumerated": enum_size,
                "step_construction": len(reachable),
                "equal": enum_size == len(reachable),
            }
        )
    return rows


def equivariance_check(t_max: int, group: tuple[GroupElement, ...]) -> bool:
    """Spatial symmetries permute each shell and preserve the link relation."""
    for t in range(t_max + 1):
        sh = set(shell(t))
        for z in group:
            if {apply4(z, v) for v in sh} != sh:
                return False
    for t in range(t_max):
        for v in shell(t):
            kids = set(children(v))
            for z in group:
                if {apply4(z, c) for c in kids} != set(children(apply4(z, v))):
                    return False
    return True


@dataclass(frozen=True)
class Speed:
    """Average speed sqrt(Q)/t with its exact squared spatial displacement."""

    norm_sq: int
    time: int

    @property
    def value(self) -> float:
        return math.sqrt(self.norm_sq) / self.time

    @property
    def exact_square(self) -> Fraction:
        return Fraction(self.norm_sq, self.time * self.time)


def average_speeds(t: int) -> tuple[Speed, ...]:
    """All speeds attainable from the origin in exactly t steps of time."""
    if t < 1:
        raise ValueError("time must be at least 1")
    attained = sorted({norm_sq3(v) for v in vectors_with_norm_up_to(t * t)})
    return tuple(Speed(q, t) for q in attained)


def speeds_paper_diff(t: int) -> dict:
    """Difference between the computed speed set and the published list."""
    if t not in paperdata.SPEED_Q_PRINTED:
        raise ValueError(f"no published speed list for t={t}")
    computed = {s.norm_sq for s in average_speeds(t)}
    printed = set(paperdata.SPEED_Q_PRINTED[t])
    return {
        "t": t,
        "computed_only": tuple(sorted(computed - printed)),
        "printed_only": tuple(sorted(printed - computed)),
        "agree": computed == printed,
    }
