"""The acceptable-operation covering constructions.

Each construction walks a fixed enumeration of tentative operations against a
working copy of a staged family.  An operation is performed only when every
per-index constraint (cardinality, total mass, measure) still holds
afterwards; accepted operations persist and are logged.  The result is a
single finite object that provably contains / dominates the liminf of the
presented family while obeying the same budget the family members do:

* ``cover_sets``         -- adds elements, budget: fewer than 2^k per index;
* ``cover_semimeasure``  -- raises values, budget: total mass at most 1
                            (flat) or root mass at most 1 (binary tree);
* ``cover_open``         -- adds intervals, budget: measure at most epsilon;
* ``cover_open_strong``  -- covers the disjoint decomposition of the liminf
                            piece by piece inside an epsilon' budget.

The enumeration order (index threshold ascending, then element order, then
value ascending) is fixed so that runs are reproducible; any computable order
would do, and only the guarantees above are contractual.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .cantor import EMPTY, ClopenSet, interval, max_interval_depth, normalize
from .families import (
    OpenFamilyPresentation,
    SemimeasureFamilyPresentation,
    SetFamilyPresentation,
    breakpoints,
    family_at,
    liminf_family,
    max_event_interval_length,
    require_valid,
    tree_closure,
)


@dataclass(frozen=True)
class CoverSet:
    elements: frozenset[str]
    accepted_ops: tuple[tuple[int, str], ...]


@dataclass(frozen=True)
class CoverSemimeasure:
    values: Mapping[str, Fraction]
    accepted_ops: tuple[tuple[Fraction, int, str], ...]
    tree: bool

    def value(self, u: str) -> Fraction:
        return self.values.get(u, Fraction(0))

    def total_mass(self) -> Fraction:
        return sum(self.values.values(), Fraction(0))


@dataclass(frozen=True)
class CoverOpenSet:
    region: ClopenSet
    accepted_ops: tuple[tuple[str, int], ...]
    slack_report: Optional[tuple[tuple[int, Fraction], ...]] = None


def _effective_nmax(p, nmax: Optional[int]) -> int:
    last = max(breakpoints(p))
    if nmax is None:
        return last
    if nmax < last:
        raise ValueError(
            f"Nmax = {nmax} is below the last breakpoint {last}; "
            "the containment guarantee needs every tail threshold attempted"
        )
    return nmax


def cover_sets(p: SetFamilyPresentation, nmax: Optional[int] = None) -> CoverSet:
    """Grow a single small set containing the liminf of a set family.

    For every pair (N, u), N ascending then u in universe order, the tentative
    operation adds u to every working U_n with n >= N.  It is performed iff
    every such U_n either already holds u or has room below 2^k.  Elements of
    the liminf are added by a no-op (they are already everywhere in the tail),
    so the accepted elements contain the liminf; they all live in the final
    tail member, so there are fewer than 2^k of them.
    """
    require_valid(p)
    nmax = _effective_nmax(p, nmax)
    cap = 2**p.k
    working = [set(family_at(p, n)) for n in range(nmax + 1)]
    # index nmax stands for every n >= nmax: all thresholds at play are <= nmax
    accepted: list[tuple[int, str]] = []
    for big_n in range(nmax + 1):
        for u in p.universe:
            ok = all(
                u in working[n] or len(working[n]) < cap - 1
                for n in range(big_n, nmax + 1)
            )
            if ok:
                for n in range(big_n, nmax + 1):
                    working[n].add(u)
                accepted.append((big_n, u))
    elements = frozenset(u for _, u in accepted)
    assert len(elements) < cap
    assert liminf_family(p) <= elements
    return CoverSet(elements=elements, accepted_ops=tuple(accepted))


def _sorted_elements(p: SemimeasureFamilyPresentation) -> list[str]:
    return sorted({ev.element for ev in p.events}, key=lambda u: (len(u), u))


def _prepare_grid(p: SemimeasureFamilyPresentation, grid: Sequence[Fraction]) -> list[Fraction]:
    values = sorted(set(Fraction(g) for g in grid))
    missing = sorted(
        {ev.value for ev in p.events if ev.value not in values}, reverse=True
    )
    if missing:
        shown = ", ".join(f"{v.numerator}/{v.denominator}" for v in missing[:4])
        raise ValueError(f"grid is missing event values: {shown}")
    return values


def _raise_with_closure(table: dict[str, Fraction], u: str, r: Fraction) -> None:
    # minimal tree repair: only ancestors of u can fall below their children
    if r > table.get(u, Fraction(0)):
        table[u] = r
    for i in range(len(u) - 1, -1, -1):
        y = u[:i]
        kids = table.get(y + "0", Fraction(0)) + table.get(y + "1", Fraction(0))
        if kids > table.get(y, Fraction(0)):
            table[y] = kids


def _root_after_raise(table: dict[str, Fraction], u: str, r: Fraction) -> Fraction:
    # root mass of the closure after raising u to r, without mutating
    zero = Fraction(0)
    if r <= table.get(u, zero):
        return table.get("", zero)
    grown = r
    node = u
    while node:
        parent, sibling = node[:-1], node[:-1] + ("1" if node[-1] == "0" else "0")
        need = grown + table.get(sibling, zero)
        if need <= table.get(parent, zero):
            return table.get("", zero)
        grown = need
        node = parent
    return grown


def cover_semimeasure(
    p: SemimeasureFamilyPresentation,
    grid: Sequence[Fraction],
    nmax: Optional[int] = None,
) -> CoverSemimeasure:
    """Build one semimeasure dominating the liminf of a semimeasure family.

    Triples (r, N, u) are attempted with N ascending, u in (length, lex)
    order over the event elements and r ascending over the grid; the grid
    must contain every event value so that the liminf value itself is
    attempted.  The tentative increase raises every working m_n(u), n >= N,
    to r; in tree mode each prefix of u is then raised to its children's sum.
    The increase is kept iff every index keeps total mass (flat) or root mass
    (tree) at most 1.

    The returned values are the accepted increases replayed on an initially
    empty table, which keeps them below the final working tables, hence
    within the same mass budget.
    """
    require_valid(p)
    nmax = _effective_nmax(p, nmax)
    rgrid = _prepare_grid(p, grid)
    elements = _sorted_elements(p)
    zero = Fraction(0)
    if p.tree:
        working = [tree_closure(family_at(p, n)) for n in range(nmax + 1)]
    else:
        working = [dict(family_at(p, n)) for n in range(nmax + 1)]
        totals = [sum(t.values(), zero) for t in working]
    accepted: list[tuple[Fraction, int, str]] = []
    built: dict[str, Fraction] = {}
    for big_n in range(nmax + 1):
        for u in elements:
            for r in rgrid:
                if p.tree:
                    ok = all(
                        _root_after_raise(working[n], u, r) <= 1
                        for n in range(big_n, nmax + 1)
                    )
                else:
                    ok = all(
                        totals[n] + max(zero, r - working[n].get(u, zero)) <= 1
                        for n in range(big_n, nmax + 1)
                    )
                if ok:
                    for n in range(big_n, nmax + 1):
                        if p.tree:
                            _raise_with_closure(working[n], u, r)
                        else:
                            gain = r - working[n].get(u, zero)
                            if gain > 0:
                                working[n][u] = r
                                totals[n] += gain
                    accepted.append((r, big_n, u))
                    if p.tree:
                        _raise_with_closure(built, u, r)
                    elif r > built.get(u, zero):
                        built[u] = r
    values = {u: v for u, v in built.items() if v > 0}
    if p.tree:
        assert built.get("", zero) <= 1
    else:
        assert sum(built.values(), zero) <= 1
    assert all(built.get(u, zero) >= v for u, v in liminf_family(p).items())
    return CoverSemimeasure(values=values, accepted_ops=tuple(accepted), tree=p.tree)


def _ceil_log2_reciprocal(value: Fraction) -> int:
    # smallest natural m with value * 2^m >= 1, for 0 < value <= 1
    p, q = value.numerator, value.denominator
    m = 0
    power = 1
    while p * power < q:
        power <<= 1
        m += 1
    return m


def semimeasure_to_complexity(cover: CoverSemimeasure) -> dict[str, int]:
    """Description lengths read off a semimeasure: ceil(-log2 value).

    Entries with value zero carry no information and are omitted.
    """
    return {
        u: _ceil_log2_reciprocal(v) for u, v in cover.values.items() if v > 0
    }


def _candidates(lmax: int) -> list[str]:
    out = [""]
    level = [""]
    for _ in range(lmax):
        level = [x + b for x in level for b in "01"]
        out.extend(level)
    return out  # already (length, lex) ordered


def cover_open(
    p: OpenFamilyPresentation, lmax: int, nmax: Optional[int] = None
) -> CoverOpenSet:
    """One open set of measure <= epsilon containing the liminf of the family.

    Pairs (x, N) are attempted with N ascending and x over all strings of
    length at most ``lmax`` in (length, lex) order; the tentative operation
    adds the interval of x to every working U_n with n >= N, and is kept iff
    every measure stays at most epsilon.  Intervals of the liminf survive as
    no-ops, so the union of accepted intervals contains the liminf; it is a
    subset of the final tail member, so its measure obeys the budget.
    """
    require_valid(p)
    deepest = max_event_interval_length(p)
    if lmax < deepest:
        raise ValueError(
            f"Lmax = {lmax} is below the deepest event interval ({deepest})"
        )
    cap = max_interval_depth()
    if lmax > cap:
        raise ValueError(f"Lmax = {lmax} exceeds the interval depth cap {cap}")
    nmax = _effective_nmax(p, nmax)
    working = [family_at(p, n) for n in range(nmax + 1)]
    mu = [w.measure() for w in working]
    accepted: list[tuple[str, int]] = []
    for big_n in range(nmax + 1):
        for x in _candidates(lmax):
            gain = Fraction(1, 2 ** len(x))
            ok = all(
                mu[n] + gain - working[n].interval_overlap(x) <= p.epsilon
                for n in range(big_n, nmax + 1)
            )
            if ok:
                piece = interval(x)
                for n in range(big_n, nmax + 1):
                    working[n] = working[n].union(piece)
                    mu[n] = working[n].measure()
                accepted.append((x, big_n))
    region = normalize(x for x, _ in accepted)
    assert region.measure() <= p.epsilon
    assert liminf_family(p).difference(region).is_empty()
    return CoverOpenSet(region=region, accepted_ops=tuple(accepted))


def decompose_liminf(p: OpenFamilyPresentation) -> list[ClopenSet]:
    """Split the liminf by the last index whose member misses a point.

    F_0 is the intersection of all members; F_{i+1} collects the points in
    every member from i+1 on that U_i still misses.  The parts are pairwise
    disjoint, their union is the liminf, and beyond the last breakpoint every
    part is empty (those are omitted).
    """
    require_valid(p)
    if p.granularity is None:
        raise ValueError("decomposition requires a granularity bound")
    last = max(breakpoints(p))
    members = [family_at(p, n) for n in range(last + 1)]
    suffix = [EMPTY] * (last + 1)  # suffix[i] = intersection of members i..tail
    suffix[last] = members[last]
    for i in range(last - 1, -1, -1):
        suffix[i] = suffix[i + 1].intersection(members[i])
    parts = [suffix[0]]
    for i in range(1, last + 1):
        parts.append(suffix[i].difference(members[i - 1]))
    return parts


def cover_open_strong(
    p: OpenFamilyPresentation, epsilon_prime: Fraction
) -> CoverOpenSet:
    """Cover the liminf itself within a strictly larger measure budget.

    Each decomposition part F_i may be covered with slack
    (epsilon' - epsilon) / 2^(i+1); at desk scale every part is clopen, so it
    is covered exactly and the whole slack budget is reported unconsumed.
    """
    epsilon_prime = Fraction(epsilon_prime)
    if epsilon_prime <= p.epsilon:
        raise ValueError(
            "epsilon' must exceed epsilon "
            f"({epsilon_prime} <= {p.epsilon})"
        )
    parts = decompose_liminf(p)
    region = EMPTY
    accepted: list[tuple[str, int]] = []
    slack: list[tuple[int, Fraction]] = []
    for i, part in enumerate(parts):
        region = region.union(part)
        accepted.extend((x, i) for x in part.intervals)
        slack.append((i, (epsilon_prime - p.epsilon) / 2 ** (i + 1)))
    assert region.measure() <= epsilon_prime
    return CoverOpenSet(
        region=region, accepted_ops=tuple(accepted), slack_report=tuple(slack)
    )


def replay_set_ops(
    p: SetFamilyPresentation, ops: Sequence[tuple[int, str]], nmax: Optional[int] = None
) -> bool:
    """Re-run a logged cover_sets schedule; True iff every op is acceptable."""
    require_valid(p)
    nmax = _effective_nmax(p, nmax)
    cap = 2**p.k
    working = [set(family_at(p, n)) for n in range(nmax + 1)]
    for big_n, u in ops:
        if not all(
            u in working[n] or len(working[n]) < cap - 1
            for n in range(big_n, nmax + 1)
        ):
            return False
        for n in range(big_n, nmax + 1):
            working[n].add(u)
    return True
