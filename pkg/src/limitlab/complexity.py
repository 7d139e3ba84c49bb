"""Exact description complexity for a tiny two-mode reference machine.

The machine M0 is total and halting by construction: a program "00"+q outputs
q literally, and "01"+q (q nonempty) outputs the periodic fill of q out to
the length given as the condition.  All other programs produce nothing.  The
machine is deliberately small: exact shortest-description lengths are then
computable by exhaustive program enumeration and can be checked against an
independent oracle, while the conditional mode makes the complexity genuinely
depend on the condition.

On top of the machine sit the randomness-deficiency tools: per-prefix
deficiency d(x) = |x| - C(x), its extension infimum dbar truncated at a
horizon, the staged open families generated by the sets of compressible
strings, and the converse ordinal coding that turns a small cover back into
description-length bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .families import (
    IndexSpec,
    IntervalEvent,
    OpenFamilyPresentation,
    breakpoints,
    family_at,
    require_valid,
)

EXACT_COMPLEXITY_BOUND = 16


def run_m0(program: str, condition: int) -> Optional[str]:
    """Run the reference machine; None when the program is reserved."""
    if len(program) < 2:
        return None
    mode, payload = program[:2], program[2:]
    if mode == "00":
        return payload
    if mode == "01" and payload:
        return "".join(payload[i % len(payload)] for i in range(condition))
    return None


def _programs_of_length(length: int) -> Iterable[str]:
    if length == 0:
        yield ""
        return
    for code in range(2**length):
        yield format(code, f"0{length}b")


def exact_complexity(x: str, condition: int) -> int:
    """Length of the shortest M0 program producing ``x`` under the condition.

    Exhaustive search over all programs of length at most |x| + 2; the
    literal mode guarantees that bound is reached.
    """
    if len(x) > EXACT_COMPLEXITY_BOUND:
        raise ValueError(
            f"string of length {len(x)} exceeds the enumeration bound "
            f"{EXACT_COMPLEXITY_BOUND}"
        )
    for length in range(len(x) + 3):
        for program in _programs_of_length(length):
            if run_m0(program, condition) == x:
                return length
    raise AssertionError("literal mode must have produced the string")


@dataclass(frozen=True)
class ComplexityTable:
    """Finite exact map (string, condition) -> description length.

    ``mode`` fixes how a string is looked up: "conditional" uses the string's
    length as the condition, "plain" uses the fixed condition 0.
    """

    entries: Mapping[tuple[str, int], int]
    mode: str = "conditional"

    def condition_for(self, u: str) -> int:
        return len(u) if self.mode == "conditional" else 0

    def value(self, u: str) -> int:
        return self.entries[(u, self.condition_for(u))]

    def has(self, u: str) -> bool:
        return (u, self.condition_for(u)) in self.entries

    def conditions(self) -> set[int]:
        return {cond for _, cond in self.entries}


def complexity_table(max_len: int, conditions: Iterable[int]) -> ComplexityTable:
    """Exact M0 table for all strings up to ``max_len`` per condition.

    One enumeration pass per condition, programs in length order, so the
    first program producing a string fixes its complexity.
    """
    if max_len > EXACT_COMPLEXITY_BOUND:
        raise ValueError(
            f"max_len {max_len} exceeds the enumeration bound {EXACT_COMPLEXITY_BOUND}"
        )
    entries: dict[tuple[str, int], int] = {}
    for condition in conditions:
        for length in range(max_len + 3):
            for program in _programs_of_length(length):
                out = run_m0(program, condition)
                if out is not None and len(out) <= max_len:
                    entries.setdefault((out, condition), length)
    return ComplexityTable(entries=entries, mode="conditional")


def _count_below(t: ComplexityTable, condition: int, m: int) -> int:
    return sum(
        1 for (_, cond), v in t.entries.items() if cond == condition and v < m
    )


def counting_violations(t: ComplexityTable, m_max: Optional[int] = None) -> list[str]:
    """Failures of the bound: fewer than 2^m strings of complexity below m.

    Checked for every condition appearing in the table and every m up to the
    largest value plus one (the count is constant beyond).
    """
    problems = []
    if not t.entries:
        return problems
    top = max(t.entries.values()) + 1
    limit = top if m_max is None else min(m_max, top)
    for condition in sorted(t.conditions()):
        for m in range(limit + 1):
            count = _count_below(t, condition, m)
            if count >= 2**m:
                problems.append(
                    f"counting bound violated at condition {condition}: "
                    f"{count} strings below complexity {m} (bound 2^{m} = {2**m})"
                )
    return problems


def require_counting_bound(t: ComplexityTable, m_max: Optional[int] = None) -> None:
    problems = counting_violations(t, m_max)
    if problems:
        raise ValueError(problems[0])


@dataclass(frozen=True)
class DeficiencyReport:
    """Per-prefix deficiencies of one sequence prefix.

    ``dbar`` is the minimum deficiency over all extensions up to ``horizon``;
    the horizon is carried so the truncation is never overstated.
    """

    per_prefix: tuple[tuple[str, int, int], ...]  # (prefix, d, dbar)
    horizon: int
    c: int

    def dbar(self, x: str) -> int:
        for prefix, _, dbar in self.per_prefix:
            if prefix == x:
                return dbar
        raise KeyError(x)


def _require_defined(t: ComplexityTable, strings: Iterable[str]) -> None:
    missing = [u for u in strings if not t.has(u)]
    if missing:
        shown = ", ".join(repr(u) for u in missing[:5])
        raise ValueError(f"table is missing {len(missing)} entries within horizon: {shown}")


def deficiency_report(
    t: ComplexityTable, omega_prefix: str, horizon: int, c: int
) -> DeficiencyReport:
    """Deficiency d and horizon-truncated extension deficiency dbar per prefix."""
    if horizon < len(omega_prefix):
        raise ValueError(f"horizon {horizon} shorter than the prefix ({len(omega_prefix)})")
    levels: list[list[str]] = [[""]]
    for _ in range(horizon):
        levels.append([y + b for y in levels[-1] for b in "01"])
    _require_defined(t, (y for level in levels for y in level))
    dbar: dict[str, int] = {}
    for length in range(horizon, -1, -1):
        for y in levels[length]:
            best = length - t.value(y)
            if length < horizon:
                best = min(best, dbar[y + "0"], dbar[y + "1"])
            dbar[y] = best
    rows = []
    for i in range(len(omega_prefix) + 1):
        x = omega_prefix[:i]
        rows.append((x, i - t.value(x), dbar[x]))
    return DeficiencyReport(per_prefix=tuple(rows), horizon=horizon, c=c)


def deficiency_family(
    t: ComplexityTable, c: int, n_range: tuple[int, int]
) -> OpenFamilyPresentation:
    """Staged open family generated by the compressible strings per length.

    For each n in the range, D_n holds the length-n strings of complexity
    below n - c; index n receives the union of their intervals.  The family
    is truncated by replicating the last level as a tail, and its measure
    bound epsilon = 2^-c follows from the counting bound, which is checked
    up front.
    """
    n_min, n_max = n_range
    if n_min < 0 or n_max < n_min:
        raise ValueError(f"bad length range ({n_min}, {n_max})")
    events: list[IntervalEvent] = []
    for n in range(n_min, n_max + 1):
        strings = list(_strings_of_length(n))
        _require_defined(t, strings)
        m = n - c
        if m > 0:
            condition = n if t.mode == "conditional" else 0
            count = _count_below(t, condition, m)
            if count >= 2**m:
                raise ValueError(
                    f"counting bound violated at condition {condition}: "
                    f"{count} strings below complexity {m}; the family would "
                    f"exceed measure 2^-{c}"
                )
        level = sorted(u for u in strings if t.value(u) < n - c)
        spec = IndexSpec.tail(n) if n == n_max else IndexSpec.single(n)
        events.extend(IntervalEvent(stage=n, spec=spec, interval=u) for u in level)
    return OpenFamilyPresentation(
        epsilon=Fraction(1, 2**c),
        events=tuple(events),
        granularity=tuple((n, n) for n in range(n_min, n_max + 1)),
    )


def _strings_of_length(n: int) -> Iterable[str]:
    if n == 0:
        yield ""
        return
    for code in range(2**n):
        yield format(code, f"0{n}b")


@dataclass(frozen=True)
class RandomnessReport:
    """Prefix lengths at which the sequence stays incompressible."""

    qualifying: tuple[int, ...]
    count: int
    largest: Optional[int]
    c: int


def randomness_report(t: ComplexityTable, omega_prefix: str, c: int) -> RandomnessReport:
    """All n with C(prefix of length n) >= n - c; a finite stand-in for
    "infinitely many", so the largest qualifying n is reported alongside."""
    require_counting_bound(t)
    prefixes = [omega_prefix[:i] for i in range(len(omega_prefix) + 1)]
    _require_defined(t, prefixes)
    qualifying = tuple(
        n for n, x in enumerate(prefixes) if t.value(x) >= n - c
    )
    return RandomnessReport(
        qualifying=qualifying,
        count=len(qualifying),
        largest=qualifying[-1] if qualifying else None,
        c=c,
    )


def cover_to_complexity_bounds(
    p: OpenFamilyPresentation, c: int
) -> dict[str, int]:
    """Description-length bounds read off a small cover by ordinal coding.

    At each breakpoint n, the length-n strings whose whole interval lies in
    U_n are counted and sorted; naming one by its ordinal number in that list
    takes ceil(log2(count)) bits, which bounds its complexity at that level.
    """
    require_valid(p)
    if p.granularity is None:
        raise ValueError("ordinal coding requires a granularity bound")
    bound = Fraction(1, 2**c)
    if p.epsilon > bound:
        raise ValueError(
            f"measure bound violated: epsilon = {p.epsilon} exceeds 2^-{c} = {bound}"
        )
    for n, cn in p.granularity:
        if cn > n:
            raise ValueError(f"granularity c({n}) = {cn} exceeds the level {n}")
    result: dict[str, int] = {}
    for n in breakpoints(p):
        member = family_at(p, n)
        covered = sorted(
            i + suffix
            for i in member.intervals
            if len(i) <= n
            for suffix in _strings_of_length(n - len(i))
        )
        if not covered:
            continue
        count = len(covered)
        if Fraction(count, 2**n) > bound:
            raise ValueError(
                f"measure bound violated at n={n}: {count} covered strings"
            )
        code_length = (count - 1).bit_length()
        for w in covered:
            result[w] = code_length
    return result
