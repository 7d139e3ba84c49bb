"""Exact arithmetic and the clopen-set algebra of Cantor space.

Points of Cantor space are infinite binary sequences.  A finite bit string
``x`` names the basic interval of all sequences extending ``x``; a clopen set
is a finite union of such intervals, kept in a canonical form (a prefix-free
antichain in which no two sibling intervals ``x0``, ``x1`` are both present).
Canonical form is unique for a given point set, so equality of clopen sets is
tuple equality.

All measures are :class:`fractions.Fraction`; no floating point is used
anywhere in the package.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

DEFAULT_MAX_DEPTH = 64

_BITS = frozenset("01")


def max_interval_depth() -> int:
    """Current cap on interval depth (LIMITLAB_MAX_DEPTH overrides 64)."""
    raw = os.environ.get("LIMITLAB_MAX_DEPTH")
    if raw is None:
        return DEFAULT_MAX_DEPTH
    try:
        depth = int(raw)
    except ValueError:
        raise ValueError(f"LIMITLAB_MAX_DEPTH must be an integer, got {raw!r}") from None
    if depth < 1:
        raise ValueError(f"LIMITLAB_MAX_DEPTH must be positive, got {depth}")
    return depth


def check_bit_string(x: str) -> str:
    """Validate a finite bit string; returns it unchanged."""
    if not isinstance(x, str):
        raise ValueError(f"bit string expected, got {type(x).__name__}")
    if set(x) - _BITS:
        raise ValueError(f"bit string may contain only 0 and 1, got {x!r}")
    cap = max_interval_depth()
    if len(x) > cap:
        raise ValueError(f"interval {x!r} deeper than the configured cap {cap}")
    return x


def _split(intervals: Iterable[str]) -> tuple[list[str], list[str]]:
    # callers guarantee the empty string is absent
    zero = [s[1:] for s in intervals if s[0] == "0"]
    one = [s[1:] for s in intervals if s[0] == "1"]
    return zero, one


def _canon(strings: Iterable[str]) -> tuple[str, ...]:
    pool = set(strings)
    if not pool:
        return ()
    if "" in pool:
        return ("",)
    zero, one = _split(pool)
    zc, oc = _canon(zero), _canon(one)
    if zc == ("",) and oc == ("",):
        return ("",)
    return tuple("0" + s for s in zc) + tuple("1" + s for s in oc)


def _intersect(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
    if not a or not b:
        return ()
    if a == ("",):
        return b
    if b == ("",):
        return a
    az, ao = _split(a)
    bz, bo = _split(b)
    zc = _intersect(tuple(az), tuple(bz))
    oc = _intersect(tuple(ao), tuple(bo))
    if zc == ("",) and oc == ("",):
        return ("",)
    return tuple("0" + s for s in zc) + tuple("1" + s for s in oc)


def _complement(a: tuple[str, ...]) -> tuple[str, ...]:
    if not a:
        return ("",)
    if a == ("",):
        return ()
    az, ao = _split(a)
    zc = _complement(tuple(az))
    oc = _complement(tuple(ao))
    if zc == ("",) and oc == ("",):
        return ("",)
    return tuple("0" + s for s in zc) + tuple("1" + s for s in oc)


def _leftmost(a: tuple[str, ...], length: int) -> Optional[str]:
    if a == ("",):
        return None
    if not a:
        return "0" * length
    if length == 0:
        return None
    az, ao = _split(a)
    hit = _leftmost(tuple(az), length - 1)
    if hit is not None:
        return "0" + hit
    hit = _leftmost(tuple(ao), length - 1)
    if hit is not None:
        return "1" + hit
    return None


@dataclass(frozen=True)
class ClopenSet:
    """Canonical finite union of basic intervals.

    ``intervals`` is always a lexicographically sorted prefix-free antichain
    with every sibling pair merged; construct instances via :func:`normalize`
    or the set operations below rather than by hand.
    """

    intervals: tuple[str, ...] = ()

    def measure(self) -> Fraction:
        """Exact uniform measure: sum of 2^-len over the intervals."""
        return sum((Fraction(1, 2 ** len(x)) for x in self.intervals), Fraction(0))

    def is_empty(self) -> bool:
        return not self.intervals

    def is_full(self) -> bool:
        return self.intervals == ("",)

    def union(self, other: "ClopenSet") -> "ClopenSet":
        return ClopenSet(_canon(self.intervals + other.intervals))

    def intersection(self, other: "ClopenSet") -> "ClopenSet":
        return ClopenSet(_intersect(self.intervals, other.intervals))

    def complement(self) -> "ClopenSet":
        return ClopenSet(_complement(self.intervals))

    def difference(self, other: "ClopenSet") -> "ClopenSet":
        return ClopenSet(_intersect(self.intervals, _complement(other.intervals)))

    def covers_string(self, x: str) -> bool:
        """True iff the whole interval of ``x`` lies inside this set."""
        return any(x.startswith(i) for i in self.intervals)

    def meets_interval(self, x: str) -> bool:
        """True iff the interval of ``x`` intersects this set."""
        return any(x.startswith(i) or i.startswith(x) for i in self.intervals)

    def interval_overlap(self, x: str) -> Fraction:
        """Exact measure of the intersection with the interval of ``x``."""
        for i in self.intervals:
            if x.startswith(i):
                return Fraction(1, 2 ** len(x))
        return sum(
            (Fraction(1, 2 ** len(i)) for i in self.intervals if i.startswith(x)),
            Fraction(0),
        )

    def leftmost_avoiding(self, length: int) -> Optional[str]:
        """Least string of the given length whose interval misses this set."""
        if length < 0:
            raise ValueError("length must be a natural number")
        return _leftmost(self.intervals, length)

    def __contains__(self, x: str) -> bool:
        return self.covers_string(x)

    def __repr__(self) -> str:
        body = ", ".join(repr(x) for x in self.intervals)
        return f"ClopenSet([{body}])"


EMPTY = ClopenSet(())
FULL = ClopenSet(("",))


def normalize(intervals: Iterable[str]) -> ClopenSet:
    """Canonical clopen set denoting the union of the given intervals."""
    checked = [check_bit_string(x) for x in intervals]
    return ClopenSet(_canon(checked))


def interval(x: str) -> ClopenSet:
    """The basic interval named by ``x``."""
    return ClopenSet((check_bit_string(x),))


def boolean_op(a: ClopenSet, b: ClopenSet, kind: str) -> ClopenSet:
    """Dispatch union / intersection / difference by name."""
    if kind == "union":
        return a.union(b)
    if kind == "intersection":
        return a.intersection(b)
    if kind == "difference":
        return a.difference(b)
    raise ValueError(f"unknown boolean operation {kind!r}")


def parse_fraction(text: str) -> Fraction:
    """Parse exact rational text: "num/den" or a plain integer string."""
    if not isinstance(text, str):
        raise ValueError(f"rational text expected, got {type(text).__name__}")
    body = text.strip()
    try:
        if "/" in body:
            num, den = body.split("/", 1)
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(int(body))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not an exact rational: {text!r}") from None
    return value


def format_fraction(value: Fraction) -> str:
    """Serialize a rational as "num/den" (denominator always present)."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"
