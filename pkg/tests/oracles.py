"""Independent brute-force oracles the library is checked against.

Everything here is written from the definitions, not from the library code:
point membership decides set questions, direct event scans decide family
questions, and a from-scratch machine enumeration decides complexity
questions.  Keeping these separate from the implementation is the point.
"""

from fractions import Fraction
from itertools import product


def all_strings(length):
    return ["".join(bits) for bits in product("01", repeat=length)]


def strings_up_to(length):
    out = []
    for n in range(length + 1):
        out.extend(all_strings(n))
    return out


def member(w, intervals):
    """Point membership: the sequences extending w meet the union iff some
    interval is a prefix of w (w at least as deep as every interval)."""
    return any(w.startswith(i) for i in intervals)


def measure_by_counting(intervals, depth):
    covered = sum(1 for w in all_strings(depth) if member(w, intervals))
    return Fraction(covered, 2**depth)


def set_family_member(events, n):
    return {ev.element for ev in events if _covers(ev.spec, n)}


def semimeasure_member(events, n):
    table = {}
    for ev in events:
        if _covers(ev.spec, n) and ev.value > table.get(ev.element, Fraction(0)):
            table[ev.element] = ev.value
    return {u: v for u, v in table.items() if v > 0}


def open_member_intervals(events, n):
    return [ev.interval for ev in events if _covers(ev.spec, n)]


def _covers(spec, n):
    return n == spec.index if spec.kind == "single" else n >= spec.index


def m0_reference(program, condition):
    """From-scratch rewrite of the reference machine semantics."""
    if len(program) < 2:
        return None
    if program.startswith("00"):
        return program[2:]
    if program.startswith("01") and len(program) > 2:
        body = program[2:]
        out = []
        for i in range(condition):
            out.append(body[i % len(body)])
        return "".join(out)
    return None


def complexity_by_enumeration(x, condition):
    """Minimum program length by scanning every program, no early exit."""
    best = None
    for length in range(len(x) + 3):
        for code in range(2**length):
            program = format(code, f"0{length}b") if length else ""
            if m0_reference(program, condition) == x and (best is None or length < best):
                best = length
    return best


def dbar_by_scan(t, x, horizon):
    """Extension deficiency by direct enumeration of every extension."""
    best = None
    for n in range(len(x), horizon + 1):
        for suffix in all_strings(n - len(x)):
            y = x + suffix
            d = len(y) - t.value(y)
            if best is None or d < best:
                best = d
    return best


def frequencies_by_average(prefix, period, repetitions):
    """Running shares over the prefix-free repetition of the period block."""
    block = list(period) * repetitions
    counts = {}
    for slot in block:
        if slot is not None:
            counts[slot] = counts.get(slot, 0) + 1
    return {x: Fraction(c, len(block)) for x, c in counts.items()}
