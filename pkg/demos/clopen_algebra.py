"""Tour of the exact clopen-set algebra on Cantor space.

A bit string names the interval of all infinite sequences extending it; a
clopen set is a finite union of intervals kept in canonical form.  Everything
below prints exact fractions, never floats.
"""

from fractions import Fraction

from limitlab import EMPTY, FULL, interval, normalize

print("== canonical form ==")
messy = ["0", "00", "10", "11"]
tidy = normalize(messy)
print(f"normalize({messy}) -> {tidy.intervals}")
print("   ('00' is inside '0'; '10' and '11' merge to '1'; siblings '0','1' merge to the root)")
print(f"   the result is the full space: {tidy.is_full()}")

print("\n== exact measure ==")
s = normalize(["0", "110"])
print(f"intervals {s.intervals}: measure = 1/2 + 1/8 = {s.measure()}")
print(f"a depth-3 interval: measure(interval('010')) = {interval('010').measure()}")

print("\n== boolean operations stay canonical ==")
a = normalize(["0", "10"])
b = interval("1")
print(f"A = {a.intervals},  B = {b.intervals}")
print(f"A & B = {a.intersection(b).intervals}")
print(f"A | B = {a.union(b).intervals}")
print(f"A - B = {a.difference(b).intervals}")
print(f"~A    = {a.complement().intervals}")

print("\n== additivity, checked exactly ==")
lhs = a.union(b).measure() + a.intersection(b).measure()
rhs = a.measure() + b.measure()
print(f"mu(A|B) + mu(A&B) = {lhs} = mu(A) + mu(B) = {rhs}: {lhs == rhs}")

print("\n== finding a gap ==")
crowded = normalize(["0", "10"])
print(f"set {crowded.intervals} leaves room; leftmost free depth-2 interval:"
      f" {crowded.leftmost_avoiding(2)!r}")
print(f"the empty set leaves everything free: {EMPTY.leftmost_avoiding(3)!r}")
print(f"the full space leaves nothing: {FULL.leftmost_avoiding(3)!r}")

print("\n== mass bookkeeping with Fractions ==")
budget = Fraction(5, 8)
pieces = [interval("00"), interval("010"), interval("1")]
total = sum((p.measure() for p in pieces), Fraction(0))
print(f"three pieces weigh exactly {total}; the 5/8 budget rejects them: {total > budget}")
print("   (no rounding: a breach by 1/256 would be caught just the same)")
