"""Forcing over clopen query sets, and exact limit frequencies of traces.

The forcing walk decides each query so that the answer holds for every point
of the remaining complement: "halts" when the query set together with U
already covers everything, "diverges" otherwise (the query set is folded into
U).  The answers never look at the extracted witness.
"""

from fractions import Fraction

import limitlab as ll

print("== a forcing walk ==")
instance = ll.ForcingInstance(
    initial_u=ll.interval("0"),
    queries=(
        ("T1", ll.interval("1")),
        ("T2", ll.interval("10")),
        ("T3", ll.normalize(["110", "111"])),
    ),
)
outcome = ll.force(instance, witness_length=3)
print("initial U:", instance.initial_u.intervals)
for (label, query), (_, verdict) in zip(instance.queries, outcome.answers):
    print(f"  {label}: query {query.intervals} -> {verdict}")
print("final U:", outcome.final_u.intervals, " measure:", outcome.final_u.measure())
print("witness prefix avoiding U:", outcome.witness_prefix)

longer = ll.force(instance, witness_length=6)
print("same answers at a longer witness:", longer.answers == outcome.answers)

print("\n== limit frequencies of an eventually periodic trace ==")
trace = ll.PartialTrace(prefix=(5, 5, 5), period=(1, 1, 2, None))
print("trace: prefix", trace.prefix, "then repeating", trace.period)
table = ll.limit_frequency(trace)
for x, share in sorted(table.items()):
    print(f"  value {x}: limit share {share}")
print("the prefix value 5 washes out:", 5 not in table)
print("total mass:", sum(table.values(), Fraction(0)), "<= 1")

print("\n== running shares converge from above and below ==")
for n in (3, 4, 8, 12):
    print(f"  first {n:2} terms: {ll.running_frequency(trace, n)}")

print("\n== the trace as a staged semimeasure family ==")
grid = [Fraction(n, 8) for n in range(9)]
family = ll.trace_to_family(trace, nmax=8, grid=grid)
print("valid:", ll.validate(family).ok)
print("liminf of the family (grid-floored limit shares):", ll.liminf_family(family))

cover = ll.cover_semimeasure(family, grid)
print("cover dominates the floored shares:")
for x, share in sorted(table.items()):
    floored = max(g for g in grid if g <= share)
    got = cover.value(format(x, "b"))
    print(f"  value {x}: floor {floored} <= cover {got}")
