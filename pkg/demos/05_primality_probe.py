#!/usr/bin/env python3
"""Probing primality with the Q-criterion.

An ideal is prime exactly when, whenever Q(ideal, a, b) holds (every
product of normed restrictions of a and b lands in the ideal), one of a
and b is already a member.  The probe enumerates a finite box of pairs
and reports the ones where Q holds yet neither is a member: such a pair
falsifies primality.  An empty report is evidence at that scale, never a
proof.

The canonical ideals survive the probe; a genuine non-prime, the
intersection of the ideals over 2 and over 3, is caught immediately with
the classical witness (2, 3).
"""

from tambara import (
    BurnsideElement,
    CyclicGroupCtx,
    IdealSpec,
    enumerate_spectrum,
    member,
    primality_probe,
    q_check,
)

n = 12
poset = enumerate_spectrum(CyclicGroupCtx(n), [0, 2, 3, 5])
print(f"probing the {len(poset.points)} canonical ideals of C_{n}")
print("(pairs with coefficients in [-2, 2], support <= 2, all levels)")
for spec in poset.points:
    found = primality_probe(spec, bound=2, max_support=2)
    print(f"  {spec.label:>12}: {len(found)} counterexamples")

print()
family = [IdealSpec(n, 1, 2), IdealSpec(n, 1, 3)]
print("the intersection p_{C_1,2} /\\ p_{C_1,3} is not prime:")
a = 2 * BurnsideElement.unit(n)
b = 3 * BurnsideElement.unit(n)
report = q_check(family, a, b)
print(f"  a = {a}: member? {all(member(s, a) for s in family)}")
print(f"  b = {b}: member? {all(member(s, b) for s in family)}")
print(f"  Q(intersection, a, b) holds? {report.holds}")
print("  every product of norms has marks of the form 2^x * 3^y, hence")
print("  lands in the intersection, although neither factor does.")

found = primality_probe(family, bound=3, max_support=1)
print(f"  probe at bound 3 finds {len(found)} counterexample pairs, e.g.:")
for x, y in found[:3]:
    print(f"    ({x}, {y})")
