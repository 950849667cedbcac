#!/usr/bin/env python3
"""The prime spectrum of the Burnside functor of C_12 and its containment
lattice, compared with the spectrum of the plain Burnside ring.

Both spectra have the same points (a subgroup and a prime or zero, up to
p-free equivalence), but their containment orders differ drastically: the
functor spectrum stacks a dual copy of the subgroup lattice over each
prime, giving Krull dimension Omega(n) + 1, while the ring spectrum is
flat (dimension 1).
"""

from tambara import (
    CyclicGroupCtx,
    contains,
    contains_semantic,
    default_primes,
    dress_spectrum,
    enumerate_spectrum,
    export_dot,
    export_json,
    hasse_edges,
    krull_dimension,
    omega,
    poset_from_json,
)

n = 12
ctx = CyclicGroupCtx(n)
primes = default_primes(n)
print(f"prime set for C_{n}: {primes} (0, divisors' primes, one fresh prime)")

poset = enumerate_spectrum(ctx, primes)
print(f"spectrum has {len(poset.points)} canonical points:")
for i, pt in enumerate(poset.points):
    merged = list(poset.merged[i])
    note = f"  merges C_{merged}" if len(merged) > 1 else ""
    print(f"  {pt.label}{note}")

print()
print(f"Krull dimension: {krull_dimension(poset)} = Omega({n}) + 1 "
      f"= {omega(n) + 1}")
chain = ["p_{C_12,0}", "p_{C_12,5}", "p_{C_6,5}", "p_{C_3,5}", "p_{C_1,5}"]
print(f"a longest chain: {' < '.join(chain)}")

dress = dress_spectrum(ctx, primes)
print()
print(f"Dress spectrum of the ring A(C_{n}): {len(dress.points)} points, "
      f"Krull dimension {krull_dimension(dress)}")
print("same point count, different topology: the bijection is not a")
print("homeomorphism.")

print()
print("symbolic containment agrees with the level-by-level lattice test:")
pairs = [(a, b) for a in poset.points for b in poset.points]
agree = all(contains(a, b) == contains_semantic(a, b) for a, b in pairs)
print(f"  {len(pairs)} ordered pairs checked: {'all agree' if agree else 'MISMATCH'}")

print()
print(f"Hasse diagram has {len(hasse_edges(poset))} covering edges; DOT export:")
print()
print(export_dot(poset))

doc = export_json(poset)
print(f"JSON export round-trips: {poset_from_json(doc) == poset}")
