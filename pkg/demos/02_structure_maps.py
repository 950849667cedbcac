#!/usr/bin/env python3
"""Restriction, transfer, and the multiplicative norm, cross-checked
against brute-force constructions on explicit G-sets.

The norm is computed by an inductive recursion on coefficients; the same
map has a one-line description on ghost coordinates, and a slow ground
truth as the set of equivariant maps Map_K(H, X).  All three agree.
"""

from tambara import (
    BurnsideElement,
    decompose,
    ghost,
    map_set,
    norm,
    norm_ghost,
    realize,
    restrict,
    transfer,
)

x = BurnsideElement(6, {2: 1})  # the 3-point set C_6/C_2
print(f"x = {x}, marks {ghost(x).as_tuple()}")

print()
print("Restriction forgets part of the action:")
print(f"  res to C_2: {restrict(x, 2)}")
print(f"  res to C_3: {restrict(x, 3)}")
print(f"  res to e:   {restrict(x, 1)}")

print()
print("Transfer induces up, preserving stabilizers:")
y = BurnsideElement(2, {1: 1})
print(f"  tr of {y} from C_2 to C_6: {transfer(y, 6)}")

print()
print("The norm is multiplicative induction.  For m points with trivial")
print("action, N to C_q is the set of q-tuples with the rotation action:")
for m, q in ((2, 2), (2, 3), (3, 2)):
    src = m * BurnsideElement.unit(1)
    via_recursion = norm(src, q)
    via_maps = decompose(map_set(q, 1, realize(src)))
    via_ghost = norm_ghost(ghost(src), q)
    print(f"  N({m} pts -> C_{q}) = {via_recursion}")
    print(f"    map-set oracle agrees: {via_maps == via_recursion}")
    print(f"    ghost route agrees:    {via_ghost == ghost(via_recursion)}")

print()
print("A bigger one, still exact integers all the way:")
src = BurnsideElement(2, {1: 2, 2: 1})  # 5 points at level 2
nm = norm(src, 12)
print(f"  N({src} -> C_12) = {nm}")
oracle = decompose(map_set(12, 2, realize(src)))
print(f"  brute force over {realize(src).size}**6 maps agrees: {oracle == nm}")

print()
print("Norms compose along towers of subgroups:")
print(f"  N(N(src -> 4) -> 12) == N(src -> 12): "
      f"{norm(norm(src, 4), 12) == norm(src, 12)}")
