"""The prime spectrum of the Burnside functor of C_n over a prime set.

Containment between the ideals (C_i, p) and (C_j, q) is decided by a
closed decision table (divisibility of p-free parts); the same question
is also decided semantically, by comparing the exact kernel lattices at
every level, and the two routes are cross-validated in the test suite.
Equal ideals are merged into canonical points (the p-free representative
of each class) before the containment matrix is built, so the relation
is a partial order.  Exports: Graphviz DOT of the Hasse diagram and a
JSON round-trip encoding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .ideals import IdealSpec, kernel_lattice
from .lattice import (
    CyclicGroupCtx,
    check_prime_or_zero,
    divisors,
    is_prime,
    o_p,
    prime_factors,
)


def contains(a: IdealSpec, b: IdealSpec) -> bool:
    """Symbolic containment: is the ideal a inside the ideal b?

    Decision table, with i = a.c and j = b.c:
      (0, 0):        j | i  (dual to the subgroup lattice);
      (0, q prime):  o_q(j) | o_q(i)  (through the chain (i,0) in (i,q) in (j,q));
      (p prime, 0):  never;
      (p, q primes): p = q and o_p(j) | o_p(i).
    """
    if a.n != b.n:
        raise ValueError(f"mismatched ambient groups C_{a.n} vs C_{b.n}")
    if b.p == 0:
        return a.p == 0 and a.c % b.c == 0
    if a.p not in (0, b.p):
        return False
    return o_p(a.c, b.p) % o_p(b.c, b.p) == 0


def contains_semantic(a: IdealSpec, b: IdealSpec) -> bool:
    """Containment decided on the exact kernel lattices, level by level."""
    if a.n != b.n:
        raise ValueError(f"mismatched ambient groups C_{a.n} vs C_{b.n}")
    return all(
        kernel_lattice(b, h).contains_lattice(kernel_lattice(a, h))
        for h in divisors(a.n)
    )


def default_primes(n: int) -> list[int]:
    """Zero, the primes dividing n, and the smallest prime not dividing n.

    This set realizes the longest containment chain in the spectrum.
    """
    ps = set(prime_factors(n)) | {0}
    q = 2
    while n % q == 0 or not is_prime(q):
        q += 1
    ps.add(q)
    return sorted(ps)


def _canonical_classes(n: int, p: int) -> list[tuple[int, tuple[int, ...]]]:
    """Canonical representative and merged class members for one p-layer."""
    if p == 0 or n % p != 0:
        return [(d, (d,)) for d in divisors(n)]
    reps = divisors(o_p(n, p))
    return [
        (r, tuple(d for d in divisors(n) if o_p(d, p) == r))
        for r in reps
    ]


@dataclass(frozen=True)
class SpectrumPoset:
    """Canonical points of the spectrum with their containment matrix."""

    n: int
    primes: tuple[int, ...]
    points: tuple[IdealSpec, ...]
    merged: tuple[tuple[int, ...], ...]
    relation: tuple[tuple[bool, ...], ...]


def enumerate_spectrum(ctx: CyclicGroupCtx, primes) -> SpectrumPoset:
    """All ideals (C_c, p) over the prime set, one point per equality class.

    For p = 0 or p not dividing n every divisor is its own class; for
    p | n classes are keyed by the p-free part, represented by the p-free
    divisor itself.
    """
    if not primes:
        raise ValueError("the prime set must be non-empty")
    ps = sorted({check_prime_or_zero(int(p)) for p in primes})
    pts: list[tuple[IdealSpec, tuple[int, ...]]] = []
    for p in ps:
        for rep, merged in _canonical_classes(ctx.n, p):
            pts.append((IdealSpec(ctx.n, rep, p), merged))
    pts.sort(key=lambda t: (t[0].c, t[0].p))
    points = tuple(s for s, _ in pts)
    merged = tuple(m for _, m in pts)
    relation = tuple(
        tuple(contains(a, b) for b in points) for a in points
    )
    for i in range(len(points)):
        for j in range(len(points)):
            if i != j and relation[i][j] and relation[j][i]:
                raise AssertionError(
                    f"distinct canonical points {points[i].label} and "
                    f"{points[j].label} contain each other"
                )
    return SpectrumPoset(ctx.n, tuple(ps), points, merged, relation)


def krull_dimension(poset) -> int:
    """Length (edge count) of the longest strict chain of the relation."""
    rel = poset.relation
    npts = len(rel)
    memo: dict[int, int] = {}

    def longest_from(i: int) -> int:
        if i not in memo:
            memo[i] = max(
                (1 + longest_from(j) for j in range(npts) if j != i and rel[i][j]),
                default=0,
            )
        return memo[i]

    return max((longest_from(i) for i in range(npts)), default=0)


# ---------------------------------------------------------------------------
# Dress's spectrum of the Burnside ring, for comparison
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DressPoint:
    """The prime ideal ker(phi^{C_d} mod p) of the ring A(C_n)."""

    d: int
    p: int

    @property
    def label(self) -> str:
        return f"ker_phi^{{C_{self.d}}}_{self.p}"


def dress_contains(a: DressPoint, b: DressPoint) -> bool:
    """Containment of mark kernels: equal classes, or zero below prime."""
    if b.p == 0:
        return a.p == 0 and a.d == b.d
    if a.p == 0:
        return o_p(a.d, b.p) == o_p(b.d, b.p)
    return a.p == b.p and o_p(a.d, a.p) == o_p(b.d, b.p)


@dataclass(frozen=True)
class DressSpectrum:
    n: int
    primes: tuple[int, ...]
    points: tuple[DressPoint, ...]
    merged: tuple[tuple[int, ...], ...]
    relation: tuple[tuple[bool, ...], ...]


def dress_spectrum(ctx: CyclicGroupCtx, primes) -> DressSpectrum:
    """Spec of the Burnside ring A(C_n) over the prime set, deduplicated
    by the same p-free classes as the Tambara spectrum."""
    if not primes:
        raise ValueError("the prime set must be non-empty")
    ps = sorted({check_prime_or_zero(int(p)) for p in primes})
    pts: list[tuple[DressPoint, tuple[int, ...]]] = []
    for p in ps:
        for rep, merged in _canonical_classes(ctx.n, p):
            pts.append((DressPoint(rep, p), merged))
    pts.sort(key=lambda t: (t[0].d, t[0].p))
    points = tuple(s for s, _ in pts)
    merged = tuple(m for _, m in pts)
    relation = tuple(
        tuple(dress_contains(a, b) for b in points) for a in points
    )
    return DressSpectrum(ctx.n, tuple(ps), points, merged, relation)


# ---------------------------------------------------------------------------
# Exports
# ---------------------------------------------------------------------------


def hasse_edges(poset) -> list[tuple[int, int]]:
    """Transitive reduction of the strict containment relation."""
    rel = poset.relation
    npts = len(rel)
    edges = []
    for i in range(npts):
        for j in range(npts):
            if i == j or not rel[i][j]:
                continue
            covered = any(
                k not in (i, j) and rel[i][k] and rel[k][j] for k in range(npts)
            )
            if not covered:
                edges.append((i, j))
    return edges


def _node_name(spec: IdealSpec) -> str:
    return f"pq_{spec.c}_{spec.p}"


def _node_label(poset: SpectrumPoset, idx: int) -> str:
    p = poset.points[idx].p
    return " = ".join(f"p_{{C_{d},{p}}}" for d in poset.merged[idx])


def export_dot(poset: SpectrumPoset) -> str:
    """Graphviz digraph of the Hasse diagram; an arrow a -> b means the
    ideal a is contained in the ideal b."""
    lines = ["digraph tambara_spectrum {", "  rankdir=BT;"]
    for i, spec in enumerate(poset.points):
        lines.append(f'  {_node_name(spec)} [label="{_node_label(poset, i)}"];')
    for i, j in sorted(hasse_edges(poset)):
        lines.append(f"  {_node_name(poset.points[i])} -> {_node_name(poset.points[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(poset: SpectrumPoset) -> str:
    """JSON encoding of the poset: points with merged classes plus the
    Hasse edges as index pairs."""
    doc = {
        "n": poset.n,
        "primes": list(poset.primes),
        "points": [
            {"c": spec.c, "p": spec.p, "merged": list(poset.merged[i])}
            for i, spec in enumerate(poset.points)
        ],
        "hasse": [list(e) for e in sorted(hasse_edges(poset))],
    }
    return json.dumps(doc, indent=2) + "\n"


def poset_from_json(text: str) -> SpectrumPoset:
    """Rebuild a SpectrumPoset from its JSON export."""
    doc = json.loads(text)
    n = int(doc["n"])
    points = tuple(IdealSpec(n, int(pt["c"]), int(pt["p"])) for pt in doc["points"])
    merged = tuple(tuple(int(d) for d in pt["merged"]) for pt in doc["points"])
    relation = tuple(tuple(contains(a, b) for b in points) for a in points)
    return SpectrumPoset(n, tuple(int(p) for p in doc["primes"]), points, merged, relation)
