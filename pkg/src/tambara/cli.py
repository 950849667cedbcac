"""Command-line front end.

Subcommands: spectrum, contains, member, map, ghost, unghost, gens,
probe, oracle, dress.  Elements are passed as JSON
({"level": h, "coeffs": {"k": m}}) or as the shorthand t<m>@<h> for the
transitive set of order m at level h.  Exit codes: 0 success, 1 domain
error (machine-readable JSON on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .burnside import (
    BurnsideElement,
    NotInGhostImage,
    element_from_json,
    element_to_json,
    from_t,
    ghost,
    ghost_from_json,
    ghost_to_json,
    unghost,
)
from .gsets import (
    BudgetExceeded,
    NegativeCoefficient,
    decompose,
    fixed_points,
    induce,
    map_set,
    realize,
)
from .ideals import (
    IdealSpec,
    box_elements,
    level_generators,
    member,
    primality_probe,
)
from .lattice import CyclicGroupCtx, divisors, require_divides
from .maps import norm, restrict, transfer
from .spectrum import (
    contains,
    default_primes,
    dress_spectrum,
    enumerate_spectrum,
    export_dot,
    export_json,
    hasse_edges,
    krull_dimension,
)


def parse_element(text: str) -> BurnsideElement:
    """Parse an element from JSON or from the shorthand t<m>@<h>."""
    text = text.strip()
    if text.startswith("t") and "@" in text and not text.startswith("{"):
        m_str, _, h_str = text[1:].partition("@")
        try:
            return from_t(int(h_str), int(m_str))
        except ValueError as exc:
            raise ValueError(f"bad t-shorthand {text!r}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"element is neither t<m>@<h> nor JSON: {exc}") from exc
    return element_from_json(obj)


def parse_spec(text: str, n: int) -> IdealSpec:
    """Parse an ideal name of the form c=<d>,p=<p>."""
    fields = {}
    for part in text.split(","):
        key, _, value = part.partition("=")
        fields[key.strip()] = value.strip()
    if set(fields) != {"c", "p"}:
        raise ValueError(f"spec must look like c=<d>,p=<p>, got {text!r}")
    return IdealSpec(n, int(fields["c"]), int(fields["p"]))


def parse_primes(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip() != ""]


def _progress(args, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def cmd_spectrum(args) -> int:
    ctx = CyclicGroupCtx(args.n)
    primes = parse_primes(args.primes) if args.primes else default_primes(args.n)
    poset = enumerate_spectrum(ctx, primes)
    if args.format == "dot":
        sys.stdout.write(export_dot(poset))
    elif args.format == "json":
        sys.stdout.write(export_json(poset))
    else:
        print(
            f"Spec of the Burnside functor of C_{poset.n} over primes "
            f"{list(poset.primes)}: {len(poset.points)} points, "
            f"Krull dimension {krull_dimension(poset)}"
        )
        for i, spec in enumerate(poset.points):
            print(f"  {spec.label}  class={list(poset.merged[i])}")
        print("Hasse edges (a -> b means a contained in b):")
        for i, j in sorted(hasse_edges(poset)):
            print(f"  {poset.points[i].label} -> {poset.points[j].label}")
    return 0


def cmd_contains(args) -> int:
    a = parse_spec(args.a, args.n)
    b = parse_spec(args.b, args.n)
    print("true" if contains(a, b) else "false")
    return 0


def cmd_member(args) -> int:
    spec = parse_spec(args.spec, args.n)
    x = parse_element(args.element)
    print("true" if member(spec, x) else "false")
    return 0


def cmd_map(args) -> int:
    x = parse_element(args.element)
    if x.level != args.src:
        raise ValueError(f"element lives at level {x.level}, not {args.src}")
    if args.n is not None:
        require_divides(args.src, args.n, "source level")
        require_divides(args.dst, args.n, "target level")
    if args.op == "res":
        result = restrict(x, args.dst)
    elif args.op == "tr":
        result = transfer(x, args.dst)
    else:
        result = norm(x, args.dst)
    print(json.dumps(element_to_json(result)))
    return 0


def cmd_ghost(args) -> int:
    x = parse_element(args.element)
    print(json.dumps(ghost_to_json(ghost(x))))
    return 0


def cmd_unghost(args) -> int:
    v = ghost_from_json(json.loads(args.vector))
    print(json.dumps(element_to_json(unghost(v))))
    return 0


def cmd_gens(args) -> int:
    spec = parse_spec(args.spec, args.n)
    level = args.level if args.level is not None else args.n
    gens = level_generators(spec, level)
    print(json.dumps([element_to_json(g) for g in gens]))
    return 0


def cmd_probe(args) -> int:
    primes = parse_primes(args.primes) if args.primes else default_primes(args.n)
    ctx = CyclicGroupCtx(args.n)
    poset = enumerate_spectrum(ctx, primes)
    report = {
        "n": args.n,
        "primes": list(poset.primes),
        "bound": args.bound,
        "max_support": args.support,
        "levels": divisors(args.n),
        "specs": [],
    }
    clean = True
    for spec in poset.points:
        _progress(args, f"probing {spec.label} ...")
        pairs = primality_probe(spec, bound=args.bound, max_support=args.support)
        clean = clean and not pairs
        report["specs"].append(
            {
                "c": spec.c,
                "p": spec.p,
                "counterexamples": [
                    [element_to_json(a), element_to_json(b)] for a, b in pairs
                ],
            }
        )
    report["verdict"] = (
        "no counterexample found at this scale (not a proof of primality)"
        if clean
        else "counterexamples found"
    )
    print(json.dumps(report, indent=2))
    return 0


def cmd_oracle(args) -> int:
    ctx = CyclicGroupCtx(args.n)
    cases = 0
    if args.check == "marks":
        for h in ctx.divisors:
            for x in box_elements(h, 2, 2):
                if any(m < 0 for m in x.coeffs.values()):
                    continue
                s = realize(x)
                for i in divisors(h):
                    if fixed_points(s, i) != x.mark(i):
                        raise AssertionError(f"mark mismatch at {x}, C_{i}")
                    cases += 1
    elif args.check == "transfers":
        for h in ctx.divisors:
            for k in divisors(h):
                for x in box_elements(k, 2, 2):
                    if any(m < 0 for m in x.coeffs.values()):
                        continue
                    if decompose(induce(realize(x), h)) != transfer(x, h):
                        raise AssertionError(f"transfer mismatch at {x} -> C_{h}")
                    cases += 1
    else:
        for h in ctx.divisors:
            for k in divisors(h):
                for x in box_elements(k, 2, 1):
                    if any(m < 0 for m in x.coeffs.values()) or x.size() > 4:
                        continue
                    try:
                        oracle = decompose(map_set(h, k, realize(x)))
                    except BudgetExceeded:
                        continue
                    if oracle != norm(x, h):
                        raise AssertionError(f"norm mismatch at {x} -> C_{h}")
                    cases += 1
    print(f"{args.check}: OK ({cases} cases)")
    return 0


def cmd_dress(args) -> int:
    ctx = CyclicGroupCtx(args.n)
    primes = parse_primes(args.primes) if args.primes else default_primes(args.n)
    spectrum = dress_spectrum(ctx, primes)
    if args.format == "json":
        doc = {
            "n": spectrum.n,
            "primes": list(spectrum.primes),
            "points": [
                {"d": pt.d, "p": pt.p, "merged": list(spectrum.merged[i])}
                for i, pt in enumerate(spectrum.points)
            ],
            "krull_dimension": krull_dimension(spectrum),
        }
        print(json.dumps(doc, indent=2))
    else:
        print(
            f"Spec of the Burnside ring A(C_{spectrum.n}) over primes "
            f"{list(spectrum.primes)}: {len(spectrum.points)} points, "
            f"Krull dimension {krull_dimension(spectrum)}"
        )
        for i, pt in enumerate(spectrum.points):
            print(f"  {pt.label}  class={list(spectrum.merged[i])}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tambara",
        description="Burnside Tambara functor of a cyclic group: structure "
        "maps, ideals, and the prime spectrum.",
    )
    parser.add_argument(
        "--quiet", action="store_true", help="suppress progress output on stderr"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="enumerate the prime spectrum")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--primes", help="comma-separated primes (0 allowed)")
    sp.add_argument("--format", choices=["dot", "json", "table"], default="dot")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("contains", help="symbolic ideal containment")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("a", metavar="A", help="spec c=<d>,p=<p>")
    sp.add_argument("b", metavar="B", help="spec c=<d>,p=<p>")
    sp.set_defaults(func=cmd_contains)

    sp = sub.add_parser("member", help="ideal membership of an element")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--spec", required=True, help="spec c=<d>,p=<p>")
    sp.add_argument("--element", required=True, help="element JSON or t<m>@<h>")
    sp.set_defaults(func=cmd_member)

    sp = sub.add_parser("map", help="apply a structure map")
    sp.add_argument("-n", type=int, default=None)
    sp.add_argument("--op", choices=["res", "tr", "norm"], required=True)
    sp.add_argument("--from", dest="src", type=int, required=True)
    sp.add_argument("--to", dest="dst", type=int, required=True)
    sp.add_argument("--element", required=True)
    sp.set_defaults(func=cmd_map)

    sp = sub.add_parser("ghost", help="marks of an element")
    sp.add_argument("--element", required=True)
    sp.set_defaults(func=cmd_ghost)

    sp = sub.add_parser("unghost", help="invert the mark embedding")
    sp.add_argument("--vector", required=True, help="ghost JSON")
    sp.set_defaults(func=cmd_unghost)

    sp = sub.add_parser("gens", help="ring-theoretic generators of an ideal level")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--spec", required=True)
    sp.add_argument("--level", type=int, default=None)
    sp.set_defaults(func=cmd_gens)

    sp = sub.add_parser("probe", help="search for primality counterexamples")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--bound", type=int, default=2)
    sp.add_argument("--support", type=int, default=2)
    sp.add_argument("--primes")
    sp.set_defaults(func=cmd_probe)

    sp = sub.add_parser("oracle", help="cross-check formulas against G-sets")
    sp.add_argument("--check", choices=["norms", "transfers", "marks"], required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("dress", help="Dress's spectrum of the Burnside ring")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--primes")
    sp.add_argument("--format", choices=["json", "table"], default="table")
    sp.set_defaults(func=cmd_dress)

    return parser


def run(argv=None) -> int:
    """Entry point returning the exit code; stdout/stderr carry the output."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, AssertionError, KeyError,
            NotInGhostImage, NegativeCoefficient, BudgetExceeded) as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(payload), file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
