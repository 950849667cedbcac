"""Burnside rings of cyclic groups in the transitive basis.

An element of A(C_h) is a formal integer combination of the transitive
sets C_h/C_k for k | h, stored sparsely with zero coefficients dropped so
that structural equality is mathematical equality.  Marks (fixed-point
counts) embed A(C_h) into the ghost ring prod_{i|h} Z; the embedding is
inverted by Moebius inversion over the divisor lattice, with an exact
integrality check recognizing the image.

All coefficients are Python ints: norms raise marks to large powers and
must never overflow.
"""

from __future__ import annotations

from math import gcd

from .lattice import divisors, moebius, require_divides, check_prime_or_zero


class NotInGhostImage(ValueError):
    """A ghost vector that is not in the image of the mark embedding."""

    def __init__(self, divisor: int, message: str):
        super().__init__(message)
        self.divisor = divisor


class BurnsideElement:
    """Sparse element of A(C_level) in the transitive basis.

    ``coeffs[k]`` is the multiplicity of the orbit C_level/C_k.  Supports
    +, -, unary -, * (ring product via the t-rule and int scaling), ==,
    and hashing.
    """

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs: dict[int, int] | None = None):
        if level < 1:
            raise ValueError(f"level must be a positive integer, got {level}")
        clean: dict[int, int] = {}
        for k, m in (coeffs or {}).items():
            require_divides(k, level, "orbit stabilizer")
            if m:
                clean[k] = m
        self.level = level
        self.coeffs = clean

    @classmethod
    def zero(cls, level: int) -> "BurnsideElement":
        return cls(level)

    @classmethod
    def unit(cls, level: int) -> "BurnsideElement":
        """The one-point set C_h/C_h, the multiplicative unit."""
        return cls(level, {level: 1})

    @classmethod
    def transitive(cls, level: int, k: int) -> "BurnsideElement":
        """The orbit C_level/C_k."""
        return cls(level, {k: 1})

    def mark(self, i: int) -> int:
        """Number of C_i-fixed points: sum over k with i | k of m_k * (h/k)."""
        require_divides(i, self.level, "mark subgroup")
        h = self.level
        return sum((h // k) * m for k, m in self.coeffs.items() if k % i == 0)

    def mark_mod(self, i: int, p: int) -> int:
        """The mark at C_i reduced mod p; p = 0 leaves it in Z."""
        check_prime_or_zero(p)
        v = self.mark(i)
        return v % p if p else v

    def size(self) -> int:
        """Virtual cardinality, the mark at the trivial subgroup."""
        return self.mark(1)

    def _require_same_level(self, other: "BurnsideElement") -> None:
        if self.level != other.level:
            raise ValueError(
                f"level mismatch: A(C_{self.level}) vs A(C_{other.level})"
            )

    def __add__(self, other):
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        self._require_same_level(other)
        acc = dict(self.coeffs)
        for k, m in other.coeffs.items():
            acc[k] = acc.get(k, 0) + m
        return BurnsideElement(self.level, acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return BurnsideElement(self.level, {k: -m for k, m in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return BurnsideElement(
                self.level, {k: other * m for k, m in self.coeffs.items()}
            )
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        self._require_same_level(other)
        # Transitive products follow t_a x t_b = gcd(a,b) t_lcm(a,b) with
        # t_m = C_h/C_{h/m}; in stabilizer coordinates the orbit C_gcd(j,k)
        # appears gcd(h/j, h/k) times.
        h = self.level
        acc: dict[int, int] = {}
        for j, mj in self.coeffs.items():
            for k, mk in other.coeffs.items():
                key = gcd(j, k)
                acc[key] = acc.get(key, 0) + mj * mk * gcd(h // j, h // k)
        return BurnsideElement(h, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, BurnsideElement)
            and self.level == other.level
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.level, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        items = ", ".join(f"{k}: {m}" for k, m in sorted(self.coeffs.items()))
        return f"BurnsideElement(level={self.level}, coeffs={{{items}}})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            m = self.coeffs[k]
            orbit = f"C{self.level}/C{k}" if k > 1 else f"C{self.level}/e"
            if self.level == 1:
                orbit = "e/e"
            parts.append(f"{m}*{orbit}" if m != 1 else orbit)
        return " + ".join(parts).replace("+ -", "- ")


def from_t(level: int, m: int) -> BurnsideElement:
    """The transitive set t_m of order m at the given level.

    t_m = C_h/C_{h/m}: an m-element orbit has stabilizer of order h/m.
    """
    require_divides(m, level, "orbit size")
    return BurnsideElement(level, {level // m: 1})


class GhostVector:
    """Mark tuple of an element of A(C_level), indexed by all i | level."""

    __slots__ = ("level", "values")

    def __init__(self, level: int, values: dict[int, int]):
        divs = divisors(level)
        if sorted(values) != divs:
            raise ValueError(
                f"ghost vector at level {level} must have exactly the keys {divs}"
            )
        self.level = level
        self.values = {i: int(values[i]) for i in divs}

    def pointwise_add(self, other: "GhostVector") -> "GhostVector":
        if self.level != other.level:
            raise ValueError("level mismatch")
        return GhostVector(
            self.level, {i: v + other.values[i] for i, v in self.values.items()}
        )

    def pointwise_mul(self, other: "GhostVector") -> "GhostVector":
        if self.level != other.level:
            raise ValueError("level mismatch")
        return GhostVector(
            self.level, {i: v * other.values[i] for i, v in self.values.items()}
        )

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.values[i] for i in divisors(self.level))

    def __eq__(self, other):
        return (
            isinstance(other, GhostVector)
            and self.level == other.level
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.level, self.as_tuple()))

    def __repr__(self):
        return f"GhostVector(level={self.level}, values={self.values})"


def ghost(x: BurnsideElement) -> GhostVector:
    """The injective mark embedding: all marks of x at once."""
    return GhostVector(x.level, {i: x.mark(i) for i in divisors(x.level)})


def unghost(v: GhostVector) -> BurnsideElement:
    """Invert the mark embedding by Moebius inversion.

    m_j = (sum over j | i | h of moebius(j, i) * v[i]) / (h/j); every
    division must be exact, otherwise v is not the ghost of any element
    and NotInGhostImage names the first divisor (ascending) that fails.
    """
    h = v.level
    divs = divisors(h)
    coeffs = {}
    for j in divs:
        total = sum(moebius(j, i) * v.values[i] for i in divs if i % j == 0)
        q, r = divmod(total, h // j)
        if r:
            raise NotInGhostImage(
                j, f"not a ghost vector: m_{j} = {total}/{h // j} is not an integer"
            )
        if q:
            coeffs[j] = q
    return BurnsideElement(h, coeffs)


def to_vector(x: BurnsideElement) -> list[int]:
    """Coefficients of x over the ascending divisor basis."""
    return [x.coeffs.get(k, 0) for k in divisors(x.level)]


def from_vector(level: int, vec) -> BurnsideElement:
    divs = divisors(level)
    if len(vec) != len(divs):
        raise ValueError(f"expected {len(divs)} coordinates at level {level}")
    return BurnsideElement(level, dict(zip(divs, vec)))


def element_to_json(x: BurnsideElement) -> dict:
    """JSON form {"level": h, "coeffs": {"k": m_k, ...}} with string keys."""
    return {
        "level": x.level,
        "coeffs": {str(k): x.coeffs[k] for k in sorted(x.coeffs)},
    }


def element_from_json(obj: dict) -> BurnsideElement:
    if not isinstance(obj, dict) or "level" not in obj:
        raise ValueError("element JSON must be an object with 'level' and 'coeffs'")
    coeffs = {int(k): int(m) for k, m in obj.get("coeffs", {}).items()}
    return BurnsideElement(int(obj["level"]), coeffs)


def ghost_to_json(v: GhostVector) -> dict:
    """JSON form {"level": h, "marks": {"i": v_i, ...}}."""
    return {"level": v.level, "marks": {str(i): v.values[i] for i in sorted(v.values)}}


def ghost_from_json(obj: dict) -> GhostVector:
    if not isinstance(obj, dict) or "level" not in obj:
        raise ValueError("ghost JSON must be an object with 'level' and 'marks'")
    marks = {int(i): int(val) for i, val in obj.get("marks", {}).items()}
    return GhostVector(int(obj["level"]), marks)
