"""The partition algebra P_k(delta) and its subalgebras I(X, Y, xi)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .diagrams import (
    Diagram,
    SetPartition,
    canonical_set_partition,
    format_diagram,
    identity,
    parse_diagram,
    restrict,
    vconcat,
)
from .exactlinalg import ONE, DeltaScalar, Rational, delta_power, format_poly, parse_poly


class AlgebraElement:
    """Finite linear combination of k x k diagrams with delta-polynomial
    (or rational, once specialized) coefficients."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[Diagram, DeltaScalar | Rational] = ()):
        self.k = k
        clean: dict[Diagram, DeltaScalar | Rational] = {}
        for d, c in dict(terms).items():
            if d.k != k or d.l != k:
                raise ValueError(f"diagram {d} is not in A_{k}")
            if c:
                clean[d] = c
        self.terms = dict(sorted(clean.items(), key=lambda kv: kv[0].labels))

    @classmethod
    def basis(cls, d: Diagram, coeff: DeltaScalar | Rational = ONE) -> AlgebraElement:
        return cls(d.k, {d: coeff})

    @classmethod
    def one(cls, k: int) -> AlgebraElement:
        return cls.basis(identity(k))

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        _check_k(self, other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, 0) + c
        return AlgebraElement(self.k, terms)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.k, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, c) -> AlgebraElement:
        return AlgebraElement(self.k, {d: c * x for d, x in self.terms.items()})

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.k, tuple(self.terms.items())))

    def specialize(self, q: Rational) -> AlgebraElement:
        return AlgebraElement(
            self.k,
            {d: c(q) if isinstance(c, DeltaScalar) else Fraction(c) for d, c in self.terms.items()},
        )

    def __repr__(self) -> str:
        return f"AlgebraElement(k={self.k}, {len(self.terms)} terms)"

    def __str__(self) -> str:
        return format_element(self)


def _check_k(a: AlgebraElement, b: AlgebraElement) -> None:
    if a.k != b.k:
        raise ValueError(f"strand mismatch: P_{a.k} vs P_{b.k}")


def diagram_product(d1: Diagram, d2: Diagram, delta: Rational | None = None):
    """d1 d2 = delta^c (d1 o d2); returns (coefficient, diagram)."""
    d, c = vconcat(d1, d2)
    return delta_power(c, delta), d


def multiply(a: AlgebraElement, b: AlgebraElement, delta: Rational | None = None) -> AlgebraElement:
    """Bilinear extension of the diagram product (symbolic delta unless given)."""
    _check_k(a, b)
    terms: dict[Diagram, object] = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            w, d = diagram_product(d1, d2, delta)
            terms[d] = terms.get(d, 0) + c1 * c2 * w
    return AlgebraElement(a.k, terms)


def format_element(a: AlgebraElement) -> str:
    if not a.terms:
        return "0"
    return "\n".join(f"{format_poly(c)} * {format_diagram(d)}" for d, c in a.terms.items())


def parse_element(text: str) -> AlgebraElement:
    """Inverse of ``format_element``: one ``coeff * diagram`` per line."""
    terms: dict[Diagram, DeltaScalar] = {}
    k = None
    for line in text.strip().splitlines():
        line = line.strip()
        if not line or line == "0":
            continue
        coeff, bracket, diag = line.partition("[")
        coeff = coeff.strip()
        if not bracket or not coeff.endswith("*"):
            raise ValueError(f"expected 'coeff * diagram': {line!r}")
        coeff = coeff[:-1].strip()
        d = parse_diagram("[" + diag)
        k = d.k if k is None else k
        terms[d] = terms.get(d, 0) + parse_poly(coeff)
    return AlgebraElement(k or 0, terms)


# ---------------------------------------------------------------------------
# subalgebras I(X, Y, xi)


@dataclass(frozen=True)
class SubalgebraSpec:
    k: int
    X: frozenset[int]
    Y: frozenset[int]
    xi: SetPartition = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "X", frozenset(self.X))
        object.__setattr__(self, "Y", frozenset(self.Y))
        object.__setattr__(self, "xi", canonical_set_partition(self.xi))
        if self.X & self.Y:
            raise ValueError("X and Y must be disjoint")
        if not (self.X | self.Y) <= set(range(1, self.k + 1)):
            raise ValueError("X and Y must lie in [k]")
        if {x for K in self.xi for x in K} != set(self.X):
            raise ValueError("xi must be a set partition of X")

    @property
    def Z(self) -> tuple[int, ...]:
        return tuple(z for z in range(1, self.k + 1) if z not in self.X and z not in self.Y)


def subalgebra_contains(spec: SubalgebraSpec, d: Diagram) -> bool:
    if d.k != spec.k or d.l != spec.k:
        return False
    wanted = {tuple(K) + tuple(-x for x in K) for K in spec.xi}
    wanted |= {(y,) for y in spec.Y} | {(-y,) for y in spec.Y}
    seen = set()
    for t, b in d.blocks():
        block = t + tuple(-j for j in b)
        if any(v in spec.X or v in spec.Y for v in t) or any(j in spec.X or j in spec.Y for j in b):
            if block not in wanted:
                return False
            seen.add(block)
        else:
            if not (t and b):
                return False
    return seen == wanted


def dual_iso(spec: SubalgebraSpec, d: Diagram, delta: Rational) -> tuple[Diagram, Fraction]:
    """Image of d in the monoid algebra of I_Z^*: (restriction to Z u Z', delta^|Y|).

    Products inside I(X, Y, xi) pick up delta^|Y| from the Y singletons, so
    the factor delta^|Y| (not its inverse) makes this multiplicative.
    """
    if delta == 0:
        raise ZeroDivisionError("the rescaling isomorphism needs delta != 0")
    if not subalgebra_contains(spec, d):
        raise ValueError(f"{d} is not in I(X, Y, xi)")
    return restrict(d, spec.Z), Fraction(delta) ** len(spec.Y)


def lift_from_Z(spec: SubalgebraSpec, d: Diagram) -> Diagram:
    """The unique element of I(X, Y, xi) whose restriction to Z u Z' is d."""
    Z = spec.Z
    if d.k != len(Z) or d.l != len(Z):
        raise ValueError("diagram size does not match |Z|")
    blocks = [list(K) + [-x for x in K] for K in spec.xi]
    blocks += [[y] for y in spec.Y] + [[-y] for y in spec.Y]
    for t, b in d.blocks():
        blocks.append([Z[i - 1] for i in t] + [-Z[j - 1] for j in b])
    return Diagram.from_blocks(spec.k, spec.k, blocks)


def element(k: int, diagrams: Iterable[tuple[Diagram, DeltaScalar | Rational]]) -> AlgebraElement:
    terms: dict[Diagram, object] = {}
    for d, c in diagrams:
        terms[d] = terms.get(d, 0) + c
    return AlgebraElement(k, terms)
