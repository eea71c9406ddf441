"""Exact scalars and matrices.

``DeltaScalar`` is a polynomial in the formal parameter delta with rational
coefficients.  Matrices are plain lists of rows whose entries are ``int``,
``Fraction`` or ``DeltaScalar``; every routine here returns fresh lists and
never mutates its input.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rational = Union[int, Fraction]
Matrix = list[list]


class DeltaScalar:
    """Polynomial in delta over Q, stored densely by degree with no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] | Mapping[int, Rational] = ()):
        if isinstance(coeffs, Mapping):
            size = max(coeffs, default=-1) + 1
            dense = [Fraction(0)] * size
            for deg, c in coeffs.items():
                if deg < 0:
                    raise ValueError("negative degree")
                dense[deg] += Fraction(c)
        else:
            dense = [Fraction(c) for c in coeffs]
        while dense and dense[-1] == 0:
            dense.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(dense)

    @classmethod
    def const(cls, c: Rational) -> DeltaScalar:
        return cls((c,))

    @classmethod
    def monomial(cls, deg: int, c: Rational = 1) -> DeltaScalar:
        return cls([0] * deg + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant())
        return hash(self.coeffs)

    def __add__(self, other) -> DeltaScalar:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return DeltaScalar([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> DeltaScalar:
        return DeltaScalar([-c for c in self.coeffs])

    def __sub__(self, other) -> DeltaScalar:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> DeltaScalar:
        return (-self) + other

    def __mul__(self, other) -> DeltaScalar:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return DeltaScalar(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> DeltaScalar:
        if e < 0:
            raise ValueError("negative power")
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __truediv__(self, other) -> DeltaScalar:
        q, r = self.divmod(_lift(other))
        if r:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def divmod(self, other: DeltaScalar) -> tuple[DeltaScalar, DeltaScalar]:
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return ZERO, self
        quot = [Fraction(0)] * (dq + 1)
        for shift in range(dq, -1, -1):
            c = rem[shift + len(other.coeffs) - 1] / lead
            quot[shift] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[shift + j] -= c * y
        return DeltaScalar(quot), DeltaScalar(rem)

    def __call__(self, q: Rational) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __repr__(self) -> str:
        return f"DeltaScalar({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def _lift(x) -> DeltaScalar:
    if isinstance(x, DeltaScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return DeltaScalar((x,))
    return NotImplemented


ZERO = DeltaScalar()
ONE = DeltaScalar((1,))
DELTA = DeltaScalar((0, 1))


def specialize(p: DeltaScalar | Rational, q: Rational) -> Fraction:
    """Evaluate a delta-polynomial at delta = q."""
    if isinstance(p, DeltaScalar):
        return p(q)
    return Fraction(p)


def delta_power(c: int, delta: Rational | None = None) -> DeltaScalar | Fraction:
    """delta**c, symbolic when ``delta`` is None."""
    if delta is None:
        return DeltaScalar.monomial(c)
    return Fraction(delta) ** c


def format_poly(p: DeltaScalar | Rational) -> str:
    """Render as e.g. ``3/2*d^2 - d + 1``."""
    if not isinstance(p, DeltaScalar):
        return str(Fraction(p))
    if not p:
        return "0"
    pieces = []
    for deg in range(p.degree, -1, -1):
        c = p.coeffs[deg]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            mono = "d" if deg == 1 else f"d^{deg}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        pieces.append((sign, body))
    head_sign, head = pieces[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\*?)?(d(?:\^(\d+))?)?$")


def parse_poly(text: str) -> DeltaScalar:
    """Inverse of ``format_poly``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, Fraction] = {}
    for sign, term in re.findall(r"([+-])([^+-]+)", s):
        m = _TERM.match(term)
        if not m or not (m.group(1) or m.group(2)):
            raise ValueError(f"bad term {term!r} in {text!r}")
        c = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        deg = 0 if not m.group(2) else int(m.group(3) or 1)
        coeffs[deg] = coeffs.get(deg, Fraction(0)) + (c if sign == "+" else -c)
    return DeltaScalar(coeffs)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


# ---------------------------------------------------------------------------
# dense matrices


def zeros(rows: int, cols: int, zero=0) -> Matrix:
    return [[zero] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ValueError("dimension mismatch")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for l, x in enumerate(row):
            if x:
                brow = b[l]
                for j in range(cols):
                    if brow[j]:
                        acc[j] = acc[j] + x * brow[j]
        out.append(acc)
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def kron(a: Matrix, b: Matrix) -> Matrix:
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def trace(m: Matrix):
    acc = 0
    for i, row in enumerate(m):
        acc = acc + row[i]
    return acc


def mat_specialize(m: Matrix, q: Rational) -> Matrix:
    return [[specialize(x, q) for x in row] for row in m]


def _echelon(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q plus pivot columns."""
    rows = [[Fraction(x) for x in row] for row in m]
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank_of(m: Matrix) -> int:
    """Rank over Q by Gauss-Jordan elimination (column-by-column pivots)."""
    if not m or not m[0]:
        return 0
    return len(_echelon(m)[1])


def rank_by_rows(m: Matrix) -> int:
    """Rank over Q eliminating row by row, pivoting on the first nonzero entry.

    Independent of :func:`rank_of`'s pivot order; used as a cross-check.
    """
    basis: dict[int, list[Fraction]] = {}
    for row in m:
        v = [Fraction(x) for x in row]
        while True:
            lead = next((j for j, x in enumerate(v) if x != 0), None)
            if lead is None:
                break
            if lead not in basis:
                basis[lead] = v
                break
            b = basis[lead]
            f = v[lead] / b[lead]
            v = [x - f * y for x, y in zip(v, b)]
    return len(basis)


def nullspace(m: Matrix) -> list[list[Fraction]]:
    """Basis of {x : m x = 0} over Q."""
    ncols = len(m[0]) if m else 0
    if not m:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    rows, pivots = _echelon(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(v)
    return basis


class Inconsistent(ValueError):
    """The linear system has no solution."""


def solve(m: Matrix, b: Sequence[Rational]) -> list[Fraction]:
    """One exact solution of m x = b; raises :class:`Inconsistent` otherwise."""
    if len(m) != len(b):
        raise ValueError("dimension mismatch")
    ncols = len(m[0]) if m else 0
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    rows, pivots = _echelon(aug)
    if ncols in pivots:
        raise Inconsistent("system is inconsistent")
    x = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        x[p] = rows[r][ncols]
    return x


def inverse(m: Matrix) -> list[list[Fraction]]:
    n = len(m)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    rows, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in rows[:n]]


# ---------------------------------------------------------------------------
# sparse elimination


def sparse_rank(rows: Iterable[Mapping[int, Rational]]) -> int:
    """Rank of a sparse system given as {column: value} rows.

    Rows are reduced one at a time against pivots keyed by their smallest
    column, so two-term rows stay two-term; the commutant systems built from
    monomial matrices never fill in.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = 1 / row[lead]
                pivots[lead] = {c: v * inv for c, v in row.items()}
                break
            f = row[lead]
            for c, v in piv.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def commutant_dimension(gens: Sequence[Matrix]) -> int:
    """dim {X : X A = A X for every A in gens}, over Q."""
    if not gens:
        raise ValueError("need at least one generator")
    d = len(gens[0])
    if any(len(a) != d or any(len(r) != d for r in a) for a in gens):
        raise ValueError("generators must be square of equal size")

    def var(i: int, j: int) -> int:
        return i * d + j

    def equations():
        for a in gens:
            nz_cols = [[(l, a[l][j]) for l in range(d) if a[l][j]] for j in range(d)]
            nz_rows = [[(l, a[i][l]) for l in range(d) if a[i][l]] for i in range(d)]
            for i in range(d):
                for j in range(d):
                    # (XA - AX)_{ij}
                    row: dict[int, Fraction] = {}
                    for l, v in nz_cols[j]:
                        key = var(i, l)
                        row[key] = row.get(key, 0) + v
                    for l, v in nz_rows[i]:
                        key = var(l, j)
                        row[key] = row.get(key, 0) - v
                    if any(row.values()):
                        yield row

    return d * d - sparse_rank(equations())


# ---------------------------------------------------------------------------
# polynomial matrices


def bareiss_rank(m: Matrix) -> int:
    """Rank over Q(delta) of a matrix of DeltaScalar entries, fraction-free.

    Every division performed is exact (Sylvester's identity), so entries stay
    polynomials throughout.
    """
    rows = [[x if isinstance(x, DeltaScalar) else DeltaScalar.const(x) for x in row] for row in m]
    if not rows:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    prev = ONE
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            lead = rows[i][c]
            rows[i] = [(piv * rows[i][j] - lead * rows[r][j]) / prev if j > c else ZERO
                       for j in range(ncols)]
        prev = piv
        r += 1
        if r == nrows:
            break
    return r
