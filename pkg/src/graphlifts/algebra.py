"""Finite groups, abelian characters, and exact polynomial arithmetic.

Two group kinds are supported: direct products of cyclic groups (elements are
residue tuples) and symmetric groups (elements are one-line permutation
tuples with 1-based images). Character values live in the cyclotomic quotient
ring Z[x]/(Phi_K) so that every comparison is exact integer arithmetic.

Composition order: a*b means "apply a, then b". Both conventions appear in
the literature; this one matches the lift rule s(i,j)*g_a = g_b read left to
right.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product


class AlgebraError(ValueError):
    """Base class for group and ring arithmetic errors."""


class ElementNotInGroup(AlgebraError):
    """An element does not belong to the group it was used with."""


class ModulusMismatch(AlgebraError):
    """Cyclotomic operands have different moduli."""


class NonSquare(AlgebraError):
    """A matrix operation was given a non-square matrix."""


class BadGroupSpec(AlgebraError):
    """Unparseable group description."""


class BadElementText(AlgebraError):
    """Unparseable group element text."""


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AbelianGroup:
    """Direct product Z_{k1} x ... x Z_{kr}; elements are residue tuples."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders or any(k < 1 for k in self.orders):
            raise BadGroupSpec(f"cyclic orders must be positive, got {self.orders}")

    def order(self) -> int:
        return math.prod(self.orders)

    def fiber_size(self) -> int:
        return self.order()

    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.orders)

    def contains(self, e) -> bool:
        return (
            isinstance(e, tuple)
            and len(e) == len(self.orders)
            and all(isinstance(a, int) and 0 <= a < k for a, k in zip(e, self.orders))
        )

    def elements(self) -> list[tuple[int, ...]]:
        """All elements in lexicographic residue order, identity first."""
        return [tuple(t) for t in product(*(range(k) for k in self.orders))]

    def exponent(self) -> int:
        return math.lcm(*self.orders)


@dataclass(frozen=True)
class SymmetricGroup:
    """All permutations of {1..k}; elements are one-line image tuples."""

    degree: int

    def __post_init__(self):
        if self.degree < 1:
            raise BadGroupSpec(f"symmetric group degree must be positive, got {self.degree}")

    def order(self) -> int:
        return math.factorial(self.degree)

    def fiber_size(self) -> int:
        return self.degree

    def identity(self) -> tuple[int, ...]:
        return tuple(range(1, self.degree + 1))

    def contains(self, e) -> bool:
        return (
            isinstance(e, tuple)
            and len(e) == self.degree
            and sorted(e) == list(range(1, self.degree + 1))
        )


GroupSpec = AbelianGroup | SymmetricGroup


def _require_member(gr: GroupSpec, e) -> None:
    if not gr.contains(e):
        raise ElementNotInGroup(f"{e!r} is not an element of {format_group(gr)}")


def compose(gr: GroupSpec, a, b):
    """The group operation a*b (apply a, then b)."""
    _require_member(gr, a)
    _require_member(gr, b)
    if isinstance(gr, AbelianGroup):
        return tuple((x + y) % k for x, y, k in zip(a, b, gr.orders))
    return tuple(b[a[i] - 1] for i in range(gr.degree))


def inverse(gr: GroupSpec, a):
    _require_member(gr, a)
    if isinstance(gr, AbelianGroup):
        return tuple((-x) % k for x, k in zip(a, gr.orders))
    inv = [0] * gr.degree
    for i, img in enumerate(a):
        inv[img - 1] = i + 1
    return tuple(inv)


def perm_matrix(gr: AbelianGroup, g) -> list[list[int]]:
    """Right regular representation: P[i][j] = 1 iff elements[i] * g = elements[j]."""
    if not isinstance(gr, AbelianGroup):
        raise AlgebraError("perm_matrix is defined for abelian groups only")
    _require_member(gr, g)
    elems = gr.elements()
    index = {e: i for i, e in enumerate(elems)}
    size = len(elems)
    m = [[0] * size for _ in range(size)]
    for i, e in enumerate(elems):
        m[i][index[compose(gr, e, g)]] = 1
    return m


# ---------------------------------------------------------------------------
# Text syntax: groups like Z3, Z2xZ4, S3; elements like (0,1), 2, (1,2,3), id
# ---------------------------------------------------------------------------

_GROUP_RE = re.compile(r"^(?:Z\d+(?:xZ\d+)*|S\d+)$")


def parse_group(text: str) -> GroupSpec:
    t = re.sub(r"\s+", "", text)
    if not _GROUP_RE.match(t):
        raise BadGroupSpec(f"cannot parse group spec {text!r} (expected e.g. Z3, Z2xZ4, S3)")
    if t.startswith("S"):
        return SymmetricGroup(int(t[1:]))
    return AbelianGroup(tuple(int(p[1:]) for p in t.split("x")))


def format_group(gr: GroupSpec) -> str:
    if isinstance(gr, AbelianGroup):
        return "x".join(f"Z{k}" for k in gr.orders)
    return f"S{gr.degree}"


def parse_element(gr: GroupSpec, text: str):
    """Parse element text: residue tuple or bare residue for abelian groups,
    disjoint cycles or 'id' for symmetric groups. Whitespace-insensitive."""
    t = re.sub(r"\s+", "", text)
    if isinstance(gr, AbelianGroup):
        if re.fullmatch(r"-?\d+", t):
            if len(gr.orders) != 1:
                raise BadElementText(f"bare residue {text!r} is only valid for a single cyclic factor")
            vals = [int(t)]
        else:
            m = re.fullmatch(r"\((-?\d+(?:,-?\d+)*)\)", t)
            if not m:
                raise BadElementText(f"cannot parse abelian element {text!r}")
            vals = [int(p) for p in m.group(1).split(",")]
        e = tuple(vals)
        if not gr.contains(e):
            raise BadElementText(
                f"element {text!r} is not a valid residue vector for {format_group(gr)}"
            )
        return e
    if t == "id":
        return gr.identity()
    if not re.fullmatch(r"(\(\d+(?:,\d+)+\))+", t):
        raise BadElementText(f"cannot parse permutation {text!r} (expected cycles or 'id')")
    one_line = list(range(1, gr.degree + 1))
    moved: set[int] = set()
    for cyc in re.findall(r"\(([\d,]+)\)", t):
        pts = [int(p) for p in cyc.split(",")]
        if len(set(pts)) != len(pts):
            raise BadElementText(f"cycle ({cyc}) repeats a point")
        for p in pts:
            if not 1 <= p <= gr.degree:
                raise BadElementText(f"point {p} outside 1..{gr.degree} in {text!r}")
            if p in moved:
                raise BadElementText(f"cycles in {text!r} are not disjoint at point {p}")
            moved.add(p)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            one_line[a - 1] = b
    return tuple(one_line)


def format_element(gr: GroupSpec, e) -> str:
    _require_member(gr, e)
    if isinstance(gr, AbelianGroup):
        if len(gr.orders) == 1:
            return str(e[0])
        return "(" + ",".join(str(a) for a in e) + ")"
    seen: set[int] = set()
    cycles = []
    for start in range(1, gr.degree + 1):
        if start in seen or e[start - 1] == start:
            continue
        cyc = [start]
        seen.add(start)
        nxt = e[start - 1]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = e[nxt - 1]
        cycles.append(cyc)
    if not cycles:
        return "id"
    return "".join("(" + ",".join(str(p) for p in c) + ")" for c in cycles)


# ---------------------------------------------------------------------------
# Integer polynomials: plain coefficient lists, index = power
# ---------------------------------------------------------------------------


def poly_trim(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def poly_add(a: list, b: list) -> list:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_neg(a: list) -> list:
    return [-c for c in a]


def poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return poly_trim(out)


def poly_divexact(a: list, b: list) -> list:
    """Exact quotient a / b over the integers; raises if it does not divide."""
    a = list(a)
    b = poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    out = [0] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for k in range(len(out) - 1, -1, -1):
        num = a[k + len(b) - 1]
        if num % lead:
            raise AlgebraError("polynomial division is not exact")
        q = num // lead
        out[k] = q
        if q:
            for j, cb in enumerate(b):
                a[k + j] -= q * cb
    if any(a):
        raise AlgebraError("polynomial division leaves a remainder")
    return poly_trim(out)


def poly_eval(a: list, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_text(a: list) -> str:
    """Bracketed integer list, highest degree first: the CLI output form."""
    if not a:
        return "[0]"
    return "[" + ", ".join(str(c) for c in reversed(a)) + "]"


@lru_cache(maxsize=None)
def cyclotomic_poly(k: int) -> tuple[int, ...]:
    """The k-th cyclotomic polynomial, monic of degree phi(k).

    Computed by exactly dividing x^k - 1 by the product of Phi_d over the
    proper divisors d of k.
    """
    if k < 1:
        raise AlgebraError(f"cyclotomic index must be positive, got {k}")
    if k == 1:
        return (-1, 1)
    xk1 = [0] * (k + 1)
    xk1[0], xk1[k] = -1, 1
    divisor = [1]
    for d in range(1, k):
        if k % d == 0:
            divisor = poly_mul(divisor, list(cyclotomic_poly(d)))
    return tuple(poly_divexact(xk1, divisor))


# ---------------------------------------------------------------------------
# Cyclotomic quotient ring Z[x]/(Phi_K)
# ---------------------------------------------------------------------------


def _cyclo_reduce(modulus: int, coeffs: list[int]) -> tuple[int, ...]:
    phi = list(cyclotomic_poly(modulus))
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[k]
        if c:
            for j in range(len(phi)):
                coeffs[k - deg + j] -= c * phi[j]
    coeffs = coeffs[:deg]
    coeffs += [0] * (deg - len(coeffs))
    return tuple(coeffs)


@dataclass(frozen=True)
class CycloElem:
    """Element of Z[x]/(Phi_K): an integer vector of length phi(K).

    The class of x is a primitive K-th root of unity; equality of reduced
    coefficient vectors is equality in the ring, so no floating point is ever
    needed to compare character values.
    """

    modulus: int
    coeffs: tuple[int, ...]

    def _check(self, other: "CycloElem") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"moduli differ: {self.modulus} vs {other.modulus}")

    def __add__(self, other):
        other = _coerce(self.modulus, other)
        self._check(other)
        return CycloElem(self.modulus, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.modulus, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = _coerce(self.modulus, other)
        self._check(other)
        return CycloElem(self.modulus, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return _coerce(self.modulus, other) - self

    def __mul__(self, other):
        other = _coerce(self.modulus, other)
        self._check(other)
        n = len(self.coeffs)
        conv = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                conv[i + j] += a * b
        return CycloElem(self.modulus, _cyclo_reduce(self.modulus, conv))

    __rmul__ = __mul__

    def equals_integer(self, m: int) -> bool:
        return self.coeffs[0] == m and not any(self.coeffs[1:])

    def as_integer(self) -> int | None:
        """The integer this element reduces to, or None if it is not one."""
        return self.coeffs[0] if not any(self.coeffs[1:]) else None


def _coerce(modulus: int, v) -> CycloElem:
    if isinstance(v, CycloElem):
        return v
    if isinstance(v, int):
        return cyclo_int(modulus, v)
    raise TypeError(f"cannot use {v!r} in cyclotomic arithmetic")


def cyclo_zero(modulus: int) -> CycloElem:
    deg = len(cyclotomic_poly(modulus)) - 1
    return CycloElem(modulus, (0,) * deg)


def cyclo_one(modulus: int) -> CycloElem:
    return cyclo_int(modulus, 1)


def cyclo_int(modulus: int, m: int) -> CycloElem:
    return CycloElem(modulus, _cyclo_reduce(modulus, [m]))


def root_power(modulus: int, t: int) -> CycloElem:
    """omega^t where omega is the class of x, a primitive K-th root of unity."""
    t %= modulus
    return CycloElem(modulus, _cyclo_reduce(modulus, [0] * t + [1]))


def inverse_root_power(modulus: int, t: int) -> CycloElem:
    """The ring inverse of omega^t, namely omega^(K - t)."""
    return root_power(modulus, (-t) % modulus)


# ---------------------------------------------------------------------------
# Abelian characters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Character:
    """Character of an abelian group, indexed by a residue vector.

    For Gr = Z_{k1} x ... x Z_{kr} and K = lcm(k_i), the character with
    index (j_1,...,j_r) maps (a_1,...,a_r) to omega_K raised to
    sum_i j_i * a_i * (K / k_i).
    """

    group: AbelianGroup
    index: tuple[int, ...]

    def root_exponent(self, e) -> int:
        _require_member(self.group, e)
        k_lcm = self.group.exponent()
        total = 0
        for j, a, k in zip(self.index, e, self.group.orders):
            total += j * a * (k_lcm // k)
        return total % k_lcm

    def value(self, e) -> CycloElem:
        return root_power(self.group.exponent(), self.root_exponent(e))

    def inverse_value(self, e) -> CycloElem:
        return inverse_root_power(self.group.exponent(), self.root_exponent(e))

    def __call__(self, e) -> CycloElem:
        return self.value(e)


def characters(gr: AbelianGroup) -> list[Character]:
    """All |Gr| characters in lexicographic index order (trivial first)."""
    if not isinstance(gr, AbelianGroup):
        raise AlgebraError("characters are defined for abelian groups only")
    return [Character(gr, idx) for idx in gr.elements()]


# ---------------------------------------------------------------------------
# Characteristic polynomial, division-free
# ---------------------------------------------------------------------------


def berkowitz_charpoly(matrix, zero=0, one=1) -> list:
    """Monic characteristic polynomial det(tI - M) of a square matrix.

    Samuelson-Berkowitz recursion: entirely division-free, so it is valid
    over any commutative ring, including Z[x]/(Phi_K) which has zero divisors
    for composite K (the reason fraction-free elimination is not used here).
    Returns the coefficient list with index = power. Pass ring constants via
    zero/one for non-integer entries.

    Working from the trailing principal submatrices: if q is the charpoly
    coefficient vector (highest degree first) of the (m x m) trailing block B
    and the matrix is [[a, R], [C, B]], the next vector is the product of the
    Toeplitz lower-triangular matrix with first column
    [1, -a, -R*C, -R*B*C, ..., -R*B^(m-1)*C] with q.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise NonSquare(f"matrix row has length {len(row)}, expected {n}")
    coeffs = [one]  # highest degree first
    for k in range(n - 1, -1, -1):
        m = n - 1 - k
        a = matrix[k][k]
        col = [one, zero - a]
        if m:
            r_row = matrix[k][k + 1 :]
            b_rows = [matrix[i][k + 1 :] for i in range(k + 1, n)]
            v = [matrix[i][k] for i in range(k + 1, n)]
            for step in range(m):
                dot = zero
                for x, y in zip(r_row, v):
                    dot = dot + x * y
                col.append(zero - dot)
                if step + 1 < m:
                    v = [sum_product(row, v, zero) for row in b_rows]
        width = len(coeffs)
        new = []
        for i in range(width + 1):
            acc = zero
            lo = max(0, i - (len(col) - 1))
            for j in range(lo, min(i, width - 1) + 1):
                acc = acc + col[i - j] * coeffs[j]
            new.append(acc)
        coeffs = new
    coeffs.reverse()
    return coeffs


def sum_product(xs, ys, zero=0):
    acc = zero
    for x, y in zip(xs, ys):
        acc = acc + x * y
    return acc
