"""Exact integer and quadratic-field matrix algorithms.

Characteristic polynomials by the fraction-free Faddeev-LeVerrier scheme,
cyclotomic polynomial recognition, finite-order tests, rotation-angle
signatures of finite-order matrices, companion-block realizations, Smith
normal form with recorded unimodular transforms, abelianization invariants
of crystallographic-type groups Z^k x| Z^m, and exact conjugation checks
for matrices over Q(sqrt n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .scalars import QuadExt, Scalar, render_scalar


class NotCyclotomicProduct(ValueError):
    """The polynomial is not a product of cyclotomic polynomials."""


class NotFiniteOrder(ValueError):
    """Signature requested for a matrix of infinite order."""


class NotGaloisClosed(ValueError):
    """Angle multiset cannot be assembled from whole cyclotomic blocks."""


class NonCommuting(ValueError):
    """Generators were required to commute but do not."""


class SingularP(ValueError):
    """Conjugating matrix is singular."""


class OrderCapExceeded(RuntimeError):
    """A closure or order computation exceeded its safety cap."""


ORDER_CAP = 10 ** 6

Infinite = "infinite"


# -- integer polynomials -----------------------------------------------------------


class IntPoly:
    """Dense integer polynomial, coefficients from the constant term up."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, *args):
        raise AttributeError("IntPoly is immutable")

    @staticmethod
    def x_power_minus_one(m: int) -> "IntPoly":
        c = [0] * (m + 1)
        c[0] = -1
        c[m] = 1
        return IntPoly(c)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero() or other.is_zero():
            return IntPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    def divmod_exact(self, other: "IntPoly") -> Tuple["IntPoly", "IntPoly"]:
        """Polynomial division; exact over Z only for monic divisors."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if not other.is_monic():
            raise ValueError("divisor must be monic for exact integer division")
        rem = list(self.coeffs)
        d = other.degree()
        if self.degree() < d:
            return IntPoly([]), self
        quot = [0] * (self.degree() - d + 1)
        for k in range(self.degree() - d, -1, -1):
            q = rem[k + d]
            quot[k] = q
            if q:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= q * b
        return IntPoly(quot), IntPoly(rem)

    def divides(self, other: "IntPoly") -> bool:
        _, r = other.divmod_exact(self)
        return r.is_zero()

    def eval_int(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero():
            return "0"
        pieces = []
        for e in range(self.degree(), -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                body = str(abs(c))
            else:
                var = "x" if e == 1 else f"x^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(pieces)


# -- integer matrices ---------------------------------------------------------------


class IntMatrix:
    """A square (or rectangular) matrix of arbitrary-precision integers."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        r = [tuple(int(x) for x in row) for row in rows]
        if r and any(len(row) != len(r[0]) for row in r):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", tuple(r))

    def __setattr__(self, *args):
        raise AttributeError("IntMatrix is immutable")

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> "IntMatrix":
        return IntMatrix([[0] * c for _ in range(r)])

    @staticmethod
    def diagonal(values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return IntMatrix([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def block_diag(*blocks: "IntMatrix") -> "IntMatrix":
        size = sum(b.nrows for b in blocks)
        out = [[0] * size for _ in range(size)]
        off = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out[off + i][off + j] = b.rows[i][j]
            off += b.nrows
        return IntMatrix(out)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, idx: Tuple[int, int]) -> int:
        return self.rows[idx[0]][idx[1]]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return IntMatrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("matrix shape mismatch")
        bt = list(zip(*other.rows))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.rows]
        )

    def __pow__(self, k: int) -> "IntMatrix":
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        out = IntMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.rows)))

    def scale_int(self, s: int) -> "IntMatrix":
        return IntMatrix([[s * a for a in r] for r in self.rows])

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.nrows))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return IntMatrix([list(r1) + list(r2) for r1, r2 in zip(self.rows, other.rows)])

    def det(self) -> int:
        p = char_poly(self)
        n = self.nrows
        const = p.coeffs[0] if p.coeffs else 0
        return const if n % 2 == 0 else -const

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]!r})"

    def __str__(self):
        return render_int_matrix(self)


def render_int_matrix(m: IntMatrix) -> str:
    return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in m.rows) + "]"


def char_poly(m: IntMatrix) -> IntPoly:
    """Monic characteristic polynomial via Faddeev-LeVerrier (all integer).

    The intermediate trace divisions by k are exact over Z, so no rational
    arithmetic is needed even for large entries.
    """
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.nrows
    if n == 0:
        return IntPoly([1])
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = m
    c = -Mk.trace()
    coeffs[n - 1] = c
    for k in range(2, n + 1):
        Mk = m * (Mk + IntMatrix.identity(n).scale_int(c))
        tr = Mk.trace()
        assert tr % k == 0, "Faddeev-LeVerrier trace division must be exact"
        c = -tr // k
        coeffs[n - k] = c
    return IntPoly(coeffs)


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("euler_phi of a nonpositive integer")
    out = m
    p = 2
    mm = m
    while p * p <= mm:
        if mm % p == 0:
            while mm % p == 0:
                mm //= p
            out -= out // p
        p += 1
    if mm > 1:
        out -= out // mm
    return out


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial, by exact division of x^m - 1."""
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    p = IntPoly.x_power_minus_one(m)
    for d in range(1, m):
        if m % d == 0:
            q, r = p.divmod_exact(cyclotomic(d))
            assert r.is_zero()
            p = q
    return p


def cyclotomic_factor(p: IntPoly) -> List[int]:
    """The multiset {m} with p = prod of cyclotomic(m), or raise.

    Raises :class:`NotCyclotomicProduct` when no such factorization exists
    (by Kronecker's criterion the matrix then has infinite order).
    """
    if not p.is_monic():
        raise ValueError("cyclotomic factorization requires a monic polynomial")
    out: List[int] = []
    rem = p
    deg = rem.degree()
    m = 1
    while rem.degree() > 0:
        if euler_phi(m) <= rem.degree():
            phi_m = cyclotomic(m)
            q, r = rem.divmod_exact(phi_m)
            if r.is_zero():
                out.append(m)
                rem = q
                continue
        m += 1
        # phi(m) >= sqrt(m/2), so once m exceeds 2*deg^2 + 2 nothing can divide
        if m > 2 * deg * deg + 2:
            raise NotCyclotomicProduct(f"{p} is not a product of cyclotomic polynomials")
    if rem.coeffs != (1,):
        raise NotCyclotomicProduct(f"{p} is not a product of cyclotomic polynomials")
    return sorted(out)


def matrix_order(m: IntMatrix) -> Union[int, str]:
    """Least N with m^N = I, or :data:`Infinite`."""
    if not m.is_square():
        raise ValueError("order of a non-square matrix")
    try:
        ms = cyclotomic_factor(char_poly(m))
    except NotCyclotomicProduct:
        return Infinite
    candidate = math.lcm(*ms) if ms else 1
    if candidate > ORDER_CAP:
        raise OrderCapExceeded(f"candidate order {candidate} exceeds cap")
    if m ** candidate != IntMatrix.identity(m.nrows):
        return Infinite
    # candidate is a multiple of the true order; minimize over divisors
    best = candidate
    for d in sorted(_divisors(candidate)):
        if m ** d == IntMatrix.identity(m.nrows):
            best = d
            break
    return best


def _divisors(n: int) -> List[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


# -- rotation-angle signatures ----------------------------------------------------------


@dataclass(frozen=True)
class AngleSignature:
    """Normal-form data of a finite-order real matrix.

    ``rotations`` is a sorted tuple of (q, multiplicity) with the rotation
    angle equal to 2*pi*q and 0 < q < 1/2 strictly.
    """

    k1: int
    k2: int
    rotations: Tuple[Tuple[Fraction, int], ...]

    def dimension(self) -> int:
        return self.k1 + self.k2 + 2 * sum(mult for _, mult in self.rotations)

    def __str__(self):
        rot = ", ".join(f"{q}x{m}" if m > 1 else f"{q}" for q, m in self.rotations)
        return f"(k1={self.k1}, k2={self.k2}, rotations=[{rot}])"


def fold_angle(q: Fraction) -> Fraction:
    """Fold an angle 2*pi*q into [0, 1/2] modulo the +-q, q+1 equivalences."""
    q = q % 1
    return min(q, 1 - q)


def signature_from_cyclotomic_multiset(ms: Sequence[int]) -> AngleSignature:
    k1 = sum(1 for m in ms if m == 1)
    k2 = sum(1 for m in ms if m == 2)
    rot: Dict[Fraction, int] = {}
    for m in ms:
        if m <= 2:
            continue
        for j in range(1, m // 2 + 1):
            if math.gcd(j, m) == 1:
                q = Fraction(j, m)
                rot[q] = rot.get(q, 0) + 1
    rotations = tuple(sorted(rot.items()))
    return AngleSignature(k1=k1, k2=k2, rotations=rotations)


def koo_signature(m: IntMatrix) -> AngleSignature:
    """Signature (k1, k2, rotation multiset) of a finite-order matrix."""
    order = matrix_order(m)
    if order == Infinite:
        raise NotFiniteOrder("matrix does not have finite order")
    return signature_from_cyclotomic_multiset(cyclotomic_factor(char_poly(m)))


def companion_matrix(p: IntPoly) -> IntMatrix:
    """Companion matrix of a monic polynomial."""
    if not p.is_monic():
        raise ValueError("companion matrix requires a monic polynomial")
    n = p.degree()
    out = [[0] * n for _ in range(n)]
    for i in range(1, n):
        out[i][i - 1] = 1
    for i in range(n):
        out[i][n - 1] = -p.coeffs[i]
    return IntMatrix(out)


def companion_realization(sig: AngleSignature) -> IntMatrix:
    """An integer matrix realizing the signature, as I ⊕ -I ⊕ companions.

    The rotation multiset must consist of whole primitive-angle sets of
    cyclotomic polynomials; otherwise :class:`NotGaloisClosed` is raised.
    """
    remaining = {q: mult for q, mult in sig.rotations}
    blocks: List[IntMatrix] = []
    if sig.k1:
        blocks.append(IntMatrix.identity(sig.k1))
    if sig.k2:
        blocks.append(IntMatrix.identity(sig.k2).scale_int(-1))
    for q in sorted(remaining):
        if not (0 < q < Fraction(1, 2)):
            raise NotGaloisClosed(f"rotation angle {q} outside (0, 1/2)")
    ms: List[int] = []
    while any(remaining.values()):
        q = min(q0 for q0, mult in remaining.items() if mult > 0)
        m = q.denominator
        primset = [Fraction(j, m) for j in range(1, m // 2 + 1) if math.gcd(j, m) == 1]
        for p0 in primset:
            if remaining.get(p0, 0) < 1:
                raise NotGaloisClosed(
                    f"angle set lacks the conjugate {p0} needed for a full degree-{euler_phi(m)} block"
                )
            remaining[p0] -= 1
        ms.append(m)
    for m in sorted(ms):
        blocks.append(companion_matrix(cyclotomic(m)))
    if not blocks:
        return IntMatrix.identity(0)
    return IntMatrix.block_diag(*blocks)


# -- Smith normal form ----------------------------------------------------------------


@dataclass(frozen=True)
class SNFResult:
    """U * M * V = D with U, V unimodular and d1 | d2 | ... nonnegative."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    def diagonal(self) -> List[int]:
        return [self.D.rows[i][i] for i in range(min(self.D.nrows, self.D.ncols))]


def smith_normal_form(m: IntMatrix) -> SNFResult:
    """Smith normal form with recorded transforms.

    Pivot rule: smallest nonzero absolute value (ties by row then column),
    rows eliminated before columns, diagonal made nonnegative.
    """
    A = [list(r) for r in m.rows]
    R, C = len(A), len(A[0]) if A else 0
    U = [[1 if i == j else 0 for j in range(R)] for i in range(R)]
    V = [[1 if i == j else 0 for j in range(C)] for i in range(C)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def addmul_row(dst, src, f):
        A[dst] = [a + f * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def addmul_col(dst, src, f):
        for r in A:
            r[dst] += f * r[src]
        for r in V:
            r[dst] += f * r[src]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(R, C):
        # locate minimal nonzero pivot in the trailing block
        pivot = None
        best = None
        for i in range(t, R):
            for j in range(t, C):
                a = A[i][j]
                if a != 0 and (best is None or abs(a) < best):
                    best = abs(a)
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        dirty = False
        # rows first
        for i in range(t + 1, R):
            if A[i][t] != 0:
                q = A[i][t] // A[t][t]
                addmul_row(i, t, -q)
                if A[i][t] != 0:
                    dirty = True
        # then columns
        for j in range(t + 1, C):
            if A[t][j] != 0:
                q = A[t][j] // A[t][t]
                addmul_col(j, t, -q)
                if A[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility of the remaining block by the pivot
        bad = None
        for i in range(t + 1, R):
            for j in range(t + 1, C):
                if A[i][j] % A[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            addmul_row(t, bad, 1)
            continue
        if A[t][t] < 0:
            negate_row(t)
        t += 1

    return SNFResult(U=IntMatrix(U), D=IntMatrix(A), V=IntMatrix(V))


def abelianization(generators: Sequence[IntMatrix]) -> Tuple[int, List[int]]:
    """Abelian invariants of Z^k x| Z^m for commuting finite-order generators.

    Returns (rank, torsion): rank = k + (m - rank[E1 - I | ... | Ek - I]),
    torsion = nontrivial invariant factors of the cokernel.
    """
    if not generators:
        raise ValueError("need at least one generator")
    m = generators[0].nrows
    for g in generators:
        if not g.is_square() or g.nrows != m:
            raise ValueError("generators must be square of equal size")
    for i, g in enumerate(generators):
        for h in generators[i + 1 :]:
            if g * h != h * g:
                raise NonCommuting("abelianization requires commuting generators")
        if matrix_order(g) == Infinite:
            raise ValueError("generators must have finite order")
    k = len(generators)
    stacked = generators[0] - IntMatrix.identity(m)
    for g in generators[1:]:
        stacked = stacked.hstack(g - IntMatrix.identity(m))
    snf = smith_normal_form(stacked)
    diag = snf.diagonal()
    rank_stacked = sum(1 for d in diag if d != 0)
    torsion = [d for d in diag if d > 1]
    return k + (m - rank_stacked), torsion


# -- exact matrices over the scalar domains -------------------------------------------


class ExactMatrix:
    """A matrix with Rational or QuadExt entries (field arithmetic)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        r = [tuple(row) for row in rows]
        if r and any(len(row) != len(r[0]) for row in r):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", tuple(r))

    def __setattr__(self, *args):
        raise AttributeError("ExactMatrix is immutable")

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(
            [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def from_int(m: IntMatrix) -> "ExactMatrix":
        return ExactMatrix([[Fraction(x) for x in row] for row in m.rows])

    @staticmethod
    def block_diag(*blocks: "ExactMatrix") -> "ExactMatrix":
        size = sum(b.n for b in blocks)
        out: List[List[Scalar]] = [[Fraction(0)] * size for _ in range(size)]
        off = 0
        for b in blocks:
            for i in range(b.n):
                for j in range(b.n):
                    out[off + i][off + j] = b.rows[i][j]
            off += b.n
        return ExactMatrix(out)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.n != other.n or self.ncols != other.ncols:
            return False
        return all(
            a == b for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2)
        )

    def __hash__(self):
        return hash(self.rows)

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.n:
            raise ValueError("matrix shape mismatch")
        bt = list(zip(*other.rows))
        out = []
        for row in self.rows:
            new_row = []
            for col in bt:
                acc: Scalar = Fraction(0)
                for a, b in zip(row, col):
                    acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return ExactMatrix(out)

    def det(self) -> Scalar:
        """Determinant by fraction-free-ish elimination with exact division."""
        n = self.n
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.rows]
        det: Scalar = Fraction(1)
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if m[r][col] != 0:
                    pivot = r
                    break
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = det * Fraction(-1)
            pv = m[col][col]
            det = det * pv
            inv = _scalar_inverse(pv)
            for r in range(col + 1, n):
                if m[r][col] != 0:
                    f = m[r][col] * inv
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return det

    def __repr__(self):
        body = "; ".join(", ".join(render_scalar(v) for v in row) for row in self.rows)
        return f"ExactMatrix({body})"


def _scalar_inverse(x: Scalar) -> Scalar:
    if isinstance(x, QuadExt):
        return x.inverse()
    return Fraction(1) / Fraction(x)


def verify_conjugation(P: ExactMatrix, M: ExactMatrix, A: IntMatrix) -> bool:
    """True iff P^{-1} M P equals A exactly; raises SingularP when det P = 0."""
    if P.det() == 0:
        raise SingularP("conjugating matrix is singular")
    return M * P == P * ExactMatrix.from_int(A)
