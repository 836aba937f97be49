"""Classification pipelines for the flat 7-dimensional families.

* enumeration of the rotation-angle triples that admit an integer-similar
  block rotation matrix (by cyclotomic degree counting),
* the torsion-free filter (zero-sum angle condition up to the per-slot
  sign and full-turn equivalences),
* finite abelian matrix-group closures with invariant factors (holonomy),
* the exact nonexistence certificate for closed structures on the rank-2
  family, and the coclosed locus certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .exterior import KForm, VectorField, b_form
from .intmat import (
    AngleSignature,
    IntMatrix,
    NonCommuting,
    OrderCapExceeded,
    euler_phi,
    fold_angle,
    matrix_order,
    smith_normal_form,
)
from .liealg import ce_differential, flat_non_almost_abelian
from .scalars import Poly, Scalar, render_rational


class ParameterConstraintViolated(ValueError):
    """Family parameters violate a nondegeneracy precondition."""


# -- angles -----------------------------------------------------------------------


def normalize_angle(q: Fraction) -> Fraction:
    """Reduce the angle 2*pi*q modulo full turns: q mod 1 in [0, 1)."""
    return Fraction(q) % 1


@dataclass(frozen=True, order=True)
class AngleTriple:
    """Three rotation angles 2*pi*q_i in canonical form.

    Canonicalization folds each angle into [0, 1/2] (absorbing the
    q -> -q and q -> q + 1 equivalences) and sorts ascending; it is
    idempotent by construction.
    """

    folded: Tuple[Fraction, Fraction, Fraction]

    @staticmethod
    def of(q1, q2, q3) -> "AngleTriple":
        folded = tuple(sorted(fold_angle(Fraction(q)) for q in (q1, q2, q3)))
        return AngleTriple(folded=folded)

    def signature(self) -> AngleSignature:
        """Expected rotation signature of a 6x6 block realization."""
        k1 = k2 = 0
        rot: Dict[Fraction, int] = {}
        for q in self.folded:
            if q == 0:
                k1 += 2
            elif q == Fraction(1, 2):
                k2 += 2
            else:
                rot[q] = rot.get(q, 0) + 1
        return AngleSignature(k1=k1, k2=k2, rotations=tuple(sorted(rot.items())))

    def __str__(self):
        return "(" + ", ".join(render_rational(q) for q in self.folded) + ")"


@dataclass(frozen=True)
class SignedTriple:
    """A zero-sum signed representative of a torsion-free angle triple."""

    representative: Tuple[Fraction, Fraction, Fraction]

    def canonical(self) -> AngleTriple:
        return AngleTriple.of(*self.representative)

    def __str__(self):
        return "(" + ", ".join(render_rational(q) for q in self.representative) + ")"


# -- the admissible-angle enumeration ------------------------------------------------


@dataclass(frozen=True)
class AngleEnumeration:
    """The three case lists of admissible rotation-angle triples.

    ``case1_alphabet``: per-slot angles whose rotation block is realizable
    on its own in dimension <= 2 (full turn, half turn, and the three
    quadratic-cyclotomic angles).  ``case2_pairs``: conjugate angle pairs
    of the quartic cyclotomics, combined with one alphabet slot.
    ``case3_triples``: angle triples of the sextic cyclotomics.
    """

    case1_alphabet: Tuple[Fraction, ...]
    case2_pairs: Tuple[Tuple[Fraction, Fraction], ...]
    case3_triples: Tuple[Tuple[Fraction, Fraction, Fraction], ...]

    def all_triples(self) -> List[AngleTriple]:
        """Every admissible triple, canonicalized and deduplicated."""
        seen = {}
        import itertools

        for combo in itertools.combinations_with_replacement(self.case1_alphabet, 3):
            t = AngleTriple.of(*combo)
            seen[t.folded] = t
        for a in self.case1_alphabet:
            for (p, q) in self.case2_pairs:
                t = AngleTriple.of(a, p, q)
                seen[t.folded] = t
        for trip in self.case3_triples:
            t = AngleTriple.of(*trip)
            seen[t.folded] = t
        return [seen[k] for k in sorted(seen)]


def _primitive_angles(m: int) -> List[Fraction]:
    """Angles 2*pi*j/m, gcd(j, m) = 1, folded into (0, 1/2]... strictly (0,1/2)."""
    return [Fraction(j, m) for j in range(1, (m + 1) // 2) if math.gcd(j, m) == 1]


def enumerate_valuest0() -> AngleEnumeration:
    """Derive the admissible-angle case lists by cyclotomic degree counting.

    A 6-dimensional block rotation with angles (2*pi*q_i) is similar to an
    integer matrix iff its characteristic polynomial is a product of
    cyclotomic polynomials; full/half turns consume (x -/+ 1)^2 factors and
    the remaining degree is filled by cyclotomics of degree 2, 4 or 6.
    """
    deg2 = [m for m in range(3, 50) if euler_phi(m) == 2]
    deg4 = [m for m in range(3, 50) if euler_phi(m) == 4]
    deg6 = [m for m in range(3, 200) if euler_phi(m) == 6]
    # one slot each: full turn, half turn, then a single degree-2 cyclotomic
    alphabet = [Fraction(0), Fraction(1, 2)] + [_primitive_angles(m)[0] for m in deg2]
    alphabet.sort(key=lambda q: (q != 0, q != Fraction(1, 2), q), reverse=False)
    # order for display: full turn, half turn, then decreasing angle
    rot = sorted((q for q in alphabet if q not in (0, Fraction(1, 2))), reverse=True)
    case1 = (Fraction(0), Fraction(1, 2), *rot)
    case2 = tuple(tuple(_primitive_angles(m)) for m in sorted(deg4))
    case3 = tuple(tuple(_primitive_angles(m)) for m in sorted(deg6))
    return AngleEnumeration(case1_alphabet=case1, case2_pairs=case2, case3_triples=case3)


# -- torsion-free filter ---------------------------------------------------------------


def zero_sum_witness(triple: AngleTriple) -> Optional[Tuple[Fraction, Fraction, Fraction]]:
    """A signed representative (s1 q1, s2 q2, q3) with integer sum, if any."""
    q1, q2, q3 = triple.folded
    for s1 in (1, -1):
        for s2 in (1, -1):
            total = s1 * q1 + s2 * q2 + q3
            if total.denominator == 1:
                return (s1 * q1, s2 * q2, q3 - total)
    return None


def filter_torsion_free(enumeration: Optional[AngleEnumeration] = None) -> List[SignedTriple]:
    """Admissible triples whose angles can be signed to sum to zero."""
    enumeration = enumeration or enumerate_valuest0()
    out = []
    for triple in enumeration.all_triples():
        witness = zero_sum_witness(triple)
        if witness is not None:
            out.append(SignedTriple(representative=witness))
    return out


# -- holonomy groups ---------------------------------------------------------------------


GROUP_CAP = 10_000


@dataclass
class MatrixGroup:
    """A finite abelian matrix group given by commuting generators."""

    generators: List[IntMatrix]
    elements: List[IntMatrix]
    order: int
    cyclic_generator: Optional[IntMatrix]
    invariant_factors: List[int]

    def is_cyclic(self) -> bool:
        return self.cyclic_generator is not None

    def describe(self) -> str:
        if self.order == 1:
            return "{e}"
        return " x ".join(f"Z{d}" for d in self.invariant_factors)


def holonomy_group(generators: Sequence[IntMatrix]) -> MatrixGroup:
    """Closure of commuting finite-order generators, with abelian invariants."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].nrows
    for g in gens:
        if not g.is_square() or g.nrows != n:
            raise ValueError("generators must be square of equal size")
    for i, g in enumerate(gens):
        for h in gens[i + 1 :]:
            if g * h != h * g:
                raise NonCommuting("holonomy generators must commute")
    orders = []
    for g in gens:
        o = matrix_order(g)
        if not isinstance(o, int):
            raise ValueError("holonomy generators must have finite order")
        orders.append(o)

    # breadth-first closure
    ident = IntMatrix.identity(n)
    seen = {ident.rows: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y.rows not in seen:
                    if len(seen) >= GROUP_CAP:
                        raise OrderCapExceeded("group closure exceeded cap")
                    seen[y.rows] = y
                    nxt.append(y)
        frontier = nxt
    elements = list(seen.values())
    order = len(elements)

    cyclic = None
    for x in elements:
        o = matrix_order(x)
        if o == order:
            cyclic = x
            break

    # invariant factors of Z^k / (relation lattice)
    k = len(gens)
    relations: List[List[int]] = []
    for i, o in enumerate(orders):
        row = [0] * k
        row[i] = o
        relations.append(row)
    import itertools

    for combo in itertools.product(*(range(o) for o in orders)):
        if all(r == 0 for r in combo):
            continue
        prod = ident
        for g, r in zip(gens, combo):
            if r:
                prod = prod * (g ** r)
        if prod == ident:
            relations.append(list(combo))
    snf = smith_normal_form(IntMatrix(relations))
    diag = snf.diagonal()
    invariants = [d for d in diag if d > 1]
    check = 1
    for d in invariants:
        check *= d
    assert check == order, "invariant factors disagree with closure size"
    return MatrixGroup(
        generators=gens,
        elements=elements,
        order=order,
        cyclic_generator=cyclic,
        invariant_factors=invariants,
    )


def parse_group_descriptor(text: str) -> List[int]:
    """Parse "Z7", "Z2 x Z4", "{e}" into an invariant-factor list."""
    t = text.strip()
    if t in ("{e}", "e", "1", "trivial"):
        return []
    parts = [p.strip() for p in t.replace("×", "x").split("x")]
    out = []
    for p in parts:
        if not p.lower().startswith("z"):
            raise ValueError(f"bad group descriptor {text!r}")
        out.append(int(p[1:].strip("_")))
    return out


# -- closed-structure nonexistence certificate ----------------------------------------------


def _form_symbols() -> List[Tuple[int, int, int]]:
    import itertools

    return list(itertools.combinations(range(1, 8), 3))


def symbol_name(idx: Tuple[int, int, int]) -> str:
    return "a_" + "".join(str(i) for i in idx)


def generic_three_form() -> KForm:
    """The generic 3-form sum a_ijk e^{ijk} with 35 polynomial symbols."""
    terms = {idx: Poly.symbol(symbol_name(idx)) for idx in _form_symbols()}
    return KForm(7, 3, terms)


def _linear_system_from_form(dphi: KForm, symbols: List[str]) -> List[List[Fraction]]:
    """Rows of coefficients over `symbols` for each vanishing component."""
    col = {s: i for i, s in enumerate(symbols)}
    rows = []
    for idx in sorted(dphi.terms):
        poly = dphi.terms[idx]
        if not isinstance(poly, Poly):
            raise TypeError("expected polynomial coefficients")
        row = [Fraction(0)] * len(symbols)
        for mono, coef in poly.terms.items():
            if len(mono) != 1 or mono[0][1] != 1:
                raise ValueError("system is not linear")
            row[col[mono[0][0]]] = coef
        rows.append(row)
    return rows


def _solve_linear(rows: List[List[Fraction]], symbols: List[str]) -> Dict[str, Poly]:
    """Exact solve of rows . x = 0; dependent variables by column order.

    Columns are processed in the lexicographic order of ``symbols``; the
    pivot inside a column is the nonzero entry minimizing
    |numerator * denominator| (a size heuristic), ties by row index.
    Returns a map dependent-symbol -> polynomial in the free symbols.
    """
    m = [row[:] for row in rows]
    nrows, ncols = len(m), len(symbols)
    pivots: List[Tuple[int, int]] = []
    used_rows = set()
    for col in range(ncols):
        best = None
        for r in range(nrows):
            if r in used_rows or m[r][col] == 0:
                continue
            size = abs(m[r][col].numerator * m[r][col].denominator)
            if best is None or size < best[0] or (size == best[0] and r < best[1]):
                best = (size, r)
        if best is None:
            continue
        r = best[1]
        used_rows.add(r)
        pivots.append((r, col))
        pv = m[r][col]
        m[r] = [x / pv for x in m[r]]
        for rr in range(nrows):
            if rr != r and m[rr][col] != 0:
                f = m[rr][col]
                m[rr] = [x - f * y for x, y in zip(m[rr], m[r])]
    solution: Dict[str, Poly] = {}
    pivot_cols = {c for _, c in pivots}
    for r, c in pivots:
        expr = Poly({})
        for cc in range(c + 1, ncols):
            if cc in pivot_cols:
                continue
            coef = m[r][cc]
            if coef != 0:
                expr = expr + Poly.symbol(symbols[cc]) * (-coef)
        solution[symbols[c]] = expr
    return solution


@dataclass
class ClosedNonexistenceCertificate:
    """Exact witness that the closed-form space meets the sign obstruction.

    ``solved``: dependent coefficient -> expression in free coefficients.
    ``forced_zero``: coefficients pinned to zero by closedness.
    ``b44``/``b55``: the diagonal Gram values at e4, e4 and e5, e5 on the
    solved space, as polynomials in the free coefficients.
    ``closed_verified``: d(phi) vanished identically after substitution.
    """

    params: Tuple[Fraction, Fraction, Fraction, Fraction]
    solved: Dict[str, Poly]
    forced_zero: List[str]
    b44: Poly
    b55: Poly
    closed_verified: bool

    @property
    def certified(self) -> bool:
        return self.closed_verified and (self.b44 + self.b55) == 0


def closed_nonexistence_certificate(a, b, c, d) -> ClosedNonexistenceCertificate:
    """Impose closedness exactly and certify b(e4,e4) = -b(e5,e5).

    Parameters must satisfy a^2 + c^2 != 0, b^2 + d^2 != 0 and
    a d - b c != 0; otherwise :class:`ParameterConstraintViolated`.
    """
    a, b, c, d = (Fraction(x) for x in (a, b, c, d))
    if a == 0 and c == 0:
        raise ParameterConstraintViolated("need a^2 + c^2 != 0")
    if b == 0 and d == 0:
        raise ParameterConstraintViolated("need b^2 + d^2 != 0")
    if a * d - b * c == 0:
        raise ParameterConstraintViolated("need a*d - b*c != 0")

    g = flat_non_almost_abelian(a, b, c, d)
    phi = generic_three_form()
    dphi = ce_differential(g, phi)
    symbols = [symbol_name(idx) for idx in _form_symbols()]
    rows = _linear_system_from_form(dphi, symbols)
    solution = _solve_linear(rows, symbols)
    forced_zero = sorted(s for s, expr in solution.items() if expr == 0)

    # substitute the solved coefficients into the generic form
    new_terms = {}
    for idx in _form_symbols():
        name = symbol_name(idx)
        new_terms[idx] = solution.get(name, Poly.symbol(name))
    phi_closed = KForm(7, 3, new_terms)
    closed_verified = ce_differential(g, phi_closed).is_zero()

    e4 = VectorField.basis(7, 4)
    e5 = VectorField.basis(7, 5)
    b44 = b_form(phi_closed, e4, e4)
    b55 = b_form(phi_closed, e5, e5)
    if not isinstance(b44, Poly):
        b44 = Poly.constant(b44)
    if not isinstance(b55, Poly):
        b55 = Poly.constant(b55)
    return ClosedNonexistenceCertificate(
        params=(a, b, c, d),
        solved=solution,
        forced_zero=forced_zero,
        b44=b44,
        b55=b55,
        closed_verified=closed_verified,
    )


# -- coclosed certificate -----------------------------------------------------------------


def coclosed_certificate() -> KForm:
    """d(star phi) on the symbolic rank-2 family; vanishing locus c = -d."""
    from .g2core import canonical_phi
    from .exterior import hodge_star

    a, b, c, d = (Poly.symbol(s) for s in "abcd")
    g = flat_non_almost_abelian(a, b, c, d)
    return ce_differential(g, hodge_star(canonical_phi()))
