"""Lie algebras by structure constants, and the calculus built on them.

Provides the Chevalley-Eilenberg differential (fixed so that
``d e^k (e_i, e_j) = -e^k([e_i, e_j])``), Jacobi checking, the two flat
7-dimensional families used throughout the package, the structural
flat-decomposition verifier, and the Koszul Levi-Civita connection for the
orthonormal inner product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .exterior import DimensionMismatch, KForm, VectorField, wedge
from .scalars import Poly, Scalar


class NotFlatForm(ValueError):
    """ad of a declared b-element is not skew-symmetric in the given basis."""


class LieAlgebra:
    """A Lie algebra with basis e_1..e_n and brackets [e_i,e_j] = c_ij^k e_k.

    Structure constants are stored sparsely for i < j; antisymmetry is
    implicit.  The Jacobi identity is not enforced at construction (use
    :func:`jacobi_check`).
    """

    __slots__ = ("n", "brackets")

    def __init__(self, n: int, brackets: Mapping[Tuple[int, int], Mapping[int, Scalar]] | None = None):
        clean: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
        for (i, j), comps in (brackets or {}).items():
            if i == j:
                continue
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"bracket indices ({i},{j}) out of range")
            target = clean.setdefault((i, j), {})
            for k, coef in comps.items():
                if not (1 <= k <= n):
                    raise ValueError(f"bracket target {k} out of range")
                val = coef if sign == 1 else -coef
                s = target.get(k, Fraction(0)) + val
                if s == 0:
                    target.pop(k, None)
                else:
                    target[k] = s
            if not target:
                del clean[(i, j)]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "brackets", clean)

    def __setattr__(self, *args):
        raise AttributeError("LieAlgebra is immutable")

    # -- bracket ------------------------------------------------------------

    def c(self, i: int, j: int, k: int) -> Scalar:
        """Structure constant c_ij^k (antisymmetric in i, j)."""
        if i == j:
            return Fraction(0)
        if i < j:
            return self.brackets.get((i, j), {}).get(k, Fraction(0))
        return -self.brackets.get((j, i), {}).get(k, Fraction(0))

    def bracket_basis(self, i: int, j: int) -> VectorField:
        """[e_i, e_j] as a vector field."""
        if i == j:
            return VectorField.zero(self.n)
        if i < j:
            comps = self.brackets.get((i, j), {})
            return VectorField(self.n, dict(comps))
        comps = self.brackets.get((j, i), {})
        return VectorField(self.n, {k: -c for k, c in comps.items()})

    def bracket(self, v: VectorField, w: VectorField) -> VectorField:
        if v.n != self.n or w.n != self.n:
            raise DimensionMismatch("vector dimension does not match algebra")
        out = VectorField.zero(self.n)
        for i, vi in v.coeffs.items():
            for j, wj in w.coeffs.items():
                if i == j:
                    continue
                out = out + self.bracket_basis(i, j).scale(vi * wj)
        return out

    def ad_matrix(self, i: int) -> List[List[Scalar]]:
        """The matrix of ad_{e_i}, columns indexed by e_j: ad[k][j] = c_ij^k."""
        n = self.n
        return [[self.c(i, j + 1, k + 1) for j in range(n)] for k in range(n)]

    def is_abelian_span(self, indices: Sequence[int]) -> bool:
        return all(
            self.bracket_basis(i, j).is_zero() for i in indices for j in indices if i < j
        )

    def __repr__(self):
        items = []
        for (i, j), comps in sorted(self.brackets.items()):
            rhs = VectorField(self.n, dict(comps))
            items.append(f"[e_{i},e_{j}]={rhs}")
        return f"LieAlgebra({self.n}; " + ", ".join(items) + ")"


# -- the two flat families --------------------------------------------------------


def flat_almost_abelian(a: Scalar, b: Scalar, c: Scalar) -> LieAlgebra:
    """The 7-dimensional almost abelian flat family.

    Brackets: [e1,e2] = a e3, [e1,e3] = -a e2, [e1,e4] = b e5,
    [e1,e5] = -b e4, [e1,e6] = c e7, [e1,e7] = -c e6.
    """
    return LieAlgebra(
        7,
        {
            (1, 2): {3: a},
            (1, 3): {2: -a},
            (1, 4): {5: b},
            (1, 5): {4: -b},
            (1, 6): {7: c},
            (1, 7): {6: -c},
        },
    )


def flat_non_almost_abelian(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> LieAlgebra:
    """The 7-dimensional non almost abelian flat family (rank-2 torus part).

    Brackets: [e1,e4] = a e5, [e1,e5] = -a e4, [e1,e6] = b e7,
    [e1,e7] = -b e6, [e2,e4] = c e5, [e2,e5] = -c e4, [e2,e6] = d e7,
    [e2,e7] = -d e6; e3 is central.
    """
    return LieAlgebra(
        7,
        {
            (1, 4): {5: a},
            (1, 5): {4: -a},
            (1, 6): {7: b},
            (1, 7): {6: -b},
            (2, 4): {5: c},
            (2, 5): {4: -c},
            (2, 6): {7: d},
            (2, 7): {6: -d},
        },
    )


def symbolic_abc() -> Tuple[LieAlgebra, Poly, Poly, Poly]:
    """flat_almost_abelian with symbolic parameters; returns (g, a, b, c)."""
    a, b, c = Poly.symbol("a"), Poly.symbol("b"), Poly.symbol("c")
    return flat_almost_abelian(a, b, c), a, b, c


def symbolic_abcd() -> Tuple[LieAlgebra, Poly, Poly, Poly, Poly]:
    """flat_non_almost_abelian with symbolic parameters; (g, a, b, c, d)."""
    a, b, c, d = (Poly.symbol(s) for s in "abcd")
    return flat_non_almost_abelian(a, b, c, d), a, b, c, d


# -- Chevalley-Eilenberg differential ----------------------------------------------


def _d_basis_one_form(g: LieAlgebra, k: int) -> KForm:
    """d e^k = -sum_{i<j} c_ij^k e^{ij}."""
    terms = {}
    for (i, j), comps in g.brackets.items():
        coef = comps.get(k)
        if coef is not None:
            terms[(i, j)] = -coef
    return KForm(g.n, 2, terms)


def ce_differential(g: LieAlgebra, alpha: KForm) -> KForm:
    """The Chevalley-Eilenberg differential, extended as an antiderivation."""
    if alpha.n != g.n:
        raise DimensionMismatch("form dimension does not match algebra")
    n = g.n
    out = KForm.zero(n, min(alpha.degree + 1, n))
    for idx, coef in alpha.terms.items():
        for pos, k in enumerate(idx):
            dk = _d_basis_one_form(g, k)
            if dk.is_zero():
                continue
            left = KForm.basis(n, idx[:pos])
            right = KForm.basis(n, idx[pos + 1 :])
            piece = wedge(wedge(left, dk), right)
            if pos % 2 == 1:
                piece = -piece
            out = out + piece.scale(coef)
    return out


def jacobi_check(g: LieAlgebra) -> bool:
    """True iff the Jacobi identity holds on all basis triples."""
    n = g.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                ei, ej, ek = (VectorField.basis(n, t) for t in (i, j, k))
                total = (
                    g.bracket(g.bracket(ei, ej), ek)
                    + g.bracket(g.bracket(ej, ek), ei)
                    + g.bracket(g.bracket(ek, ei), ej)
                )
                if not total.is_zero():
                    return False
    return True


# -- flat structural decomposition ---------------------------------------------------


@dataclass
class FlatDecompositionReport:
    """Structural certificate data for the flat orthogonal splitting.

    ``angle_functionals`` holds, when the derived algebra decomposes into
    invariant coordinate 2-planes, the matrix lambda[plane][b_index] of
    rotation speeds; otherwise None.
    """

    b_dimension: int
    center_dimension: int
    derived_dimension: int
    angle_functionals: Optional[List[List[Scalar]]]
    ad_injective: bool
    derived_abelian: bool
    derived_even: bool
    b_small_enough: bool
    spans_independent: bool

    @property
    def verdict(self) -> bool:
        return (
            self.ad_injective
            and self.derived_abelian
            and self.derived_even
            and self.b_small_enough
            and self.spans_independent
        )


def _rational_rank(rows: List[List[Fraction]]) -> int:
    """Row rank by exact Gaussian elimination over Q."""
    m = [list(map(Fraction, r)) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    row = 0
    for col in range(cols):
        pivot = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col] / pv
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def verify_flat_decomposition(g: LieAlgebra, b_basis: Sequence[VectorField]) -> FlatDecompositionReport:
    """Check the flat-splitting conditions against a declared abelian part.

    Requires rational structure constants (kernel and rank computations are
    performed over Q).  Raises :class:`NotFlatForm` when some ad_X for X in
    the span of ``b_basis`` fails to be skew-symmetric in the declared
    orthonormal basis.
    """
    n = g.n

    def as_fraction(x) -> Fraction:
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError("verify_flat_decomposition requires rational structure constants")

    # ad matrices of the b-elements; check skew-symmetry
    ads = []
    for X in b_basis:
        ad = [[Fraction(0)] * n for _ in range(n)]
        for j in range(1, n + 1):
            img = g.bracket(X, VectorField.basis(n, j))
            for k, coef in img.coeffs.items():
                ad[k - 1][j - 1] = as_fraction(coef)
        for r in range(n):
            for s in range(n):
                if ad[r][s] != -ad[s][r]:
                    raise NotFlatForm("ad of a b-element is not skew-symmetric")
        ads.append(ad)

    # derived algebra [g,g]: span of all bracket images
    derived_rows = []
    for (i, j), comps in g.brackets.items():
        derived_rows.append([as_fraction(comps.get(k + 1, 0)) for k in range(n)])
    derived_dim = _rational_rank(derived_rows) if derived_rows else 0

    # center: v with [v, e_j] = 0 for all j <=> v in the kernel of all ad_{e_j}
    # build the stacked constraint matrix on coordinates of v
    constraints = []
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            constraints.append([as_fraction(g.c(i, j, k)) for i in range(1, n + 1)])
    center_dim = n - _rational_rank(constraints) if constraints else n

    # injectivity of ad on span(b): rank of the linear map X -> ad_X
    flat_rows = [[entry for row in ad for entry in row] for ad in ads]
    ad_injective = _rational_rank(flat_rows) == len(b_basis) if b_basis else True

    derived_abelian = True
    # derived algebra is spanned by bracket images; check brackets of its span
    # by testing all pairs of generating images
    gens = [VectorField(n, {k + 1: row[k] for k in range(n)}) for row in derived_rows]
    for x in gens:
        for y in gens:
            if not g.bracket(x, y).is_zero():
                derived_abelian = False
                break
        if not derived_abelian:
            break

    derived_even = derived_dim % 2 == 0
    b_small_enough = len(b_basis) <= derived_dim // 2 if derived_even else False
    if derived_dim == 0:
        b_small_enough = len(b_basis) == 0

    # independence of b + center + derived spans
    span_rows = []
    for X in b_basis:
        span_rows.append([as_fraction(X.coeff(i)) for i in range(1, n + 1)])
    span_rows.extend(derived_rows)
    b_plus_derived = _rational_rank(span_rows) if span_rows else 0
    spans_independent = b_plus_derived == len(b_basis) + derived_dim

    # angle functionals: look for a pairing of coordinates into invariant
    # 2-planes common to every ad_X
    angle_functionals: Optional[List[List[Scalar]]] = None
    moved = sorted(
        {r + 1 for ad in ads for r in range(n) for s in range(n) if ad[r][s] != 0}
        | {s + 1 for ad in ads for r in range(n) for s in range(n) if ad[r][s] != 0}
    )
    pairs = []
    used = set()
    ok = True
    for p in moved:
        if p in used:
            continue
        partners = set()
        for ad in ads:
            for q in moved:
                if q != p and ad[q - 1][p - 1] != 0:
                    partners.add(q)
        if len(partners) != 1:
            ok = False
            break
        q = partners.pop()
        if q in used:
            ok = False
            break
        used.update((p, q))
        pairs.append((p, q))
    if ok and pairs:
        # check invariance and extract speeds lambda[plane][b_index]
        lam: List[List[Scalar]] = []
        for (p, q) in pairs:
            row = []
            for ad in ads:
                for r in range(n):
                    if r + 1 not in (p, q) and (ad[r][p - 1] != 0 or ad[r][q - 1] != 0):
                        ok = False
                row.append(ad[q - 1][p - 1])
            lam.append(row)
        if ok:
            angle_functionals = lam

    return FlatDecompositionReport(
        b_dimension=len(b_basis),
        center_dimension=center_dim,
        derived_dimension=derived_dim,
        angle_functionals=angle_functionals,
        ad_injective=ad_injective,
        derived_abelian=derived_abelian,
        derived_even=derived_even,
        b_small_enough=b_small_enough,
        spans_independent=spans_independent,
    )


# -- Koszul connection -----------------------------------------------------------------


def koszul_connection(g: LieAlgebra) -> Dict[Tuple[int, int], VectorField]:
    """Levi-Civita connection for the orthonormal metric, via Koszul.

    2 <nabla_{e_i} e_j, e_k> = <[e_i,e_j],e_k> - <[e_j,e_k],e_i> + <[e_k,e_i],e_j>.
    """
    n = g.n
    table: Dict[Tuple[int, int], VectorField] = {}
    half = Fraction(1, 2)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            comps = {}
            for k in range(1, n + 1):
                val = g.c(i, j, k) - g.c(j, k, i) + g.c(k, i, j)
                if val != 0:
                    comps[k] = half * val
            table[(i, j)] = VectorField(n, comps)
    return table


def nabla(table: Mapping[Tuple[int, int], VectorField], i: int, v: VectorField) -> VectorField:
    """nabla_{e_i} v for an invariant vector field v."""
    n = v.n
    out = VectorField.zero(n)
    for j, coef in v.coeffs.items():
        out = out + table[(i, j)].scale(coef)
    return out


def covariant_derivative_form(
    g: LieAlgebra, table: Mapping[Tuple[int, int], VectorField], i: int, alpha: KForm
) -> KForm:
    """(nabla_{e_i} alpha)(v_1..v_k) = -sum_t alpha(v_1,..,nabla_{e_i}v_t,..,v_k)."""
    n = g.n
    out = KForm.zero(n, alpha.degree)
    import itertools

    for idx in itertools.combinations(range(1, n + 1), alpha.degree):
        total = Fraction(0)
        for pos in range(len(idx)):
            img = table[(i, idx[pos])]
            for t, coef in img.coeffs.items():
                args = idx[:pos] + (t,) + idx[pos + 1 :]
                total = total - coef * alpha.coeff(args)
        if total != 0:
            out = out + KForm(n, alpha.degree, {idx: total})
    return out
