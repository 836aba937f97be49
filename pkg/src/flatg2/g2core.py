"""G2-structure machinery on 7-dimensional Lie algebras.

The canonical positive 3-form, the induced-metric Gram data, the four
torsion forms of the intrinsic-torsion decomposition, the maps between
3-forms and symmetric 2-tensors, the full torsion tensor and its
divergence, and the named structure classes cut out by d(phi) and
d(star phi).

Torsion forms are computed so that the defining decomposition

    d phi      = tau0 * (star phi) + 3 tau1 ^ phi + star tau3
    d star phi = 4 tau1 ^ (star phi) + star tau2

holds exactly, with tau1 in the 7-dimensional component and tau2, tau3 in
the 14- resp. 27-dimensional components.  Concretely:

    tau0 = (1/7)  star(d phi ^ phi)
    tau1 = -(1/12) star(star(d phi) ^ phi)
    tau2 = star(d star phi) - 4 star(tau1 ^ star phi)
    tau3 = star(d phi) - tau0 phi - 3 star(tau1 ^ phi)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .exterior import DimensionMismatch, KForm, VectorField, b_form, contract, hodge_star, wedge
from .liealg import LieAlgebra, ce_differential, koszul_connection
from .scalars import Scalar, render_scalar


class NonRationalNormalization(ValueError):
    """det(B)^(1/9) is not rational; carries the unnormalized Gram tensor."""

    def __init__(self, message, gram=None):
        super().__init__(message)
        self.gram = gram


class NonTraceless(ValueError):
    """Input to the 3-form embedding has nonzero trace."""


class Tensor2:
    """A bilinear form on the 7-dimensional space, entries (i, j) -> Scalar."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries=None):
        rows: List[List[Scalar]]
        if entries is None:
            rows = [[Fraction(0)] * n for _ in range(n)]
        else:
            rows = [list(r) for r in entries]
            if len(rows) != n or any(len(r) != n for r in rows):
                raise ValueError("entries must be n x n")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, *args):
        raise AttributeError("Tensor2 is immutable (construct a new one)")

    @staticmethod
    def identity(n: int) -> "Tensor2":
        t = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        return Tensor2(n, t)

    def __call__(self, i: int, j: int) -> Scalar:
        """Entry with 1-based indices."""
        return self.entries[i - 1][j - 1]

    def __add__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.n, [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.n, [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def scale(self, s: Scalar) -> "Tensor2":
        return Tensor2(self.n, [[s * a for a in r] for r in self.entries])

    def __eq__(self, other):
        if not isinstance(other, Tensor2):
            return NotImplemented
        return self.n == other.n and all(
            a == b for r1, r2 in zip(self.entries, other.entries) for a, b in zip(r1, r2)
        )

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.entries))

    def is_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.n) for j in range(i + 1, self.n)
        )

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.entries for a in r)

    def trace(self) -> Scalar:
        t: Scalar = Fraction(0)
        for i in range(self.n):
            t = t + self.entries[i][i]
        return t

    def __repr__(self):
        body = "; ".join(
            ", ".join(render_scalar(v) for v in row) for row in self.entries
        )
        return f"Tensor2({self.n}; {body})"


SymTensor = Tensor2


def two_form_to_tensor(omega: KForm) -> Tensor2:
    """The skew bilinear form (e_i, e_j) -> omega(e_i, e_j)."""
    n = omega.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), coef in omega.terms.items():
        rows[i - 1][j - 1] = coef
        rows[j - 1][i - 1] = -coef
    return Tensor2(n, rows)


def canonical_phi() -> KForm:
    """The 7-term positive 3-form in the standard orthonormal coframe."""
    return KForm(
        7,
        3,
        {
            (1, 2, 3): Fraction(1),
            (1, 4, 5): Fraction(1),
            (1, 6, 7): Fraction(1),
            (2, 4, 6): Fraction(1),
            (2, 5, 7): Fraction(-1),
            (3, 4, 7): Fraction(-1),
            (3, 5, 6): Fraction(-1),
        },
    )


def _ninth_root_rational(q: Fraction) -> Optional[Fraction]:
    if q <= 0:
        return None

    def iroot9(m: int) -> Optional[int]:
        if m == 0:
            return 0
        lo, hi = 1, 1
        while hi ** 9 < m:
            hi *= 2
        while lo < hi:
            mid = (lo + hi) // 2
            if mid ** 9 < m:
                lo = mid + 1
            else:
                hi = mid
        return lo if lo ** 9 == m else None

    rn = iroot9(q.numerator)
    rd = iroot9(q.denominator)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def gram_tensor(phi: KForm) -> Tensor2:
    """Unnormalized Gram data B_ij = b_form(phi, e_i, e_j)."""
    n = phi.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            v = b_form(phi, VectorField.basis(n, i), VectorField.basis(n, j))
            rows[i - 1][j - 1] = v
            rows[j - 1][i - 1] = v
    return Tensor2(n, rows)


def _det_fraction(t: Tensor2) -> Fraction:
    m = [[Fraction(v) if isinstance(v, int) else v for v in row] for row in t.entries]
    n = t.n
    det = Fraction(1)
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
            det = -det
        pv = m[col][col]
        det *= pv
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] / pv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def induced_metric(phi: KForm) -> Tensor2:
    """g_ij = B_ij / det(B)^{1/9} with B the Gram tensor of phi.

    Requires rational Gram entries with det(B) a positive rational ninth
    power; raises :class:`NonRationalNormalization` (carrying B) otherwise.
    """
    B = gram_tensor(phi)
    for row in B.entries:
        for v in row:
            if not isinstance(v, (int, Fraction)):
                raise NonRationalNormalization(
                    "metric normalization needs a rational Gram tensor", gram=B
                )
    det = _det_fraction(B)
    root = _ninth_root_rational(det)
    if root is None or root == 0:
        raise NonRationalNormalization(
            f"det(B) = {det} has no rational ninth root", gram=B
        )
    inv = Fraction(1) / root
    return B.scale(inv)


@dataclass(frozen=True)
class G2Structure:
    """A 3-form on a 7-dimensional Lie algebra, with an orthonormality cert.

    ``orthonormal_certificate`` asserts that the declared basis is
    orthonormal for the induced metric, i.e. b_form(phi, e_i, e_j) = delta_ij.
    Use :func:`certify_orthonormal` to check it.
    """

    algebra: LieAlgebra
    phi: KForm
    orthonormal_certificate: bool = True

    def __post_init__(self):
        if self.algebra.n != 7 or self.phi.n != 7 or self.phi.degree != 3:
            raise DimensionMismatch("G2Structure requires a 3-form in dimension 7")
        if self.phi.is_zero():
            raise ValueError("phi must be nonzero")


def standard_structure(algebra: LieAlgebra) -> G2Structure:
    return G2Structure(algebra, canonical_phi(), orthonormal_certificate=True)


def certify_orthonormal(s: G2Structure) -> bool:
    return gram_tensor(s.phi) == Tensor2.identity(7)


def _require_certificate(s: G2Structure):
    if not s.orthonormal_certificate:
        raise ValueError("operation requires the orthonormal certificate")


@dataclass(frozen=True)
class TorsionForms:
    tau0: Scalar
    tau1: KForm
    tau2: KForm
    tau3: KForm


def torsion_forms(s: G2Structure) -> TorsionForms:
    """The four torsion components of the structure, exactly."""
    _require_certificate(s)
    g, phi = s.algebra, s.phi
    starphi = hodge_star(phi)
    dphi = ce_differential(g, phi)
    dstarphi = ce_differential(g, starphi)

    tau0_form = hodge_star(wedge(dphi, phi))
    tau0 = tau0_form.coeff(()) * Fraction(1, 7)

    star_dphi = hodge_star(dphi)
    tau1 = hodge_star(wedge(star_dphi, phi)).scale(Fraction(-1, 12))

    tau2 = hodge_star(dstarphi) - hodge_star(wedge(tau1, starphi)).scale(4)

    tau3 = star_dphi - phi.scale(tau0) - hodge_star(wedge(tau1, phi)).scale(3)
    return TorsionForms(tau0=tau0, tau1=tau1, tau2=tau2, tau3=tau3)


def jmath(s: G2Structure, tau: KForm) -> Tensor2:
    """(v, w) -> star(iota_v phi ^ iota_w phi ^ tau); symmetric 2-tensor."""
    _require_certificate(s)
    phi = s.phi
    rows = [[Fraction(0)] * 7 for _ in range(7)]
    contractions = [contract(VectorField.basis(7, i), phi) for i in range(1, 8)]
    for i in range(7):
        for j in range(i, 7):
            top = wedge(wedge(contractions[i], contractions[j]), tau)
            val = hodge_star(top).coeff(())
            rows[i][j] = val
            rows[j][i] = val
    return Tensor2(7, rows)


def iota_map(s: G2Structure, beta: Tensor2) -> KForm:
    """sum_{i,l} beta_il e^i ^ iota_{e_l} phi for traceless symmetric beta."""
    _require_certificate(s)
    if beta.trace() != 0:
        raise NonTraceless("iota_map requires a traceless tensor")
    phi = s.phi
    out = KForm.zero(7, 3)
    contractions = [contract(VectorField.basis(7, l), phi) for l in range(1, 8)]
    for i in range(1, 8):
        for l in range(1, 8):
            coef = beta(i, l)
            if coef == 0:
                continue
            out = out + wedge(KForm.basis(7, (i,)), contractions[l - 1]).scale(coef)
    return out


def full_torsion(s: G2Structure) -> Tensor2:
    """The full torsion tensor assembled from the four torsion components.

    T = (tau0/4) g - star(tau1 ^ star phi) + (1/2) tau2 - (1/4) jmath(tau3),
    with the 2-form summands entering as their associated bilinear forms.
    The sign of the tau2 term is tied to the sign convention of tau2 itself
    (here: d star phi = 4 tau1 ^ star phi + star tau2); with this pairing T
    is the intrinsic torsion, i.e. nabla_X phi = iota_{T(X)} star phi.
    """
    _require_certificate(s)
    t = torsion_forms(s)
    starphi = hodge_star(s.phi)
    vec_part = two_form_to_tensor(hodge_star(wedge(t.tau1, starphi)))
    tau2_part = two_form_to_tensor(t.tau2)
    out = Tensor2.identity(7).scale(t.tau0 * Fraction(1, 4))
    out = out - vec_part
    out = out + tau2_part.scale(Fraction(1, 2))
    out = out - jmath(s, t.tau3).scale(Fraction(1, 4))
    return out


def divergence_torsion(s: G2Structure) -> VectorField:
    """div T as a vector field, via the Koszul connection.

    <div T, e_j> = -sum_i T(nabla_{e_i} e_i, e_j) - sum_i T(e_i, nabla_{e_i} e_j).
    """
    _require_certificate(s)
    T = full_torsion(s)
    conn = koszul_connection(s.algebra)
    comps = {}
    for j in range(1, 8):
        total: Scalar = Fraction(0)
        for i in range(1, 8):
            vii = conn[(i, i)]
            for k, coef in vii.coeffs.items():
                total = total - coef * T(k, j)
            vij = conn[(i, j)]
            for k, coef in vij.coeffs.items():
                total = total - coef * T(i, k)
        if total != 0:
            comps[j] = total
    return VectorField(7, comps)


@dataclass(frozen=True)
class FGClass:
    """Named structure classes determined by d(phi) and d(star phi)."""

    closed: bool
    coclosed: bool
    coclosed_pure_type: bool
    locally_conformal_parallel: bool
    nearly_parallel: bool
    nearly_parallel_lambda: Optional[Scalar]
    torsion_free: bool

    def flags(self) -> Tuple[str, ...]:
        names = []
        if self.closed:
            names.append("closed")
        if self.coclosed:
            names.append("coclosed")
        if self.coclosed_pure_type:
            names.append("coclosed-pure-type")
        if self.locally_conformal_parallel:
            names.append("locally-conformal-parallel")
        if self.nearly_parallel:
            names.append("nearly-parallel")
        if self.torsion_free:
            names.append("torsion-free")
        return tuple(names)


def _proportional(alpha: KForm, beta: KForm) -> Optional[Scalar]:
    """lambda with alpha = lambda * beta, for nonzero beta, else None."""
    if beta.is_zero():
        return None
    idx, coef = next(iter(sorted(beta.terms.items())))
    target = alpha.coeff(idx)
    if coef == 1:
        lam = target
    elif coef == -1:
        lam = -target
    elif isinstance(coef, (int, Fraction)) and isinstance(target, (int, Fraction)):
        lam = Fraction(target) / Fraction(coef)
    else:
        return None
    return lam if alpha == beta.scale(lam) else None


def fg_classify(s: G2Structure) -> FGClass:
    """Evaluate d(phi), d(star phi) exactly and set every applicable flag."""
    g, phi = s.algebra, s.phi
    starphi = hodge_star(phi)
    dphi = ce_differential(g, phi)
    dstarphi = ce_differential(g, starphi)

    closed = dphi.is_zero()
    coclosed = dstarphi.is_zero()
    pure = coclosed and wedge(dphi, phi).is_zero()

    lam = _proportional(dphi, starphi)
    nearly = lam is not None and lam != 0

    lcp = False
    if s.orthonormal_certificate:
        t1 = hodge_star(wedge(hodge_star(dphi), phi)).scale(Fraction(-1, 12))
        lcp = dphi == wedge(t1, phi).scale(3) and dstarphi == wedge(t1, starphi).scale(4)

    return FGClass(
        closed=closed,
        coclosed=coclosed,
        coclosed_pure_type=pure,
        locally_conformal_parallel=lcp,
        nearly_parallel=nearly,
        nearly_parallel_lambda=lam if nearly else None,
        torsion_free=closed and coclosed,
    )


# -- membership tests for the irreducible 2- and 3-form components -----------------


def in_omega2_14(phi: KForm, omega: KForm) -> bool:
    """omega ^ phi = -star(omega), the 14-dimensional component of 2-forms."""
    return wedge(omega, phi) == -hodge_star(omega)

def in_omega2_7(phi: KForm, omega: KForm) -> bool:
    """omega ^ phi = 2 star(omega), the 7-dimensional component of 2-forms."""
    return wedge(omega, phi) == hodge_star(omega).scale(2)


def in_omega3_27(phi: KForm, tau: KForm) -> bool:
    """tau ^ phi = 0 and tau ^ star(phi) = 0: the 27-dimensional component."""
    return wedge(tau, phi).is_zero() and wedge(tau, hodge_star(phi)).is_zero()
