"""Exterior algebra over R^n with a distinguished orthonormal basis.

Alternating k-forms are stored sparsely as maps from strictly increasing
index tuples (1-based) to exact scalars.  The sign convention everywhere is
"sort the indices and count transpositions"; the Hodge star is taken with
respect to the orthonormal coframe e^1, ..., e^n and the orientation
e^1 ^ ... ^ e^n.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from .scalars import Scalar, is_composite_render, render_scalar


class DimensionMismatch(ValueError):
    """Operands live over spaces of different dimension."""


class DegreeZero(ValueError):
    """Interior product applied to a 0-form."""


def sort_with_sign(indices: Iterable[int]) -> Tuple[int, Tuple[int, ...]]:
    """Sort an index tuple, returning (sign, sorted) or sign 0 on repeats."""
    seq = list(indices)
    sign = 1
    # insertion sort, counting swaps; inputs have length <= n (tiny)
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(seq, seq[1:]):
        if a == b:
            return 0, tuple(seq)
    return sign, tuple(seq)


class KForm:
    """Alternating k-form: map from increasing index tuples to scalars."""

    __slots__ = ("n", "degree", "terms")

    def __init__(self, n: int, degree: int, terms: Mapping[Tuple[int, ...], Scalar] | None = None):
        if not (0 <= degree <= n):
            # forms of degree > n are identically zero; normalize the degree
            # so that wedge products past top degree still type-check
            degree = max(0, min(degree, n))
            terms = {}
        clean: Dict[Tuple[int, ...], Scalar] = {}
        for idx, coef in (terms or {}).items():
            if coef == 0:
                continue
            if len(idx) != degree:
                raise ValueError(f"index tuple {idx} has wrong length for degree {degree}")
            sign, idx2 = sort_with_sign(idx)
            if sign == 0:
                continue
            if any(not (1 <= i <= n) for i in idx2):
                raise ValueError(f"index out of range in {idx}")
            coef2 = coef if sign == 1 else -coef
            if idx2 in clean:
                coef2 = clean[idx2] + coef2
                if coef2 == 0:
                    del clean[idx2]
                    continue
            clean[idx2] = coef2
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("KForm is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(n: int, degree: int) -> "KForm":
        return KForm(n, degree, {})

    @staticmethod
    def basis(n: int, indices: Iterable[int]) -> "KForm":
        idx = tuple(indices)
        return KForm(n, len(idx), {idx: Fraction(1)})

    @staticmethod
    def volume(n: int) -> "KForm":
        return KForm.basis(n, range(1, n + 1))

    # -- simple queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, indices: Iterable[int]) -> Scalar:
        sign, idx = sort_with_sign(indices)
        if sign == 0:
            return Fraction(0)
        c = self.terms.get(idx, Fraction(0))
        return c if sign == 1 else -c

    # -- linear structure ------------------------------------------------------

    def _check(self, other: "KForm"):
        if self.n != other.n:
            raise DimensionMismatch(f"dimension {self.n} vs {other.n}")

    def __add__(self, other: "KForm") -> "KForm":
        self._check(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise DimensionMismatch(
                f"cannot add forms of degree {self.degree} and {other.degree}"
            )
        out = dict(self.terms)
        for idx, coef in other.terms.items():
            s = out.get(idx, Fraction(0)) + coef
            if s == 0:
                out.pop(idx, None)
            else:
                out[idx] = s
        return KForm(self.n, self.degree, out)

    def __neg__(self) -> "KForm":
        return KForm(self.n, self.degree, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def scale(self, scalar: Scalar) -> "KForm":
        if scalar == 0:
            return KForm.zero(self.n, self.degree)
        return KForm(self.n, self.degree, {i: scalar * c for i, c in self.terms.items()})

    def __mul__(self, scalar):
        return self.scale(scalar)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        if self.n != other.n:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.degree, frozenset(self.terms)))

    def __repr__(self):
        return f"KForm({self.n}, {self.degree}, {render_form(self)!r})"

    def __str__(self):
        return render_form(self)


class VectorField:
    """A vector with exact scalar coefficients in the distinguished basis."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[int, Scalar] | None = None):
        clean: Dict[int, Scalar] = {}
        for i, c in (coeffs or {}).items():
            if c == 0:
                continue
            if not (1 <= i <= n):
                raise ValueError(f"index {i} out of range")
            clean[i] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *args):
        raise AttributeError("VectorField is immutable")

    @staticmethod
    def basis(n: int, i: int) -> "VectorField":
        return VectorField(n, {i: Fraction(1)})

    @staticmethod
    def zero(n: int) -> "VectorField":
        return VectorField(n, {})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Scalar:
        return self.coeffs.get(i, Fraction(0))

    def __add__(self, other: "VectorField") -> "VectorField":
        if self.n != other.n:
            raise DimensionMismatch(f"dimension {self.n} vs {other.n}")
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            s = out.get(i, Fraction(0)) + c
            if s == 0:
                out.pop(i, None)
            else:
                out[i] = s
        return VectorField(self.n, out)

    def __neg__(self):
        return VectorField(self.n, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar: Scalar) -> "VectorField":
        if scalar == 0:
            return VectorField.zero(self.n)
        return VectorField(self.n, {i: scalar * c for i, c in self.coeffs.items()})

    def __mul__(self, scalar):
        return self.scale(scalar)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs)))

    def __repr__(self):
        return f"VectorField({self.n}, {self.coeffs!r})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in sorted(self.coeffs):
            c = self.coeffs[i]
            text = render_scalar(c)
            if text == "1":
                parts.append(f"e_{i}")
            elif text == "-1":
                parts.append(f"-e_{i}")
            elif is_composite_render(c):
                parts.append(f"({text})*e_{i}")
            else:
                parts.append(f"{text}*e_{i}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


# -- core operations -------------------------------------------------------------


def wedge(alpha: KForm, beta: KForm) -> KForm:
    """Exterior product with the sort-and-count-transpositions sign."""
    if alpha.n != beta.n:
        raise DimensionMismatch(f"dimension {alpha.n} vs {beta.n}")
    n = alpha.n
    k = alpha.degree + beta.degree
    if k > n:
        return KForm.zero(n, min(k, n))
    out: Dict[Tuple[int, ...], Scalar] = {}
    for ia, ca in alpha.terms.items():
        sa = set(ia)
        for ib, cb in beta.terms.items():
            if sa & set(ib):
                continue
            sign, idx = sort_with_sign(ia + ib)
            c = ca * cb
            if sign == -1:
                c = -c
            s = out.get(idx, Fraction(0)) + c
            if s == 0:
                out.pop(idx, None)
            else:
                out[idx] = s
    return KForm(n, k, out)


def contract(v: VectorField, alpha: KForm) -> KForm:
    """Interior product iota_v(alpha)."""
    if v.n != alpha.n:
        raise DimensionMismatch(f"dimension {v.n} vs {alpha.n}")
    if alpha.degree == 0:
        raise DegreeZero("interior product of a 0-form")
    out: Dict[Tuple[int, ...], Scalar] = {}
    for idx, coef in alpha.terms.items():
        for pos, i in enumerate(idx):
            vi = v.coeffs.get(i)
            if vi is None:
                continue
            rest = idx[:pos] + idx[pos + 1 :]
            c = vi * coef
            if pos % 2 == 1:
                c = -c
            s = out.get(rest, Fraction(0)) + c
            if s == 0:
                out.pop(rest, None)
            else:
                out[rest] = s
    return KForm(alpha.n, alpha.degree - 1, out)


def hodge_star(alpha: KForm) -> KForm:
    """Hodge star for the orthonormal coframe oriented by e^1^...^e^n."""
    n = alpha.n
    full = tuple(range(1, n + 1))
    out: Dict[Tuple[int, ...], Scalar] = {}
    for idx, coef in alpha.terms.items():
        comp = tuple(i for i in full if i not in idx)
        sign, _ = sort_with_sign(idx + comp)
        out[comp] = coef if sign == 1 else -coef
    return KForm(n, n - alpha.degree, out)


def b_form(phi: KForm, v: VectorField, w: VectorField) -> Scalar:
    """The symmetric bilinear map (v, w) -> (1/6) iota_v phi ^ iota_w phi ^ phi.

    Returns the coefficient of the volume form e^{1...7}; ``phi`` must be a
    3-form in dimension 7.
    """
    if phi.n != 7:
        raise DimensionMismatch("b_form requires ambient dimension 7")
    if phi.degree != 3:
        raise DimensionMismatch("b_form requires a 3-form")
    if v.n != 7 or w.n != 7:
        raise DimensionMismatch("b_form vectors must live in dimension 7")
    top = wedge(wedge(contract(v, phi), contract(w, phi)), phi)
    return top.coeff(tuple(range(1, 8))) * Fraction(1, 6)


# -- rendering -------------------------------------------------------------------


def render_form(alpha: KForm) -> str:
    """Signed monomial sum "e^{ijk}" in lexicographic index order."""
    if alpha.is_zero():
        return "0"
    if alpha.degree == 0:
        return render_scalar(alpha.terms.get((), Fraction(0)))
    pieces = []
    for idx in sorted(alpha.terms):
        coef = alpha.terms[idx]
        mono = "e^{" + "".join(str(i) for i in idx) + "}"
        text = render_scalar(coef)
        if text == "1":
            piece = mono
        elif text == "-1":
            piece = f"-{mono}"
        elif is_composite_render(coef):
            piece = f"({text})*{mono}"
        else:
            piece = f"{text}*{mono}"
        pieces.append(piece)
    out = pieces[0]
    for p in pieces[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out
