"""Exact scalar arithmetic shared by the whole package.

Three closed scalar domains:

* big rationals -- ``fractions.Fraction``, re-exported as :data:`Rational`;
* real quadratic extensions ``p + q*sqrt(n)`` with a fixed squarefree
  radicand ``n`` -- :class:`QuadExt`;
* sparse multivariate polynomials over Q in named symbols -- :class:`Poly`.

Rationals embed into the other two domains; QuadExt values with different
radicands, and QuadExt/Poly mixtures, are rejected with
:class:`DomainMismatch`.  Everything is immutable and exact: no floating
point is used anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

Rational = Fraction

#: Exponent-sorted monomial: ``(("a", 2), ("b", 1))`` stands for a^2*b.
Monomial = Tuple[Tuple[str, int], ...]


class DomainMismatch(TypeError):
    """Raised when two scalars live in incompatible domains."""


class DivisionByZero(ZeroDivisionError):
    """Raised on exact division by an exactly-zero scalar."""


class UnknownSymbol(KeyError):
    """Raised when a substitution names a symbol the polynomial ignores."""


def _is_squarefree(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


class QuadExt:
    """An element ``rational + radical*sqrt(radicand)`` of Q(sqrt n).

    ``radicand`` is a fixed squarefree integer >= 2, so equality with 0 is
    decidable: the value vanishes iff both coordinates do.
    """

    __slots__ = ("rational", "radical", "radicand")

    def __init__(self, rational, radical, radicand: int):
        if not _is_squarefree(radicand):
            raise ValueError(f"radicand must be squarefree >= 2, got {radicand}")
        object.__setattr__(self, "rational", Fraction(rational))
        object.__setattr__(self, "radical", Fraction(radical))
        object.__setattr__(self, "radicand", radicand)

    def __setattr__(self, *args):  # immutable
        raise AttributeError("QuadExt is immutable")

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.radicand != self.radicand and other.radical != 0 and self.radical != 0:
                raise DomainMismatch(
                    f"cannot mix sqrt({self.radicand}) with sqrt({other.radicand})"
                )
            if other.radicand != self.radicand:
                # one side is purely rational; move it into this field
                if other.radical == 0:
                    return QuadExt(other.rational, 0, self.radicand)
                return other
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.radicand)
        raise DomainMismatch(f"cannot combine QuadExt with {type(other).__name__}")

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Poly):
            raise DomainMismatch("cannot combine QuadExt with Poly")
        o = self._coerce(other)
        if o.radicand != self.radicand:  # self purely rational
            return QuadExt(self.rational + o.rational, o.radical, o.radicand)
        return QuadExt(self.rational + o.rational, self.radical + o.radical, self.radicand)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.rational, -self.radical, self.radicand)

    def __sub__(self, other):
        if isinstance(other, Poly):
            raise DomainMismatch("cannot combine QuadExt with Poly")
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            raise DomainMismatch("cannot combine QuadExt with Poly")
        o = self._coerce(other)
        if o.radicand != self.radicand:  # self purely rational
            return QuadExt(self.rational * o.rational, self.rational * o.radical, o.radicand)
        n = self.radicand
        return QuadExt(
            self.rational * o.rational + n * self.radical * o.radical,
            self.rational * o.radical + self.radical * o.rational,
            n,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        """Exact multiplicative inverse (conjugate over the norm)."""
        if self == 0:
            raise DivisionByZero("inverse of zero QuadExt")
        norm = self.rational * self.rational - self.radicand * self.radical * self.radical
        # norm is nonzero: sqrt(radicand) is irrational.
        return QuadExt(self.rational / norm, -self.radical / norm, self.radicand)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.radicand != self.radicand:
            o = QuadExt(o.rational, o.radical, self.radicand) if o.radical == 0 else o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadExt(1, 0, self.radicand)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.radical == 0 and other.radical == 0:
                return self.rational == other.rational
            return (
                self.radicand == other.radicand
                and self.rational == other.rational
                and self.radical == other.radical
            )
        if isinstance(other, (int, Fraction)):
            return self.radical == 0 and self.rational == other
        return NotImplemented

    def __hash__(self):
        if self.radical == 0:
            return hash(self.rational)
        return hash((self.rational, self.radical, self.radicand))

    def __repr__(self):
        return f"QuadExt({self.rational!r}, {self.radical!r}, {self.radicand})"

    def __str__(self):
        return render_scalar(self)


def sqrt_of(n: int) -> QuadExt:
    """The element sqrt(n) of Q(sqrt n)."""
    return QuadExt(0, 1, n)


def quad_inverse(x: QuadExt) -> QuadExt:
    """Spec-named alias of :meth:`QuadExt.inverse`."""
    return x.inverse()


class Poly:
    """Sparse multivariate polynomial over Q in named, interned symbols.

    Terms map a :data:`Monomial` to a nonzero ``Fraction``.  The symbol set
    of a product/sum is the union of the operands' symbols; term order for
    printing is graded lexicographic (total degree first, then the exponent
    vector over the alphabetically sorted symbol list), largest term first.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        for mono, coef in (terms or {}).items():
            coef = Fraction(coef)
            if coef == 0:
                continue
            mono = tuple(sorted((s, int(e)) for s, e in mono if e != 0))
            if mono in clean:
                coef = clean[mono] + coef
                if coef == 0:
                    del clean[mono]
                    continue
            clean[mono] = coef
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def symbol(name: str) -> "Poly":
        return Poly({((name, 1),): Fraction(1)})

    @staticmethod
    def constant(value) -> "Poly":
        return Poly({(): Fraction(value)})

    # -- queries ------------------------------------------------------------

    def symbols(self) -> tuple:
        names = set()
        for mono in self.terms:
            for s, _ in mono:
                names.add(s)
        return tuple(sorted(names))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e for _, e in mono) for mono in self.terms)

    def constant_value(self) -> Fraction | None:
        """The value as a Fraction if the polynomial is constant, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and () in self.terms:
            return self.terms[()]
        return None

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        raise DomainMismatch(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other):
        if isinstance(other, QuadExt):
            raise DomainMismatch("cannot combine Poly with QuadExt")
        o = self._coerce(other)
        out = dict(self.terms)
        for mono, coef in o.terms.items():
            s = out.get(mono, Fraction(0)) + coef
            if s == 0:
                out.pop(mono, None)
            else:
                out[mono] = s
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QuadExt):
            raise DomainMismatch("cannot combine Poly with QuadExt")
        o = self._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            d1 = dict(m1)
            for m2, c2 in o.terms.items():
                d = dict(d1)
                for s, e in m2:
                    d[s] = d.get(s, 0) + e
                mono = tuple(sorted(d.items()))
                c = c1 * c2
                s0 = out.get(mono, Fraction(0)) + c
                if s0 == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = s0
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        out = Poly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("polynomial divided by zero rational")
            return self * (Fraction(1) / Fraction(other))
        raise DomainMismatch("Poly division only by nonzero rationals")

    # -- substitution ---------------------------------------------------------

    def substitute(self, assignment: Mapping[str, Union[int, Fraction]]):
        """Exact partial substitution; returns Fraction when fully evaluated."""
        known = set(self.symbols())
        for key in assignment:
            if key not in known:
                raise UnknownSymbol(f"symbol {key!r} not present in polynomial")
        out: dict = {}
        for mono, coef in self.terms.items():
            c = coef
            rest = []
            for s, e in mono:
                if s in assignment:
                    c *= Fraction(assignment[s]) ** e
                else:
                    rest.append((s, e))
            mono2 = tuple(rest)
            s0 = out.get(mono2, Fraction(0)) + c
            if s0 == 0:
                out.pop(mono2, None)
            else:
                out[mono2] = s0
        result = Poly(out)
        const = result.constant_value()
        return const if const is not None else result

    # -- comparison ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            const = self.constant_value()
            return const is not None and const == other
        if isinstance(other, QuadExt):
            const = self.constant_value()
            return const is not None and other == const
        return NotImplemented

    def __hash__(self):
        const = self.constant_value()
        if const is not None:
            return hash(const)
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Poly({self.terms!r})"

    def __str__(self):
        return render_scalar(self)


#: Any value of the three exact domains (ints are accepted as rationals).
Scalar = Union[int, Fraction, QuadExt, Poly]


def scalar_arith(x: Scalar, y: Scalar, op: str) -> Scalar:
    """Spec-named dispatcher for add/sub/mul on compatible scalars."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown op {op!r}")


def substitute(p: Poly, assignment: Mapping[str, Union[int, Fraction]]):
    """Spec-named alias of :meth:`Poly.substitute`."""
    return p.substitute(assignment)


def is_zero(s: Scalar) -> bool:
    return s == 0


# -- canonical text rendering -------------------------------------------------


def render_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _render_radical_part(coef: Fraction, n: int) -> str:
    if coef == 1:
        return f"sqrt({n})"
    if coef == -1:
        return f"-sqrt({n})"
    return f"{render_rational(coef)}*sqrt({n})"


def render_quadext(x: QuadExt) -> str:
    if x.radical == 0:
        return render_rational(x.rational)
    rad = _render_radical_part(x.radical, x.radicand)
    if x.rational == 0:
        return rad
    sep = "+" if not rad.startswith("-") else "-"
    return f"{render_rational(x.rational)}{sep}{rad.lstrip('-')}"


def _grlex_key(mono: Monomial, symbols: tuple) -> tuple:
    degs = dict(mono)
    return (sum(degs.values()), tuple(degs.get(s, 0) for s in symbols))


def _render_monomial(mono: Monomial) -> str:
    parts = []
    for s, e in mono:
        parts.append(s if e == 1 else f"{s}^{e}")
    return "*".join(parts)


def render_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    symbols = p.symbols()
    ordered = sorted(p.terms.items(), key=lambda kv: _grlex_key(kv[0], symbols), reverse=True)
    pieces = []
    for i, (mono, coef) in enumerate(ordered):
        mono_s = _render_monomial(mono)
        if not mono_s:
            body = render_rational(abs(coef))
        elif abs(coef) == 1:
            body = mono_s
        else:
            body = f"{render_rational(abs(coef))}*{mono_s}"
        if i == 0:
            pieces.append(body if coef > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if coef > 0 else f" - {body}")
    return "".join(pieces)


def render_scalar(s: Scalar) -> str:
    """Canonical rendering: "p/q", "p/q+r/s*sqrt(n)", or a sorted monomial sum."""
    if isinstance(s, (int, Fraction)):
        return render_rational(Fraction(s))
    if isinstance(s, QuadExt):
        return render_quadext(s)
    if isinstance(s, Poly):
        return render_poly(s)
    raise TypeError(f"not a scalar: {type(s).__name__}")


def is_composite_render(s: Scalar) -> bool:
    """True when render_scalar(s) needs parentheses inside a product."""
    text = render_scalar(s)
    return ("+" in text) or ("-" in text.lstrip("-")) or isinstance(s, Poly) and len(s.terms) > 1


# -- parsing (data-file format) ------------------------------------------------


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def parse_quadext(text: str, default_radicand: int = 3) -> Union[Fraction, QuadExt]:
    """Parse "p/q", "p/q+r/s*sqrt(n)", "sqrt(n)", "-2*sqrt(n)" and friends.

    Returns a plain Fraction when no radical appears.
    """
    s = text.strip().replace(" ", "")
    if "sqrt" not in s:
        return Fraction(s)
    # split into at most two signed terms
    terms = []
    start = 0
    for i in range(1, len(s)):
        if s[i] in "+-" and s[i - 1] not in "+-*/(":
            terms.append(s[start:i])
            start = i
    terms.append(s[start:])
    rational = Fraction(0)
    radical = Fraction(0)
    radicand = default_radicand
    for term in terms:
        if "sqrt" in term:
            idx = term.index("sqrt")
            coef_text = term[:idx].rstrip("*")
            if coef_text in ("", "+"):
                coef = Fraction(1)
            elif coef_text == "-":
                coef = Fraction(-1)
            else:
                coef = Fraction(coef_text)
            inner = term[idx + 4 :]
            if not (inner.startswith("(") and inner.endswith(")")):
                raise ValueError(f"malformed radical in {text!r}")
            radicand = int(inner[1:-1])
            radical += coef
        else:
            rational += Fraction(term)
    return QuadExt(rational, radical, radicand)
