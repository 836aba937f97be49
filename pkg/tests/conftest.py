import random
from fractions import Fraction

import pytest

from flatg2 import KForm, Poly, QuadExt, canonical_phi


@pytest.fixture
def phi() -> KForm:
    return canonical_phi()


def rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_rational(r: random.Random, bound: int = 9) -> Fraction:
    return Fraction(r.randint(-bound, bound), r.randint(1, 5))


def random_quadext(r: random.Random, radicand: int = 3) -> QuadExt:
    return QuadExt(random_rational(r), random_rational(r), radicand)


def random_poly(r: random.Random, symbols=("a", "b", "c"), max_terms: int = 4) -> Poly:
    terms = {}
    for _ in range(r.randint(0, max_terms)):
        mono = tuple(
            (s, r.randint(1, 2)) for s in symbols if r.random() < 0.5
        )
        terms[tuple(sorted(dict(mono).items()))] = random_rational(r)
    return Poly(terms)


def random_form(r: random.Random, n: int, degree: int, density: float = 0.35) -> KForm:
    import itertools

    terms = {}
    for idx in itertools.combinations(range(1, n + 1), degree):
        if r.random() < density:
            v = random_rational(r)
            if v != 0:
                terms[idx] = v
    return KForm(n, degree, terms)
