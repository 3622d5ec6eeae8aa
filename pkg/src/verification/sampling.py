"""시드 고정 random.Random 으로 검증 표본을 만드는 보조 함수들"""

import random
from fractions import Fraction
from typing import Optional

from ..algebra import AlgElem, CoefficientDomain
from ..numfield import NFElem, NumberField
from ..series import ArithSeries, PrimeVector

SMALL_DENOMINATORS = (1, 1, 1, 2, 3)


def random_fraction(rng: random.Random, bound: int = 5, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.choice(SMALL_DENOMINATORS))
        if value or not nonzero:
            return value


def random_exponent(rng: random.Random, field: NumberField, nonzero: bool = False) -> NFElem:
    while True:
        alpha = field.element([Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2))) for _ in range(field.degree)])
        if not (nonzero and alpha.is_zero()):
            return alpha


def random_alg_elem(
    rng: random.Random,
    field: NumberField,
    max_terms: int = 4,
    zero_constant: bool = False,
    domain: CoefficientDomain = CoefficientDomain.RATIONAL,
) -> AlgElem:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_exponent(rng, field, nonzero=zero_constant)] = random_fraction(rng, nonzero=True)
    elem = AlgElem.from_dict(field, terms, CoefficientDomain.RATIONAL)
    return elem.to_domain(domain) if domain is not CoefficientDomain.RATIONAL else elem


def random_complex_elem(rng: random.Random, field: NumberField, max_terms: int = 4,
                        zero_constant: bool = False) -> AlgElem:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_exponent(rng, field, nonzero=zero_constant)] = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    return AlgElem.from_dict(field, terms, CoefficientDomain.COMPLEX)


def random_series(
    rng: random.Random,
    N: int,
    unit: bool = True,
    support: Optional[int] = None,
) -> ArithSeries:
    """support 가 주어지면 그 개수만큼의 색인에만 값을 둠 (a_1 은 unit 이면 항상 비영)"""
    values = {}
    indices = range(2, N + 1) if support is None else rng.sample(range(2, N + 1), min(support, N - 1))
    for n in indices:
        values[n] = random_fraction(rng)
    values[1] = random_fraction(rng, nonzero=True) if unit else random_fraction(rng)
    return ArithSeries.from_dict(N, values)


def random_prime_vector(rng: random.Random, P: int, bound: int = 2) -> PrimeVector:
    return PrimeVector.from_function(P, lambda p: Fraction(rng.randint(-bound, bound)), CoefficientDomain.RATIONAL)


def random_completely_multiplicative(rng: random.Random, N: int) -> ArithSeries:
    return random_prime_vector(rng, N).to_series(N)
