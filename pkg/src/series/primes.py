"""
소수 벡터 모형과 비주기 동치

완전 곱셈적 급수는 소수 p <= P 에서의 값 a_p 로 결정됩니다 (a_1 = 1).
비주기 몫은 명시적인 예외 소수 집합으로 모형화하며, 두 류는 예외 집합의
합집합 밖의 모든 소수에서 값이 같을 때 동치입니다.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Dict, FrozenSet, Iterable, Optional, Tuple

from ..algebra import coefficients as coeffs
from ..algebra.coefficients import CoefficientDomain
from ..exceptions import BoundMismatchError, ValidationError
from .arith import ArithSeries
from .sieve import primes_up_to, smallest_prime_factor


@dataclass(frozen=True)
class PrimeVector:
    """(a_p)_{p <= P}"""

    P: int
    values: Tuple[Any, ...]
    domain: CoefficientDomain = CoefficientDomain.RATIONAL

    def __post_init__(self):
        if len(self.values) != len(primes_up_to(self.P)):
            raise ValidationError(
                f"P={self.P} 이하 소수 개수와 값의 개수가 다릅니다",
                field_name="values",
            )
        object.__setattr__(self, "values", tuple(coeffs.coerce(v, self.domain) for v in self.values))

    @cached_property
    def primes(self) -> Tuple[int, ...]:
        return primes_up_to(self.P)

    @cached_property
    def as_dict(self) -> Dict[int, Any]:
        return dict(zip(self.primes, self.values))

    @classmethod
    def from_function(
        cls,
        P: int,
        fn: Callable[[int], Any],
        domain: Optional[CoefficientDomain] = None,
    ) -> "PrimeVector":
        values = [fn(p) for p in primes_up_to(P)]
        if domain is None:
            domain = coeffs.join_domains(CoefficientDomain.RATIONAL, *(coeffs.domain_of(v) for v in values))
        return cls(P, tuple(values), domain)

    @classmethod
    def from_series(cls, f: ArithSeries, P: int) -> "PrimeVector":
        """완전 곱셈적 급수의 소수 값 (P <= N 필요)"""
        if P > f.N:
            raise BoundMismatchError(f"P={P} 가 절단 차수 N={f.N} 보다 큽니다", truncation=f.N)
        return cls(P, tuple(f[p] for p in primes_up_to(P)), f.domain)

    def value(self, p: int) -> Any:
        try:
            return self.as_dict[p]
        except KeyError:
            raise ValidationError(f"{p} 은(는) P={self.P} 이하의 소수가 아닙니다", field_name="p", field_value=p)

    def to_series(self, N: int) -> ArithSeries:
        """a_n = prod a_p^{v_p(n)}"""
        if N > self.P and primes_up_to(N)[-1] > self.P:
            raise BoundMismatchError(
                f"N={N} 이하의 소수가 소수 한계 P={self.P} 를 넘습니다", truncation=N
            )
        out = [coeffs.one(self.domain)] * N
        table = self.as_dict
        for n in range(2, N + 1):
            p = smallest_prime_factor(n)
            out[n - 1] = out[n // p - 1] * table[p]
        return ArithSeries(N, tuple(out), self.domain)

    def _require_same_bound(self, other: "PrimeVector") -> None:
        if self.P != other.P:
            raise BoundMismatchError(f"소수 한계가 다릅니다: {self.P} != {other.P}")

    def __mul__(self, other: "PrimeVector") -> "PrimeVector":
        """성분별 곱 (완전 곱셈적 단원군의 군 연산)"""
        self._require_same_bound(other)
        domain = coeffs.join_domains(self.domain, other.domain)
        values = tuple(
            coeffs.coerce(a, domain) * coeffs.coerce(b, domain) for a, b in zip(self.values, other.values)
        )
        return PrimeVector(self.P, values, domain)

    def map_values(self, fn: Callable[[int, Any], Any]) -> "PrimeVector":
        """p, a_p -> 새 값"""
        return PrimeVector.from_function(self.P, lambda p: fn(p, self.as_dict[p]))

    def differing_primes(self, other: "PrimeVector", tolerance: float = 1e-12) -> Tuple[int, ...]:
        self._require_same_bound(other)
        return tuple(
            p for p, a, b in zip(self.primes, self.values, other.values)
            if not coeffs.close(a, b, tolerance)
        )


@dataclass(frozen=True)
class AperiodicClass:
    vector: PrimeVector
    exceptional: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "exceptional", frozenset(self.exceptional))

    def with_exceptional(self, primes: Iterable[int]) -> "AperiodicClass":
        return AperiodicClass(self.vector, self.exceptional | frozenset(primes))


def aperiodic_equiv(x: AperiodicClass, y: AperiodicClass, tolerance: float = 1e-12) -> bool:
    """예외 소수 합집합 밖에서 값이 모두 같으면 True"""
    excluded = x.exceptional | y.exceptional
    return all(p in excluded for p in x.vector.differing_primes(y.vector, tolerance))
