"""
절단 산술 함수 ArithSeries

a_1, ..., a_N 을 가진 N-색인 급수 (형식적으로 L(s) = sum a_n n^{-s}) 입니다.
절단 차수 N 은 모든 연산의 필수 매개변수이며, N 이 다른 급수끼리의 연산은
암묵적으로 다시 자르지 않고 TruncationMismatchError 를 냅니다.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterator, Mapping, Optional, Sequence, Tuple

from ..algebra import coefficients as coeffs
from ..algebra.coefficients import CoefficientDomain
from ..exceptions import TruncationMismatchError, ValidationError


@dataclass(frozen=True)
class ArithSeries:
    """절단된 N-색인 계수열"""

    N: int
    coeffs: Tuple[Any, ...]
    domain: CoefficientDomain = CoefficientDomain.RATIONAL

    def __post_init__(self):
        if self.N < 1:
            raise ValidationError("절단 차수 N 은 1 이상이어야 합니다", field_name="N", field_value=self.N)
        if len(self.coeffs) != self.N:
            raise ValidationError(
                f"계수 개수 {len(self.coeffs)} 이(가) N={self.N} 과 다릅니다",
                field_name="coeffs",
            )
        object.__setattr__(self, "coeffs", tuple(coeffs.coerce(v, self.domain) for v in self.coeffs))

    @classmethod
    def from_function(
        cls,
        N: int,
        fn: Callable[[int], Any],
        domain: Optional[CoefficientDomain] = None,
    ) -> "ArithSeries":
        values = [fn(n) for n in range(1, N + 1)]
        if domain is None:
            domain = coeffs.join_domains(CoefficientDomain.RATIONAL, *(coeffs.domain_of(v) for v in values))
        return cls(N, tuple(values), domain)

    @classmethod
    def from_dict(
        cls,
        N: int,
        mapping: Mapping[int, Any],
        domain: Optional[CoefficientDomain] = None,
    ) -> "ArithSeries":
        """{n: a_n} (없는 색인은 0, N 을 넘는 색인은 무시)"""
        return cls.from_function(N, lambda n: mapping.get(n, 0), domain)

    @classmethod
    def identity(cls, N: int, domain: CoefficientDomain = CoefficientDomain.RATIONAL) -> "ArithSeries":
        """디리클레 항등원 epsilon"""
        return cls.delta(N, 1, domain)

    @classmethod
    def delta(cls, N: int, k: int, domain: CoefficientDomain = CoefficientDomain.RATIONAL) -> "ArithSeries":
        return cls(N, tuple(1 if n == k else 0 for n in range(1, N + 1)), domain)

    @classmethod
    def ones(cls, N: int, domain: CoefficientDomain = CoefficientDomain.RATIONAL) -> "ArithSeries":
        return cls(N, (1,) * N, domain)

    def __getitem__(self, n: int) -> Any:
        if not 1 <= n <= self.N:
            raise IndexError(f"색인 {n} 이(가) 1..{self.N} 범위를 벗어납니다")
        return self.coeffs[n - 1]

    def __iter__(self) -> Iterator[Tuple[int, Any]]:
        return iter(enumerate(self.coeffs, start=1))

    def __len__(self) -> int:
        return self.N

    def support(self) -> Tuple[int, ...]:
        return tuple(n for n, v in self if not coeffs.is_zero(v))

    def leading(self) -> Any:
        return self.coeffs[0]

    def require_same_truncation(self, other: "ArithSeries") -> None:
        if self.N != other.N:
            raise TruncationMismatchError(self.N, other.N)

    def to_domain(self, domain: CoefficientDomain) -> "ArithSeries":
        return ArithSeries(self.N, self.coeffs, domain)

    def is_close(self, other: "ArithSeries", tolerance: float) -> bool:
        self.require_same_truncation(other)
        return all(coeffs.close(a, b, tolerance) for a, b in zip(self.coeffs, other.coeffs))

    def _joined(self, other: "ArithSeries") -> Tuple["ArithSeries", "ArithSeries", CoefficientDomain]:
        self.require_same_truncation(other)
        domain = coeffs.join_domains(self.domain, other.domain)
        return self.to_domain(domain), other.to_domain(domain), domain

    def __add__(self, other: "ArithSeries") -> "ArithSeries":
        f, g, domain = self._joined(other)
        return ArithSeries(self.N, tuple(a + b for a, b in zip(f.coeffs, g.coeffs)), domain)

    def __neg__(self) -> "ArithSeries":
        return ArithSeries(self.N, tuple(-a for a in self.coeffs), self.domain)

    def __sub__(self, other: "ArithSeries") -> "ArithSeries":
        return self + (-other)

    def scale(self, c: Any) -> "ArithSeries":
        domain = coeffs.join_domains(self.domain, coeffs.domain_of(c))
        c = coeffs.coerce(c, domain)
        return ArithSeries(self.N, tuple(c * a for a in self.to_domain(domain).coeffs), domain)

    def twist(self, weights: Sequence[Any]) -> "ArithSeries":
        """계수별 곱 a_n w_n (w 는 1..N 의 가중치 열)"""
        if len(weights) != self.N:
            raise TruncationMismatchError(self.N, len(weights))
        domain = coeffs.join_domains(self.domain, *(coeffs.domain_of(w) for w in weights))
        values = tuple(coeffs.coerce(a, domain) * coeffs.coerce(w, domain) for a, w in zip(self.coeffs, weights))
        return ArithSeries(self.N, values, domain)

    def truncate(self, M: int) -> "ArithSeries":
        """명시적 재절단 (M <= N)"""
        if M > self.N:
            raise TruncationMismatchError(self.N, M)
        return ArithSeries(M, self.coeffs[:M], self.domain)

    def wiener_norm(self):
        """sum |a_n|"""
        if self.domain is CoefficientDomain.RATIONAL:
            return coeffs.total((abs(a) for a in self.coeffs), CoefficientDomain.RATIONAL)
        return sum(coeffs.magnitude(a) for a in self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(a) for a in self.coeffs[:8])
        tail = ", ..." if self.N > 8 else ""
        return f"ArithSeries(N={self.N}, [{head}{tail}], {self.domain.value})"
