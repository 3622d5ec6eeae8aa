"""sympy 정수론 함수 위의 얇은 캐시 층"""

from functools import lru_cache
from typing import Dict, Tuple

from sympy import divisor_count, factorint, primerange


def factorize(n: int) -> Dict[int, int]:
    """{p: v_p(n)} (n = 1 이면 빈 사전)"""
    return {int(p): int(e) for p, e in factorint(n).items()}


def smallest_prime_factor(n: int) -> int:
    return min(factorize(n))


@lru_cache(maxsize=16)
def divisor_counts(N: int) -> Tuple[int, ...]:
    """d(n) (색인 0 은 사용하지 않음)"""
    return (0,) + tuple(int(divisor_count(n)) for n in range(1, N + 1))


@lru_cache(maxsize=16)
def primes_up_to(N: int) -> Tuple[int, ...]:
    return tuple(int(p) for p in primerange(2, N + 1))
