"""
지표 열거, 유도, 원시 지표, 점별 곱

(Z/N)^x 의 생성원은 소수 거듭제곱 성분마다 고정합니다.
- 홀수 p^e: 가장 작은 원시근
- 4: 3
- 2^e (e >= 3): -1 과 5
생성원은 중국인의 나머지 정리로 N 까지 올리고, 지표는 지수 튜플의 사전식 순서로 나열합니다.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, lcm
from typing import Dict, List, Optional, Tuple

import sympy

from config.settings import get_settings
from ..exceptions import CapExceededError, NotMultipleError, ValidationError
from ..utils.logging import get_logger
from .character import DirichletCharacter

logger = get_logger(__name__)


def _lift(g: int, q: int, N: int) -> int:
    """x = g mod q, x = 1 mod N/q"""
    rest = N // q
    if rest == 1:
        return g % N
    return (1 + rest * (((g - 1) * pow(rest, -1, q)) % q)) % N


def unit_group_generators(N: int) -> Tuple[Tuple[int, int], ...]:
    """(생성원 mod N, 위수) 목록"""
    generators: List[Tuple[int, int]] = []
    for p, e in sorted(sympy.factorint(N).items()):
        q = p ** e
        if p == 2:
            if e == 2:
                generators.append((_lift(3, q, N), 2))
            elif e >= 3:
                generators.append((_lift(q - 1, q, N), 2))
                generators.append((_lift(5, q, N), 2 ** (e - 2)))
        else:
            g = int(sympy.primitive_root(q))
            generators.append((_lift(g, q, N), int(sympy.totient(q))))
    return tuple(generators)


def _discrete_logs(N: int, generators) -> Dict[int, Tuple[int, ...]]:
    orders = [o for _, o in generators]
    table: Dict[int, Tuple[int, ...]] = {}
    for exponents in product(*(range(o) for o in orders)):
        r = 1 % N
        for (g, _), k in zip(generators, exponents):
            r = (r * pow(g, k, N)) % N
        table[r] = exponents
    return table


@lru_cache(maxsize=64)
def _enumerate(N: int) -> Tuple[DirichletCharacter, ...]:
    generators = unit_group_generators(N)
    orders = [o for _, o in generators]
    logs = _discrete_logs(N, generators)
    characters = []
    for ks in product(*(range(o) for o in orders)):
        values = [None] * N
        for r, exps in logs.items():
            values[r] = sum((Fraction(k * e, o) for k, e, o in zip(ks, exps, orders)), Fraction(0)) % 1
        characters.append(DirichletCharacter(N, tuple(values)))
    logger.debug("지표 열거 완료", modulus=N, count=len(characters))
    return tuple(characters)


def char_enumerate(N: int, cap: Optional[int] = None) -> List[DirichletCharacter]:
    """모듈러스 N 의 phi(N) 개 지표 (결정적 순서, 0 번은 주지표)"""
    if N < 1:
        raise ValidationError("모듈러스는 1 이상이어야 합니다", field_name="N", field_value=N)
    cap = cap if cap is not None else get_settings().characters.modulus_cap
    if N > cap:
        raise CapExceededError(N, cap, what="modulus")
    return list(_enumerate(N))


def induce(chi: DirichletCharacter, M: int) -> DirichletCharacter:
    """chi 를 모듈러스 M 으로 유도 (gcd(r, M) > 1 이면 0)"""
    if M < 1 or M % chi.modulus != 0:
        raise NotMultipleError(
            f"{M} 은(는) 모듈러스 {chi.modulus} 의 배수가 아닙니다", modulus=chi.modulus
        )
    values = tuple(None if gcd(r, M) != 1 else chi.angle(r) for r in range(M))
    return DirichletCharacter(M, values)


def induce_and_conductor(chi: DirichletCharacter, M: int) -> DirichletCharacter:
    """유도 지표 (도체와 원시성은 유도된 값에서 다시 계산)"""
    induced = induce(chi, M)
    logger.debug("지표 유도", source=chi.modulus, target=M, conductor=induced.conductor)
    return induced


def primitive_of(chi: DirichletCharacter) -> DirichletCharacter:
    """chi 를 유도하는 도체 모듈러스의 원시 지표"""
    c, N = chi.conductor, chi.modulus
    values: List[Optional[Fraction]] = []
    for r in range(c):
        if gcd(r, c) != 1:
            values.append(None)
            continue
        lift = next(r + c * t for t in range(N) if gcd(r + c * t, N) == 1)
        values.append(chi.angle(lift))
    return DirichletCharacter(c, tuple(values))


def character_product(chi: DirichletCharacter, psi: DirichletCharacter) -> DirichletCharacter:
    """점별 곱 chi psi (모듈러스 lcm)"""
    M = lcm(chi.modulus, psi.modulus)
    a, b = induce(chi, M), induce(psi, M)
    values = tuple(
        None if x is None or y is None else (x + y) % 1
        for x, y in zip(a.values, b.values)
    )
    return DirichletCharacter(M, values)


def trivial_character() -> DirichletCharacter:
    return DirichletCharacter(1, (Fraction(0),))


def character_by_index(N: int, index: int, cap: Optional[int] = None) -> DirichletCharacter:
    characters = char_enumerate(N, cap)
    if not 0 <= index < len(characters):
        raise ValidationError(
            f"지표 번호 {index} 이(가) 0..{len(characters) - 1} 범위를 벗어납니다",
            field_name="index", field_value=index,
        )
    return characters[index]
