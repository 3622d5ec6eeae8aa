"""급수 자기사상 핸들과 (S boxplus S')(f) = S(f) * S'(f), 합성"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..characters import DirichletCharacter, R_chi
from ..series import ArithSeries, dconv
from .representation import GaloisRep, R_rho


@dataclass(frozen=True)
class SeriesEndomorphism:
    name: str
    apply: Callable[[ArithSeries], ArithSeries]

    def __call__(self, f: ArithSeries) -> ArithSeries:
        return self.apply(f)

    def __repr__(self) -> str:
        return f"SeriesEndomorphism({self.name})"


IDENTITY = SeriesEndomorphism("id", lambda f: f)


def r_chi_handle(chi: DirichletCharacter) -> SeriesEndomorphism:
    return SeriesEndomorphism(f"R[chi mod {chi.modulus}]", lambda f: R_chi(chi, f))


def r_rho_handle(rho: GaloisRep) -> SeriesEndomorphism:
    return SeriesEndomorphism(f"R[rho dim {rho.dimension}]", lambda f: R_rho(rho, f))


def boxplus(S: SeriesEndomorphism, T: SeriesEndomorphism) -> SeriesEndomorphism:
    return SeriesEndomorphism(f"({S.name} ⊞ {T.name})", lambda f: dconv(S(f), T(f)))


def compose(S: SeriesEndomorphism, T: SeriesEndomorphism) -> SeriesEndomorphism:
    """S . T"""
    return SeriesEndomorphism(f"({S.name} ∘ {T.name})", lambda f: S(T(f)))
