"""
디리클레 지표 패키지

정확한 단위근 값을 갖는 지표, 도체와 원시성, 유도 지표, 국소 제타 인자,
R_chi 작용과 단사성 증인 탐색을 제공합니다.
"""

from .character import DirichletCharacter, root_of_unity, domain_for_order
from .enumeration import (
    unit_group_generators,
    char_enumerate,
    induce,
    induce_and_conductor,
    primitive_of,
    character_product,
    trivial_character,
    character_by_index,
)
from .actions import (
    character_series,
    zeta_p_series,
    local_factor_series,
    R_chi,
    R_chi_vector,
    characters_distinguishable,
)

__all__ = [
    "DirichletCharacter",
    "root_of_unity",
    "domain_for_order",
    "unit_group_generators",
    "char_enumerate",
    "induce",
    "induce_and_conductor",
    "primitive_of",
    "character_product",
    "trivial_character",
    "character_by_index",
    "character_series",
    "zeta_p_series",
    "local_factor_series",
    "R_chi",
    "R_chi_vector",
    "characters_distinguishable",
]
