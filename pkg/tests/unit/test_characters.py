"""
디리클레 지표 테스트

열거 개수, 도체와 원시 지표, 유도, 직렬화 검증, 국소 제타 인자,
R_chi 작용, 증인 소수 탐색을 점검합니다.
"""

import logging
from fractions import Fraction

import pytest
import sympy

from src.algebra import CoefficientDomain, gaussian
from src.characters import (
    DirichletCharacter,
    R_chi,
    character_by_index,
    character_product,
    character_series,
    characters_distinguishable,
    char_enumerate,
    induce,
    local_factor_series,
    primitive_of,
    root_of_unity,
    trivial_character,
    unit_group_generators,
    zeta_p_series,
)
from src.exceptions import (
    CapExceededError,
    CharacterError,
    NotMultipleError,
    NotPrimeError,
    ValidationError,
)
from src.models.payloads import CharacterPayload
from src.series import ArithSeries

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


@pytest.fixture(scope="module")
def chi4():
    """모듈러스 4 의 비주지표"""
    return char_enumerate(4)[1]


class TestEnumeration:
    """지표 열거 테스트"""

    @pytest.mark.parametrize("N", list(range(1, 31)))
    def test_count_is_totient(self, N):
        characters = char_enumerate(N)
        assert len(characters) == sympy.totient(N)
        assert characters[0].is_principal()
        assert len(set(characters)) == len(characters)

    def test_generators_mod_8(self):
        assert unit_group_generators(8) == ((7, 2), (5, 2))

    def test_mod_4(self, chi4):
        assert chi4.value(3) == -1
        assert chi4.value(2) == 0
        assert chi4.domain is CoefficientDomain.RATIONAL
        assert chi4.is_primitive

    def test_quartic_character_is_gaussian(self):
        quartic = [chi for chi in char_enumerate(5) if chi.order == 4]
        assert len(quartic) == 2
        assert all(chi.domain is CoefficientDomain.GAUSSIAN for chi in quartic)
        assert {quartic[0].value(2), quartic[1].value(2)} == {gaussian(0, 1), gaussian(0, -1)}

    def test_conductors_mod_8(self):
        assert sorted(chi.conductor for chi in char_enumerate(8)) == [1, 4, 8, 8]

    def test_cap(self):
        with pytest.raises(CapExceededError):
            char_enumerate(50, cap=10)

    def test_index_out_of_range(self):
        with pytest.raises(ValidationError):
            character_by_index(5, 4)

    def test_root_of_unity(self):
        assert root_of_unity(Fraction(1, 4), CoefficientDomain.GAUSSIAN) == gaussian(0, 1)
        cube = root_of_unity(Fraction(1, 3), CoefficientDomain.COMPLEX)
        assert cube ** 3 == pytest.approx(1)


class TestInductionAndConductor:
    """유도 지표와 원시 지표 테스트"""

    def test_induce_keeps_conductor(self, chi4):
        induced = induce(chi4, 12)
        assert induced.modulus == 12
        assert induced.conductor == 4
        assert not induced.is_primitive
        assert induced.value(3) == 0
        assert induced.value(7) == -1

    def test_primitive_of(self, chi4):
        assert primitive_of(induce(chi4, 12)) == chi4
        assert primitive_of(char_enumerate(9)[0]) == trivial_character()

    def test_not_multiple(self, chi4):
        with pytest.raises(NotMultipleError):
            induce(chi4, 6)

    def test_character_product(self, chi4):
        square = character_product(chi4, chi4)
        assert square.is_principal()
        assert square.modulus == 4
        mixed = character_product(chi4, char_enumerate(3)[1])
        assert mixed.modulus == 12
        assert mixed.value(5) == -1


class TestSerialization:
    """지표 직렬화 검증 테스트"""

    def test_from_payload(self, chi4):
        payload = CharacterPayload(modulus=4, values=[[1, 1, 0], [3, 2, 1]])
        assert DirichletCharacter.from_payload(payload) == chi4
        assert DirichletCharacter.from_payload(chi4.to_payload()) == chi4

    def test_not_multiplicative(self):
        payload = CharacterPayload(modulus=5, values=[[1, 1, 0], [2, 2, 1], [3, 2, 1], [4, 2, 1]])
        with pytest.raises(CharacterError):
            DirichletCharacter.from_payload(payload)

    def test_missing_unit_value(self):
        payload = CharacterPayload(modulus=5, values=[[1, 1, 0], [4, 2, 1]])
        with pytest.raises(CharacterError):
            DirichletCharacter.from_payload(payload)

    def test_chi_of_one(self):
        with pytest.raises(CharacterError):
            DirichletCharacter(3, (None, Fraction(1, 2), Fraction(1, 2)))


class TestCharacterActions:
    """지표 급수와 R_chi 작용 테스트"""

    def test_zeta_p(self):
        assert zeta_p_series(2, 10).support() == (1, 2, 4, 8)
        with pytest.raises(NotPrimeError):
            zeta_p_series(4, 10)
        with pytest.raises(ValidationError):
            zeta_p_series(11, 10)

    def test_local_factor(self, chi4):
        f = local_factor_series(chi4, 3, 10)
        assert f.support() == (1, 3, 9)
        assert (f[3], f[9]) == (-1, 1)

    def test_principal_local_factor_is_zeta_p(self):
        assert local_factor_series(char_enumerate(4)[0], 3, 20) == zeta_p_series(3, 20)

    def test_R_chi_on_ones(self, chi4):
        assert R_chi(chi4, ArithSeries.ones(8)) == character_series(chi4, 8)

    def test_R_chi_composition(self):
        chi, psi = char_enumerate(5)[1], char_enumerate(5)[2]
        f = ArithSeries.from_function(20, lambda n: n)
        composed = R_chi(chi, R_chi(psi, f))
        assert composed == R_chi(character_product(chi, psi), f)

    def test_distinguishable(self, chi4):
        principal = char_enumerate(4)[0]
        assert characters_distinguishable(chi4, principal, 20) == 3
        assert characters_distinguishable(chi4, principal, 20, exceptional={3}) == 7
        assert characters_distinguishable(chi4, induce(chi4, 12), 50) is None
        logger.info("지표 구별 테스트 통과")
