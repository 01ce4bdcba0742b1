"""
内置 tract 与同态的注册表
tract 标识见 TractType，同态标识形如 "psi:sign"、"valuation:2"
"""
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from dao.TractType import TractType
from service.tract.HyperfieldTracts import (KrasnerTract, PhaseTract, SignTract, TriangleTract,
                                            TropicalTract, WeakSignTract)
from service.tract.PartialFieldTracts import (DyadicTract, InitialTract, PrimeFieldTract,
                                              RationalTract, RegularTract)
from service.tract.Tract import Tract
from service.tract.TractElement import TractElement
from service.tract.TractHom import TractHom
from util.Constant import Constant
from util.TractException import UnknownNameError

_BUILDERS: Dict[str, Callable[[], Tract]] = {
    TractType.KRASNER.value: KrasnerTract,
    TractType.SIGN.value: SignTract,
    TractType.WEAK_SIGN.value: WeakSignTract,
    TractType.TROPICAL.value: TropicalTract,
    TractType.TRIANGLE.value: TriangleTract,
    TractType.GF2.value: lambda: PrimeFieldTract(2),
    TractType.GF3.value: lambda: PrimeFieldTract(3),
    TractType.RATIONAL.value: RationalTract,
    TractType.REGULAR.value: RegularTract,
    TractType.DYADIC.value: DyadicTract,
    TractType.INITIAL.value: InitialTract,
}

STATIC_HOMS = ["sigma", "regular-to-sign", "regular-to-gf2", "regular-to-gf3",
               "sign-to-weaksign", "dyadic-to-gf3"]
PARAMETRIC_HOMS = ["psi:<tract>", "identity:<tract>", "initial:<tract>", "valuation:<prime>"]


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


class TractRegistry:

    def __init__(self, phase_tol: Optional[float] = None, check_tol: Optional[float] = None):
        self.phase_tol = phase_tol if phase_tol is not None else Constant.TOL
        self.check_tol = check_tol if check_tol is not None else Constant.CHECK_TOL

    def get_tract(self, tract_id: str, tol: Optional[float] = None) -> Tract:
        """
        按标识构造内置 tract

        Args:
            tract_id: TractType 中的标识
            tol: 仅对相位超域有效，覆盖默认容差

        Raises:
            UnknownNameError: 未知标识
        """
        if tract_id == TractType.PHASE.value:
            return PhaseTract(tol if tol is not None else self.phase_tol, self.check_tol)
        builder = _BUILDERS.get(tract_id)
        if builder is None:
            raise UnknownNameError(f"未知的 tract: {tract_id}")
        return builder()

    @staticmethod
    def list_tracts() -> List[str]:
        return TractType.get_all_types()

    @staticmethod
    def list_homs() -> List[str]:
        return STATIC_HOMS + PARAMETRIC_HOMS

    def get_hom(self, hom_id: str) -> TractHom:
        name, _, argument = hom_id.partition(":")
        if argument and name not in ("psi", "identity", "initial", "valuation"):
            # tract 标识本身带冒号，如 identity:field:q
            raise UnknownNameError(f"未知的同态: {hom_id}")
        if name == "psi":
            source, target = self.get_tract(argument), self.get_tract(TractType.KRASNER.value)
            return TractHom(hom_id, source, target, lambda g: target.one)
        if name == "identity":
            tract = self.get_tract(argument)
            return TractHom(hom_id, tract, tract, TractElement)
        if name == "initial":
            source, target = self.get_tract(TractType.INITIAL.value), self.get_tract(argument)
            return TractHom(hom_id, source, target, lambda g: target.one if g == 1 else target.epsilon)
        if name == "valuation":
            if not argument.isdigit() or not _is_prime(int(argument)):
                raise UnknownNameError(f"valuation 需要素数参数: {hom_id}")
            return self._valuation(hom_id, int(argument))
        return self._static_hom(hom_id)

    def _valuation(self, hom_id: str, p: int) -> TractHom:
        source = self.get_tract(TractType.RATIONAL.value)
        target = self.get_tract(TractType.TROPICAL.value)

        def p_adic_absolute_value(g: Fraction) -> TractElement:
            k = 0
            numerator, denominator = abs(g.numerator), g.denominator
            while numerator % p == 0:
                numerator //= p
                k += 1
            while denominator % p == 0:
                denominator //= p
                k -= 1
            return TractElement(Fraction(p) ** -k)

        return TractHom(hom_id, source, target, p_adic_absolute_value)

    def _static_hom(self, hom_id: str) -> TractHom:
        get = self.get_tract
        if hom_id == "sigma":
            return TractHom(hom_id, get(TractType.RATIONAL.value), get(TractType.SIGN.value),
                            lambda g: TractElement(1 if g > 0 else -1))
        if hom_id == "regular-to-sign":
            return TractHom(hom_id, get(TractType.REGULAR.value), get(TractType.SIGN.value), TractElement)
        if hom_id == "regular-to-gf2":
            return TractHom(hom_id, get(TractType.REGULAR.value), get(TractType.GF2.value),
                            lambda g: TractElement(1))
        if hom_id == "regular-to-gf3":
            return TractHom(hom_id, get(TractType.REGULAR.value), get(TractType.GF3.value),
                            lambda g: TractElement(g % 3))
        if hom_id == "sign-to-weaksign":
            return TractHom(hom_id, get(TractType.SIGN.value), get(TractType.WEAK_SIGN.value), TractElement)
        if hom_id == "dyadic-to-gf3":
            # 2 ≡ -1 (mod 3)
            return TractHom(hom_id, get(TractType.DYADIC.value), get(TractType.GF3.value),
                            lambda g: TractElement(g.numerator * pow(g.denominator, -1, 3) % 3))
        raise UnknownNameError(f"未知的同态: {hom_id}")
