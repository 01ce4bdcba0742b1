from dataclasses import dataclass
from typing import Any, Callable

from service.tract.Tract import Tract
from service.tract.TractElement import TractElement, ZERO


@dataclass(frozen=True)
class TractHom:
    """
    tract 同态 f: F -> F'
    unit_map 给出单位载荷的像，f(0) = 0 由 __call__ 保证
    """
    hom_id: str
    source: Tract
    target: Tract
    unit_map: Callable[[Any], TractElement]

    def __call__(self, x: TractElement) -> TractElement:
        if x.is_zero:
            return ZERO
        x = self.source.check(x)
        image = self.unit_map(x.value)
        return image if image.is_zero else self.target.check(image)
