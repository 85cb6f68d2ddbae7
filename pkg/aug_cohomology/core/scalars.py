# --- aug_cohomology/core/scalars.py ---

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from aug_cohomology.core.errors import FieldMismatch

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


def is_prime(p: int) -> bool:
    """Teste de primalidade por divisão (os primos usados são pequenos)."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """
    Corpo de coeficientes: char == 0 é ℚ (valores Fraction/int), caso contrário
    GF(p) com valores inteiros canónicos em [0, p).
    """

    char: int = 0

    def __post_init__(self):
        if self.char != 0 and not is_prime(self.char):
            raise FieldMismatch(f"Característica inválida: {self.char} não é primo nem 0.")

    @property
    def name(self) -> str:
        return "QQ" if self.char == 0 else f"GF({self.char})"

    @property
    def zero(self) -> Scalar:
        return 0

    @property
    def one(self) -> Scalar:
        return 1

    def norm(self, x: Scalar) -> Scalar:
        """Forma canónica de um resultado aritmético."""
        if self.char == 0:
            if isinstance(x, Fraction) and x.denominator == 1:
                return x.numerator
            return x
        return x % self.char

    def inv(self, x: Scalar) -> Scalar:
        if self.char == 0:
            if x == 0:
                raise ZeroDivisionError("Inverso de zero em QQ.")
            return self.norm(Fraction(1) / x)
        x %= self.char
        if x == 0:
            raise ZeroDivisionError(f"Inverso de zero em {self.name}.")
        return pow(x, -1, self.char)

    def coerce(self, x: Any) -> Scalar:
        """Converte int, Fraction ou string 'p/q' para um escalar canónico."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if self.char == 0:
                return self.norm(x)
            num = x.numerator % self.char
            den = x.denominator % self.char
            if den == 0:
                raise FieldMismatch(f"Denominador divisível por {self.char}: {x}")
            return (num * pow(den, -1, self.char)) % self.char
        if isinstance(x, bool) or not isinstance(x, int):
            raise FieldMismatch(f"Escalar não suportado: {x!r}")
        return self.norm(x)

    def to_json(self, x: Scalar) -> Union[str, int]:
        """ℚ: string 'p/q' em termos mínimos com q > 0; GF(p): inteiro em [0, p)."""
        if self.char == 0:
            q = Fraction(x)
            return f"{q.numerator}/{q.denominator}"
        return int(x) % self.char

    def from_json(self, raw: Any) -> Scalar:
        if self.char != 0 and isinstance(raw, str) and "/" not in raw:
            raw = int(raw)
        return self.coerce(raw)

    def to_doc(self) -> dict:
        return {"char": self.char}

    @classmethod
    def from_doc(cls, doc: dict) -> "FieldSpec":
        return cls(char=int(doc.get("char", 0)))

    def require_same(self, other: "FieldSpec") -> None:
        if self != other:
            raise FieldMismatch(f"Corpos incompatíveis: {self.name} vs {other.name}")


QQ = FieldSpec(0)
