"""Coefficient fields for homology."""

import re
from dataclasses import dataclass

from sympy import isprime

from errors import BadParams

_GF = re.compile(r"^(?:gf)[:(]?\s*(\d+)\s*\)?$")


@dataclass(frozen=True)
class FieldSpec:
    """The rationals (characteristic 0) or the prime field GF(p)."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise BadParams(f"GF({self.characteristic}) is not a prime field")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts q, qq, rationals, gf:P, gf(P), gfP (case-insensitive)."""
        key = text.strip().lower()
        if key in {"q", "qq", "rationals", "0"}:
            return cls(0)
        match = _GF.match(key)
        if match is None:
            raise BadParams(f"unknown field {text!r}; use q or gf:P")
        return cls(int(match.group(1)))

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def label(self) -> str:
        return "QQ" if self.is_rational else f"GF({self.characteristic})"

    def __str__(self) -> str:
        return "q" if self.is_rational else f"gf:{self.characteristic}"


QQ = FieldSpec(0)
