"""Exact sparse bivariate polynomials over the integers.

Terms are stored as a dict mapping (x_exponent, y_exponent) to a Python
int coefficient, so arithmetic never overflows or rounds.  Zero
coefficients are never stored.
"""

from __future__ import annotations

from typing import Mapping


class SparseBivariatePoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (ex, ey), c in dict(terms).items():
                c = int(c)
                if c:
                    clean[(int(ex), int(ey))] = c
        self._terms = clean

    @classmethod
    def constant(cls, value: int) -> "SparseBivariatePoly":
        return cls({(0, 0): value})

    @classmethod
    def one(cls) -> "SparseBivariatePoly":
        return cls.constant(1)

    def coefficient(self, exponents: tuple[int, int]) -> int:
        return self._terms.get((exponents[0], exponents[1]), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((ex + ey for ex, ey in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._terms.items())

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x ** ex * y ** ey for (ex, ey), c in self._terms.items())

    def _coerce(self, other) -> "SparseBivariatePoly | None":
        if isinstance(other, SparseBivariatePoly):
            return other
        if isinstance(other, int):
            return SparseBivariatePoly.constant(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for key, c in rhs._terms.items():
            value = out.get(key, 0) + c
            if value:
                out[key] = value
            else:
                out.pop(key, None)
        return SparseBivariatePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return SparseBivariatePoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (ax, ay), ac in self._terms.items():
            for (bx, by), bc in rhs._terms.items():
                key = (ax + bx, ay + by)
                value = out.get(key, 0) + ac * bc
                if value:
                    out[key] = value
                else:
                    out.pop(key, None)
        return SparseBivariatePoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "SparseBivariatePoly(0)"
        bits = []
        for (ex, ey), c in sorted(self._terms.items(),
                                  key=lambda item: (-(item[0][0] + item[0][1]), item[0])):
            part = str(c)
            if ex:
                part += f"*x^{ex}" if ex > 1 else "*x"
            if ey:
                part += f"*y^{ey}" if ey > 1 else "*y"
            bits.append(part)
        return "SparseBivariatePoly(" + " + ".join(bits) + ")"
