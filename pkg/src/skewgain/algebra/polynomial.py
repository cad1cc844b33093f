"""Dense univariate polynomials over a field backend."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .backends import FieldBackend, get_backend


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Coefficients in ascending degree order, trailing zeros trimmed.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    backend: FieldBackend
    coeffs: tuple

    def __init__(self, backend, coeffs: Iterable = ()):
        b = get_backend(backend)
        object.__setattr__(self, "backend", b)
        object.__setattr__(self, "coeffs", _trim([b.coerce(c) for c in coeffs]))

    @classmethod
    def constant(cls, backend, c) -> "Polynomial":
        return cls(backend, [c])

    @classmethod
    def x(cls, backend) -> "Polynomial":
        b = get_backend(backend)
        return cls(b, [b.zero, b.one])

    @classmethod
    def linear_root(cls, backend, r) -> "Polynomial":
        """The monic polynomial ``x - r``."""
        b = get_backend(backend)
        return cls(b, [-b.coerce(r), b.one])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.backend.zero

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.backend.zero

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial(self.backend, [other])

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.backend, [self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.backend, [-c for c in self.coeffs])

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._lift(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(self.backend, [])
        out = [self.backend.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.backend, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial(self.backend, [self.backend.one])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = self.backend.zero if not isinstance(x, complex) else 0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(self.backend, [k * self.coeffs[k] for k in range(1, len(self.coeffs))])

    def monic(self) -> "Polynomial":
        lc = self.leading
        return Polynomial(self.backend, [c / lc for c in self.coeffs])

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Long division; exact only for exact backends."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.leading
        quot = [self.backend.zero] * max(0, len(rem) - dq)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq] / lc
            quot[k] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Polynomial(self.backend, quot), Polynomial(self.backend, rem[:dq])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def equals(self, other: "Polynomial", tol: float | None = None) -> bool:
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self.backend.eq(self[k], other[k], tol) for k in range(n))

    def max_coeff_diff(self, other: "Polynomial") -> float:
        n = max(len(self.coeffs), len(other.coeffs))
        return max((abs(complex(self[k]) - complex(other[k])) for k in range(n)), default=0.0)

    def format(self, var: str = "x") -> str:
        """Descending powers with caret exponents, e.g. ``x^3-4x^2-8x+11``."""
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign, body = _coeff_text(self.backend, c, k == 0)
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            term = body + mono
            if not parts:
                parts.append(("-" if sign < 0 else "") + term)
            else:
                parts.append(("-" if sign < 0 else "+") + term)
        return "".join(parts)

    def to_json(self) -> list[str]:
        return [self.backend.format(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"Polynomial({self.backend.id}, {self.format()})"


def _coeff_text(backend: FieldBackend, c, is_constant: bool) -> tuple[int, str]:
    """Split a coefficient into (sign, magnitude text) for display."""
    if backend.exact:
        c = Fraction(c)
        sign = -1 if c < 0 else 1
        a = abs(c)
        if a == 1 and not is_constant:
            return sign, ""
        text = str(a)
        if a.denominator != 1 and not is_constant:
            text = f"({text})"
        return sign, text
    z = complex(c)
    if z.imag == 0:
        sign = -1 if z.real < 0 else 1
        a = abs(z.real)
        if a == 1 and not is_constant:
            return sign, ""
        return sign, backend.format(a)
    if z.real == 0:
        sign = -1 if z.imag < 0 else 1
        text = backend.format(complex(0, abs(z.imag)))
        return sign, text if is_constant else f"({text})"
    return 1, f"({backend.format(z)})"
