"""Field backends: carrier arithmetic plus the involution ``f``, ``g`` and ``sqrt(g)``.

Two carriers are shipped:

* ``rational-id``: :class:`fractions.Fraction` with ``f`` the identity, so
  ``g(x) = x**2`` and ``sqrt(g(x)) = |x|`` stays rational.
* ``complex-conj``: Python ``complex`` (double precision) with ``f`` complex
  conjugation, so ``g(z) = |z|**2`` and ``sqrt(g(z)) = |z|``.

Elements are plain Python numbers; the backend object only supplies the
operations that differ between carriers.
"""
from __future__ import annotations

import math
import random
import re
from fractions import Fraction

from ..errors import GainParseError, UnknownBackend, ZeroArgument

DEFAULT_TOL = 1e-9

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_DECIMAL_RE = re.compile(r"^[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?$")


class FieldBackend:
    id: str = ""
    exact: bool = True
    zero: object
    one: object

    def coerce(self, value):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def f(self, x):
        raise NotImplementedError

    def g(self, x):
        if self.is_zero(x):
            raise ZeroArgument("g is only defined on nonzero elements")
        return x * self.f(x)

    def sqrt_g(self, x):
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return x == 0

    def magnitude(self, x) -> float:
        return abs(complex(x))

    def to_complex(self, x) -> complex:
        return complex(x)

    def eq(self, a, b, tol: float | None = None) -> bool:
        """Exact equality, or the relative test ``|a-b| <= tol*(1+max(|a|,|b|))``."""
        if self.exact and tol is None:
            return a == b
        tol = DEFAULT_TOL if tol is None else tol
        a, b = complex(a), complex(b)
        return abs(a - b) <= tol * (1.0 + max(abs(a), abs(b)))

    def random_gain(self, rng: random.Random):
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.id}>"


class RationalIdentity(FieldBackend):
    id = "rational-id"
    exact = True
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, complex):
            if value.imag != 0:
                raise GainParseError(f"{value!r} is not rational")
            value = value.real
        if isinstance(value, float):
            if not math.isfinite(value):
                raise GainParseError(f"{value!r} is not finite")
        return Fraction(value)

    def parse(self, text: str) -> Fraction:
        m = _RATIONAL_RE.match(text.strip())
        if m is None:
            raise GainParseError(f"cannot parse {text!r} as a rational 'p' or 'p/q'")
        p = int(m.group(1))
        q = int(m.group(2)) if m.group(2) is not None else 1
        if q == 0:
            raise GainParseError(f"zero denominator in {text!r}")
        return Fraction(p, q)

    def format(self, x) -> str:
        return str(Fraction(x))

    def f(self, x):
        return x

    def sqrt_g(self, x):
        if x == 0:
            raise ZeroArgument("sqrt_g is only defined on nonzero elements")
        return abs(x)

    def magnitude(self, x) -> float:
        return abs(float(x))

    def random_gain(self, rng: random.Random) -> Fraction:
        p = rng.choice([k for k in range(-6, 7) if k != 0])
        return Fraction(p, rng.randint(1, 3))


class ComplexConjugate(FieldBackend):
    id = "complex-conj"
    exact = False
    zero = 0j
    one = 1 + 0j

    def coerce(self, value):
        if isinstance(value, str):
            return self.parse(value)
        z = complex(value)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise GainParseError(f"{value!r} is not finite")
        return z

    def parse(self, text: str) -> complex:
        s = text.strip().replace(" ", "")
        if not s:
            raise GainParseError("empty gain string")
        if not s.endswith("i"):
            return complex(_parse_decimal(s, text), 0.0)
        body = s[:-1]
        split = None
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "eE":
                split = k
                break
        if split is None:
            re_part, im_part = "", body
        else:
            re_part, im_part = body[:split], body[split:]
        if im_part in ("", "+"):
            im = 1.0
        elif im_part == "-":
            im = -1.0
        else:
            im = _parse_decimal(im_part, text)
        re_val = _parse_decimal(re_part, text) if re_part else 0.0
        return complex(re_val, im)

    def format(self, x) -> str:
        z = complex(x)
        re_s, im = _format_decimal(z.real), z.imag + 0.0
        if im == 0:
            return re_s
        if abs(im) == 1:
            im_s = "i"
        else:
            im_s = _format_decimal(abs(im)) + "i"
        if z.real == 0:
            return ("-" if im < 0 else "") + im_s
        return re_s + ("-" if im < 0 else "+") + im_s

    def f(self, x):
        return complex(x).conjugate()

    def sqrt_g(self, x):
        if x == 0:
            raise ZeroArgument("sqrt_g is only defined on nonzero elements")
        return complex(abs(x), 0.0)

    def random_gain(self, rng: random.Random) -> complex:
        while True:
            z = complex(rng.randint(-12, 12) / 4, rng.randint(-12, 12) / 4)
            if z != 0:
                return z


def _parse_decimal(s: str, original: str) -> float:
    if not _DECIMAL_RE.match(s):
        raise GainParseError(f"cannot parse {original!r} as 'a', 'bi', 'a+bi' or 'a-bi'")
    v = float(s)
    if not math.isfinite(v):
        raise GainParseError(f"{original!r} is not finite")
    return v


def _format_decimal(v: float) -> str:
    v = v + 0.0  # drop negative zero
    if v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


RATIONAL = RationalIdentity()
COMPLEX = ComplexConjugate()
BACKENDS: dict[str, FieldBackend] = {RATIONAL.id: RATIONAL, COMPLEX.id: COMPLEX}


def get_backend(backend) -> FieldBackend:
    if isinstance(backend, FieldBackend):
        return backend
    try:
        return BACKENDS[backend]
    except KeyError:
        raise UnknownBackend(
            f"unknown backend {backend!r}; expected one of {sorted(BACKENDS)}"
        ) from None


def apply_f(backend, x):
    """The involutive automorphism; extended to zero by ``f(0) = 0``."""
    b = get_backend(backend)
    if b.is_zero(x):
        return b.zero
    return b.f(x)


def g_of(backend, x):
    return get_backend(backend).g(x)


def sqrt_g(backend, x):
    return get_backend(backend).sqrt_g(x)
