"""Dense matrices over a field backend."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .backends import FieldBackend, get_backend


@dataclass(frozen=True)
class GainMatrix:
    """Row-major dense matrix whose entries live in ``backend``'s carrier."""

    backend: FieldBackend
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, backend, rows: Sequence[Sequence]) -> "GainMatrix":
        b = get_backend(backend)
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(b.coerce(v) for r in rows for v in r)
        return cls(b, len(rows), ncols, flat)

    @classmethod
    def zeros(cls, backend, rows: int, cols: int) -> "GainMatrix":
        b = get_backend(backend)
        return cls(b, rows, cols, (b.zero,) * (rows * cols))

    @classmethod
    def identity(cls, backend, n: int) -> "GainMatrix":
        b = get_backend(backend)
        return cls(b, n, n, tuple(b.one if i == j else b.zero for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, backend, values: Iterable) -> "GainMatrix":
        b = get_backend(backend)
        values = list(values)
        n = len(values)
        flat = [b.zero] * (n * n)
        for i, v in enumerate(values):
            flat[i * n + i] = v
        return cls(b, n, n, tuple(flat))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def map(self, fn: Callable) -> "GainMatrix":
        return GainMatrix(self.backend, self.rows, self.cols, tuple(fn(v) for v in self.entries))

    def transpose(self) -> "GainMatrix":
        return GainMatrix(
            self.backend, self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    @property
    def T(self) -> "GainMatrix":
        return self.transpose()

    def _check_same_shape(self, other: "GainMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "GainMatrix") -> "GainMatrix":
        self._check_same_shape(other)
        return GainMatrix(self.backend, self.rows, self.cols,
                          tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "GainMatrix") -> "GainMatrix":
        self._check_same_shape(other)
        return GainMatrix(self.backend, self.rows, self.cols,
                          tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "GainMatrix":
        return self.map(lambda v: -v)

    def scale(self, c) -> "GainMatrix":
        return self.map(lambda v: c * v)

    def __matmul__(self, other: "GainMatrix") -> "GainMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.backend.zero
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                s = zero
                for k in range(self.cols):
                    a = r[k]
                    if a != 0:
                        s = s + a * other.entries[k * other.cols + j]
                out.append(s)
        return GainMatrix(self.backend, self.rows, other.cols, tuple(out))

    def trace(self):
        s = self.backend.zero
        for i in range(min(self.rows, self.cols)):
            s = s + self[i, i]
        return s

    def max_abs_diff(self, other: "GainMatrix") -> float:
        self._check_same_shape(other)
        return max((abs(complex(a) - complex(b)) for a, b in zip(self.entries, other.entries)),
                   default=0.0)

    def equals(self, other: "GainMatrix", tol: float | None = None) -> bool:
        """Entrywise equality; exact for exact backends unless ``tol`` is given."""
        if self.shape != other.shape:
            return False
        return all(self.backend.eq(a, b, tol) for a, b in zip(self.entries, other.entries))

    def format(self) -> str:
        fmt = self.backend.format
        return "\n".join(" ".join(fmt(v) for v in self.row(i)) for i in range(self.rows))

    def to_json(self) -> dict:
        fmt = self.backend.format
        return {"rows": self.rows, "cols": self.cols, "entries": [fmt(v) for v in self.entries]}
