"""Exact-arithmetic building blocks: polarizations, index subsets and
Poincaré polynomials.

Weights are kept as :class:`fractions.Fraction`; every comparison that decides
wall membership is an exact equality test. Polynomials are dense integer
coefficient tuples in one variable ``t``.
"""
from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, lcm

import numpy as np

__all__ = [
    "AdmissibilityError",
    "ConeKind",
    "ConePosition",
    "ConsistencyError",
    "DegeneratePathError",
    "PoincarePoly",
    "Polarization",
    "Subset",
    "normalize",
    "projective_poly",
    "subset_table",
    "set_max_n",
    "get_max_n",
]


class AdmissibilityError(ValueError):
    """Input lies outside the region where an operation is defined."""


class DegeneratePathError(RuntimeError):
    """A segment in weight space meets a wall of codimension > 1."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed. Indicates a bug, not bad input."""


# --------------------------------------------------------------------------
# Polarization
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Polarization:
    """A weight vector ``m`` for the linearization ``L(m)`` on ``(P^2)^n``.

    Weights are nonnegative rationals with at least one positive entry.
    Indices in every report are 1-based and refer to this vector's order.
    """

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        ws = tuple(Fraction(w) for w in self.weights)
        if not ws:
            raise ValueError("empty polarization")
        if any(w < 0 for w in ws):
            raise ValueError("negative weight in polarization")
        if all(w == 0 for w in ws):
            raise ValueError("degenerate polarization")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def of(cls, m) -> Polarization:
        if isinstance(m, Polarization):
            return m
        return cls(tuple(m))

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    @property
    def lam(self) -> Fraction:
        """Cone coordinate ``|m|/3``."""
        return self.total / 3

    @cached_property
    def _ints(self) -> tuple[int, ...]:
        return _coprime_integers(self.weights)

    def integers(self) -> tuple[int, ...]:
        """Coprime positive-scaled integer representative of the same ray."""
        return self._ints

    def is_integral(self) -> bool:
        return all(w.denominator == 1 for w in self.weights)

    def delete(self, indices: Iterable[int]) -> Polarization:
        """Drop the given 1-based indices."""
        drop = set(indices)
        return Polarization(tuple(w for i, w in enumerate(self.weights, 1) if i not in drop))

    def scaled(self, c) -> Polarization:
        return Polarization(tuple(w * Fraction(c) for w in self.weights))

    def permuted(self, perm: Sequence[int]) -> Polarization:
        """Return ``(m[perm[0]], m[perm[1]], ...)`` with 1-based ``perm``."""
        return Polarization(tuple(self.weights[p - 1] for p in perm))

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"polarization {self} is not integral")
        return tuple(int(w) for w in self.weights)

    def __str__(self) -> str:
        return "(" + ",".join(str(w) for w in self.weights) + ")"


def _coprime_integers(ws: Sequence[Fraction]) -> tuple[int, ...]:
    den = lcm(*(w.denominator for w in ws))
    ints = [w.numerator * (den // w.denominator) for w in ws]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def ints_of(m) -> tuple[int, ...]:
    """Coprime integer representative of ``m`` (a Polarization or a sequence).

    Plain integer sequences skip the Fraction round trip.
    """
    if isinstance(m, Polarization):
        return m.integers()
    m = tuple(m)
    if m and all(type(x) is int for x in m):
        if any(x < 0 for x in m) or not any(m):
            raise ValueError(f"invalid polarization {m}")
        g = gcd(*m)
        return tuple(x // g for x in m)
    return Polarization(m).integers()


def normalize(m) -> tuple[Polarization, tuple[int, ...], Fraction]:
    """Sort non-increasing and reduce to coprime integers.

    Returns ``(normalized, perm, scale)`` where ``normalized[i] * scale ==
    m[perm[i] - 1]``. The sort is stable, so an already sorted input gets the
    identity permutation.
    """
    m = Polarization.of(m)
    order = sorted(range(m.n), key=lambda i: -m.weights[i])
    perm = tuple(i + 1 for i in order)
    sorted_w = [m.weights[i] for i in order]
    ints = _coprime_integers(sorted_w)
    first = next(i for i, x in enumerate(ints) if x)
    scale = sorted_w[first] / ints[first]
    return Polarization(ints), perm, scale


# --------------------------------------------------------------------------
# Subsets
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Subset:
    """A subset of ``{1..n}`` stored as a bitmask (bit ``i-1`` for index ``i``)."""

    mask: int
    n: int

    def __post_init__(self):
        if self.n < 0 or self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#b} is not a subset of 1..{self.n}")

    @classmethod
    def of(cls, indices: Iterable[int], n: int) -> Subset:
        mask = 0
        for i in indices:
            if not 1 <= i <= n:
                raise ValueError(f"index {i} outside 1..{n}")
            mask |= 1 << (i - 1)
        return cls(mask, n)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.size

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= self.n and bool(self.mask >> (i - 1) & 1)

    def complement(self) -> Subset:
        return Subset(((1 << self.n) - 1) ^ self.mask, self.n)

    def mapped(self, perm: Sequence[int]) -> Subset:
        """Image under ``i -> perm[i-1]`` (1-based)."""
        return Subset.of((perm[i - 1] for i in self.indices), self.n)

    def sort_key(self):
        return (self.size, self.indices)

    @property
    def label(self) -> str:
        """Compact label like ``17`` or ``2.6.7`` when an index exceeds 9."""
        sep = "" if self.n < 10 else "."
        return sep.join(str(i) for i in self.indices)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.indices) + "}"

    def __repr__(self) -> str:
        return f"Subset({self}, n={self.n})"


def as_subset(S, n: int) -> Subset:
    if isinstance(S, Subset):
        if S.n != n:
            raise ValueError(f"subset over 1..{S.n} used with n={n}")
        return S
    return Subset.of(S, n)


_MAX_N = 16


def set_max_n(n: int) -> None:
    """Raise or lower the cap on ``n`` for exhaustive subset scans."""
    global _MAX_N
    _MAX_N = int(n)


def get_max_n() -> int:
    return _MAX_N


@lru_cache(maxsize=None)
def _table(n: int):
    masks = np.arange(1 << n, dtype=np.int64)
    member = ((masks[:, None] >> np.arange(n)) & 1).astype(np.int64)
    sizes = member.sum(axis=1)
    member.setflags(write=False)
    sizes.setflags(write=False)
    return member, sizes


def subset_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Membership matrix (``2^n x n``, row = mask) and cardinalities."""
    if n > _MAX_N:
        raise AdmissibilityError(
            f"n={n} exceeds the subset-scan cap {_MAX_N}; raise it with set_max_n / --max-n"
        )
    return _table(n)


# --------------------------------------------------------------------------
# Poincaré polynomials
# --------------------------------------------------------------------------

class PoincarePoly:
    """Integer polynomial in ``t``; ``coeffs[i]`` is the coefficient of ``t^i``.

    Canonical form has no trailing zeros, the zero polynomial is ``()``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> PoincarePoly:
        if degree < 0:
            raise ValueError("negative exponent")
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def __getitem__(self, i: int) -> int:
        return self._c[i] if 0 <= i < len(self._c) else 0

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = PoincarePoly([other])
        if not isinstance(other, PoincarePoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def _coerce(self, other) -> PoincarePoly:
        if isinstance(other, PoincarePoly):
            return other
        if isinstance(other, int):
            return PoincarePoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        k = max(len(self._c), len(other._c))
        return PoincarePoly(self[i] + other[i] for i in range(k))

    __radd__ = __add__

    def __neg__(self) -> PoincarePoly:
        return PoincarePoly(-x for x in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return PoincarePoly()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return PoincarePoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> PoincarePoly:
        if k < 0:
            raise ValueError("negative power")
        out = PoincarePoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, t):
        acc = 0
        for c in reversed(self._c):
            acc = acc * t + c
        return acc

    def divmod_one_minus_t2(self) -> tuple[PoincarePoly, PoincarePoly]:
        """Quotient and remainder of division by ``1 - t^2``."""
        # Long division from the top: -t^2 is the leading term of the divisor.
        rem = list(self._c)
        if len(rem) < 3:
            return PoincarePoly(), PoincarePoly(rem)
        quo = [0] * (len(rem) - 2)
        for d in range(len(rem) - 1, 1, -1):
            q = -rem[d]
            quo[d - 2] = q
            rem[d] += q
            rem[d - 2] -= q
        return PoincarePoly(quo), PoincarePoly(rem[:2])

    def is_palindromic(self, degree: int | None = None) -> bool:
        if degree is None:
            degree = self.degree
        if degree < self.degree:
            return False
        return all(self[i] == self[degree - i] for i in range(degree + 1))

    def odd_coeffs_vanish(self) -> bool:
        return all(x == 0 for x in self._c[1::2])

    def betti(self) -> tuple[int, ...]:
        """Even-degree coefficients ``b_0, b_2, b_4, ...``."""
        return self._c[0::2]

    def to_list(self) -> list[int]:
        return list(self._c)

    def __repr__(self) -> str:
        return f"PoincarePoly({list(self._c)})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i, c in enumerate(self._c):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def projective_poly(d: int) -> PoincarePoly:
    """``1 + t^2 + ... + t^{2d}``; ``d = -1`` gives the zero polynomial."""
    if d < -1:
        raise ValueError(f"projective dimension {d} < -1")
    out = [0] * (2 * d + 1) if d >= 0 else []
    out[0::2] = [1] * (d + 1)
    return PoincarePoly(out)


# --------------------------------------------------------------------------
# Cone position
# --------------------------------------------------------------------------

class ConeKind(enum.Enum):
    EMPTY = "empty"
    POINT = "point"
    FACE_TOP = "face_top"
    FACE_ZERO = "face_zero"
    WALL = "wall"
    CHAMBER = "chamber"


@dataclass(frozen=True)
class ConePosition:
    """Where a polarization sits in the G-ample cone.

    ``indices`` carries the face indices for ``FACE_TOP`` (one entry) and
    ``FACE_ZERO``; ``walls`` carries the coincident-side subsets for ``WALL``.
    """

    kind: ConeKind
    indices: tuple[int, ...] = ()
    walls: tuple[Subset, ...] = ()

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind.value}
        if self.kind in (ConeKind.FACE_TOP, ConeKind.FACE_ZERO):
            out["indices"] = list(self.indices)
        if self.kind is ConeKind.WALL:
            out["walls"] = [list(K.indices) for K in self.walls]
        return out

    def __str__(self) -> str:
        if self.kind is ConeKind.WALL:
            return "wall " + " ".join(str(K) for K in self.walls)
        if self.indices:
            return f"{self.kind.value} {list(self.indices)}"
        return self.kind.value
