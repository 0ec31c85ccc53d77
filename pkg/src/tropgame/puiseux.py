"""Truncated Puiseux scalars over the complex numbers.

A scalar is a finite sum of terms ``coeff * t**exp`` with complex
double-precision coefficients and exact rational exponents, plus an
optional truncation order. All exponent bookkeeping (valuations,
truncation propagation) is exact rational arithmetic; only coefficients
are floating point. Terms whose modulus is negligible relative to the
largest term of the series are dropped on construction so that float
cancellation noise cannot masquerade as a lower-order term and corrupt
the valuation.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatchError, ZeroScalarError

DEFAULT_ZERO_THRESHOLD = 1e-12

_zero_threshold = DEFAULT_ZERO_THRESHOLD


def zero_threshold() -> float:
    return _zero_threshold


def set_zero_threshold(value: float) -> None:
    """Set the relative modulus below which coefficients are dropped."""
    global _zero_threshold
    if value < 0:
        raise ValueError("zero threshold must be nonnegative")
    _zero_threshold = value


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exponents must be exact rationals, got {type(x).__name__}")


class PuiseuxScalar:
    """A finite, exponent-sorted complex Puiseux series.

    ``trunc`` is the truncation order: the series is only known modulo
    ``t**trunc``. ``trunc=None`` means the scalar is exact. Stored
    exponents are always strictly below the truncation order.
    """

    __slots__ = ("terms", "trunc")

    def __init__(self, terms=(), trunc=None):
        t = None if trunc is None else _as_fraction(trunc)
        merged: dict[Fraction, complex] = {}
        for exp, coeff in terms:
            e = _as_fraction(exp)
            if t is not None and e >= t:
                continue
            merged[e] = merged.get(e, 0j) + complex(coeff)
        kept = []
        if merged:
            top = max(abs(c) for c in merged.values())
            cut = _zero_threshold * top
            kept = sorted((e, c) for e, c in merged.items() if abs(c) >= cut and c != 0)
        object.__setattr__  # noqa: B018  (slots class, plain assignment below)
        self.terms = tuple(kept)
        self.trunc = t

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "PuiseuxScalar":
        return cls()

    @classmethod
    def one(cls) -> "PuiseuxScalar":
        return cls([(Fraction(0), 1.0)])

    @classmethod
    def constant(cls, value) -> "PuiseuxScalar":
        return cls([(Fraction(0), complex(value))])

    @classmethod
    def term(cls, coeff, exp) -> "PuiseuxScalar":
        return cls([(_as_fraction(exp), complex(coeff))])

    # -- queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_exact(self) -> bool:
        return self.trunc is None

    def val(self) -> Fraction:
        """Valuation: the exponent of the first stored term."""
        if not self.terms:
            raise ZeroScalarError("valuation of zero")
        return self.terms[0][0]

    def leading_coeff(self) -> complex:
        if not self.terms:
            raise ZeroScalarError("leading coefficient of zero")
        return self.terms[0][1]

    def coefficient_at(self, exp) -> complex:
        e = _as_fraction(exp)
        for te, tc in self.terms:
            if te == e:
                return tc
            if te > e:
                break
        return 0j

    def max_modulus(self) -> float:
        return max((abs(c) for _, c in self.terms), default=0.0)

    def terms_above(self, exp) -> "PuiseuxScalar":
        """Sub-series of terms with exponent strictly greater than ``exp``."""
        e = _as_fraction(exp)
        return PuiseuxScalar(
            [(te, tc) for te, tc in self.terms if te > e], trunc=self.trunc
        )

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "PuiseuxScalar") -> "PuiseuxScalar":
        if not isinstance(other, PuiseuxScalar):
            return NotImplemented
        trunc = _min_trunc(self.trunc, other.trunc)
        return PuiseuxScalar(self.terms + other.terms, trunc=trunc)

    def __neg__(self) -> "PuiseuxScalar":
        return PuiseuxScalar(
            [(e, -c) for e, c in self.terms], trunc=self.trunc
        )

    def __sub__(self, other: "PuiseuxScalar") -> "PuiseuxScalar":
        if not isinstance(other, PuiseuxScalar):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "PuiseuxScalar") -> "PuiseuxScalar":
        if not isinstance(other, PuiseuxScalar):
            return NotImplemented
        # O(t^T) * b is only known up to T + val(b); an exact zero factor
        # annihilates everything.
        if (self.is_zero and self.is_exact) or (other.is_zero and other.is_exact):
            return PuiseuxScalar.zero()
        candidates = []
        if self.trunc is not None:
            candidates.append(self.trunc + _support_lower_bound(other))
        if other.trunc is not None:
            candidates.append(other.trunc + _support_lower_bound(self))
        trunc = min(candidates) if candidates else None
        products = [
            (ea + eb, ca * cb)
            for ea, ca in self.terms
            for eb, cb in other.terms
        ]
        return PuiseuxScalar(products, trunc=trunc)

    def scale(self, factor) -> "PuiseuxScalar":
        z = complex(factor)
        return PuiseuxScalar([(e, c * z) for e, c in self.terms], trunc=self.trunc)

    def __pow__(self, n: int) -> "PuiseuxScalar":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        if n == 0:
            return PuiseuxScalar.one()
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    # -- comparison ----------------------------------------------------

    def approx_eq(self, other: "PuiseuxScalar", tol: float = 1e-9) -> bool:
        """Termwise comparison with absolute tolerance on coefficients."""
        exps = {e for e, _ in self.terms} | {e for e, _ in other.terms}
        return all(
            abs(self.coefficient_at(e) - other.coefficient_at(e)) <= tol
            for e in exps
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PuiseuxScalar)
            and self.terms == other.terms
            and self.trunc == other.trunc
        )

    def __hash__(self) -> int:
        return hash((self.terms, self.trunc))

    def __repr__(self) -> str:
        if not self.terms:
            body = "0"
        else:
            body = " + ".join(f"({c})t^({e})" for e, c in self.terms)
        if self.trunc is not None:
            body += f" + O(t^({self.trunc}))"
        return f"PuiseuxScalar({body})"


def _min_trunc(a: Fraction | None, b: Fraction | None) -> Fraction | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _support_lower_bound(x: PuiseuxScalar) -> Fraction:
    # Lowest exponent that could carry a nonzero coefficient.
    if x.terms:
        return x.terms[0][0]
    if x.trunc is not None:
        return x.trunc
    return Fraction(0)


class BranchPoint:
    """A point of the torus over the Puiseux field: nonzero coordinates."""

    __slots__ = ("coordinates",)

    def __init__(self, coordinates):
        coords = tuple(coordinates)
        for k, c in enumerate(coords):
            if not isinstance(c, PuiseuxScalar):
                raise TypeError("branch coordinates must be PuiseuxScalars")
            if c.is_zero:
                raise ZeroScalarError(
                    f"coordinate {k} is zero; branch points must lie in the torus"
                )
        self.coordinates = coords

    def __len__(self) -> int:
        return len(self.coordinates)

    def __getitem__(self, i: int) -> PuiseuxScalar:
        return self.coordinates[i]

    def __iter__(self):
        return iter(self.coordinates)

    def valuation_vector(self) -> tuple[Fraction, ...]:
        return tuple(c.val() for c in self.coordinates)

    def leading_coefficients(self) -> tuple[complex, ...]:
        return tuple(c.leading_coeff() for c in self.coordinates)

    def __eq__(self, other) -> bool:
        return isinstance(other, BranchPoint) and self.coordinates == other.coordinates

    def __repr__(self) -> str:
        return f"BranchPoint({list(self.coordinates)!r})"


def evaluate_poly_at(branch: BranchPoint, equation) -> PuiseuxScalar:
    """Substitute a branch into a sparse polynomial equation.

    ``equation`` is any object with a ``terms`` attribute yielding
    ``(coefficient, exponent_vector)`` pairs; truncation orders propagate
    through the term products and the final sum.
    """
    acc = PuiseuxScalar.zero()
    for coeff, monomial in equation.terms:
        if len(monomial) != len(branch):
            raise DimensionMismatchError(
                f"monomial has {len(monomial)} exponents but branch has "
                f"{len(branch)} coordinates"
            )
        term = coeff
        for i, e in enumerate(monomial):
            if e == 0:
                continue
            term = term * (branch[i] if e == 1 else branch[i] ** e)
        acc = acc + term
    return acc
