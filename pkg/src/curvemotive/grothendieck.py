"""Formal coefficient ring for motivic series.

An element is a Laurent polynomial in the Lefschetz class ``L`` (the class of
the affine line) whose coefficients are integer polynomials in opaque
commuting symbols ``e[label]``, one per residue-field label.  The symbols
stand for classes of spectra of finite field extensions; no relations among
distinct symbols are imposed, so products like ``e[a]*e[b]`` stay formal.
Degree-one labels are identified with the ring unit and never create a
symbol.

``L``-exponents are exact rationals: codimension exponents of strata can be
non-integral when extension degrees exceed one, and such terms are carried
exactly rather than rounded.  Symbol exponents are nonnegative integers by
construction (formulas that would produce ``e^(n-l)`` with ``l > n`` are never
formed).  Coefficients are arbitrary-precision integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

# A monomial key is (L-exponent, ((label, exponent), ...)) with the symbol
# part sorted by label and all symbol exponents positive.
MonomialKey = tuple[Fraction, tuple[tuple[str, int], ...]]

_ZERO = Fraction(0)


def _canonical_syms(syms) -> tuple[tuple[str, int], ...]:
    items = [(str(k), int(v)) for k, v in syms if v != 0]
    for label, exp in items:
        if exp < 0:
            raise ValueError(f"negative exponent for symbol e[{label}]")
    items.sort()
    return tuple(items)


class RingElement:
    """Immutable element of the localized Grothendieck-ring model."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[MonomialKey, int] | None = None):
        canon: dict[MonomialKey, int] = {}
        if terms:
            for (lexp, syms), coeff in terms.items():
                if coeff == 0:
                    continue
                key = (Fraction(lexp), _canonical_syms(syms))
                canon[key] = canon.get(key, 0) + int(coeff)
                if canon[key] == 0:
                    del canon[key]
        self._terms = canon

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "RingElement":
        return cls()

    @classmethod
    def one(cls) -> "RingElement":
        return cls({(_ZERO, ()): 1})

    @classmethod
    def integer(cls, n: int) -> "RingElement":
        return cls({(_ZERO, ()): int(n)})

    @classmethod
    def lefschetz(cls, exp=1) -> "RingElement":
        """The monomial L**exp; exp may be any exact rational."""
        return cls({(Fraction(exp), ()): 1})

    @classmethod
    def symbol(cls, label: str, exp: int = 1) -> "RingElement":
        return cls({(_ZERO, ((str(label), int(exp)),)): 1})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            out[key] = out.get(key, 0) + coeff
            if out[key] == 0:
                del out[key]
        result = RingElement.__new__(RingElement)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self):
        result = RingElement.__new__(RingElement)
        result._terms = {k: -c for k, c in self._terms.items()}
        return result

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[MonomialKey, int] = {}
        for (l1, s1), c1 in self._terms.items():
            for (l2, s2), c2 in other._terms.items():
                key = (l1 + l2, _merge_syms(s1, s2))
                c = out.get(key, 0) + c1 * c2
                if c:
                    out[key] = c
                elif key in out:
                    del out[key]
        result = RingElement.__new__(RingElement)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for L itself")
        result = RingElement.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def lefschetz_shift(self, exp) -> "RingElement":
        """Multiply by L**exp without building an intermediate element."""
        exp = Fraction(exp)
        result = RingElement.__new__(RingElement)
        result._terms = {(l + exp, s): c for (l, s), c in self._terms.items()}
        return result

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_one(self) -> bool:
        return self._terms == {(_ZERO, ()): 1}

    def symbols(self) -> frozenset:
        return frozenset(lbl for _, syms in self._terms for lbl, _ in syms)

    @property
    def has_integral_lefschetz_exponents(self) -> bool:
        return all(l.denominator == 1 for l, _ in self._terms)

    def sorted_terms(self):
        """Terms in the canonical order: L-degree descending, then symbols."""
        return sorted(self._terms.items(), key=lambda kv: (-kv[0][0], kv[0][1]))

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # -- specialization ----------------------------------------------------

    def specialize(self, spec: "Specialization") -> Fraction:
        total = Fraction(0)
        for (lexp, syms), coeff in self._terms.items():
            value = Fraction(coeff)
            value *= _rational_power(spec.lefschetz, lexp)
            for label, exp in syms:
                value *= spec.value_of(label) ** exp
            total += value
        return total

    # -- rendering ---------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (lexp, syms), coeff in self.sorted_terms():
            factors = []
            if lexp != 0:
                factors.append("L" if lexp == 1 else f"L^{_exp_text(lexp)}")
            for label, exp in syms:
                factors.append(f"e[{label}]" + (f"^{exp}" if exp > 1 else ""))
            mag = abs(coeff)
            if factors:
                body = "*".join(factors)
                if mag != 1:
                    body = f"{mag}*{body}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"RingElement({self.to_text()})"

    def to_json(self):
        out = []
        for (lexp, syms), coeff in self.sorted_terms():
            out.append(
                {
                    "Lexp": _frac_json(lexp),
                    "symbols": {label: exp for label, exp in syms},
                    "coeff": coeff,
                }
            )
        return out

    @classmethod
    def from_json(cls, data) -> "RingElement":
        terms: dict[MonomialKey, int] = {}
        for item in data:
            key = (
                _frac_from_json(item["Lexp"]),
                tuple(sorted((str(k), int(v)) for k, v in item.get("symbols", {}).items())),
            )
            terms[key] = terms.get(key, 0) + int(item["coeff"])
        return cls(terms)


def _coerce(value):
    if isinstance(value, RingElement):
        return value
    if isinstance(value, int):
        return RingElement.integer(value)
    return NotImplemented


def _merge_syms(s1, s2):
    if not s1:
        return s2
    if not s2:
        return s1
    merged = dict(s1)
    for label, exp in s2:
        merged[label] = merged.get(label, 0) + exp
    return tuple(sorted(merged.items()))


def _rational_power(base: Fraction, exp: Fraction) -> Fraction:
    if exp == 0:
        return Fraction(1)
    if base == 1:
        return Fraction(1)
    if base == 0:
        if exp < 0:
            raise ZeroDivisionError("specializing L to 0 with a negative L-exponent")
        return Fraction(0)
    if exp.denominator != 1:
        raise ValueError(
            f"cannot specialize a non-integral L-exponent {exp} at L={base}; "
            "only L in {0, 1} admits fractional exponents"
        )
    return base ** exp.numerator


def _exp_text(exp: Fraction) -> str:
    return str(exp.numerator) if exp.denominator == 1 else f"({exp})"


def _frac_json(x: Fraction):
    return x.numerator if x.denominator == 1 else str(x)


def _frac_from_json(value) -> Fraction:
    return Fraction(value) if not isinstance(value, str) else Fraction(value)


@dataclass(frozen=True)
class Specialization:
    """Exact-rational target values for L and for the field symbols.

    ``default`` (when given) supplies a value for any symbol not listed
    explicitly; otherwise specializing an element with an unassigned symbol
    is an error.
    """

    lefschetz: Fraction
    symbols: Mapping[str, Fraction] = field(default_factory=dict)
    default: Fraction | None = None

    def value_of(self, label: str) -> Fraction:
        if label in self.symbols:
            return Fraction(self.symbols[label])
        if self.default is not None:
            return Fraction(self.default)
        raise KeyError(f"no specialization value for symbol e[{label}]")


def specialize(x: RingElement, spec: Specialization) -> Fraction:
    """Apply the ring homomorphism defined by ``spec`` to ``x``."""
    return x.specialize(spec)


@dataclass(frozen=True)
class SymbolTable:
    """Registry of residue-field labels and their extension degrees.

    Degree-one labels are identified with the ring unit: ``class_of`` returns
    1 and ``units_class`` returns ``L - 1`` for them, matching the fact that
    the punctured affine line over the base field has class ``L - 1``.
    """

    degrees: tuple[tuple[str, int], ...]

    def __post_init__(self):
        seen = {}
        for label, deg in self.degrees:
            if deg < 1:
                raise ValueError(f"label {label!r} has nonpositive degree {deg}")
            if label in seen and seen[label] != deg:
                raise ValueError(f"label {label!r} registered with two degrees")
            seen[label] = deg
        object.__setattr__(self, "degrees", tuple(sorted(set(self.degrees))))

    def degree(self, label: str | None) -> int:
        if label is None:
            return 1
        for lbl, deg in self.degrees:
            if lbl == label:
                return deg
        raise KeyError(f"unknown field label {label!r}")

    def class_of(self, label: str | None) -> RingElement:
        """The class of Spec of the labelled field: a symbol, or 1 in degree one."""
        return RingElement.one() if self.degree(label) == 1 else RingElement.symbol(label)

    def units_class(self, label: str | None) -> RingElement:
        """Class of the punctured affine line over the labelled field."""
        return self.class_of(label) * RingElement.lefschetz() - RingElement.one()


def units_class(table: SymbolTable, label: str | None) -> RingElement:
    return table.units_class(label)
