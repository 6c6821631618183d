"""Exact scalars for weight coordinates.

A coordinate lives in the rational span of 1 together with finitely many
formal symbols sigma_j.  The only assumption on a symbol is that no nonzero
rational multiple of it is rational, so equality, integrality and coset
membership are all decidable exactly.  No floats appear anywhere.

The text format is ``p/q`` for the rational part followed by one
``+name*r/s`` piece per symbol, e.g. ``3/2``, ``0+pi*1``, ``-1+pi*-1``.
Parsing and printing round-trip bit for bit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Scalar",
    "CosetClass",
    "INT",
    "HALF",
    "IRR",
    "coset_class",
    "coordinate_sign",
]

INT = "INT"
HALF = "HALF"
IRR = "IRR"

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

RationalLike = int | Fraction


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError(f"expected an int or Fraction, got {value!r}")
    return Fraction(value)


def _normalize_symbols(symbols) -> tuple[tuple[str, Fraction], ...]:
    """Sort by name, merge repeats, drop zero coefficients."""
    if symbols is None:
        return ()
    items = symbols.items() if isinstance(symbols, dict) else symbols
    merged: dict[str, Fraction] = {}
    for name, coeff in items:
        if not isinstance(name, str) or not _NAME_RE.match(name):
            raise ValueError(f"bad symbol name {name!r}")
        merged[name] = merged.get(name, Fraction(0)) + _as_fraction(coeff)
    return tuple((name, merged[name]) for name in sorted(merged) if merged[name])


@dataclass(frozen=True)
class Scalar:
    """An exact value q + sum of coeff*symbol terms.

    ``rational`` is a Fraction in lowest terms; ``symbols`` is a name-sorted
    tuple of (name, nonzero Fraction) pairs.  The constructor accepts a dict
    or any iterable of pairs for ``symbols`` and normalizes.
    """

    rational: Fraction = Fraction(0)
    symbols: tuple[tuple[str, Fraction], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rational", _as_fraction(self.rational))
        object.__setattr__(self, "symbols", _normalize_symbols(self.symbols))

    @classmethod
    def symbol(cls, name: str, coeff: RationalLike = 1) -> "Scalar":
        return cls(0, ((name, Fraction(coeff)),))

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return cls(_as_fraction(value))

    def symbol_coeff(self, name: str) -> Fraction:
        for key, coeff in self.symbols:
            if key == name:
                return coeff
        return Fraction(0)

    def is_rational(self) -> bool:
        return not self.symbols

    def is_integer(self) -> bool:
        return not self.symbols and self.rational.denominator == 1

    # -- vector space operations ------------------------------------------

    def __add__(self, other) -> "Scalar":
        other = Scalar.coerce(other)
        return Scalar(self.rational + other.rational,
                      self.symbols + other.symbols)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.rational, tuple((n, -c) for n, c in self.symbols))

    def __sub__(self, other) -> "Scalar":
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other) -> "Scalar":
        return Scalar.coerce(other) + (-self)

    def __mul__(self, factor: RationalLike) -> "Scalar":
        factor = _as_fraction(factor)
        return Scalar(self.rational * factor,
                      tuple((n, c * factor) for n, c in self.symbols))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.rational) or bool(self.symbols)

    # -- order (only defined when the difference is rational) -------------

    def _rational_difference(self, other) -> Fraction:
        diff = self - Scalar.coerce(other)
        if diff.symbols:
            raise TypeError(
                "scalars differing by a symbol part are not comparable")
        return diff.rational

    def __lt__(self, other) -> bool:
        return self._rational_difference(other) < 0

    def __le__(self, other) -> bool:
        return self._rational_difference(other) <= 0

    def __gt__(self, other) -> bool:
        return self._rational_difference(other) > 0

    def __ge__(self, other) -> bool:
        return self._rational_difference(other) >= 0

    # -- text format -------------------------------------------------------

    def text(self) -> str:
        pieces = [str(self.rational)]
        pieces.extend(f"+{name}*{coeff}" for name, coeff in self.symbols)
        return "".join(pieces)

    __str__ = text

    def __repr__(self) -> str:
        return f"Scalar({self.text()!r})"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        if not isinstance(text, str) or not text:
            raise ValueError(f"cannot parse scalar from {text!r}")
        parts = text.split("+")
        try:
            rational = Fraction(parts[0])
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad rational part {parts[0]!r} in {text!r}")
        symbols: dict[str, Fraction] = {}
        for piece in parts[1:]:
            name, star, coeff_text = piece.partition("*")
            if not star or not _NAME_RE.match(name):
                raise ValueError(f"bad symbol term {piece!r} in {text!r}")
            try:
                coeff = Fraction(coeff_text)
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"bad coefficient {coeff_text!r} in {text!r}")
            symbols[name] = symbols.get(name, Fraction(0)) + coeff
        return cls(rational, symbols)


@dataclass(frozen=True)
class CosetClass:
    """A coset value + Z, tagged by kind.

    INT and HALF are the two self-paired kinds (the coset equals its own
    negative).  Everything else is IRR: rationals with denominator > 2 as
    well as anything carrying a symbol.  An IRR coset is stored by its
    representative: rational part reduced into [0, 1), symbol part as is.
    """

    kind: str
    rep_rational: Fraction = Fraction(0)
    rep_symbols: tuple[tuple[str, Fraction], ...] = ()

    def __post_init__(self):
        if self.kind not in (INT, HALF, IRR):
            raise ValueError(f"unknown coset kind {self.kind!r}")
        if self.kind == INT:
            object.__setattr__(self, "rep_rational", Fraction(0))
            object.__setattr__(self, "rep_symbols", ())
            return
        if self.kind == HALF:
            object.__setattr__(self, "rep_rational", Fraction(1, 2))
            object.__setattr__(self, "rep_symbols", ())
            return
        rational = _as_fraction(self.rep_rational)
        if not 0 <= rational < 1:
            raise ValueError(f"IRR representative {rational} not in [0, 1)")
        symbols = _normalize_symbols(self.rep_symbols)
        if not symbols and rational.denominator in (1, 2):
            raise ValueError(f"{rational}+Z is not an IRR coset")
        object.__setattr__(self, "rep_rational", rational)
        object.__setattr__(self, "rep_symbols", symbols)

    def representative(self) -> Scalar:
        return Scalar(self.rep_rational, self.rep_symbols)

    def contains(self, value: Scalar) -> bool:
        return coset_class(value) == self

    def is_self_paired(self) -> bool:
        return self.kind != IRR

    def paired(self) -> "CosetClass":
        """The coset of the negatives of this coset's members."""
        if self.kind != IRR:
            return self
        return CosetClass(IRR, (-self.rep_rational) % 1,
                          tuple((n, -c) for n, c in self.rep_symbols))

    def is_plus_representative(self) -> bool:
        """Whether this coset is the canonical half of its pair.

        Self-paired cosets count as canonical.  For an IRR coset with a
        symbol part the canonical half is the one where the alphabetically
        first symbol has positive coefficient; for a purely rational IRR
        coset it is the one with representative below 1/2.  Exactly one
        coset of each non-self-paired pair qualifies.
        """
        if self.kind != IRR:
            return True
        if self.rep_symbols:
            return self.rep_symbols[0][1] > 0
        return self.rep_rational < Fraction(1, 2)

    def pair_representative(self) -> "CosetClass":
        return self if self.is_plus_representative() else self.paired()

    def label(self) -> str:
        """Display label: kind name, with the canonical representative for IRR."""
        if self.kind != IRR:
            return self.kind
        rep = self.pair_representative()
        pieces = []
        if rep.rep_rational or not rep.rep_symbols:
            pieces.append(str(rep.rep_rational))
        for name, coeff in rep.rep_symbols:
            pieces.append(name if coeff == 1 else f"{name}*{coeff}")
        return "IRR(" + "+".join(pieces) + ")"


def coset_class(value: Scalar) -> CosetClass:
    """The coset value + Z with its kind (INT, HALF or IRR)."""
    value = Scalar.coerce(value)
    if value.is_rational():
        if value.rational.denominator == 1:
            return CosetClass(INT)
        if value.rational.denominator == 2:
            return CosetClass(HALF)
        return CosetClass(IRR, value.rational % 1)
    return CosetClass(IRR, value.rational % 1, value.symbols)


def coordinate_sign(value: Scalar) -> int:
    """Sign tag of one coordinate within its coset pair.

    INT coordinates are always +1.  A HALF coordinate is +1 exactly when it
    is positive.  An IRR coordinate is +1 exactly when its own coset is the
    canonical half of the pair, so negating a coordinate flips the tag.
    """
    value = Scalar.coerce(value)
    cls = coset_class(value)
    if cls.kind == INT:
        return +1
    if cls.kind == HALF:
        return +1 if value.rational > 0 else -1
    return +1 if cls.is_plus_representative() else -1
