"""Sparse multivectors: finite maps from canonical blades to coefficients.

A :class:`Multivector` stores only nonzero terms, keyed by canonical blade
and kept in canonical (blade key) order.  Everything here is metric-free:
construction, addition, negation, scalar multiplication and the grade
machinery.  The metric-dependent products live in :mod:`cliffcalc.products`.

Coefficients are doubles; zero pruning uses exact comparison with 0.0 so the
algebraic identities stay exact on integer inputs.  Use
:meth:`Multivector.equals_within` for approximate comparison of floating
results.
"""

from __future__ import annotations

import numbers
from typing import Iterable, Iterator, Mapping, Sequence

from .blade import Blade, blade_key, canonicalize, validate_blade


class Multivector:
    """Immutable sparse element of a Clifford algebra.

    Supports ``+``, ``-``, unary ``-`` and multiplication by real scalars.
    Multiplying two multivectors needs a metric, so ``a * b`` is rejected;
    use :func:`cliffcalc.products.geometric_product` and friends.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Sequence[int], float] = ()):
        cleaned: dict[Blade, float] = {}
        for raw_blade, coeff in dict(terms).items():
            blade = validate_blade(raw_blade)
            value = cleaned.get(blade, 0.0) + _check_coeff(coeff)
            if value == 0.0:
                cleaned.pop(blade, None)
            else:
                cleaned[blade] = value
        self._terms = _in_canonical_order(cleaned)

    @classmethod
    def _wrap(cls, terms: dict[Blade, float]) -> "Multivector":
        """Adopt a dict that is already pruned and in canonical order."""
        mv = object.__new__(cls)
        mv._terms = terms
        return mv

    def terms(self) -> Iterator[tuple[Blade, float]]:
        """Iterate (blade, coefficient) pairs in canonical order."""
        return iter(self._terms.items())

    def blades(self) -> Iterator[Blade]:
        return iter(self._terms)

    def coefficient(self, blade: Sequence[int]) -> float:
        """Coefficient of a blade, 0.0 when absent."""
        return self._terms.get(validate_blade(blade), 0.0)

    def num_terms(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def scalar_part(self) -> float:
        return self._terms.get((), 0.0)

    def max_index(self) -> int:
        """Largest generator index used, 0 for the zero multivector."""
        best = 0
        for blade in self._terms:
            if blade and blade[-1] > best:
                best = blade[-1]
        return best

    def grades(self) -> list[int]:
        """Multiset of term grades, ascending; one entry per stored term."""
        return sorted(len(blade) for blade in self._terms)

    def grade_part(self, r: int) -> "Multivector":
        """Sub-multivector of terms with grade exactly ``r``."""
        if r < 0:
            raise ValueError(f"grade must be non-negative, got {r}")
        return Multivector._wrap(
            {blade: c for blade, c in self._terms.items() if len(blade) == r}
        )

    def equals_within(self, other: "Multivector", eps: float) -> bool:
        """True when all coefficients agree to within ``eps`` (absolute)."""
        for blade in self._terms.keys() | other._terms.keys():
            if abs(self._terms.get(blade, 0.0) - other._terms.get(blade, 0.0)) > eps:
                return False
        return True

    def __add__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        out = dict(self._terms)
        for blade, c in other._terms.items():
            value = out.get(blade, 0.0) + c
            if value == 0.0:
                out.pop(blade, None)
            else:
                out[blade] = value
        return Multivector._wrap(_in_canonical_order(out))

    def __sub__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Multivector":
        return Multivector._wrap({blade: -c for blade, c in self._terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, Multivector):
            raise TypeError(
                "multiplying two multivectors needs a metric; use "
                "cliffcalc.products.geometric_product(a, b, sig)"
            )
        if not isinstance(scalar, numbers.Real):
            return NotImplemented
        s = float(scalar)
        if s == 0.0:
            return Multivector._wrap({})
        return Multivector._wrap({blade: c * s for blade, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        from .textio import render

        return render(self)

    def __repr__(self) -> str:
        body = ", ".join(f"{blade}: {c!r}" for blade, c in self._terms.items())
        return f"Multivector({{{body}}})"


def _check_coeff(value) -> float:
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise TypeError(f"coefficient must be a real number, got {value!r}")
    return float(value)


def _in_canonical_order(terms: dict[Blade, float]) -> dict[Blade, float]:
    return {blade: terms[blade] for blade in sorted(terms, key=blade_key)}


def zero() -> Multivector:
    return Multivector._wrap({})


def from_scalar(c: float) -> Multivector:
    """Embed a real number as a scalar term (the empty blade)."""
    c = _check_coeff(c)
    if c == 0.0:
        return Multivector._wrap({})
    return Multivector._wrap({(): c})


def from_terms(blades: Iterable[Sequence[int]], coeffs: Iterable[float]) -> Multivector:
    """Build a multivector from parallel lists of index-lists and coefficients.

    Index-lists need not be sorted; sorting applies the permutation parity to
    the coefficient.  An index repeated inside one list is rejected (resolving
    it would need a metric).  Duplicate blades across entries are summed and
    exact zeros pruned.
    """
    blades = list(blades)
    coeffs = list(coeffs)
    if len(blades) != len(coeffs):
        raise ValueError(
            f"got {len(blades)} index-lists but {len(coeffs)} coefficients"
        )
    out: dict[Blade, float] = {}
    for raw, coeff in zip(blades, coeffs):
        sign, blade = canonicalize(raw)
        value = out.get(blade, 0.0) + sign * _check_coeff(coeff)
        if value == 0.0:
            out.pop(blade, None)
        else:
            out[blade] = value
    return Multivector._wrap(_in_canonical_order(out))


def as_1vector(v: Sequence[float]) -> Multivector:
    """Coerce a list of reals to the 1-vector sum(v[i] * e_{i+1})."""
    out: dict[Blade, float] = {}
    for i, c in enumerate(v, start=1):
        c = _check_coeff(c)
        if c != 0.0:
            out[(i,)] = c
    return Multivector._wrap(out)


def basis(i: int) -> Multivector:
    """The basis 1-vector e_i."""
    return Multivector._wrap({validate_blade((i,)): 1.0})
