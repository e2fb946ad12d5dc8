"""Canonical basis blades and the signed product of two blades.

A blade is a product of distinct generators e_i1 ... e_ik kept in canonical
form: a strictly increasing tuple of 1-based indices.  The empty tuple is the
unit scalar.  Every product in the library reduces to reordering such index
sequences, so this module owns the sign arithmetic:

* sorting a concatenation by adjacent transpositions contributes (-1) per
  swap (counted here as inversions during a linear merge, which is the same
  parity as a literal bubble sort);
* each adjacent equal pair (i, i) is deleted and contributes the metric
  factor ``generator_square(sig, i)``.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .metric import Signature, generator_square

#: Canonical blade: strictly increasing tuple of generator indices.
Blade = tuple[int, ...]

#: Largest generator index a blade may carry.
MAX_INDEX = 65535


class SignedBlade(NamedTuple):
    """A blade together with a sign in {+1, -1, 0}.

    A zero sign means the product vanished; the blade field is then
    meaningless and set to the empty blade by convention.
    """

    sign: int
    blade: Blade


_ZERO = SignedBlade(0, ())


def grade(a: Blade) -> int:
    """Number of generators in the blade."""
    return len(a)


def validate_blade(a: Iterable[int]) -> Blade:
    """Check canonical form and bounds, returning the blade as a tuple."""
    blade = tuple(a)
    prev = 0
    for i in blade:
        if not isinstance(i, int) or isinstance(i, bool):
            raise TypeError(f"blade index must be int, got {i!r}")
        if i < 1 or i > MAX_INDEX:
            raise ValueError(f"blade index {i} outside 1..{MAX_INDEX}")
        if i <= prev:
            raise ValueError(f"blade indices must be strictly increasing, got {blade}")
        prev = i
    return blade


def canonicalize(indices: Iterable[int]) -> SignedBlade:
    """Sort a raw index sequence into canonical form, tracking parity.

    The sign is (-1) per transposition needed to sort the sequence.  A
    repeated index is rejected: resolving e_i e_i needs a metric, and blade
    construction is metric-free.
    """
    raw = list(indices)
    for i in raw:
        if not isinstance(i, int) or isinstance(i, bool):
            raise TypeError(f"blade index must be int, got {i!r}")
        if i < 1 or i > MAX_INDEX:
            raise ValueError(f"blade index {i} outside 1..{MAX_INDEX}")
    inversions = 0
    for k in range(len(raw)):
        for m in range(k + 1, len(raw)):
            if raw[k] > raw[m]:
                inversions += 1
            elif raw[k] == raw[m]:
                raise ValueError(f"duplicate index {raw[k]} in blade {raw}")
    return SignedBlade(-1 if inversions & 1 else 1, tuple(sorted(raw)))


def blade_product(a: Blade, b: Blade, sig: Signature) -> SignedBlade:
    """Geometric product of two canonical blades under ``sig``.

    Merges the two sorted sequences, counting one transposition for every
    pair (i in a, j in b) with i > j; a shared index is deleted from both
    sides and contributes its metric square.  Returns sign 0 as soon as a
    deleted pair has a null square.
    """
    sign = 1
    out: list[int] = []
    na, nb = len(a), len(b)
    i = j = 0
    while i < na and j < nb:
        x, y = a[i], b[j]
        if x < y:
            out.append(x)
            i += 1
        elif x > y:
            # y jumps left past a's remaining elements
            if (na - i) & 1:
                sign = -sign
            out.append(y)
            j += 1
        else:
            # equal pair: y passes the elements after x, then both cancel
            if (na - i - 1) & 1:
                sign = -sign
            square = generator_square(sig, x)
            if square == 0:
                return _ZERO
            sign *= square
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return SignedBlade(sign, tuple(out))


def blade_wedge(a: Blade, b: Blade) -> SignedBlade:
    """Wedge product of two canonical blades: zero on any shared index.

    Signature-independent by construction; the sign is the parity of
    interleaving b's indices after a's.
    """
    inversions = 0
    out: list[int] = []
    na, nb = len(a), len(b)
    i = j = 0
    while i < na and j < nb:
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        elif a[i] > b[j]:
            inversions += na - i
            out.append(b[j])
            j += 1
        else:
            return _ZERO
    out.extend(a[i:])
    out.extend(b[j:])
    return SignedBlade(-1 if inversions & 1 else 1, tuple(out))


def blade_key(a: Blade) -> int:
    """Canonical ordering key: the bitmask with bit i-1 set per index i.

    Ascending key order puts the scalar first, then e_1, e_2, e_12, e_3, ...,
    i.e. the lowest index varies fastest.  Python integers are unbounded, so
    the key works for any index up to MAX_INDEX.
    """
    key = 0
    for i in a:
        key |= 1 << (i - 1)
    return key
