"""Finitely supported permutations of the positive integers.

A :class:`Permutation` stores only its moved points, so gadgets can be
shifted anywhere on the number line without fixing a degree up front.  A
degree is only needed when converting to one-line notation.

Products follow the right-to-left convention: ``compose(f, g)`` (also
``f * g``) maps ``x`` to ``f(g(x))``.

Cycle notation describes where entries travel: the cycle ``(p0, ..., pk-1)``
moves the entry at position ``p_i`` to position ``p_{i+1}``, so the
permutation sends ``p_{i+1}`` to ``p_i``.  Hence the one-line form
``[2,3,1,4,6,5]`` is written ``(1,3,2)(5,6)``.  For involutions, which is
every gadget in this package, both readings agree.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

from .errors import (
    DegreeTooSmallError,
    InvalidCyclesError,
    InvalidPermutationError,
    OutOfRangeError,
    ParseError,
    UndefinedNormalizationError,
)

Cycle = tuple[int, ...]
CycleList = tuple[Cycle, ...]


class Permutation:
    """Immutable bijection of the positive integers with finite support."""

    __slots__ = ("_map", "_hash")

    def __init__(self, mapping: Mapping[int, int] | None = None):
        clean = {}
        if mapping:
            for x, y in mapping.items():
                if not isinstance(x, int) or not isinstance(y, int):
                    raise InvalidPermutationError("symbols must be integers")
                if x < 1 or y < 1:
                    raise OutOfRangeError(f"symbol below 1 in {x}->{y}")
                if x != y:
                    clean[x] = y
            if set(clean.values()) != clean.keys():
                raise InvalidPermutationError("mapping is not a bijection on its support")
        self._map = clean
        self._hash = None

    @classmethod
    def _trusted(cls, mapping: dict[int, int]) -> Permutation:
        # mapping must already be a fixed-point-free bijection on its keys
        p = cls.__new__(cls)
        p._map = mapping
        p._hash = None
        return p

    def __call__(self, x: int) -> int:
        return self._map.get(x, x)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._map == other._map

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._map.items()))
        return self._hash

    def __bool__(self):
        return bool(self._map)

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r})"

    def __str__(self):
        return format_cycles(self)

    @property
    def mapping(self) -> dict[int, int]:
        return dict(self._map)

    def items(self):
        return self._map.items()

    def max_symbol(self) -> int:
        """Largest moved symbol, 0 for the identity."""
        return max(self._map, default=0)

    def min_symbol(self) -> int:
        """Smallest moved symbol, 0 for the identity."""
        return min(self._map, default=0)


def identity() -> Permutation:
    return Permutation._trusted({})


def compose(f: Permutation, g: Permutation) -> Permutation:
    """Return ``f g``, the map ``x -> f(g(x))``."""
    fm, gm = f._map, g._map
    out = {}
    for x in fm.keys() | gm.keys():
        y = gm.get(x, x)
        y = fm.get(y, y)
        if y != x:
            out[x] = y
    return Permutation._trusted(out)


def product(perms: Iterable[Permutation]) -> Permutation:
    """Left-to-right product ``p1 p2 ... pk``."""
    out = identity()
    for p in perms:
        out = compose(out, p)
    return out


def inverse(p: Permutation) -> Permutation:
    return Permutation._trusted({y: x for x, y in p._map.items()})


def support(p: Permutation) -> frozenset[int]:
    return frozenset(p._map)


def is_involution(p: Permutation) -> bool:
    m = p._map
    return all(m[y] == x for x, y in m.items())


def commute(p: Permutation, q: Permutation) -> bool:
    return compose(p, q) == compose(q, p)


def from_cycles(cycles: Iterable[Iterable[int]]) -> Permutation:
    """Build a permutation from disjoint cycles.

    ``(p0, ..., pk-1)`` sends ``p_{i+1}`` to ``p_i`` (indices mod k); see
    the module docstring.  One-element cycles are accepted and ignored.
    """
    out: dict[int, int] = {}
    seen: set[int] = set()
    for cyc in cycles:
        cyc = tuple(cyc)
        for x in cyc:
            if not isinstance(x, int) or x < 1:
                raise InvalidCyclesError(f"invalid symbol {x!r} in cycle {cyc}")
            if x in seen:
                raise InvalidCyclesError(f"symbol {x} appears twice in {cyc} or an earlier cycle")
            seen.add(x)
        if len(cyc) > 1:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                out[b] = a
    return Permutation._trusted(out)


def to_cycles(p: Permutation) -> CycleList:
    """Canonical disjoint-cycle form: each cycle starts at its minimum,
    cycles sorted by their minimum, fixed points omitted."""
    m = {y: x for x, y in p._map.items()}
    seen = set()
    cycles = []
    for start in sorted(m):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = m[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = m[x]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def from_one_line(images: Sequence[int]) -> Permutation:
    """``images[i-1]`` is the image of ``i``."""
    n = len(images)
    if sorted(images) != list(range(1, n + 1)):
        raise InvalidPermutationError(f"{list(images)} is not a rearrangement of 1..{n}")
    return Permutation._trusted({i: v for i, v in enumerate(images, 1) if v != i})


def to_one_line(p: Permutation, degree: int) -> tuple[int, ...]:
    if p.max_symbol() > degree:
        raise DegreeTooSmallError(f"degree {degree} < largest moved symbol {p.max_symbol()}")
    m = p._map
    return tuple(m.get(i, i) for i in range(1, degree + 1))


def to_array(p: Permutation, degree: int) -> tuple[int, ...]:
    """Zero-based image tuple, the dense form used by the group engine."""
    if p.max_symbol() > degree:
        raise DegreeTooSmallError(f"degree {degree} < largest moved symbol {p.max_symbol()}")
    m = p._map
    return tuple(m.get(i, i) - 1 for i in range(1, degree + 1))


def from_array(arr: Sequence[int]) -> Permutation:
    return Permutation._trusted({i + 1: v + 1 for i, v in enumerate(arr) if v != i})


def shift(p: Permutation, r: int) -> Permutation:
    """Add ``r`` to every symbol of every cycle."""
    if not p._map or r == 0:
        return p
    if p.min_symbol() + r < 1:
        raise OutOfRangeError(f"shifting by {r} moves symbol {p.min_symbol()} below 1")
    return Permutation._trusted({x + r: y + r for x, y in p._map.items()})


def stretch(p: Permutation, t: int) -> Permutation:
    """Multiply every symbol by ``t``, then shift so the smallest moved symbol is 1."""
    if t < 1:
        raise ValueError(f"stretch factor must be >= 1, got {t}")
    if not p._map:
        raise UndefinedNormalizationError("cannot stretch the identity")
    off = 1 - t * p.min_symbol()
    return Permutation._trusted({t * x + off: t * y + off for x, y in p._map.items()})


_CYCLE_TEXT = re.compile(r"\s*\(\s*(\d+(?:\s*,\s*\d+)*)?\s*\)\s*")


def parse_cycles(text: str) -> Permutation:
    """Parse ``(a,b,...)(c,d,...)``; the identity is written ``()``."""
    text = text.strip()
    if not text:
        raise ParseError("empty permutation text")
    pos = 0
    cycles = []
    while pos < len(text):
        mt = _CYCLE_TEXT.match(text, pos)
        if mt is None:
            raise ParseError(f"bad cycle notation at offset {pos}: {text!r}")
        if mt.group(1):
            cycles.append([int(s) for s in mt.group(1).split(",")])
        pos = mt.end()
    for cyc in cycles:
        if 0 in cyc:
            raise ParseError(f"symbol 0 in {text!r}; symbols start at 1")
    return from_cycles(cycles)


def format_cycles(p: Permutation) -> str:
    cycles = to_cycles(p)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def parse_one_line(text: str) -> Permutation:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"one-line notation must be bracketed: {text!r}")
    body = text[1:-1].strip()
    try:
        images = [int(s) for s in body.split(",")] if body else []
    except ValueError as exc:
        raise ParseError(f"bad one-line notation {text!r}") from exc
    try:
        return from_one_line(images)
    except InvalidPermutationError as exc:
        raise ParseError(str(exc)) from exc


def format_one_line(p: Permutation, degree: int) -> str:
    return "[" + ",".join(map(str, to_one_line(p, degree))) + "]"
