"""Permutation group machinery: closure, Schreier-Sims, subset products.

Internally everything runs on dense zero-based image tuples of length
``degree``; :class:`~permcodes.perm.Permutation` appears only at the API
boundary.
"""

from __future__ import annotations

import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import DomainError, EnumerationCapError, NotAbelianInvolutiveError, ParseError
from .perm import (
    InvalidPermutationError,
    Permutation,
    commute,
    format_cycles,
    from_array,
    identity,
    is_involution,
    parse_cycles,
    to_array,
    to_cycles,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorSet:
    """Generators of a subgroup of S_degree; identity generators are dropped."""

    degree: int
    gens: tuple[Permutation, ...] = ()

    def __post_init__(self):
        if self.degree < 1:
            raise DomainError(f"degree must be positive, got {self.degree}")
        kept = []
        for idx, g in enumerate(self.gens):
            if not g:
                log.warning("dropping identity generator #%d", idx + 1)
                continue
            if g.max_symbol() > self.degree:
                raise DomainError(f"generator {format_cycles(g)} moves symbols beyond degree {self.degree}")
            kept.append(g)
        object.__setattr__(self, "gens", tuple(kept))

    def __len__(self):
        return len(self.gens)

    def arrays(self) -> list[tuple[int, ...]]:
        return [to_array(g, self.degree) for g in self.gens]


# -- generator-set file format ------------------------------------------------

def dumps_generators(gs: GeneratorSet, comments: Sequence[str] | None = None, header=()) -> str:
    """Serialise as ``degree N`` then one cycle-notation generator per line.

    ``comments[i]`` is appended to generator ``i`` after ``#``; ``header``
    lines are emitted as leading ``#`` comments.
    """
    lines = [f"# {h}" for h in header]
    lines.append(f"degree {gs.degree}")
    for i, g in enumerate(gs.gens):
        text = format_cycles(g)
        if comments is not None and comments[i]:
            text += f"  # {comments[i]}"
        lines.append(text)
    return "\n".join(lines) + "\n"


def loads_generators(text: str) -> GeneratorSet:
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise ParseError(f"expected 'degree N', got {line!r}", lineno)
            try:
                degree = int(parts[1])
            except ValueError:
                raise ParseError(f"bad degree {parts[1]!r}", lineno) from None
            if degree < 1:
                raise ParseError("degree must be positive", lineno)
            continue
        try:
            g = parse_cycles(line)
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
        except InvalidPermutationError as exc:
            raise ParseError(str(exc), lineno) from None
        if g.max_symbol() > degree:
            raise ParseError(f"generator moves symbol {g.max_symbol()} > degree {degree}", lineno)
        gens.append(g)
    if degree is None:
        raise ParseError("missing 'degree N' line")
    return GeneratorSet(degree, tuple(gens))


# -- dense helpers --------------------------------------------------------------

def _mul(f, g):
    """Dense ``f g``: ``x -> f[g[x]]``."""
    return tuple([f[x] for x in g])


def _inv(f):
    out = [0] * len(f)
    for x, y in enumerate(f):
        out[y] = x
    return tuple(out)


def _is_id(f):
    return all(x == y for x, y in enumerate(f))


# -- breadth-first closure ----------------------------------------------------------

def closure_enumerate(gs: GeneratorSet, cap: int = 10**7) -> set[Permutation]:
    """All elements of the group, found by BFS from the identity.

    Raises :class:`EnumerationCapError` as soon as more than ``cap``
    elements have been found.
    """
    return {from_array(a) for a in _closure_arrays(gs, cap)}


def _closure_arrays(gs: GeneratorSet, cap: int) -> set[tuple[int, ...]]:
    if cap < 1:
        raise ValueError("cap must be >= 1")
    gens = gs.arrays()
    start = tuple(range(gs.degree))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = _mul(x, g)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise EnumerationCapError(f"group has more than {cap} elements")
                queue.append(y)
    return seen


# -- Schreier-Sims ------------------------------------------------------------------

@dataclass
class _Level:
    point: int
    gens: list = field(default_factory=list)
    # orbit point -> u with u[point] == orbit point
    transversal: dict = field(default_factory=dict)

    def rebuild(self, degree):
        ident = tuple(range(degree))
        trans = {self.point: ident}
        queue = deque([self.point])
        while queue:
            p = queue.popleft()
            u = trans[p]
            for s in self.gens:
                q = s[p]
                if q not in trans:
                    trans[q] = _mul(s, u)
                    queue.append(q)
        self.transversal = trans


@dataclass(frozen=True)
class Bsgs:
    """Base and strong generating set with explicit coset representatives.

    ``base`` is 1-based.  ``transversals[i]`` maps each point of the orbit
    of ``base[i]`` under the i-th stabiliser to a representative sending
    ``base[i]`` there (both stored zero-based, as dense tuples).
    """

    degree: int
    base: tuple[int, ...]
    transversals: tuple[dict, ...]
    strong_gens: tuple[tuple[int, ...], ...]

    def transversal(self, level: int) -> dict[int, Permutation]:
        return {p + 1: from_array(u) for p, u in self.transversals[level].items()}

    def strong_generators(self) -> list[Permutation]:
        return [from_array(s) for s in self.strong_gens]


def _sift(levels, h, start=0):
    """Strip ``h`` through levels ``start..``; return (residue, failing level)."""
    for i in range(start, len(levels)):
        lv = levels[i]
        p = h[lv.point]
        u = lv.transversal.get(p)
        if u is None:
            return h, i
        h = _mul(_inv(u), h)
    return h, len(levels)


def _first_moved(f):
    for x, y in enumerate(f):
        if x != y:
            return x
    return None


def schreier_sims(gs: GeneratorSet) -> Bsgs:
    """Deterministic Schreier-Sims.

    New base points are always the smallest point moved by the element that
    forced the extension, so the result depends only on the generator order.
    """
    degree = gs.degree
    gens = [g for g in gs.arrays() if not _is_id(g)]
    levels: list[_Level] = []
    for g in gens:
        if all(g[lv.point] == lv.point for lv in levels):
            levels.append(_Level(_first_moved(g)))
    for i, lv in enumerate(levels):
        fixed = [l.point for l in levels[:i]]
        lv.gens = [g for g in gens if all(g[b] == b for b in fixed)]
        lv.rebuild(degree)

    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        extended = False
        for beta, u in list(lv.transversal.items()):
            for s in list(lv.gens):
                gamma = s[beta]
                h = _mul(_inv(lv.transversal[gamma]), _mul(s, u))
                if _is_id(h):
                    continue
                residue, j = _sift(levels, h, i + 1)
                if j == len(levels) and _is_id(residue):
                    continue
                if j == len(levels):
                    levels.append(_Level(_first_moved(residue)))
                for l in range(i + 1, j + 1):
                    levels[l].gens.append(residue)
                    levels[l].rebuild(degree)
                i = j
                extended = True
                break
            if extended:
                break
        if not extended:
            i -= 1

    strong = []
    for lv in levels:
        for s in lv.gens:
            if s not in strong:
                strong.append(s)
    return Bsgs(
        degree=degree,
        base=tuple(lv.point + 1 for lv in levels),
        transversals=tuple(lv.transversal for lv in levels),
        strong_gens=tuple(strong),
    )


def contains(b: Bsgs, p: Permutation) -> bool:
    if p.max_symbol() > b.degree:
        raise DomainError(f"{format_cycles(p)} moves symbols beyond degree {b.degree}")
    h = to_array(p, b.degree)
    for point, trans in zip(b.base, b.transversals):
        u = trans.get(h[point - 1])
        if u is None:
            return False
        h = _mul(_inv(u), h)
    return _is_id(h)


def order(b: Bsgs) -> int:
    out = 1
    for t in b.transversals:
        out *= len(t)
    return out


def enumerate_arrays(b: Bsgs) -> Iterator[tuple[int, ...]]:
    """Each element once, as ``u_0 u_1 ... u_{k-1}`` over the transversals."""
    reps = [list(t.values()) for t in b.transversals]
    ident = tuple(range(b.degree))
    if not reps:
        yield ident
        return

    def walk(level, acc):
        if level == len(reps):
            yield acc
            return
        for u in reps[level]:
            yield from walk(level + 1, _mul(acc, u))

    yield from walk(0, ident)


def enumerate_elements(b: Bsgs) -> Iterator[Permutation]:
    for a in enumerate_arrays(b):
        yield from_array(a)


# -- commuting involutions --------------------------------------------------------

def check_abelian_involutive(gens: Sequence[Permutation]) -> None:
    for idx, g in enumerate(gens):
        if not is_involution(g):
            raise NotAbelianInvolutiveError(f"generator #{idx + 1} is not an involution")
    for (i, g), (j, h) in itertools.combinations(enumerate(gens), 2):
        if not commute(g, h):
            raise NotAbelianInvolutiveError(f"generators #{i + 1} and #{j + 1} do not commute")


def is_abelian_involutive(gens: Sequence[Permutation]) -> bool:
    try:
        check_abelian_involutive(gens)
    except NotAbelianInvolutiveError:
        return False
    return True


def transposition_lists(gens: Sequence[Permutation]) -> list[list[tuple[int, int]]]:
    """Zero-based disjoint transpositions of each involution, for the kernels."""
    return [[(a - 1, b - 1) for a, b in to_cycles(g)] for g in gens]


def abelian_involution_enumerate(gs: GeneratorSet) -> Iterator[tuple[tuple[int, ...], Permutation]]:
    """Yield ``(pattern, product)`` for every exponent pattern in {0,1}^k.

    The generators must be pairwise commuting involutions, so every group
    element is one of these products.  Dependent generators give repeats.
    """
    check_abelian_involutive(gs.gens)
    k = len(gs.gens)
    cur = identity()
    pattern = [0] * k
    yield tuple(pattern), cur
    for step in range(1, 1 << k):
        bit = (step & -step).bit_length() - 1
        pattern[bit] ^= 1
        cur = cur * gs.gens[bit]
        yield tuple(pattern), cur
