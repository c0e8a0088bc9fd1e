"""Simplicial complexes stored as facet bitmasks.

Vertices are ``0..n-1``; a face is an int whose set bits are its vertices.
Faces are derived from facets on demand, one size at a time, and cached on
the instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .errors import (
    DualUndefined,
    EmptyFacetList,
    FaceNotInComplex,
    ParseError,
    UncoveredVertex,
    VertexOutOfRange,
)

MAX_VERTICES = 64
INFINITY = math.inf


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def verts_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int) -> Iterator[int]:
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def lex_key(mask: int) -> tuple[int, ...]:
    return verts_of(mask)


def maximal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members, sorted by (size desc, lex)."""
    uniq = sorted(set(masks), key=lambda m: (-popcount(m), lex_key(m)))
    keep: list[int] = []
    for m in uniq:
        if not any(m & ~k == 0 for k in keep):
            keep.append(m)
    return tuple(sorted(keep, key=lambda m: (popcount(m), lex_key(m))))


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on ``n`` vertices given by its facets.

    ``facets`` is an antichain of bitmasks.  ``()`` is the void complex and
    ``(0,)`` the irrelevant complex ``{∅}``.  Vertices that lie in no facet are
    allowed only through ``from_facets(..., allow_isolated=True)``; they play
    the role of variables that lie in the Stanley–Reisner ideal.
    """

    n: int
    facets: tuple[int, ...]
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    # -- construction ----------------------------------------------------

    @classmethod
    def from_facets(
        cls, n: int, facets: Iterable[Iterable[int]], allow_isolated: bool = False
    ) -> SimplicialComplex:
        if n < 0 or n > MAX_VERTICES:
            raise VertexOutOfRange(f"vertex count {n} outside 0..{MAX_VERTICES}")
        masks = []
        for f in facets:
            f = list(f)
            for v in f:
                if not (isinstance(v, int) and 0 <= v < n):
                    raise VertexOutOfRange(f"vertex {v!r} not in 0..{n - 1}")
            masks.append(mask_of(f))
        return cls.from_masks(n, masks, allow_isolated)

    @classmethod
    def from_masks(
        cls, n: int, masks: Iterable[int], allow_isolated: bool = False
    ) -> SimplicialComplex:
        masks = list(masks)
        if not masks:
            if n > 0 and not allow_isolated:
                raise EmptyFacetList("no facets given for a complex on %d vertices" % n)
            return cls(n, ())
        full = (1 << n) - 1
        for m in masks:
            if m & ~full:
                raise VertexOutOfRange(f"facet {verts_of(m)} uses a vertex >= {n}")
        facets = maximal_masks(masks)
        if not allow_isolated:
            covered = 0
            for m in facets:
                covered |= m
            if covered != full:
                missing = verts_of(full & ~covered)
                raise UncoveredVertex(f"vertices {missing} lie in no facet")
        return cls(n, facets)

    @classmethod
    def simplex(cls, n: int) -> SimplicialComplex:
        return cls(n, ((1 << n) - 1,))

    # -- basic data ------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def support(self) -> int:
        s = 0
        for m in self.facets:
            s |= m
        return s

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def d(self) -> int:
        """Krull dimension of k[Δ], i.e. the largest facet size."""
        return max((popcount(m) for m in self.facets), default=0)

    @property
    def dim(self) -> int:
        return self.d - 1

    @property
    def codim(self) -> int:
        return self.n - self.d

    def is_pure(self) -> bool:
        return len({popcount(m) for m in self.facets}) <= 1

    def facet_list(self) -> list[tuple[int, ...]]:
        return sorted((verts_of(m) for m in self.facets))

    def faces(self, k: int) -> tuple[int, ...]:
        """All faces with exactly ``k`` vertices, in lexicographic order."""
        key = ("faces", k)
        got = self._cache.get(key)
        if got is None:
            seen: set[int] = set()
            for m in self.facets:
                if popcount(m) < k:
                    continue
                if popcount(m) == k:
                    seen.add(m)
                    continue
                for c in combinations(verts_of(m), k):
                    seen.add(mask_of(c))
            got = tuple(sorted(seen, key=lex_key))
            self._cache[key] = got
        return got

    def face_set(self, k: int) -> frozenset[int]:
        key = ("faceset", k)
        got = self._cache.get(key)
        if got is None:
            got = frozenset(self.faces(k))
            self._cache[key] = got
        return got

    def all_faces(self) -> Iterator[int]:
        if self.is_void:
            return
        for k in range(self.d + 1):
            yield from self.faces(k)

    def __contains__(self, face) -> bool:
        m = face if isinstance(face, int) else mask_of(face)
        if not self.facets:
            return False
        return m in self.face_set(popcount(m))

    # -- vectors ---------------------------------------------------------

    def f_vector(self) -> tuple[int, ...]:
        """``(f_{-1}, f_0, ..., f_{d-1})``."""
        if self.is_void:
            return ()
        return tuple(len(self.faces(k)) for k in range(self.d + 1))

    def h_vector(self) -> tuple[int, ...]:
        f = self.f_vector()
        d = self.d
        return tuple(
            sum((-1) ** (k - i) * math.comb(d - i, k - i) * f[i] for i in range(k + 1))
            for k in range(d + 1)
        )

    def multiplicity(self) -> int:
        return len(self.faces(self.d)) if self.facets else 0

    # -- non-faces -------------------------------------------------------

    def minimal_nonfaces(self) -> tuple[int, ...]:
        got = self._cache.get("mnf")
        if got is not None:
            return got
        out: list[int] = []
        full = self.vertex_mask
        for v in verts_of(full):
            if not self.__contains__(1 << v):
                out.append(1 << v)
        for k in range(2, self.d + 2):
            cand: set[int] = set()
            for g in self.faces(k - 1):
                rest = full & ~g
                while rest:
                    low = rest & -rest
                    rest ^= low
                    if low > g:  # grow only upward so each set appears once per max vertex
                        cand.add(g | low)
            below = self.face_set(k - 1)
            here = self.face_set(k) if k <= self.d else frozenset()
            for s in cand:
                if s in here:
                    continue
                if all((s & ~(1 << v)) in below for v in verts_of(s)):
                    out.append(s)
        got = tuple(sorted(out, key=lambda m: (popcount(m), lex_key(m))))
        self._cache["mnf"] = got
        return got

    def indeg(self) -> float | int:
        mnf = self.minimal_nonfaces()
        if not mnf:
            return INFINITY
        return min(popcount(m) for m in mnf)

    def nonfaces(self, k: int) -> tuple[int, ...]:
        """All ``k``-subsets of the vertex set that are not faces, lex order."""
        fs = self.face_set(k)
        return tuple(
            mask_of(c) for c in combinations(range(self.n), k) if mask_of(c) not in fs
        )

    # -- derived complexes -------------------------------------------------

    def link(self, face: Iterable[int] | int) -> tuple[SimplicialComplex, tuple[int, ...]]:
        """Link of ``face``, re-indexed onto ``V \\ face``.

        Returns ``(link, index_map)`` where ``index_map[i]`` is the original
        label of new vertex ``i``.  Vertices of ``V \\ face`` outside the link
        stay as isolated (non-face) vertices.
        """
        f = face if isinstance(face, int) else mask_of(face)
        if f not in self:
            raise FaceNotInComplex(f"{verts_of(f)} is not a face")
        rest = verts_of(self.vertex_mask & ~f)
        relabel = {v: i for i, v in enumerate(rest)}
        masks = []
        for m in self.facets:
            if m & f == f:
                masks.append(mask_of(relabel[v] for v in verts_of(m & ~f)))
        return SimplicialComplex.from_masks(len(rest), masks, allow_isolated=True), rest

    def link_masks(self, face: int) -> tuple[int, ...]:
        """Facets of the link of ``face`` in the original labelling."""
        return tuple(m & ~face for m in self.facets if m & face == face)

    def restriction(self, w: Iterable[int] | int) -> SimplicialComplex:
        """Induced subcomplex on ``W``, re-indexed onto ``sorted(W)``."""
        wm = w if isinstance(w, int) else mask_of(w)
        if wm & ~self.vertex_mask:
            raise VertexOutOfRange(f"{verts_of(wm)} is not a subset of the vertex set")
        keep = verts_of(wm)
        relabel = {v: i for i, v in enumerate(keep)}
        masks = [mask_of(relabel[v] for v in verts_of(m & wm)) for m in self.facets]
        return SimplicialComplex.from_masks(len(keep), masks, allow_isolated=True)

    def skeleton(self, r: int) -> SimplicialComplex:
        if r < -1 or r > self.dim:
            raise ValueError(f"skeleton dimension {r} outside -1..{self.dim}")
        masks = list(self.faces(r + 1)) + [m for m in self.facets if popcount(m) <= r + 1]
        return SimplicialComplex.from_masks(self.n, masks, allow_isolated=True)

    def alexander_dual(self) -> SimplicialComplex:
        """``{F : V \\ F not in Δ}``; needs codim >= 2 and indeg >= 2."""
        q = self.indeg()
        if self.codim < 2 or q < 2:
            raise DualUndefined(
                f"Alexander dual needs codim >= 2 and indeg >= 2 (codim {self.codim}, indeg {q})"
            )
        full = self.vertex_mask
        return SimplicialComplex.from_masks(self.n, [full & ~m for m in self.minimal_nonfaces()])

    def with_facets(self, extra: Iterable[Iterable[int] | int]) -> SimplicialComplex:
        masks = list(self.facets)
        for f in extra:
            masks.append(f if isinstance(f, int) else mask_of(f))
        return SimplicialComplex.from_masks(self.n, masks, allow_isolated=True)

    def relabel(self, perm: Sequence[int]) -> SimplicialComplex:
        """Image under the vertex map ``v -> perm[v]``."""
        return SimplicialComplex.from_masks(
            self.n, [mask_of(perm[v] for v in verts_of(m)) for m in self.facets], allow_isolated=True
        )

    def is_subcomplex_of(self, other: SimplicialComplex) -> bool:
        return self.n == other.n and all(m in other for m in self.facets)

    def components(self) -> list[int]:
        """Vertex masks of the connected components (isolated vertices excluded)."""
        comps: list[int] = []
        for m in self.facets:
            merged = m
            rest = []
            for c in comps:
                if c & merged:
                    merged |= c
                else:
                    rest.append(c)
            comps = rest + [merged]
        return sorted(comps, key=lex_key)

    def __str__(self) -> str:
        return f"SimplicialComplex(n={self.n}, facets={self.facet_list()})"


# -- isomorphism (tests and cross-family identities only) -----------------------


def _vertex_invariant(c: SimplicialComplex, v: int) -> tuple:
    sizes = sorted(popcount(m) for m in c.facets if m >> v & 1)
    return (len(sizes), tuple(sizes))


def is_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    """Backtracking search for a vertex bijection carrying facets onto facets."""
    if a.n != b.n or len(a.facets) != len(b.facets):
        return False
    if sorted(map(popcount, a.facets)) != sorted(map(popcount, b.facets)):
        return False
    inv_a = [_vertex_invariant(a, v) for v in range(a.n)]
    inv_b = [_vertex_invariant(b, v) for v in range(b.n)]
    if sorted(inv_a) != sorted(inv_b):
        return False
    order = sorted(range(a.n), key=lambda v: -sum(1 for m in a.facets if m >> v & 1))
    target = set(b.facets)
    mapping = [-1] * a.n

    def consistent(k: int) -> bool:
        done = mask_of(order[:k])
        img_done = mask_of(mapping[v] for v in order[:k])
        pa = sorted(
            mask_of(mapping[v] for v in verts_of(m & done)) for m in a.facets
        )
        pb = sorted(m & img_done for m in b.facets)
        return pa == pb

    def go(k: int, used: int) -> bool:
        if k == a.n:
            return {mask_of(mapping[v] for v in verts_of(m)) for m in a.facets} == target
        v = order[k]
        for w in range(b.n):
            if used >> w & 1 or inv_b[w] != inv_a[v]:
                continue
            mapping[v] = w
            if consistent(k + 1) and go(k + 1, used | (1 << w)):
                return True
            mapping[v] = -1
        return False

    return go(0, 0)


def canonical_form(c: SimplicialComplex) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least sorted facet list over invariant-preserving relabelings.

    Exhaustive within invariant classes; intended for n <= 10.
    """
    inv = [_vertex_invariant(c, v) for v in range(c.n)]
    classes: dict[tuple, list[int]] = {}
    for v in range(c.n):
        classes.setdefault(inv[v], []).append(v)
    keys = sorted(classes)
    slots: list[list[int]] = []
    start = 0
    for k in keys:
        size = len(classes[k])
        slots.append(list(range(start, start + size)))
        start += size
    best = None

    def rec(i: int, perm: dict[int, int]) -> None:
        nonlocal best
        if i == len(keys):
            form = tuple(sorted(tuple(sorted(perm[v] for v in verts_of(m))) for m in c.facets))
            if best is None or form < best:
                best = form
            return
        for p in permutations(slots[i]):
            perm2 = dict(perm)
            perm2.update(zip(classes[keys[i]], p))
            rec(i + 1, perm2)

    rec(0, {})
    return best if best is not None else ()


# -- ".sc" text format ----------------------------------------------------------


def parse_sc(text: str, allow_isolated: bool = False) -> SimplicialComplex:
    """Parse the ``.sc`` format: ``vertices <n>`` then one facet per line."""
    n = None
    facets: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        toks = line.split()
        if n is None:
            if toks[0] != "vertices" or len(toks) != 2:
                raise ParseError("expected 'vertices <n>'", lineno, raw.find(toks[0]) + 1)
            try:
                n = int(toks[1])
            except ValueError:
                raise ParseError(f"bad vertex count {toks[1]!r}", lineno, raw.find(toks[1]) + 1) from None
            if n < 0:
                raise ParseError("negative vertex count", lineno, raw.find(toks[1]) + 1)
            continue
        facet = []
        col = 0
        for t in toks:
            col = raw.find(t, col)
            try:
                v = int(t)
            except ValueError:
                raise ParseError(f"bad vertex {t!r}", lineno, col + 1) from None
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} outside 0..{n - 1}", lineno, col + 1)
            facet.append(v)
            col += len(t)
        facets.append(facet)
    if n is None:
        raise ParseError("missing 'vertices <n>' header", 1)
    return SimplicialComplex.from_facets(n, facets, allow_isolated=allow_isolated)


def format_sc(c: SimplicialComplex, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {ln}" for ln in comment.splitlines())
    lines.append(f"vertices {c.n}")
    for f in c.facet_list():
        lines.append(" ".join(map(str, f)))
    return "\n".join(lines) + "\n"
