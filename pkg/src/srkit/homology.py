"""Reduced simplicial homology over a field, from boundary-matrix ranks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .complex import SimplicialComplex, lex_key, mask_of, popcount, verts_of
from .field import QQ, ExactMatrix, FieldSpec, rank_sparse


@dataclass(frozen=True)
class HomologyProfile:
    """``dims[p + 1] = dim H~_p`` for ``p = -1 .. dim``."""

    field: FieldSpec
    dims_: tuple[int, ...]

    def dim(self, p: int) -> int:
        i = p + 1
        return self.dims_[i] if 0 <= i < len(self.dims_) else 0

    @property
    def dims(self) -> dict[int, int]:
        return {p - 1: v for p, v in enumerate(self.dims_)}

    def reduced_euler(self) -> int:
        return sum((-1) ** (p - 1) * v for p, v in enumerate(self.dims_))

    def is_acyclic(self) -> bool:
        return not any(self.dims_)


def _faces_of(facets: tuple[int, ...], k: int) -> list[int]:
    seen: set[int] = set()
    for m in facets:
        c = popcount(m)
        if c == k:
            seen.add(m)
        elif c > k:
            for s in combinations(verts_of(m), k):
                seen.add(mask_of(s))
    return sorted(seen, key=lex_key)


def _boundary_rows(faces: list[int], lower: list[int], modulus: int | None) -> list:
    """Sparse rows of the boundary map; GF(2) rows are plain bitmasks."""
    index = {g: i for i, g in enumerate(lower)}
    rows = []
    for face in faces:
        vs = verts_of(face)
        if modulus == 2:
            r = 0
            for v in vs:
                r |= 1 << index[face & ~(1 << v)]
            rows.append(r)
        else:
            rows.append({index[face & ~(1 << v)]: (-1) ** (pos + 1) for pos, v in enumerate(vs)})
    return rows


def _rank_gf2(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    r = 0
    for row in rows:
        while row:
            low = row & -row
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = row
                r += 1
                break
            row ^= piv
    return r


def _compress(facets: tuple[int, ...]) -> tuple[int, ...]:
    """Relabel the support onto 0..k-1 so equal-shaped inputs share a cache entry."""
    support = 0
    for m in facets:
        support |= m
    pos = {v: i for i, v in enumerate(verts_of(support))}
    return tuple(sorted(mask_of(pos[v] for v in verts_of(m)) for m in facets))


@lru_cache(maxsize=1 << 16)
def _homology_dims(facets: tuple[int, ...], modulus: int | None) -> tuple[int, ...]:
    if not facets:
        return ()
    top = max(popcount(m) for m in facets)
    if len(facets) == 1:
        # a simplex is acyclic unless it is {∅}
        return (1,) if top == 0 else (0,) * (top + 1)
    faces = [_faces_of(facets, k) for k in range(top + 1)]
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        rows = _boundary_rows(faces[k], faces[k - 1], modulus)
        ranks[k] = _rank_gf2(rows) if modulus == 2 else rank_sparse(rows, modulus)
    return tuple(len(faces[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1))


def homology_dims_of_masks(facets, field: FieldSpec = QQ) -> tuple[int, ...]:
    """Homology dims for a raw facet-mask collection (labels are irrelevant)."""
    return _homology_dims(_compress(tuple(facets)), field.modulus)


def boundary_matrix(delta: SimplicialComplex, p: int, field: FieldSpec = QQ) -> ExactMatrix:
    """Matrix of ``∂_p``: rows are p-faces, columns (p-1)-faces, both lex ordered.

    The row of ``{v_0 < ... < v_p}`` has ``(-1)^(j+1)`` in the column of the
    face with ``v_j`` removed.
    """
    upper = list(delta.faces(p + 1)) if p + 1 >= 0 and not delta.is_void else []
    lower = list(delta.faces(p)) if p >= 0 and not delta.is_void else []
    index = {g: i for i, g in enumerate(lower)}
    rows = []
    for face in upper:
        row = [0] * len(lower)
        for pos, v in enumerate(verts_of(face)):
            row[index[face & ~(1 << v)]] = (-1) ** (pos + 1)
        rows.append(row)
    return ExactMatrix.from_rows(rows, field, cols=len(lower))


def reduced_homology(delta: SimplicialComplex, field: FieldSpec = QQ) -> HomologyProfile:
    return HomologyProfile(field, homology_dims_of_masks(delta.facets, field))


def homology_cache_clear() -> None:
    _homology_dims.cache_clear()
