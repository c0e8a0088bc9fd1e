"""Graded Betti numbers and local cohomology of k[Δ] via Hochster's formulas."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .complex import SimplicialComplex, maximal_masks, popcount
from .errors import DegenerateDegrees, NoGenerators, NotBuchsbaum, ParameterRange, SizeCapExceeded
from .field import QQ, FieldSpec
from .homology import homology_dims_of_masks

DEFAULT_MAX_N = 20
NEG_INFINITY = -math.inf


@dataclass(frozen=True)
class BettiTable:
    """Sparse graded Betti numbers ``β_{i,j}`` for ``i >= 1``; ``β_{0,0} = 1`` is implicit."""

    field: FieldSpec
    n: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if (i, j) == (0, 0):
            return 1
        return self.entries.get((i, j), 0)

    def total(self, i: int) -> int:
        if i == 0:
            return 1
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def support(self) -> list[tuple[int, int]]:
        return sorted(self.entries)

    def regularity(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def indeg(self) -> float | int:
        return min((j for i, j in self.entries if i == 1), default=math.inf)

    def k_polynomial(self) -> list[int]:
        """Coefficients of ``Σ (-1)^i β_{i,j} t^j`` including ``β_{0,0}``."""
        coeffs = [0] * (self.n + 1)
        coeffs[0] = 1
        for (i, j), v in self.entries.items():
            coeffs[j] += (-1) ** i * v
        return coeffs

    def to_json(self) -> list[list[int]]:
        return [[i, j, self.entries[(i, j)]] for i, j in self.support()]

    def digest(self) -> dict:
        return {
            "pd": self.projective_dimension(),
            "reg": self.regularity(),
            "totals": [self.total(i) for i in range(self.projective_dimension() + 1)],
            "entries": self.to_json(),
        }

    def format(self) -> str:
        """Macaulay2-style table: rows are ``j - i``, columns ``i``."""
        pd = self.projective_dimension()
        rows = {0: {0: 1}}
        for (i, j), v in self.entries.items():
            rows.setdefault(j - i, {})[i] = v
        width = max([len(str(v)) for r in rows.values() for v in r.values()] + [len(str(pd))]) + 1
        out = ["    " + "".join(str(i).rjust(width) for i in range(pd + 1))]
        for s in range(0, max(rows) + 1):
            r = rows.get(s, {})
            cells = "".join((str(r[i]) if i in r else "-").rjust(width) for i in range(pd + 1))
            out.append(f"{s:>3}:" + cells)
        return "\n".join(out)


@dataclass(frozen=True)
class GradedDims:
    """Dimensions of ``[H^i_m(k[Δ])]_j`` for ``lo <= j <= 0``; zero for ``j >= 1``."""

    field: FieldSpec
    index: int
    lo: int
    dims: dict[int, int]

    def __getitem__(self, j: int) -> int:
        if j >= 1:
            return 0
        if j < self.lo:
            raise KeyError(f"degree {j} outside the window [{self.lo}, 0]")
        return self.dims.get(j, 0)

    def is_zero(self) -> bool:
        return not any(self.dims.values())

    def to_json(self) -> dict:
        return {str(j): self.dims.get(j, 0) for j in range(self.lo, 1)}


# -- Betti numbers ------------------------------------------------------------------


def _restriction_masks(facets: tuple[int, ...], w: int) -> tuple[int, ...]:
    return maximal_masks(m & w for m in facets)


def _betti_chunk(args) -> dict[tuple[int, int], int]:
    facets, modulus, subsets = args
    fld = FieldSpec(modulus)
    acc: dict[tuple[int, int], int] = {}
    for w in subsets:
        j = popcount(w)
        dims = homology_dims_of_masks(_restriction_masks(facets, w), fld)
        for p1, v in enumerate(dims):
            i = j - p1  # p = p1 - 1 and i = j - p - 1
            if v and i >= 1:
                acc[(i, j)] = acc.get((i, j), 0) + v
    return acc


def betti_table(
    delta: SimplicialComplex,
    field: FieldSpec = QQ,
    max_n: int = DEFAULT_MAX_N,
    workers: int = 1,
) -> BettiTable:
    """``β_{i,j} = Σ_{|W|=j} dim H~_{j-i-1}(Δ_W)`` over all vertex subsets ``W``."""
    if delta.n > max_n:
        raise SizeCapExceeded(f"{delta.n} vertices exceeds the Betti size cap {max_n}")
    key = ("betti", field.modulus)
    got = delta._cache.get(key)
    if got is not None:
        return got
    subsets = range(1 << delta.n)
    if workers > 1 and delta.n >= 10:
        step = -(-len(subsets) // workers)
        chunks = [(delta.facets, field.modulus, subsets[k:k + step]) for k in range(0, len(subsets), step)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_betti_chunk, chunks))
        entries: dict[tuple[int, int], int] = {}
        for part in parts:
            for k, v in part.items():
                entries[k] = entries.get(k, 0) + v
    else:
        entries = _betti_chunk((delta.facets, field.modulus, subsets))
    table = BettiTable(field, delta.n, dict(sorted(entries.items())))
    delta._cache[key] = table
    return table


def regularity(table: BettiTable) -> int:
    return table.regularity()


def indeg_from_betti(table: BettiTable) -> float | int:
    return table.indeg()


def is_q_linear(delta: SimplicialComplex, field: FieldSpec = QQ) -> tuple[bool, int]:
    """``(reg == indeg - 1, indeg)``; the full simplex has no generators."""
    q = delta.indeg()
    if q == math.inf:
        raise NoGenerators("the Stanley-Reisner ideal is zero")
    return betti_table(delta, field).regularity() == q - 1, int(q)


# -- local cohomology ---------------------------------------------------------------


def link_homology(delta: SimplicialComplex, field: FieldSpec = QQ) -> dict[int, tuple[int, ...]]:
    """Homology dims of every link, keyed by face mask (``dims[p + 1]``)."""
    key = ("linkhom", field.modulus)
    got = delta._cache.get(key)
    if got is None:
        got = {}
        for face in delta.all_faces():
            got[face] = homology_dims_of_masks(delta.link_masks(face), field)
        delta._cache[key] = got
    return got


def _dim_at(dims: tuple[int, ...], p: int) -> int:
    return dims[p + 1] if 0 <= p + 1 < len(dims) else 0


def local_cohomology_dims(
    delta: SimplicialComplex, field: FieldSpec = QQ, i: int = 0, lo: int | None = None
) -> GradedDims:
    """Expand Hochster's series: the face ``F`` contributes ``C(p-1, |F|-1)`` in degree ``-p``."""
    if lo is None:
        lo = -delta.n
    if lo > 0:
        raise ParameterRange("window lower end must be <= 0")
    if i < 0 or i > delta.d:
        raise ParameterRange(f"cohomological index {i} outside 0..{delta.d}")
    per_size: dict[int, int] = {}
    for face, dims in link_homology(delta, field).items():
        s = popcount(face)
        v = _dim_at(dims, i - s - 1)
        if v:
            per_size[s] = per_size.get(s, 0) + v
    out = {}
    for p in range(0, -lo + 1):
        if p == 0:
            val = per_size.get(0, 0)
        else:
            val = sum(math.comb(p - 1, s - 1) * v for s, v in per_size.items() if 1 <= s <= p)
        out[-p] = val
    return GradedDims(field, i, lo, out)


def local_cohomology_lengths(delta: SimplicialComplex, field: FieldSpec = QQ) -> list[float | int]:
    """``l(H^i_m)`` for ``i = 0..d``; infinite when a nonempty face contributes."""
    out: list[float | int] = []
    for i in range(delta.d + 1):
        total = 0
        for face, dims in link_homology(delta, field).items():
            v = _dim_at(dims, i - popcount(face) - 1)
            if v:
                if face:
                    total = math.inf
                    break
                total += v
        out.append(total)
    return out


def a_invariant(delta: SimplicialComplex, field: FieldSpec = QQ) -> float | int:
    d = delta.d
    best = None
    for face, dims in link_homology(delta, field).items():
        s = popcount(face)
        if _dim_at(dims, d - s - 1) and (best is None or s < best):
            best = s
    return NEG_INFINITY if best is None else -best


def depth(delta: SimplicialComplex, field: FieldSpec = QQ) -> int:
    for i in range(delta.d + 1):
        if not local_cohomology_dims(delta, field, i, -delta.n).is_zero():
            return i
    return delta.d


def hoa_miyazaki_check(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    from .props import is_buchsbaum

    if not is_buchsbaum(delta, field):
        raise NotBuchsbaum("the inequality reg <= a + d + 1 is stated for Buchsbaum rings")
    return betti_table(delta, field).regularity() <= a_invariant(delta, field) + delta.d + 1


# -- pure resolutions and duality ---------------------------------------------------


def herzog_kuhl_pure_betti(degrees: Sequence[int]) -> list[Fraction]:
    """Betti numbers of a pure resolution with shifts ``c_1 < ... < c_q``."""
    cs = list(degrees)
    if len(set(cs)) != len(cs):
        raise DegenerateDegrees(f"repeated degrees in {cs}")
    if any(c <= 0 for c in cs) or cs != sorted(cs):
        raise ParameterRange(f"degrees must be positive and increasing, got {cs}")
    out = []
    for i, ci in enumerate(cs):
        b = Fraction(1)
        for j, cj in enumerate(cs):
            if j != i:
                b *= Fraction(cj, cj - ci)
        out.append(abs(b))
    return out


def dual_betti_from_links(delta: SimplicialComplex, field: FieldSpec = QQ) -> BettiTable:
    """``β_{i,j}(k[Δ*]) = Σ_{F ∈ Δ, |F| = n-j} dim H~_{i-2}(link F)``, computed on Δ."""
    n = delta.n
    entries: dict[tuple[int, int], int] = {}
    for face, dims in link_homology(delta, field).items():
        j = n - popcount(face)
        for p1, v in enumerate(dims):
            i = p1 + 1  # p = p1 - 1 = i - 2
            if v:
                entries[(i, j)] = entries.get((i, j), 0) + v
    return BettiTable(field, n, dict(sorted(entries.items())))


def alternating_identity_holds(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """``Σ (-1)^i β_{i,j} t^j == h(t) (1-t)^c`` as integer polynomials."""
    lhs = betti_table(delta, field).k_polynomial()
    rhs = [0] * (delta.n + 1)
    c = delta.codim
    for a, h in enumerate(delta.h_vector()):
        for b in range(c + 1):
            rhs[a + b] += h * (-1) ** b * math.comb(c, b)
    return lhs == rhs


def pure_support(table: BettiTable) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for i, j in table.support():
        out.setdefault(i, []).append(j)
    return out
