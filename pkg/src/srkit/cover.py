"""Cohen–Macaulay covers, sandwich interpolation and the realization explorer.

The cover follows the linear-algebra core of the existence proof: substitute
generic linear forms for the last ``n - c`` variables, expand every size-d
non-face monomial in the degree-d monomials of the first ``c`` variables, and
keep the rows that fall outside a greedily chosen basis as new facets.
Every result is re-verified over the caller's field.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .complex import SimplicialComplex, lex_key, verts_of
from .errors import (
    GenericityExhausted,
    SRError,
    NotNested,
    ParameterRange,
    PreconditionFailed,
    TargetOutOfRange,
    VerificationFailed,
)
from .families import bruns_hibi_dual, cyclic_dual, disjoint_union_q2, hanano, skeleton_complex
from .field import QQ, FieldSpec, GaloisField, select_rows_generic
from .homology import reduced_homology
from .props import h_bound, is_buchsbaum, is_cohen_macaulay, linear_multiplicity, q_linear

DEFAULT_RETRIES = 16
GENERIC_SIZE = 32003


@dataclass(frozen=True)
class CoverResult:
    cover: SimplicialComplex
    added_facets: list[tuple[int, ...]]
    attempts: int
    seed: int

    def to_json(self) -> dict:
        return {
            "n": self.cover.n,
            "facets": [list(f) for f in self.cover.facet_list()],
            "added_facets": [list(f) for f in self.added_facets],
            "attempts": self.attempts,
            "seed": self.seed,
        }


def coefficient_field_for(field: FieldSpec) -> GaloisField:
    """A field of the right characteristic with at least ``GENERIC_SIZE`` elements."""
    if field.modulus is None:
        return GaloisField(GENERIC_SIZE)
    return GaloisField.at_least(field.modulus, GENERIC_SIZE)


def _require_linear_buchsbaum(delta: SimplicialComplex, field: FieldSpec, what: str) -> None:
    if delta.is_void or delta.indeg() != delta.d:
        raise PreconditionFailed(f"{what}: need indeg = d, got indeg {delta.indeg()}, d {delta.d}")
    if not is_buchsbaum(delta, field):
        raise PreconditionFailed(f"{what}: complex is not Buchsbaum over {field}")
    if not q_linear(delta, field):
        raise PreconditionFailed(f"{what}: resolution is not {delta.d}-linear over {field}")


def _expand(factors: list[list[int]], gf: GaloisField, d: int) -> dict[tuple[int, ...], int]:
    """Multiply linear forms; keys are sorted variable multisets of length ``d``."""
    poly: dict[tuple[int, ...], int] = {(): 1}
    for lin in factors:
        nxt: dict[tuple[int, ...], int] = {}
        for mono, a in poly.items():
            for j, b in enumerate(lin):
                if not b:
                    continue
                key = tuple(sorted(mono + (j,)))
                nxt[key] = gf.add(nxt.get(key, 0), gf.mul(a, b))
        poly = {k: v for k, v in nxt.items() if v}
    return poly


def cover_matrix(
    delta: SimplicialComplex, coeffs: list[list[int]], gf: GaloisField
) -> tuple[list[int], list[list[int]]]:
    """Rows of the substitution matrix, one per size-d non-face in lex order.

    ``coeffs[i - c]`` holds the linear form replacing vertex ``i >= c``.
    """
    n, d = delta.n, delta.d
    c = n - d
    columns = {mono: k for k, mono in enumerate(combinations_with_replacement(range(c), d))}
    nonfaces = list(delta.nonfaces(d))
    rows = []
    for g in nonfaces:
        factors = []
        for v in verts_of(g):
            if v < c:
                lin = [0] * c
                lin[v] = 1
            else:
                lin = coeffs[v - c]
            factors.append(lin)
        row = [0] * len(columns)
        for mono, a in _expand(factors, gf, d).items():
            row[columns[mono]] = a
        rows.append(row)
    return nonfaces, rows


def cm_cover(
    delta: SimplicialComplex,
    field: FieldSpec = QQ,
    seed: int = 0,
    max_attempts: int = DEFAULT_RETRIES,
    coefficient_field: GaloisField | None = None,
) -> CoverResult:
    """Cohen–Macaulay d-linear cover of a Buchsbaum d-linear complex."""
    _require_linear_buchsbaum(delta, field, "cm_cover")
    n, d = delta.n, delta.d
    c = n - d
    h = reduced_homology(delta, field).dim(d - 2)
    if h == 0:
        return CoverResult(delta, [], 0, seed)
    gf = coefficient_field or coefficient_field_for(field)
    rng = random.Random(seed)
    width = math.comb(c + d - 1, d)
    for attempt in range(1, max_attempts + 1):
        coeffs = [[gf.random(rng) for _ in range(c)] for _ in range(n - c)]
        nonfaces, rows = cover_matrix(delta, coeffs, gf)
        if len(rows) != width + h:
            raise PreconditionFailed(
                f"expected {width + h} size-{d} non-faces, found {len(rows)}"
            )
        keep = set(select_rows_generic(rows, gf))
        if len(keep) != width:
            continue
        added = [g for i, g in enumerate(nonfaces) if i not in keep]
        cover = delta.with_facets(added)
        if is_cohen_macaulay(cover, field) and cover.indeg() == d and q_linear(cover, field):
            return CoverResult(cover, [verts_of(g) for g in added], attempt, seed)
    raise GenericityExhausted(
        f"no verified cover after {max_attempts} draws over {gf!r}"
    )


# -- sandwich ---------------------------------------------------------------------


def sandwich_family(
    minus: SimplicialComplex,
    plus: SimplicialComplex,
    target_facet_count: int,
    seed: int = 0,
    field: FieldSpec = QQ,
) -> SimplicialComplex:
    """``minus`` plus a seeded sample of ``plus``-only facets, re-verified."""
    if minus.n != plus.n or not all(f in plus for f in minus.facets):
        raise NotNested("the lower complex is not a subcomplex of the upper one")
    for cx, what in ((minus, "lower complex"), (plus, "upper complex")):
        _require_linear_buchsbaum(cx, field, f"sandwich {what}")
    lo, hi = minus.multiplicity(), plus.multiplicity()
    if not lo <= target_facet_count <= hi:
        raise TargetOutOfRange(f"target {target_facet_count} outside [{lo}, {hi}]")
    d = plus.d
    pool = sorted((f for f in plus.faces(d) if f not in minus), key=lex_key)
    rng = random.Random(seed)
    chosen = rng.sample(pool, target_facet_count - lo)
    out = minus.with_facets(chosen)
    if not (is_buchsbaum(out, field) and q_linear(out, field)):
        raise VerificationFailed("sandwich output is not Buchsbaum with linear resolution")
    return out


# -- realization --------------------------------------------------------------------


@dataclass(frozen=True)
class RealizationOutcome:
    params: tuple[int, int, int, int]
    status: str  # Realized | InfeasibleByBound | Unknown
    method: str | None  # see realize() for the method names
    witness: SimplicialComplex | None = None
    detail: str = ""

    def to_json(self) -> dict:
        c, d, q, h = self.params
        return {
            "params": {"c": c, "d": d, "q": q, "h": h},
            "status": self.status,
            "method": self.method,
            "witness": None
            if self.witness is None
            else {"n": self.witness.n, "facets": [list(f) for f in self.witness.facet_list()]},
            "detail": self.detail,
        }


def verify_witness(delta: SimplicialComplex, c: int, d: int, q: int, h: int, field: FieldSpec) -> bool:
    return (
        delta.d == d
        and delta.codim == c
        and delta.indeg() == q
        and is_buchsbaum(delta, field)
        and q_linear(delta, field)
        and reduced_homology(delta, field).dim(q - 2) == h
    )


def cm_example(c: int, d: int, q: int) -> SimplicialComplex:
    """CM complex with q-linear resolution: (q-2)-skeleton on c+q-1 points joined with a simplex."""
    base = skeleton_complex(c + q - 1, q - 1)
    apex = list(range(base.n, c + d))
    return SimplicialComplex.from_facets(c + d, [list(f) + apex for f in base.facet_list()])


def _max_homology_seed(c: int, d: int, q: int) -> tuple[SimplicialComplex, str] | None:
    """A known Buchsbaum d-linear complex of maximal homology for these parameters."""
    if q != d:
        return None
    if d == 3 and c >= 2:
        return hanano(c + 3), "Sandwich3"
    if c == 2:
        return cyclic_dual(d, d), "Sandwich"
    if c == 3 and d % 2 == 1 and d >= 3:
        return bruns_hibi_dual(d + 3), "Sandwich"
    return None


def _known_family(c: int, d: int, q: int, h: int) -> tuple[SimplicialComplex, str] | None:
    if h == 1 and c == d - q + 2:
        return cyclic_dual(d, q), "CyclicDual"
    if c == 3 and q == d and d % 2 == 1 and h == (d + 1) // 2:
        return bruns_hibi_dual(d + 3), "KnownFamily"
    return None


def _random_search(
    c: int, d: int, q: int, h: int, field: FieldSpec, rng: random.Random, budget: int
) -> SimplicialComplex | None:
    n = c + d
    e = linear_multiplicity(c, d, q, h)
    pool = list(combinations(range(n), d))
    if e <= 0 or e > len(pool):
        return None
    for _ in range(budget):
        facets = rng.sample(pool, e)
        try:
            cx = SimplicialComplex.from_facets(n, facets)
        except SRError:
            continue
        if cx.indeg() != q:
            continue
        if verify_witness(cx, c, d, q, h, field):
            return cx
    return None


def realize(
    c: int,
    d: int,
    q: int,
    h: int,
    field: FieldSpec = QQ,
    seed: int = 0,
    search_budget: int = 200,
) -> RealizationOutcome:
    if c < 1 or not 2 <= q <= d or h < 0:
        raise ParameterRange(f"need c >= 1, 2 <= q <= d, h >= 0, got {(c, d, q, h)}")
    params = (c, d, q, h)
    bound = h_bound(c, d, q)
    if h > bound:
        return RealizationOutcome(params, "InfeasibleByBound", None, detail=f"h > {bound}")

    def done(cx: SimplicialComplex, method: str, detail: str = "") -> RealizationOutcome:
        if not verify_witness(cx, c, d, q, h, field):
            raise VerificationFailed(f"{method} produced a witness that fails verification")
        return RealizationOutcome(params, "Realized", method, cx, detail)

    if q == 2:
        return done(disjoint_union_q2(c, d, h), "DisjointUnionQ2")
    if h == 0:
        return done(cm_example(c, d, q), "CMExample")

    def sandwich(start: tuple[SimplicialComplex, str] | None) -> RealizationOutcome | None:
        if start is None:
            return None
        lower, method = start
        h0 = reduced_homology(lower, field).dim(d - 2)
        if lower.codim != c or h > h0:
            return None
        res = cm_cover(lower, field, seed)
        target = lower.multiplicity() + (h0 - h)
        cx = sandwich_family(lower, res.cover, target, seed, field)
        return done(cx, method, f"cover attempts {res.attempts}, h0 {h0}")

    start = _max_homology_seed(c, d, q)
    if d == q == 3 and (got := sandwich(start)) is not None:
        return got
    fam = _known_family(c, d, q, h)
    if fam is not None and fam[0].codim == c:
        return done(fam[0], fam[1])
    if (got := sandwich(start)) is not None:
        return got
    rng = random.Random(seed)
    found = _random_search(c, d, q, h, field, rng, search_budget)
    if found is not None:
        return done(found, "RandomSearch")
    return RealizationOutcome(params, "Unknown", "SearchFail", detail=f"{search_budget} random draws")
