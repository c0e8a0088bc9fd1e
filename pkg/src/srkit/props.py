"""Ring-theoretic classification of k[Δ] over a fixed field.

Every verdict here depends on the field, so each function takes one.  ``h``
always means ``dim H~_{q-2}(Δ)``; only for Buchsbaum complexes with linear
resolution does it coincide with ``dim H^{q-1}_m``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .complex import SimplicialComplex
from .errors import NotBuchsbaum, ParameterRange
from .field import QQ, FieldSpec
from .hochster import (
    DEFAULT_MAX_N,
    a_invariant,
    betti_table,
    depth,
    link_homology,
)
from .homology import reduced_homology

SCHEMA_VERSION = 1


def _low_homology_vanishes(dims: tuple[int, ...]) -> bool:
    # dims[p + 1] for p = -1..dim; everything strictly below the top must vanish
    return not any(dims[:-1])


def is_cohen_macaulay(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    if delta.is_void:
        return True
    return all(_low_homology_vanishes(dims) for dims in link_homology(delta, field).values())


def is_buchsbaum(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    if delta.is_void:
        return True
    if not delta.is_pure():
        return False
    return all(
        _low_homology_vanishes(dims) for face, dims in link_homology(delta, field).items() if face
    )


def _require_buchsbaum(delta: SimplicialComplex, field: FieldSpec) -> None:
    if not is_buchsbaum(delta, field):
        raise NotBuchsbaum(f"complex is not Buchsbaum over {field}")


def _require_q_le_d(delta: SimplicialComplex) -> int:
    q = delta.indeg()
    if not 2 <= q <= delta.d:
        raise ParameterRange(f"need 2 <= indeg <= d, got indeg {q}, d {delta.d}")
    return int(q)


def q_linear(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """``reg == indeg - 1``; False when the ideal is zero."""
    q = delta.indeg()
    if q == math.inf:
        return False
    return betti_table(delta, field).regularity() == q - 1


def homology_h(delta: SimplicialComplex, field: FieldSpec = QQ) -> int:
    q = delta.indeg()
    if q == math.inf:
        raise ParameterRange("h is undefined without generators")
    return reduced_homology(delta, field).dim(int(q) - 2)


def i_invariant(delta: SimplicialComplex, field: FieldSpec = QQ) -> int:
    _require_buchsbaum(delta, field)
    d = delta.d
    hom = reduced_homology(delta, field)
    return sum(math.comb(d - 1, i) * hom.dim(i - 1) for i in range(d))


# -- closed formulas ----------------------------------------------------------------


def _check_cdq(c: int, d: int, q: int) -> None:
    if c < 1 or q < 2 or q > d:
        raise ParameterRange(f"need c >= 1 and 2 <= q <= d, got c={c}, d={d}, q={q}")


def h_bound(c: int, d: int, q: int) -> Fraction:
    """``(c+q-2)...(c+1)c / d(d-1)...(d-q+2)``."""
    _check_cdq(c, d, q)
    num = math.prod(c + k for k in range(q - 1))
    den = math.prod(d - k for k in range(q - 1))
    return Fraction(num, den)


def min_mult_lower_bound(c: int, d: int, q: int) -> Fraction:
    _check_cdq(c, d, q)
    return Fraction(c + d, d) * math.comb(c + q - 2, q - 2)


def predicted_h_vector(c: int, d: int, q: int, h) -> tuple:
    _check_cdq(c, d, q)
    h = Fraction(h)
    if h < 0:
        raise ParameterRange(f"h must be nonnegative, got {h}")
    out = []
    for p in range(d + 1):
        if p < q:
            out.append(Fraction(math.comb(c + p - 1, p)))
        else:
            out.append((-1) ** (p - q + 1) * math.comb(d, p) * h)
    return tuple(int(x) if x.denominator == 1 else x for x in out)


def linear_multiplicity(c: int, d: int, q: int, h: int) -> int:
    """Multiplicity of a Buchsbaum q-linear ring with the given h."""
    return math.comb(c + q - 1, q - 1) - h * math.comb(d - 1, q - 1)


def multiplicity_lower_bound(delta: SimplicialComplex, field: FieldSpec = QQ) -> int:
    """``C(c+q-1, q-1) - I``; attained exactly when the resolution is q-linear."""
    q = int(delta.indeg())
    return math.comb(delta.codim + q - 1, q - 1) - i_invariant(delta, field)


# -- minimal multiplicity and maximal homology --------------------------------------


def is_min_mult_type_q(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    _require_buchsbaum(delta, field)
    q = _require_q_le_d(delta)
    return delta.multiplicity() == min_mult_lower_bound(delta.codim, delta.d, q)


def has_maximal_homology(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    _require_buchsbaum(delta, field)
    q = _require_q_le_d(delta)
    if not q_linear(delta, field):
        return False
    return homology_h(delta, field) == math.floor(h_bound(delta.codim, delta.d, q))


@dataclass(frozen=True)
class MinMultEquivalence:
    """The seven characterizations of minimal multiplicity of type q, each evaluated on its own."""

    multiplicity_formula: bool
    linear_with_max_h: bool
    h_vector_formula: bool
    vertex_links_linear: bool
    vertex_links_a_invariant: bool
    a_invariant: bool
    dual_pure_almost_linear: bool

    def values(self) -> tuple[bool, ...]:
        return (
            self.multiplicity_formula,
            self.linear_with_max_h,
            self.h_vector_formula,
            self.vertex_links_linear,
            self.vertex_links_a_invariant,
            self.a_invariant,
            self.dual_pure_almost_linear,
        )

    @property
    def consistent(self) -> bool:
        return len(set(self.values())) == 1

    @property
    def verdict(self) -> str:
        return "consistent" if self.consistent else "inconsistent"

    def to_json(self) -> dict:
        return {
            "conditions": list(self.values()),
            "verdict": self.verdict,
        }


def _vertex_links(delta: SimplicialComplex):
    for v in range(delta.n):
        yield delta.link([v])[0]


def _dual_pure_almost_linear(delta: SimplicialComplex, field: FieldSpec, q: int) -> bool:
    c, d = delta.codim, delta.d
    dual = delta.alexander_dual()
    if not is_cohen_macaulay(dual, field):
        return False
    table = betti_table(dual, field)
    for (i, j), v in table.entries.items():
        if i < q and j != c + i - 1:
            return False
        if i == q and j != c + d:
            return False
        if i > q:
            return False
    if any(table.total(i) == 0 for i in range(1, q + 1)):
        return False
    return a_invariant(dual, field) == 0


def min_mult_equivalence(delta: SimplicialComplex, field: FieldSpec = QQ) -> MinMultEquivalence:
    _require_buchsbaum(delta, field)
    q = _require_q_le_d(delta)
    c, d = delta.codim, delta.d
    if c < 2:
        raise ParameterRange("the characterization needs codim >= 2")
    hb = h_bound(c, d, q)
    h = homology_h(delta, field)

    def link_linear(link: SimplicialComplex) -> bool:
        lq = link.indeg()
        return lq == q - 1 and q_linear(link, field)

    links = list(_vertex_links(delta))
    return MinMultEquivalence(
        multiplicity_formula=delta.multiplicity() == min_mult_lower_bound(c, d, q),
        linear_with_max_h=q_linear(delta, field) and h == hb,
        h_vector_formula=tuple(delta.h_vector()) == predicted_h_vector(c, d, q, hb),
        vertex_links_linear=all(link_linear(lk) for lk in links),
        vertex_links_a_invariant=all(a_invariant(lk, field) == q - d - 1 for lk in links),
        a_invariant=a_invariant(delta, field) == q - d - 2,
        dual_pure_almost_linear=_dual_pure_almost_linear(delta, field, q),
    )


# -- linearity criteria -------------------------------------------------------------


def _links_a_bounded(delta: SimplicialComplex, field: FieldSpec, bound: int) -> bool:
    return all(a_invariant(lk, field) <= bound for lk in _vertex_links(delta))


def hibi_criterion(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    _require_buchsbaum(delta, field)
    q = _require_q_le_d(delta)
    hom = reduced_homology(delta, field)
    quiet = all(hom.dim(i) == 0 for i in range(-1, delta.d) if i != q - 2)
    return quiet and _links_a_bounded(delta, field, q - delta.d)


def improved_criterion(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    _require_buchsbaum(delta, field)
    q = _require_q_le_d(delta)
    if reduced_homology(delta, field).dim(q - 1):
        return False
    return _links_a_bounded(delta, field, q - delta.d)


# -- fullness and the q = 2 structure -------------------------------------------------


def is_d_full(delta: SimplicialComplex) -> bool:
    if delta.is_void or not delta.is_pure():
        return False
    d = delta.d
    return len(delta.faces(d - 1)) == math.comb(delta.n, d - 1)


def is_froberg_q2(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Each connected component is CM with 2-linear resolution (or a simplex)."""
    _require_buchsbaum(delta, field)
    if delta.indeg() != 2:
        raise ParameterRange(f"expected indeg 2, got {delta.indeg()}")
    for comp in delta.components():
        sub = delta.restriction(comp)
        if not is_cohen_macaulay(sub, field):
            return False
        if sub.indeg() != math.inf and not (sub.indeg() == 2 and q_linear(sub, field)):
            return False
    return True


# -- report -------------------------------------------------------------------------


def _rational_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class PropertyReport:
    field: FieldSpec
    n: int
    d: int
    c: int
    q: int | None
    pure: bool
    fvec: tuple[int, ...]
    hvec: tuple[int, ...]
    e: int
    depth: int
    cm: bool
    buchsbaum: bool
    dFull: bool
    qLinear: bool
    h: int | None
    I: int | None
    aInv: int | None
    hBound: Fraction | None
    minMultTypeQ: bool
    maxHomology: bool
    bettiSummary: dict

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "field": str(self.field),
            "n": self.n,
            "d": self.d,
            "c": self.c,
            "q": self.q,
            "pure": self.pure,
            "fvec": list(self.fvec),
            "hvec": list(self.hvec),
            "e": self.e,
            "depth": self.depth,
            "cm": self.cm,
            "buchsbaum": self.buchsbaum,
            "dFull": self.dFull,
            "qLinear": self.qLinear,
            "h": self.h,
            "I": self.I,
            "aInv": self.aInv,
            "hBound": None if self.hBound is None else _rational_str(self.hBound),
            "minMultTypeQ": self.minMultTypeQ,
            "maxHomology": self.maxHomology,
            "bettiSummary": self.bettiSummary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        d = self.to_dict()
        lines = []
        for k, v in d.items():
            if k == "bettiSummary":
                continue
            lines.append(f"{k:>14}: {v}")
        lines.append(f"{'betti':>14}: {d['bettiSummary']['entries']}")
        return "\n".join(lines)


def property_report(
    delta: SimplicialComplex, field: FieldSpec = QQ, max_n: int = DEFAULT_MAX_N
) -> PropertyReport:
    table = betti_table(delta, field, max_n=max_n)
    q_raw = delta.indeg()
    q = None if q_raw == math.inf else int(q_raw)
    c, d = delta.codim, delta.d
    buchs = is_buchsbaum(delta, field)
    lin = q is not None and table.regularity() == q - 1
    h = None if q is None else reduced_homology(delta, field).dim(q - 2)
    in_range = q is not None and c >= 1 and 2 <= q <= d
    hb = h_bound(c, d, q) if in_range else None
    a = a_invariant(delta, field)
    return PropertyReport(
        field=field,
        n=delta.n,
        d=d,
        c=c,
        q=q,
        pure=delta.is_pure(),
        fvec=delta.f_vector(),
        hvec=delta.h_vector(),
        e=delta.multiplicity(),
        depth=depth(delta, field),
        cm=is_cohen_macaulay(delta, field),
        buchsbaum=buchs,
        dFull=is_d_full(delta),
        qLinear=lin,
        h=h,
        I=i_invariant(delta, field) if buchs else None,
        aInv=None if a == -math.inf else int(a),
        hBound=hb,
        minMultTypeQ=bool(buchs and in_range and delta.multiplicity() == min_mult_lower_bound(c, d, q)),
        maxHomology=bool(buchs and in_range and lin and h == math.floor(hb)),
        bettiSummary=table.digest(),
    )
