"""Named verification bundles: executable checks over the bundled corpus.

Each bundle returns a :class:`BundleResult`; a failure carries the offending
complex so the CLI can print it in ``.sc`` form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .complex import SimplicialComplex, format_sc
from .cover import cm_cover, realize, sandwich_family, verify_witness
from .families import corpus, hanano, hibi_cycle, moebius, rp2
from .field import FieldSpec
from .hochster import alternating_identity_holds
from .homology import reduced_homology
from .props import (
    h_bound,
    has_maximal_homology,
    is_buchsbaum,
    is_cohen_macaulay,
    is_min_mult_type_q,
    min_mult_equivalence,
    min_mult_lower_bound,
    predicted_h_vector,
    q_linear,
)


@dataclass
class Failure:
    name: str
    message: str
    complex: SimplicialComplex | None = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "message": self.message,
            "sc": None if self.complex is None else format_sc(self.complex),
        }


@dataclass
class BundleResult:
    bundle: str
    field: FieldSpec
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, name: str, message: str, cx: SimplicialComplex | None = None) -> None:
        self.checked += 1
        if not cond:
            self.failures.append(Failure(name, message, cx))

    def to_json(self) -> dict:
        return {
            "bundle": self.bundle,
            "field": str(self.field),
            "checked": self.checked,
            "ok": self.ok,
            "failures": [f.to_json() for f in self.failures],
        }


def _linear_buchsbaum(cx: SimplicialComplex, fld: FieldSpec) -> bool:
    q = cx.indeg()
    return q != math.inf and 2 <= q <= cx.d and cx.codim >= 1 and is_buchsbaum(cx, fld) and q_linear(cx, fld)


def h_vector_formula(fld: FieldSpec, seed: int = 0) -> BundleResult:
    res = BundleResult("thm2.6", fld)
    for e in corpus():
        cx = e.complex
        if not _linear_buchsbaum(cx, fld):
            continue
        q = int(cx.indeg())
        h = reduced_homology(cx, fld).dim(q - 2)
        pred = predicted_h_vector(cx.codim, cx.d, q, h)
        res.check(tuple(cx.h_vector()) == pred, e.name, f"h-vector {cx.h_vector()} != {pred}", cx)
        res.check(0 <= h <= h_bound(cx.codim, cx.d, q), e.name, f"h = {h} outside bound", cx)
    return res


def min_mult_characterization(fld: FieldSpec, seed: int = 0) -> BundleResult:
    res = BundleResult("thm4.5", fld)
    for e in corpus():
        cx = e.complex
        q = cx.indeg()
        if q == math.inf or not 2 <= q <= cx.d or cx.codim < 2 or not is_buchsbaum(cx, fld):
            continue
        eq = min_mult_equivalence(cx, fld)
        res.check(eq.consistent, e.name, f"conditions disagree: {eq.values()}", cx)
        bound = min_mult_lower_bound(cx.codim, cx.d, int(q))
        res.check(cx.multiplicity() >= bound, e.name, f"e = {cx.multiplicity()} below {bound}", cx)
    return res


def _cover_pairs(fld: FieldSpec, seed: int):
    for name, lower in [("hibi_cycle(3)", hibi_cycle(3)), ("moebius", moebius()),
                        ("hanano(6)", hanano(6)), ("hanano(7)", hanano(7))]:
        yield name, lower, cm_cover(lower, fld, seed).cover


def sandwich_closure(fld: FieldSpec, seed: int = 0) -> BundleResult:
    res = BundleResult("thm5.6", fld)
    for name, lower, upper in _cover_pairs(fld, seed):
        d = lower.d
        h0 = reduced_homology(lower, fld).dim(d - 2)
        for j in range(h0 + 1):
            for s in range(3):
                cx = sandwich_family(lower, upper, lower.multiplicity() + j, seed + s, fld)
                h = reduced_homology(cx, fld).dim(d - 2)
                res.check(
                    is_buchsbaum(cx, fld) and q_linear(cx, fld) and h == h0 - j,
                    f"{name}+{j}",
                    f"intermediate has h = {h}, expected {h0 - j}",
                    cx,
                )
    return res


def realization_d3(fld: FieldSpec, seed: int = 0) -> BundleResult:
    res = BundleResult("thm5.8", fld)
    for c in range(1, 5):
        top = c * (c + 1) // 6
        for h in range(top + 1):
            out = realize(c, 3, 3, h, fld, seed)
            ok = out.status == "Realized" and verify_witness(out.witness, c, 3, 3, h, fld)
            res.check(ok, f"realize({c},3,3,{h})", f"status {out.status}", out.witness)
        out = realize(c, 3, 3, top + 1, fld, seed)
        res.check(out.status == "InfeasibleByBound", f"realize({c},3,3,{top + 1})", f"status {out.status}")
    return res


def projective_plane(fld: FieldSpec, seed: int = 0) -> BundleResult:
    res = BundleResult("ex5.7", fld)
    p, m = rp2(), moebius()
    lin = q_linear(p, fld)
    if fld.characteristic == 2:
        res.check(is_buchsbaum(p, fld) and not is_cohen_macaulay(p, fld), "rp2", "expected Buchsbaum, not CM", p)
        res.check(not lin, "rp2", "expected no linear resolution", p)
    else:
        res.check(is_cohen_macaulay(p, fld) and lin, "rp2", "expected CM with 3-linear resolution", p)
    h = reduced_homology(m, fld).dim(1)
    res.check(is_buchsbaum(m, fld) and q_linear(m, fld) and h == 1, "moebius", f"expected 3-linear Buchsbaum, h = {h}", m)
    res.check(not is_min_mult_type_q(m, fld), "moebius", "unexpected minimal multiplicity", m)
    cover = cm_cover(m, fld, seed).cover
    res.check(is_cohen_macaulay(cover, fld) and q_linear(cover, fld), "moebius cover", "cover fails verification", cover)
    rp2_is_cover = is_cohen_macaulay(p, fld) and q_linear(p, fld)
    res.check(rp2_is_cover == (fld.characteristic != 2), "rp2 as cover", f"rp2 cover verdict {rp2_is_cover}", p)
    if fld.characteristic == 2:
        alt = m.with_facets([(0, 3, 5)])
        res.check(is_cohen_macaulay(alt, fld) and q_linear(alt, fld), "moebius+{1,4,6}", "expected a CM cover", alt)
    return res


def d3_multiplicities(fld: FieldSpec, seed: int = 0) -> BundleResult:
    res = BundleResult("lemma4.11", fld)
    for e in corpus():
        cx = e.complex
        if cx.d != 3 or cx.indeg() != 3 or not is_buchsbaum(cx, fld):
            continue
        n, mult = cx.n, cx.multiplicity()
        mm = is_min_mult_type_q(cx, fld)
        res.check(mm == (3 * mult == n * (n - 2)), e.name, f"min mult {mm} vs e = {mult}", cx)
        mh = has_maximal_homology(cx, fld) and not mm
        res.check(mh == (3 * mult == (n - 1) ** 2), e.name, f"max homology {mh} vs e = {mult}", cx)
    return res


def betti_h_identity(fld: FieldSpec, seed: int = 0) -> BundleResult:
    res = BundleResult("rmk2.9", fld)
    for e in corpus():
        res.check(alternating_identity_holds(e.complex, fld), e.name, "alternating Betti sum != h(t)(1-t)^c", e.complex)
    return res


BUNDLES: dict[str, Callable[[FieldSpec, int], BundleResult]] = {
    "thm2.6": h_vector_formula,
    "thm4.5": min_mult_characterization,
    "thm5.6": sandwich_closure,
    "thm5.8": realization_d3,
    "ex5.7": projective_plane,
    "lemma4.11": d3_multiplicities,
    "rmk2.9": betti_h_identity,
}


def run_bundle(name: str, fld: FieldSpec, seed: int = 0) -> BundleResult:
    return BUNDLES[name](fld, seed)
