"""Named simplicial complexes and the bundled test corpus.

Every generator returns a validated ``SimplicialComplex`` on ``0..n-1``.
Modular index ranges are taken as sets, so repeated facets collapse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .complex import SimplicialComplex
from .errors import ParameterRange
from .field import is_prime


def _make(n: int, facets) -> SimplicialComplex:
    return SimplicialComplex.from_facets(n, [sorted(set(f)) for f in facets])


def skeleton_complex(n: int, d: int) -> SimplicialComplex:
    """All ``d``-subsets of ``[n]``: the (d-1)-skeleton of the (n-1)-simplex."""
    if not 1 <= d <= n - 1:
        raise ParameterRange(f"skeleton_complex needs 1 <= d <= n-1, got n={n}, d={d}")
    return _make(n, combinations(range(n), d))


def max_embdim_cm(c: int, d: int) -> SimplicialComplex:
    """Cone over ``c+1`` points with apex a (d-2)-simplex.

    Vertices ``0..c`` are the X's (pairwise non-adjacent), ``c+1..c+d-1`` the
    Y's.  ``c = 0`` gives the (d-1)-simplex, used as a building block.
    """
    if c < 0 or d < 1:
        raise ParameterRange(f"max_embdim_cm needs c >= 0 and d >= 1, got c={c}, d={d}")
    ys = list(range(c + 1, c + d))
    return _make(c + d, [[x] + ys for x in range(c + 1)])


def disjoint_union_q2(c: int, d: int, h: int) -> SimplicialComplex:
    """``max_embdim_cm(c - dh, d)`` plus ``h`` disjoint (d-1)-simplices."""
    if c < 1 or d < 2 or h < 0:
        raise ParameterRange(f"need c >= 1, d >= 2, h >= 0, got c={c}, d={d}, h={h}")
    if d * h > c:
        raise ParameterRange(f"h={h} exceeds c/d = {c}/{d}")
    base = max_embdim_cm(c - d * h, d)
    facets = [list(f) for f in base.facet_list()]
    start = base.n
    for _ in range(h):
        facets.append(list(range(start, start + d)))
        start += d
    return _make(c + d, facets)


def hibi_cycle(d: int) -> SimplicialComplex:
    """Cyclic intervals of length ``d`` on ``2d - 1`` vertices."""
    if d < 2:
        raise ParameterRange(f"hibi_cycle needs d >= 2, got {d}")
    n = 2 * d - 1
    return _make(n, [[(i + t) % n for t in range(d)] for i in range(n)])


def terai_complex(n: int) -> SimplicialComplex:
    """Triples ``{a, b, a+b}`` and ``{a, b, c}`` with ``a+b+c = 2n+1``, shifted to 0-based."""
    if n <= 3 or not is_prime(2 * n + 1):
        raise ParameterRange(f"terai_complex needs n > 3 with 2n+1 prime, got n={n}")
    facets = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if a + b <= n:
                facets.append((a, b, a + b))
            c = 2 * n + 1 - a - b
            if b < c <= n:
                facets.append((a, b, c))
    return _make(n, [[v - 1 for v in f] for f in facets])


def hanano(n: int) -> SimplicialComplex:
    """Buchsbaum 3-linear complexes of maximal homology on ``n`` vertices.

    For ``n = 3k+1`` the extra vertex (written ∞) is the last index ``n-1``.
    """
    if n < 5:
        raise ParameterRange(f"hanano needs n >= 5, got {n}")
    k, r = divmod(n, 3)
    facets = []
    if r == 0:
        for i in range(k):
            facets.append((i % n, (i + k) % n, (i + 2 * k) % n))
        for i in range(3 * k):
            for j in range(k + 1, 2 * k):
                facets.append((i % n, (i + k) % n, (i + j) % n))
    elif r == 2:
        for i in range(3 * k + 2):
            for j in range(k):
                facets.append((i % n, (i + 1) % n, (i + 3 * j + 2) % n))
    else:
        m = n - 1
        inf = n - 1
        for i in range(3 * k):
            facets.append((inf, i % m, (i + 1) % m))
        for i in range(3 * k):
            for j in range(1, k):
                facets.append((i % m, (i + 1) % m, (i + 3 * j) % m))
    return _make(n, facets)


def gale_facets(n: int, f: int) -> list[tuple[int, ...]]:
    """Facets of the boundary of the cyclic polytope C(n, f) by Gale's evenness condition."""
    out = []
    for s in combinations(range(n), f):
        members = set(s)
        ok = True
        for a, b in combinations([v for v in range(n) if v not in members], 2):
            if sum(1 for v in s if a < v < b) % 2:
                ok = False
                break
        if ok:
            out.append(s)
    return out


def cyclic_boundary(n: int, f: int) -> SimplicialComplex:
    if f < 2 or n < f + 1:
        raise ParameterRange(f"cyclic_boundary needs f >= 2 and n >= f+1, got n={n}, f={f}")
    return _make(n, gale_facets(n, f))


def cyclic_dual(d: int, q: int) -> SimplicialComplex:
    """Alexander dual of ∂C(2d-q+2, 2(d-q+1))."""
    if not 2 <= q <= d:
        raise ParameterRange(f"cyclic_dual needs 2 <= q <= d, got d={d}, q={q}")
    return cyclic_boundary(2 * d - q + 2, 2 * (d - q + 1)).alexander_dual()


def bruns_hibi(n: int) -> SimplicialComplex:
    """Triangles ``{i, i+1, i+2m}`` mod ``n`` for ``m = 1..(n-2)/2``."""
    if n < 6 or n % 2:
        raise ParameterRange(f"bruns_hibi needs an even n >= 6, got {n}")
    facets = [
        (i % n, (i + 1) % n, (i + 2 * m) % n)
        for i in range(n)
        for m in range(1, (n - 2) // 2 + 1)
    ]
    return _make(n, facets)


def bruns_hibi_dual(n: int) -> SimplicialComplex:
    return bruns_hibi(n).alexander_dual()


_RP2 = [
    (1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 6), (1, 4, 5),
    (2, 3, 4), (2, 3, 5), (2, 4, 6), (3, 5, 6), (4, 5, 6),
]


def rp2() -> SimplicialComplex:
    """Six-vertex real projective plane."""
    return _make(6, [[v - 1 for v in f] for f in _RP2])


def moebius() -> SimplicialComplex:
    """``rp2()`` without the triangle {4,5,6} (0-based {3,4,5})."""
    return _make(6, [[v - 1 for v in f] for f in _RP2 if f != (4, 5, 6)])


# -- registry used by the CLI ----------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[str, ...]
    build: Callable[..., SimplicialComplex]


FAMILIES: dict[str, FamilySpec] = {
    spec.name: spec
    for spec in [
        FamilySpec("skeleton", ("n", "d"), skeleton_complex),
        FamilySpec("max-embdim-cm", ("c", "d"), max_embdim_cm),
        FamilySpec("disjoint-union-q2", ("c", "d", "h"), disjoint_union_q2),
        FamilySpec("hibi-cycle", ("d",), hibi_cycle),
        FamilySpec("terai", ("n",), terai_complex),
        FamilySpec("hanano", ("n",), hanano),
        FamilySpec("cyclic-boundary", ("n", "f"), cyclic_boundary),
        FamilySpec("cyclic-dual", ("d", "q"), cyclic_dual),
        FamilySpec("bruns-hibi", ("n",), bruns_hibi),
        FamilySpec("bruns-hibi-dual", ("n",), bruns_hibi_dual),
        FamilySpec("rp2", (), rp2),
        FamilySpec("moebius", (), moebius),
    ]
}


def generate(name: str, *params: int) -> SimplicialComplex:
    spec = FAMILIES.get(name)
    if spec is None:
        raise ParameterRange(f"unknown family {name!r}; choose from {sorted(FAMILIES)}")
    if len(params) != len(spec.params):
        raise ParameterRange(f"{name} takes parameters {spec.params}, got {len(params)} values")
    return spec.build(*params)


# -- corpus -----------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    complex: SimplicialComplex
    tags: frozenset = field(default_factory=frozenset)


def _entry(name: str, cx: SimplicialComplex, *tags: str) -> CorpusEntry:
    return CorpusEntry(name, cx, frozenset(tags))


def corpus() -> list[CorpusEntry]:
    """Every named family at small parameters plus perturbations that break minimal multiplicity."""
    d5 = hibi_cycle(3)
    out = [
        _entry("hibi_cycle(3)", d5, "minmult"),
        _entry("hibi_cycle(4)", hibi_cycle(4), "minmult"),
        _entry("hibi_cycle(5)", hibi_cycle(5), "minmult"),
    ]
    out += [_entry(f"hanano({n})", hanano(n), "minmult" if n % 3 != 1 else "maxhom") for n in range(5, 10)]
    out += [_entry(f"terai({n})", terai_complex(n), "minmult") for n in (5, 6, 8, 9)]
    out += [
        _entry("rp2", rp2(), "char2"),
        _entry("moebius", moebius(), "perturbed"),
    ]
    for d, q in [(3, 2), (3, 3), (4, 3), (4, 4), (5, 4)]:
        out.append(_entry(f"cyclic_dual({d},{q})", cyclic_dual(d, q), "minmult"))
    out += [
        _entry("cyclic_boundary(6,4)", cyclic_boundary(6, 4), "cm"),
        _entry("bruns_hibi_dual(6)", bruns_hibi_dual(6), "minmult"),
        _entry("bruns_hibi_dual(8)", bruns_hibi_dual(8), "minmult"),
        _entry("bruns_hibi(6)", bruns_hibi(6), "cm"),
        _entry("skeleton(5,3)", skeleton_complex(5, 3), "cm"),
        _entry("skeleton(6,2)", skeleton_complex(6, 2), "cm"),
        _entry("max_embdim_cm(2,3)", max_embdim_cm(2, 3), "cm", "perturbed"),
        _entry("disjoint_union_q2(3,3,1)", disjoint_union_q2(3, 3, 1), "minmult"),
        _entry("disjoint_union_q2(7,3,2)", disjoint_union_q2(7, 3, 2), "perturbed"),
        # perturbations: one extra facet destroys minimal multiplicity
        _entry("hibi_cycle(3)+{0,1,3}", d5.with_facets([(0, 1, 3)]), "perturbed"),
        _entry("hanano(6)+{0,1,3}", hanano(6).with_facets([(0, 1, 3)]), "perturbed"),
        _entry("hibi_cycle(4)+{0,1,2,4}", hibi_cycle(4).with_facets([(0, 1, 2, 4)]), "perturbed"),
        # not pure, so not Buchsbaum
        _entry("triangle+edge", SimplicialComplex.from_facets(5, [(0, 1, 2), (3, 4)]), "nonpure"),
    ]
    return out


def corpus_names() -> list[str]:
    return [e.name for e in corpus()]
