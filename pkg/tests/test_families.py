from __future__ import annotations

import math

import pytest

from srkit.complex import SimplicialComplex, is_isomorphic
from srkit.errors import ParameterRange
from srkit.families import (
    FAMILIES,
    bruns_hibi,
    bruns_hibi_dual,
    corpus,
    corpus_names,
    cyclic_boundary,
    cyclic_dual,
    disjoint_union_q2,
    gale_facets,
    generate,
    hanano,
    hibi_cycle,
    max_embdim_cm,
    moebius,
    rp2,
    skeleton_complex,
    terai_complex,
)
from srkit.field import QQ
from srkit.homology import reduced_homology
from srkit.props import (
    has_maximal_homology,
    is_buchsbaum,
    is_cohen_macaulay,
    is_min_mult_type_q,
    q_linear,
)

from conftest import GF2


def test_skeleton():
    assert len(skeleton_complex(4, 2).facets) == 6
    sk = skeleton_complex(5, 3)
    assert len(sk.facets) == 10 and sk.indeg() == 4
    assert is_cohen_macaulay(sk, QQ) and q_linear(sk, QQ)
    with pytest.raises(ParameterRange):
        skeleton_complex(3, 3)


def test_max_embdim_and_disjoint_union():
    m = max_embdim_cm(2, 2)
    assert m.n == 4 and m.facet_list() == [(0, 3), (1, 3), (2, 3)]
    assert is_cohen_macaulay(m, QQ) and q_linear(m, QQ) and m.multiplicity() == 3
    u = disjoint_union_q2(3, 3, 1)
    assert len(u.components()) == 2 and reduced_homology(u, QQ).dim(0) == 1
    with pytest.raises(ParameterRange):
        disjoint_union_q2(2, 3, 1)


def test_hibi_cycle():
    d5 = hibi_cycle(3)
    assert d5.facet_list() == sorted([tuple(sorted({i, (i + 1) % 5, (i + 2) % 5})) for i in range(5)])
    assert is_min_mult_type_q(d5, QQ)
    h7 = hibi_cycle(4)
    assert h7.n == 7 and len(h7.facets) == 7
    tri = hibi_cycle(2)
    # the hollow triangle: its only minimal non-face is {0,1,2}
    assert tri.n == 3 and tri.indeg() == 3


def test_prime_sum_triples():
    t5 = terai_complex(5)
    assert t5.facet_list() == [(0, 1, 2), (0, 2, 3), (0, 3, 4), (1, 2, 4), (1, 3, 4)]
    assert terai_complex(6).multiplicity() == 8
    with pytest.raises(ParameterRange):
        terai_complex(4)


@pytest.mark.parametrize("n", range(5, 10))
def test_hanano_h_vectors(n):
    cx = hanano(n)
    if n % 3 != 1:
        want = (1, n - 3, (n - 2) * (n - 3) // 2, -((n - 2) * (n - 3) // 6))
        assert 3 * cx.multiplicity() == n * (n - 2)
    else:
        want = (1, n - 3, (n - 2) * (n - 3) // 2, -((n - 1) * (n - 4) // 6))
        assert 3 * cx.multiplicity() == (n - 1) ** 2
    assert tuple(cx.h_vector()) == want


def test_hanano_small_cases():
    assert hanano(5) == hibi_cycle(3)
    assert len(hanano(6).facets) == 8 and is_min_mult_type_q(hanano(6), QQ)
    h7 = hanano(7)
    assert len(h7.facets) == 12 and has_maximal_homology(h7, QQ)


def test_cyclic():
    c5 = cyclic_boundary(5, 2)
    assert len(c5.facets) == 5 and all(len(f) == 2 for f in c5.facet_list())
    assert is_isomorphic(cyclic_dual(3, 3), hibi_cycle(3))
    for d, q in [(3, 2), (4, 3), (4, 4)]:
        cx = cyclic_dual(d, q)
        assert cx.d == d and cx.indeg() == q
        assert is_buchsbaum(cx, QQ) and q_linear(cx, QQ)
        assert reduced_homology(cx, QQ).dim(q - 2) == 1


def test_gale_evenness_counts():
    # facet count of a cyclic polytope boundary with even dimension 2m: n/(n-m) C(n-m, m)
    for n, f in [(6, 2), (7, 4), (8, 4), (8, 6)]:
        m = f // 2
        assert len(gale_facets(n, f)) == n * math.comb(n - m, m) // (n - m)


def test_bruns_hibi():
    g = bruns_hibi(6)
    want = {tuple(sorted({i % 6, (i + 1) % 6, (i + k) % 6})) for i in range(6) for k in (2, 4)}
    assert set(g.facet_list()) == want
    dual = bruns_hibi_dual(6)
    assert dual.d == 3 and dual.codim == 3 and dual.multiplicity() == 8
    assert is_min_mult_type_q(dual, QQ)
    with pytest.raises(ParameterRange):
        bruns_hibi(5)


def test_rp2_and_moebius(fld):
    assert rp2().f_vector() == (1, 6, 15, 10)
    m = moebius()
    assert len(m.facets) == 9 and tuple(m.h_vector()) == (1, 3, 6, -1)
    assert is_buchsbaum(m, fld) and q_linear(m, fld)


def test_registry_and_generate():
    assert set(FAMILIES) >= {"skeleton", "hibi-cycle", "hanano", "rp2", "moebius", "cyclic-dual"}
    assert generate("hibi-cycle", 3) == hibi_cycle(3)
    assert generate("rp2") == rp2()
    with pytest.raises(ParameterRange):
        generate("nope")
    with pytest.raises(ParameterRange):
        generate("hanano")


def test_corpus_shape():
    entries = corpus()
    assert len(entries) >= 12
    assert len(set(corpus_names())) == len(entries)
    assert all(e.complex.n <= 12 for e in entries)
    assert any("perturbed" in e.tags for e in entries)


def test_perturbations_break_min_mult():
    for e in corpus():
        if "perturbed" not in e.tags or not is_buchsbaum(e.complex, QQ):
            continue
        cx = e.complex
        if 2 <= cx.indeg() <= cx.d:
            assert not is_min_mult_type_q(cx, QQ), e.name


def test_corpus_minmult_tags(fld):
    for e in corpus():
        if "minmult" in e.tags:
            assert is_min_mult_type_q(e.complex, fld), e.name
