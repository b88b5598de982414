import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from siltglue.tube import (Arc, TubeCtx, arc_sort_key, crossings,
                           dump_collection, enumerate_maximal_rigid,
                           ext_dim_arcs, extension_middle, hom_dim_arcs,
                           is_maximal_rigid, is_rigid, load_collection,
                           normalize, parse_arc, quotient_arcs, render_arc,
                           rigid_candidates, socle, subobject_arcs, tau_arc,
                           tau_arc_inverse, top, translation_quiver,
                           translation_quiver_dot)

N3 = TubeCtx(3)


# -- normalization and grammar ------------------------------------------------


def test_normalize():
    assert normalize(Arc(3, 5), N3) == Arc(0, 2)
    assert normalize(Arc(0, 2), N3) == Arc(0, 2)
    assert normalize(Arc(-1, None), N3) == Arc(2, None)
    with pytest.raises(ValueError):
        normalize(Arc(0, 1), N3)


def test_arc_grammar():
    assert parse_arc("[0,2]") == Arc(0, 2)
    assert parse_arc("[3,inf)") == Arc(3, None)
    assert render_arc(Arc(0, 2)) == "[0,2]"
    assert render_arc(Arc(3, None)) == "[3,inf)"
    with pytest.raises(ValueError):
        parse_arc("(0,2)")


def test_collection_files_round_trip():
    arcs = [Arc(0, 2), Arc(0, None)]
    text = dump_collection(arcs, N3)
    ctx, back = load_collection(text)
    assert ctx == N3 and set(back) == set(arcs)
    assert text.splitlines()[0] == "tube rank=3"


# -- crossings ---------------------------------------------------------------


def test_no_self_crossing_for_short_arcs():
    for n in (2, 3, 4):
        ctx = TubeCtx(n)
        for l in range(1, n):
            a = Arc(0, 1 + l)
            assert crossings(a, a, ctx) == (0, 0)


def test_adjacent_simples_cross_once():
    assert ext_dim_arcs(Arc(1, 3), Arc(0, 2), N3) == 1
    assert ext_dim_arcs(Arc(0, 2), Arc(1, 3), N3) == 0


def test_pruefer_arcs_mutually_noncrossing():
    ctx = TubeCtx(2)
    a, b = Arc(0, None), Arc(1, None)
    assert ext_dim_arcs(a, b, ctx) == 0
    assert ext_dim_arcs(b, a, ctx) == 0
    assert ext_dim_arcs(a, a, ctx) == 0


def test_long_arc_self_extension():
    # one full winding plus one: the arc overlaps itself
    assert ext_dim_arcs(Arc(0, 4), Arc(0, 4), TubeCtx(2)) >= 1


def test_rank_one_simple_self_extension():
    ctx = TubeCtx(1)
    assert ext_dim_arcs(Arc(0, 2), Arc(0, 2), ctx) == 1
    assert hom_dim_arcs(Arc(0, 2), Arc(0, 2), ctx) == 1
    assert hom_dim_arcs(Arc(0, 3), Arc(0, 3), ctx) == 2


def test_pruefer_against_finite():
    # extensions from a Pruefer arc count the socle passages of the window
    ctx = TubeCtx(3)
    assert ext_dim_arcs(Arc(1, None), Arc(0, 2), ctx) == 1
    assert ext_dim_arcs(Arc(0, None), Arc(0, 2), ctx) == 0
    # no extensions into a Pruefer arc from a finite one
    assert ext_dim_arcs(Arc(0, 2), Arc(1, None), ctx) == 0


def test_hom_examples():
    assert hom_dim_arcs(Arc(0, 2), Arc(0, 3), N3) == 1
    assert hom_dim_arcs(Arc(0, 2), Arc(1, 3), N3) == 0
    assert hom_dim_arcs(Arc(0, 2), Arc(0, 2), N3) == 1
    with pytest.raises(ValueError):
        hom_dim_arcs(Arc(0, None), Arc(0, 2), N3)


# -- translate ----------------------------------------------------------------


def test_tau_examples():
    assert tau_arc(Arc(1, 3), N3) == Arc(0, 2)
    assert tau_arc(Arc(0, None), TubeCtx(4)) == Arc(3, None)
    a = Arc(0, 4)
    assert tau_arc_inverse(tau_arc(a, N3), N3) == a


def test_tau_periodicity():
    for n in (1, 2, 3, 4):
        ctx = TubeCtx(n)
        for a in (Arc(0, 2), Arc(0, n + 2), Arc(0, None)):
            out = a
            for _ in range(n):
                out = tau_arc(out, ctx)
            assert out == normalize(a, ctx)


# -- socle, top, filtration ---------------------------------------------------


def test_socle_top():
    assert socle(Arc(0, 4)) == Arc(0, 2)
    assert top(Arc(0, 4)) == Arc(2, 4)
    assert socle(Arc(1, 3)) == Arc(1, 3)
    with pytest.raises(ValueError):
        top(Arc(0, None))


def test_subobjects_and_quotients():
    assert subobject_arcs(Arc(0, 4), TubeCtx(5)) == [Arc(0, 2), Arc(0, 3),
                                                     Arc(0, 4)]
    assert quotient_arcs(Arc(0, 4), TubeCtx(5)) == [Arc(0, 4), Arc(1, 4),
                                                    Arc(2, 4)]
    assert subobject_arcs(Arc(0, 2), TubeCtx(5)) == [Arc(0, 2)]


def test_pruefer_subquotients():
    ctx = TubeCtx(2)
    subs = subobject_arcs(Arc(0, None), ctx, max_len=3)
    assert Arc(0, 2) in subs and Arc(0, None) in subs
    with pytest.raises(ValueError):
        subobject_arcs(Arc(0, None), ctx)
    quots = quotient_arcs(Arc(0, None), ctx)
    assert set(quots) == {Arc(0, None), Arc(1, None)}


# -- extensions ---------------------------------------------------------------


def test_extension_middle_degenerate():
    assert extension_middle(Arc(1, 3), Arc(0, 2), N3) == [Arc(0, 3)]


def test_extension_middle_general():
    ctx = TubeCtx(7)
    mids = extension_middle(Arc(2, 6), Arc(0, 4), ctx)
    assert mids == [Arc(0, 6), Arc(2, 4)]


def test_extension_middle_length_additivity():
    samples = [(N3, Arc(1, 3), Arc(0, 2)), (TubeCtx(7), Arc(2, 6), Arc(0, 4)),
               (TubeCtx(4), Arc(1, 4), Arc(0, 3))]
    for ctx, a, b in samples:
        mids = extension_middle(a, b, ctx)
        assert sum(m.length() for m in mids) == a.length() + b.length()


def test_extension_middle_requires_unique_class():
    with pytest.raises(ValueError, match="unique"):
        extension_middle(Arc(0, 2), Arc(1, 3), N3)


# -- rigidity -----------------------------------------------------------------


def test_rigid_socle_chain():
    assert is_rigid([Arc(0, 2), Arc(0, 3)], N3)


def test_all_simples_not_rigid():
    for n in (2, 3, 4):
        ctx = TubeCtx(n)
        simples = [Arc(i, i + 2) for i in range(n)]
        assert not is_rigid(simples, ctx)


def test_all_pruefers_maximal_rigid():
    for n in (1, 2, 3, 4):
        ctx = TubeCtx(n)
        pruefers = [Arc(i, None) for i in range(n)]
        assert is_maximal_rigid(pruefers, ctx)


def test_enumerate_rank_one():
    assert enumerate_maximal_rigid(TubeCtx(1), 3, True) == [[Arc(0, None)]]
    assert enumerate_maximal_rigid(TubeCtx(1), 3, False) == []


def test_enumerate_rank_two_finite_matches_brute_force():
    ctx = TubeCtx(2)
    colls = enumerate_maximal_rigid(ctx, 2, False)
    cands = rigid_candidates(ctx, 2, False)
    brute = []
    for size in range(1, len(cands) + 1):
        for sub in itertools.combinations(cands, size):
            if is_rigid(sub, ctx) and not any(
                    c not in sub and is_rigid(list(sub) + [c], ctx)
                    for c in cands):
                brute.append(sorted(sub, key=arc_sort_key))
    key = lambda coll: tuple(arc_sort_key(a) for a in coll)
    assert sorted(colls, key=key) == sorted(brute, key=key)
    assert len(colls) == 2


def test_enumerated_collections_are_maximal_rigid():
    for n in (2, 3, 4):
        ctx = TubeCtx(n)
        for coll in enumerate_maximal_rigid(ctx, 2 * n, True):
            assert is_maximal_rigid(coll, ctx)


# -- translation quiver --------------------------------------------------------


def test_translation_quiver_small():
    verts, arrows, tau_edges = translation_quiver(TubeCtx(2), 2)
    assert len(verts) == 4  # two simples and two length-two arcs
    assert len(tau_edges) == 4
    names = {render_arc(v) for v in verts}
    assert names == {"[0,2]", "[1,3]", "[0,3]", "[1,4]"}


def test_translation_quiver_translate_property():
    for n, max_len in ((2, 3), (3, 4)):
        ctx = TubeCtx(n)
        verts, arrows, _ = translation_quiver(ctx, max_len)
        count = {}
        for a, b in arrows:
            count[(a, b)] = count.get((a, b), 0) + 1
        for a in verts:
            for b in verts:
                ta = tau_arc(a, ctx)
                assert count.get((b, a), 0) == count.get((ta, b), 0), (a, b)


def test_translation_quiver_dot_shape():
    out = translation_quiver_dot(TubeCtx(2), 2)
    assert out.startswith("digraph tube {")
    assert '"[0,2]" -> "[0,3]";' in out
    assert 'style=dashed' in out
    assert out.endswith("}\n")


# -- property tests ------------------------------------------------------------


arcs_finite = st.builds(Arc,
                        st.integers(min_value=-6, max_value=6),
                        st.integers(min_value=0, max_value=12))
ranks = st.integers(min_value=1, max_value=5)


def _fix(a: Arc) -> Arc:
    return Arc(a.start, a.start + 2 + (a.end or 0))


@given(ranks, arcs_finite, arcs_finite)
@settings(max_examples=150, deadline=None)
def test_crossing_symmetry(n, a, b):
    ctx = TubeCtx(n)
    a, b = _fix(a), _fix(b)
    pos_ab, neg_ab = crossings(a, b, ctx)
    pos_ba, neg_ba = crossings(b, a, ctx)
    assert pos_ab == neg_ba
    assert neg_ab == pos_ba


@given(ranks, arcs_finite, arcs_finite)
@settings(max_examples=150, deadline=None)
def test_serre_duality_loop(n, a, b):
    ctx = TubeCtx(n)
    a, b = _fix(a), _fix(b)
    assert ext_dim_arcs(a, b, ctx) == hom_dim_arcs(b, tau_arc(a, ctx), ctx)


@given(ranks, arcs_finite)
@settings(max_examples=100, deadline=None)
def test_tau_invariance_of_crossings(n, a):
    ctx = TubeCtx(n)
    a = _fix(a)
    b = Arc(a.start + 1, a.end + 2)
    assert ext_dim_arcs(a, b, ctx) == ext_dim_arcs(tau_arc(a, ctx),
                                                   tau_arc(b, ctx), ctx)
