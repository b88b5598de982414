import pytest

from siltglue.expansion import (ExpansionSpec, parse_expansion_spec,
                                push_forward, reduce_left, reduce_right)
from siltglue.tube import (Arc, TubeCtx, ext_dim_arcs, hom_dim_arcs, normalize,
                           render_arc, subobject_arcs, tau_arc)


def spec34():
    return ExpansionSpec(4, Arc(1, 3))


def test_spec_validation():
    with pytest.raises(ValueError, match="rank at least 2"):
        ExpansionSpec(1, Arc(0, 2))
    with pytest.raises(ValueError, match="simple"):
        ExpansionSpec(3, Arc(0, 3))
    s = ExpansionSpec(3, Arc(4, 6))
    assert s.lambda_arc == Arc(1, 3)


def test_spec_grammar():
    s = parse_expansion_spec("expand rank=4 lambda=[1,3]")
    assert s.n == 4 and s.lambda_arc == Arc(1, 3)
    with pytest.raises(ValueError):
        parse_expansion_spec("expand lambda=[1,3]")


def test_rho_is_translate():
    s = spec34()
    assert s.rho_arc == tau_arc(s.lambda_arc, s.big)


def test_merged_simple_pushes_to_the_extension():
    # the image of the merged simple is the length-two arc with socle the
    # translate and top the chosen simple
    s = spec34()
    sbar = Arc(s.sbar_factor - 1, s.sbar_factor + 1)
    image = push_forward(s, sbar)
    assert image == Arc(0, 3)
    assert image.length() == 2


def test_untouched_simples_push_to_simples():
    s = spec34()
    # reduced rank-3 simples away from the merge position
    for red in (Arc(1, 3), Arc(2, 4)):
        image = push_forward(s, red)
        assert image.length() == 1


def test_reduce_left_examples():
    s = spec34()
    assert reduce_left(s, s.lambda_arc) is None
    assert reduce_left(s, s.rho_arc) == Arc(s.sbar_factor - 1,
                                            s.sbar_factor + 1)
    # a simple away from the pair keeps its identity
    out = reduce_left(s, Arc(2, 4))
    assert out is not None and out.length() == 1


def test_reduce_right_examples():
    s = spec34()
    assert reduce_right(s, s.rho_arc) is None
    assert reduce_right(s, s.lambda_arc) == Arc(s.sbar_factor - 1,
                                                s.sbar_factor + 1)


def test_length_additivity_of_push():
    for n in (3, 4, 5):
        for lstart in range(n):
            s = ExpansionSpec(n, Arc(lstart, lstart + 2))
            red = s.reduced
            for start in range(n - 1):
                for l in range(1, 2 * n):
                    a = Arc(start, start + 1 + l)
                    image = push_forward(s, a)
                    passages = sum(
                        1 for t in range(a.start + 1, a.end)
                        if t % (n - 1) == s.sbar_factor % (n - 1))
                    assert image.length() == a.length() + passages


def test_adjoints_invert_push():
    for n in (2, 3, 4, 5):
        red = TubeCtx(n - 1)
        for lstart in range(n):
            s = ExpansionSpec(n, Arc(lstart, lstart + 2))
            arcs = [Arc(st, st + 1 + l)
                    for st in range(n - 1) for l in range(1, 2 * n + 1)]
            arcs += [Arc(st, None) for st in range(n - 1)]
            for a in arcs:
                pa = push_forward(s, a)
                assert reduce_left(s, pa) == normalize(a, red)
                assert reduce_right(s, pa) == normalize(a, red)


def test_push_lands_in_right_perpendicular():
    for n in (2, 3, 4, 5):
        for lstart in range(n):
            s = ExpansionSpec(n, Arc(lstart, lstart + 2))
            lam = s.lambda_arc
            for st in range(n - 1):
                for l in range(1, 2 * n + 1):
                    pa = push_forward(s, Arc(st, st + 1 + l))
                    assert hom_dim_arcs(lam, pa, s.big) == 0
                    assert ext_dim_arcs(lam, pa, s.big) == 0
                pa = push_forward(s, Arc(st, None))
                assert pa.start % n != lam.start % n  # socle differs
                assert ext_dim_arcs(lam, pa, s.big) == 0


def test_push_preserves_subobject_chains():
    s = spec34()
    a = Arc(0, 4)
    pa = push_forward(s, a)
    images = {render_arc(push_forward(s, sub))
              for sub in subobject_arcs(a, s.reduced)}
    targets = {render_arc(x) for x in subobject_arcs(pa, s.big)}
    assert images <= targets


def test_pruefer_reduction_collides_across_the_pair():
    # the two Pruefer arcs over the merged pair reduce to the same arc
    s = spec34()
    lam_socle = s.lambda_arc.start
    p_lam = Arc(lam_socle, None)
    p_next = Arc(lam_socle + 1, None)
    assert reduce_left(s, p_lam) == reduce_left(s, p_next)
