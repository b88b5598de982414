"""Two-term complexes of projectives over the Kronecker algebra.

A complex lives in degrees -1 and 0; each term is a finite sum
P1^a + P2^b of the two indecomposable projectives and the differential is
a morphism between such sums.  Morphisms are stored blockwise: scalar
blocks P1 -> P1 and P2 -> P2, and an arrow-pair block P1 -> P2 (the space
Hom(P1, P2) is two-dimensional, spanned by the arrows); Hom(P2, P1) = 0.

Derived Hom spaces between complexes, and against module stalks, are
homotopy computations carried out by exact linear algebra on flattened
block coordinates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactlin import Mat, QONE, QZERO, kernel_basis, rank, rref
from .kronecker import DimVector, ExplicitRep, hom_basis

# ---------------------------------------------------------------------------
# sums of projectives and morphisms between them
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProjSum:
    """P1^p1 + P2^p2."""

    p1: int
    p2: int

    def __post_init__(self):
        if self.p1 < 0 or self.p2 < 0:
            raise ValueError("multiplicities must be nonnegative")

    def dim(self) -> DimVector:
        return DimVector(self.p2, self.p1 + 2 * self.p2)

    def is_zero(self) -> bool:
        return self.p1 == 0 and self.p2 == 0

    def rep(self) -> ExplicitRep:
        """Explicit representation; vertex-2 coordinates are laid out as
        [P1 generators | P2 alpha socle | P2 beta socle]."""
        a, b = self.p1, self.p2
        d1, d2 = b, a + 2 * b
        ma = [[QZERO] * d2 for _ in range(d1)]
        mb = [[QZERO] * d2 for _ in range(d1)]
        for i in range(b):
            ma[i][a + i] = QONE
            mb[i][a + b + i] = QONE
        return ExplicitRep(DimVector(d1, d2),
                           Mat.from_rows(ma, cols=d2) if d1 else Mat(0, d2, ()),
                           Mat.from_rows(mb, cols=d2) if d1 else Mat(0, d2, ()))


def _two_block(ul: Mat, ur: Mat, lr: Mat, rows: int, cols: int) -> Mat:
    """[[ul, ur], [0, lr]] with zero lower-left block."""
    out = [[QZERO] * cols for _ in range(rows)]
    for i in range(ul.rows):
        for j in range(ul.cols):
            out[i][j] = ul.at(i, j)
        for j in range(ur.cols):
            out[i][ul.cols + j] = ur.at(i, j)
    for i in range(lr.rows):
        for j in range(lr.cols):
            out[ul.rows + i][ul.cols + j] = lr.at(i, j)
    return Mat.from_rows(out, cols=cols) if rows else Mat(0, cols, ())


def _block_diag(mats: Sequence[Mat], rows: int, cols: int) -> Mat:
    out = [[QZERO] * cols for _ in range(rows)]
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            for j in range(m.cols):
                out[r0 + i][c0 + j] = m.at(i, j)
        r0 += m.rows
        c0 += m.cols
    return Mat.from_rows(out, cols=cols) if rows else Mat(0, cols, ())


def _vstack_blocks(mats: Sequence[Mat], cols: int) -> Mat:
    rows = []
    for m in mats:
        rows.extend(m.to_rows())
    return Mat.from_rows(rows, cols=cols) if rows else Mat(0, cols, ())


@dataclass(frozen=True)
class ProjMorphism:
    """Morphism P1^a + P2^b -> P1^c + P2^d in block form.

    s11: a x c scalars, s22: b x d scalars, arr_a / arr_b: a x d arrow
    coefficients (the P1 -> P2 block); the P2 -> P1 block is always zero.
    """

    src: ProjSum
    dst: ProjSum
    s11: Mat
    s22: Mat
    arr_a: Mat
    arr_b: Mat

    def __post_init__(self):
        a, b = self.src.p1, self.src.p2
        c, d = self.dst.p1, self.dst.p2
        if (self.s11.rows, self.s11.cols) != (a, c):
            raise ValueError("s11 block shape mismatch")
        if (self.s22.rows, self.s22.cols) != (b, d):
            raise ValueError("s22 block shape mismatch")
        for m in (self.arr_a, self.arr_b):
            if (m.rows, m.cols) != (a, d):
                raise ValueError("arrow block shape mismatch")

    @staticmethod
    def zero(src: ProjSum, dst: ProjSum) -> "ProjMorphism":
        return ProjMorphism(src, dst,
                            Mat.zeros(src.p1, dst.p1), Mat.zeros(src.p2, dst.p2),
                            Mat.zeros(src.p1, dst.p2), Mat.zeros(src.p1, dst.p2))

    @staticmethod
    def identity(s: ProjSum) -> "ProjMorphism":
        return ProjMorphism(s, s, Mat.identity(s.p1), Mat.identity(s.p2),
                            Mat.zeros(s.p1, s.p2), Mat.zeros(s.p1, s.p2))

    def then(self, other: "ProjMorphism") -> "ProjMorphism":
        """Composition, self followed by other."""
        if self.dst != other.src:
            raise ValueError("composition shape mismatch")
        return ProjMorphism(
            self.src, other.dst,
            self.s11.mul(other.s11),
            self.s22.mul(other.s22),
            self.s11.mul(other.arr_a).add(self.arr_a.mul(other.s22)),
            self.s11.mul(other.arr_b).add(self.arr_b.mul(other.s22)))

    def add(self, other: "ProjMorphism") -> "ProjMorphism":
        return ProjMorphism(self.src, self.dst,
                            self.s11.add(other.s11), self.s22.add(other.s22),
                            self.arr_a.add(other.arr_a),
                            self.arr_b.add(other.arr_b))

    def scale(self, c) -> "ProjMorphism":
        return ProjMorphism(self.src, self.dst, self.s11.scale(c),
                            self.s22.scale(c), self.arr_a.scale(c),
                            self.arr_b.scale(c))

    def is_zero(self) -> bool:
        return (self.s11.is_zero() and self.s22.is_zero()
                and self.arr_a.is_zero() and self.arr_b.is_zero())

    def flat(self) -> tuple:
        return (self.s11.entries + self.s22.entries
                + self.arr_a.entries + self.arr_b.entries)

    def rep_morphism(self) -> tuple:
        """The morphism as a matrix pair (f1, f2) between the explicit
        representations of src and dst."""
        a, b = self.src.p1, self.src.p2
        c, d = self.dst.p1, self.dst.p2
        f1 = self.s22
        rows2 = [[QZERO] * (c + 2 * d) for _ in range(a + 2 * b)]
        for i in range(a):
            for j in range(c):
                rows2[i][j] = self.s11.at(i, j)
            for j in range(d):
                rows2[i][c + j] = self.arr_a.at(i, j)
                rows2[i][c + d + j] = self.arr_b.at(i, j)
        for i in range(b):
            for j in range(d):
                rows2[a + i][c + j] = self.s22.at(i, j)
                rows2[a + b + i][c + d + j] = self.s22.at(i, j)
        f2 = Mat.from_rows(rows2, cols=c + 2 * d) if rows2 else Mat(0, c + 2 * d, ())
        return f1, f2


def morphism_space_dim(src: ProjSum, dst: ProjSum) -> int:
    return src.p1 * dst.p1 + src.p2 * dst.p2 + 2 * src.p1 * dst.p2


def morphism_from_flat(src: ProjSum, dst: ProjSum, flat: Sequence) -> ProjMorphism:
    a, b, c, d = src.p1, src.p2, dst.p1, dst.p2
    n11, n22, narr = a * c, b * d, a * d
    flat = tuple(flat)
    if len(flat) != n11 + n22 + 2 * narr:
        raise ValueError("flat vector length mismatch")
    return ProjMorphism(
        src, dst,
        Mat(a, c, flat[:n11]),
        Mat(b, d, flat[n11:n11 + n22]),
        Mat(a, d, flat[n11 + n22:n11 + n22 + narr]),
        Mat(a, d, flat[n11 + n22 + narr:]))


def morphism_basis(src: ProjSum, dst: ProjSum) -> list:
    """Standard basis of Hom(src, dst) in the flat block coordinates."""
    n = morphism_space_dim(src, dst)
    return [morphism_from_flat(src, dst,
                               tuple(QONE if i == t else QZERO for i in range(n)))
            for t in range(n)]


# ---------------------------------------------------------------------------
# complexes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwoTermComplex:
    """deg_m1 --diff--> deg_0, concentrated in degrees -1 and 0."""

    deg_m1: ProjSum
    deg_0: ProjSum
    diff: ProjMorphism

    def __post_init__(self):
        if self.diff.src != self.deg_m1 or self.diff.dst != self.deg_0:
            raise ValueError("differential does not match the terms")

    def is_zero(self) -> bool:
        return self.deg_m1.is_zero() and self.deg_0.is_zero()


def stalk_complex(s: ProjSum) -> TwoTermComplex:
    """s placed in degree 0."""
    z = ProjSum(0, 0)
    return TwoTermComplex(z, s, ProjMorphism.zero(z, s))


def shifted_projective(which: int, mult: int = 1) -> TwoTermComplex:
    """P1^mult or P2^mult placed in degree -1 (the [1]-shift of a stalk)."""
    s = ProjSum(mult, 0) if which == 1 else ProjSum(0, mult)
    z = ProjSum(0, 0)
    return TwoTermComplex(s, z, ProjMorphism.zero(s, z))


def zero_complex() -> TwoTermComplex:
    return stalk_complex(ProjSum(0, 0))


def direct_sum(cs: Sequence[TwoTermComplex]) -> TwoTermComplex:
    m1 = ProjSum(sum(c.deg_m1.p1 for c in cs), sum(c.deg_m1.p2 for c in cs))
    d0 = ProjSum(sum(c.deg_0.p1 for c in cs), sum(c.deg_0.p2 for c in cs))
    diff = ProjMorphism(
        m1, d0,
        _block_diag([c.diff.s11 for c in cs], m1.p1, d0.p1),
        _block_diag([c.diff.s22 for c in cs], m1.p2, d0.p2),
        _block_diag([c.diff.arr_a for c in cs], m1.p1, d0.p2),
        _block_diag([c.diff.arr_b for c in cs], m1.p1, d0.p2))
    return TwoTermComplex(m1, d0, diff)


def power(c: TwoTermComplex, k: int) -> TwoTermComplex:
    return direct_sum([c] * k) if k else zero_complex()


# ---------------------------------------------------------------------------
# derived Hom between two-term complexes
# ---------------------------------------------------------------------------


def _span_rank(vectors: list, ncols: int) -> int:
    if not vectors or ncols == 0:
        return 0
    return rank(Mat.from_rows([list(v) for v in vectors], cols=ncols))


def _homotopy_vectors(c: TwoTermComplex, d: TwoTermComplex) -> list:
    """Flattened null-homotopic elements of Hom(c.deg_m1, d.deg_0), the
    ambient space of Hom_K(c, d[1])."""
    out = []
    for h0 in morphism_basis(c.deg_0, d.deg_0):
        out.append(c.diff.then(h0).flat())
    for hm1 in morphism_basis(c.deg_m1, d.deg_m1):
        out.append(hm1.then(d.diff).flat())
    return out


def derived_hom_dim(c: TwoTermComplex, d: TwoTermComplex, shift: int = 0) -> int:
    """dim Hom(c, d[shift]) in the homotopy category; zero for |shift| >= 2."""
    if abs(shift) >= 2:
        return 0
    if shift == 1:
        n = morphism_space_dim(c.deg_m1, d.deg_0)
        return n - _span_rank(_homotopy_vectors(c, d), n)
    if shift == 0:
        nm1 = morphism_space_dim(c.deg_m1, d.deg_m1)
        n0 = morphism_space_dim(c.deg_0, d.deg_0)
        ntgt = morphism_space_dim(c.deg_m1, d.deg_0)
        # chain maps: pairs (f_m1, f_0) with f_m1 . d_d = d_c . f_0
        constraint_rows = []
        for fm1 in morphism_basis(c.deg_m1, d.deg_m1):
            constraint_rows.append(fm1.then(d.diff).flat())
        for f0 in morphism_basis(c.deg_0, d.deg_0):
            constraint_rows.append(tuple(-x for x in c.diff.then(f0).flat()))
        cycles = (nm1 + n0) - _span_rank(constraint_rows, ntgt)
        # boundaries: (d_c . h, h . d_d) for h: c.deg_0 -> d.deg_m1
        boundary_vecs = [tuple(c.diff.then(h).flat()) + tuple(h.then(d.diff).flat())
                         for h in morphism_basis(c.deg_0, d.deg_m1)]
        return cycles - _span_rank(boundary_vecs, nm1 + n0)
    # shift == -1: morphisms c.deg_0 -> d.deg_m1 killed by both differentials
    rows = [tuple(g.then(d.diff).flat()) + tuple(c.diff.then(g).flat())
            for g in morphism_basis(c.deg_0, d.deg_m1)]
    n = morphism_space_dim(c.deg_0, d.deg_m1)
    ncols = (morphism_space_dim(c.deg_0, d.deg_0)
             + morphism_space_dim(c.deg_m1, d.deg_0))
    return n - _span_rank(rows, ncols)


def chain_map_basis_shift1(c: TwoTermComplex, d: TwoTermComplex) -> list:
    """Representatives of a basis of Hom_K(c, d[1]): canonical morphisms
    c.deg_m1 -> d.deg_0 supported at the free coordinates of the homotopy
    span."""
    n = morphism_space_dim(c.deg_m1, d.deg_0)
    span = _homotopy_vectors(c, d)
    spanmat = Mat.from_rows([list(v) for v in span], cols=n) \
        if span else Mat(0, n, ())
    _, pivots = rref(spanmat)
    pivset = set(pivots)
    out = []
    for t in range(n):
        if t in pivset:
            continue
        out.append(morphism_from_flat(
            c.deg_m1, d.deg_0,
            tuple(QONE if i == t else QZERO for i in range(n))))
    return out


def chain_endo_basis(c: TwoTermComplex) -> list:
    """Basis of the space of chain endomorphisms (not up to homotopy)."""
    nm1 = morphism_space_dim(c.deg_m1, c.deg_m1)
    ntgt = morphism_space_dim(c.deg_m1, c.deg_0)
    basis_m1 = morphism_basis(c.deg_m1, c.deg_m1)
    basis_0 = morphism_basis(c.deg_0, c.deg_0)
    cols = [fm1.then(c.diff).flat() for fm1 in basis_m1]
    cols += [tuple(-x for x in c.diff.then(f0).flat()) for f0 in basis_0]
    system = Mat.from_rows([list(v) for v in cols], cols=ntgt) \
        if cols else Mat(0, ntgt, ())
    out = []
    for vec in kernel_basis(system.transpose()):
        fm1 = _linear_combo(basis_m1, vec[:nm1], c.deg_m1, c.deg_m1)
        f0 = _linear_combo(basis_0, vec[nm1:], c.deg_0, c.deg_0)
        out.append((fm1, f0))
    return out


def _linear_combo(basis: list, coeffs, src: ProjSum, dst: ProjSum) -> ProjMorphism:
    acc = ProjMorphism.zero(src, dst)
    for b, c in zip(basis, coeffs):
        if c != 0:
            acc = acc.add(b.scale(c))
    return acc


# ---------------------------------------------------------------------------
# derived Hom against a module stalk
# ---------------------------------------------------------------------------


def hom_complex_to_module(c: TwoTermComplex, x: ExplicitRep, shift: int) -> int:
    """dim Hom(c, X[shift]) in the derived category for a module stalk X,
    shift 0 or 1.  Shift 1 is the cokernel, shift 0 the kernel, of the
    pullback along the differential on module morphisms."""
    if shift not in (0, 1):
        raise ValueError("module-stalk homs are computed at shifts 0 and 1")
    rep0 = c.deg_0.rep()
    repm1 = c.deg_m1.rep()
    d1, d2 = c.diff.rep_morphism()
    basis0 = hom_basis(rep0, x)
    nm1_total = repm1.dim.d1 * x.dim.d1 + repm1.dim.d2 * x.dim.d2
    vecs = [(d1.mul(g1)).entries + (d2.mul(g2)).entries for (g1, g2) in basis0]
    pullback_rank = _span_rank(vecs, nm1_total)
    if shift == 0:
        return len(basis0) - pullback_rank
    return len(hom_basis(repm1, x)) - pullback_rank


# ---------------------------------------------------------------------------
# cocones and universal extensions
# ---------------------------------------------------------------------------


def cocone(from_cplx: TwoTermComplex, to_cplx: TwoTermComplex,
           attach: ProjMorphism) -> TwoTermComplex:
    """Cocone of the degree-one map from_cplx -> to_cplx[1] whose only
    component is attach: from.deg_m1 -> to.deg_0; it completes the triangle
    to -> cocone -> from -> to[1]."""
    if attach.src != from_cplx.deg_m1 or attach.dst != to_cplx.deg_0:
        raise ValueError("attaching map has wrong endpoints")
    f, t = from_cplx.diff, to_cplx.diff
    m1 = ProjSum(from_cplx.deg_m1.p1 + to_cplx.deg_m1.p1,
                 from_cplx.deg_m1.p2 + to_cplx.deg_m1.p2)
    d0 = ProjSum(from_cplx.deg_0.p1 + to_cplx.deg_0.p1,
                 from_cplx.deg_0.p2 + to_cplx.deg_0.p2)
    # differential [[d_from, attach], [0, d_to]] blockwise; the arrow block
    # rows come from the P1 parts of the degree -1 terms in source order.
    s11 = _two_block(f.s11, attach.s11, t.s11, m1.p1, d0.p1)
    s22 = _two_block(f.s22, attach.s22, t.s22, m1.p2, d0.p2)

    def arrow_block(f_arr: Mat, att_arr: Mat, t_arr: Mat) -> Mat:
        out = [[QZERO] * d0.p2 for _ in range(m1.p1)]
        for i in range(f_arr.rows):
            for j in range(f_arr.cols):
                out[i][j] = f_arr.at(i, j)
            for j in range(att_arr.cols):
                out[i][f_arr.cols + j] = att_arr.at(i, j)
        for i in range(t_arr.rows):
            for j in range(t_arr.cols):
                out[f_arr.rows + i][f_arr.cols + j] = t_arr.at(i, j)
        return Mat.from_rows(out, cols=d0.p2) if m1.p1 else Mat(0, d0.p2, ())

    arr_a = arrow_block(f.arr_a, attach.arr_a, t.arr_a)
    arr_b = arrow_block(f.arr_b, attach.arr_b, t.arr_b)
    return TwoTermComplex(m1, d0, ProjMorphism(m1, d0, s11, s22, arr_a, arr_b))


def universal_extension(left: TwoTermComplex, right: TwoTermComplex) -> TwoTermComplex:
    """Cocone of the left-universal degree-one map left^I -> right[1],
    where I runs over a basis of the degree-one Hom space.  This is the
    complex-level Bongartz-style completion used by the gluing rows."""
    reps = chain_map_basis_shift1(left, right)
    k = len(reps)
    if k == 0:
        return right
    stacked = power(left, k)
    attach = ProjMorphism(
        stacked.deg_m1, right.deg_0,
        _vstack_blocks([r.s11 for r in reps], right.deg_0.p1),
        _vstack_blocks([r.s22 for r in reps], right.deg_0.p2),
        _vstack_blocks([r.arr_a for r in reps], right.deg_0.p2),
        _vstack_blocks([r.arr_b for r in reps], right.deg_0.p2))
    return cocone(stacked, right, attach)


# ---------------------------------------------------------------------------
# minimal models
# ---------------------------------------------------------------------------


def minimize(c: TwoTermComplex) -> TwoTermComplex:
    """Homotopy-minimal model: cancel every invertible scalar component of
    the differential.  Afterwards both scalar blocks vanish, so the only
    possibly nonzero block is the arrow block P1 -> P2."""
    a, b = c.deg_m1.p1, c.deg_m1.p2
    cc, d = c.deg_0.p1, c.deg_0.p2
    s11 = c.diff.s11.to_rows()
    s22 = c.diff.s22.to_rows()
    arr_a = c.diff.arr_a.to_rows()
    arr_b = c.diff.arr_b.to_rows()

    def find_pivot(rows):
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v != 0:
                    return i, j
        return None

    while True:
        piv = find_pivot(s11)
        if piv is not None:
            i, j = piv
            u = s11[i][j]
            for r in range(a):
                if r == i or s11[r][j] == 0:
                    continue
                fctr = s11[r][j] / u
                s11[r] = [x - fctr * y for x, y in zip(s11[r], s11[i])]
                arr_a[r] = [x - fctr * y for x, y in zip(arr_a[r], arr_a[i])]
                arr_b[r] = [x - fctr * y for x, y in zip(arr_b[r], arr_b[i])]
            del s11[i], arr_a[i], arr_b[i]
            s11 = [row[:j] + row[j + 1:] for row in s11]
            a -= 1
            cc -= 1
            continue
        piv = find_pivot(s22)
        if piv is not None:
            i, j = piv
            u = s22[i][j]
            for r in range(b):
                if r == i or s22[r][j] == 0:
                    continue
                fctr = s22[r][j] / u
                s22[r] = [x - fctr * y for x, y in zip(s22[r], s22[i])]
            for r in range(a):
                fa = arr_a[r][j] / u
                if fa:
                    arr_a[r] = [x - fa * y for x, y in zip(arr_a[r], s22[i])]
                fb = arr_b[r][j] / u
                if fb:
                    arr_b[r] = [x - fb * y for x, y in zip(arr_b[r], s22[i])]
            del s22[i]
            s22 = [row[:j] + row[j + 1:] for row in s22]
            arr_a = [row[:j] + row[j + 1:] for row in arr_a]
            arr_b = [row[:j] + row[j + 1:] for row in arr_b]
            b -= 1
            d -= 1
            continue
        break
    m1 = ProjSum(a, b)
    d0 = ProjSum(cc, d)
    diff = ProjMorphism(
        m1, d0,
        Mat.from_rows(s11, cols=cc) if a else Mat(0, cc, ()),
        Mat.from_rows(s22, cols=d) if b else Mat(0, d, ()),
        Mat.from_rows(arr_a, cols=d) if a else Mat(0, d, ()),
        Mat.from_rows(arr_b, cols=d) if a else Mat(0, d, ()))
    return TwoTermComplex(m1, d0, diff)


# ---------------------------------------------------------------------------
# textual grammar
# ---------------------------------------------------------------------------


def _parse_proj_sum(text: str) -> ProjSum:
    t = text.strip()
    if t == "0":
        return ProjSum(0, 0)
    p1 = p2 = 0
    for part in t.split("+"):
        m = re.fullmatch(r"\s*P([12])(?:\^(\d+))?\s*", part)
        if not m:
            raise ValueError(f"cannot parse projective sum {text!r}")
        mult = int(m.group(2) or 1)
        if m.group(1) == "1":
            p1 += mult
        else:
            p2 += mult
    return ProjSum(p1, p2)


def _render_proj_sum(s: ProjSum) -> str:
    bits = []
    if s.p1:
        bits.append("P1" if s.p1 == 1 else f"P1^{s.p1}")
    if s.p2:
        bits.append("P2" if s.p2 == 1 else f"P2^{s.p2}")
    return "+".join(bits) if bits else "0"


def parse_complex_literal(text: str) -> TwoTermComplex:
    """Complex literal `[src -> dst | rows]`: rows are ;-separated, one per
    source summand (P1 copies first), entries space-separated left to
    right over the target summands: rationals on the scalar blocks, pairs
    (a,b) of arrow coefficients on the P1 -> P2 block, and literal 0 on the
    always-zero P2 -> P1 block.  The row part is omitted when either term
    is empty."""
    import re
    from fractions import Fraction
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"complex literal must be bracketed: {text!r}")
    body = t[1:-1]
    if "|" in body:
        arrow_part, rows_part = body.split("|", 1)
    else:
        arrow_part, rows_part = body, ""
    if "->" not in arrow_part:
        raise ValueError(f"complex literal needs '->': {text!r}")
    src_txt, dst_txt = arrow_part.split("->", 1)
    src, dst = _parse_proj_sum(src_txt), _parse_proj_sum(dst_txt)
    rows = [r for r in (row.strip() for row in rows_part.split(";"))
            if r != ""]
    total_src = src.p1 + src.p2
    if src.is_zero() or dst.is_zero():
        if rows:
            raise ValueError("rows given for a stalk complex")
        return TwoTermComplex(src, dst, ProjMorphism.zero(src, dst))
    if len(rows) != total_src:
        raise ValueError(f"expected {total_src} rows, got {len(rows)}")
    entry_re = re.compile(r"\(\s*(-?\d+(?:/\d+)?)\s*,\s*(-?\d+(?:/\d+)?)\s*\)"
                          r"|(-?\d+(?:/\d+)?)")
    s11 = [[QZERO] * dst.p1 for _ in range(src.p1)]
    s22 = [[QZERO] * dst.p2 for _ in range(src.p2)]
    arr_a = [[QZERO] * dst.p2 for _ in range(src.p1)]
    arr_b = [[QZERO] * dst.p2 for _ in range(src.p1)]
    for i, row in enumerate(rows):
        cells = [m for m in entry_re.finditer(row)]
        if len(cells) != dst.p1 + dst.p2:
            raise ValueError(
                f"row {i}: expected {dst.p1 + dst.p2} entries, got {len(cells)}")
        for j, m in enumerate(cells):
            pair = m.group(1) is not None
            if i < src.p1 and j >= dst.p1:
                if not pair:
                    raise ValueError(
                        f"row {i}, entry {j}: the P1 -> P2 block takes "
                        "arrow pairs (a,b)")
                arr_a[i][j - dst.p1] = Fraction(m.group(1))
                arr_b[i][j - dst.p1] = Fraction(m.group(2))
            else:
                if pair:
                    raise ValueError(
                        f"row {i}, entry {j}: scalar block takes rationals")
                val = Fraction(m.group(3))
                if i < src.p1 and j < dst.p1:
                    s11[i][j] = val
                elif i >= src.p1 and j < dst.p1:
                    if val != 0:
                        raise ValueError("the P2 -> P1 block is forced zero")
                else:
                    s22[i - src.p1][j - dst.p1] = val
    diff = ProjMorphism(
        src, dst,
        Mat.from_rows(s11, cols=dst.p1) if src.p1 else Mat(0, dst.p1, ()),
        Mat.from_rows(s22, cols=dst.p2) if src.p2 else Mat(0, dst.p2, ()),
        Mat.from_rows(arr_a, cols=dst.p2) if src.p1 else Mat(0, dst.p2, ()),
        Mat.from_rows(arr_b, cols=dst.p2) if src.p1 else Mat(0, dst.p2, ()))
    return TwoTermComplex(src, dst, diff)


def render_complex_literal(c: TwoTermComplex) -> str:
    src, dst, d = c.deg_m1, c.deg_0, c.diff
    head = f"{_render_proj_sum(src)} -> {_render_proj_sum(dst)}"
    if src.is_zero() or dst.is_zero():
        return f"[{head}]"
    rows = []
    for i in range(src.p1):
        cells = [str(d.s11.at(i, j)) for j in range(dst.p1)]
        cells += [f"({d.arr_a.at(i, j)},{d.arr_b.at(i, j)})"
                  for j in range(dst.p2)]
        rows.append(" ".join(cells))
    for i in range(src.p2):
        cells = ["0"] * dst.p1
        cells += [str(d.s22.at(i, j)) for j in range(dst.p2)]
        rows.append(" ".join(cells))
    return f"[{head} | {'; '.join(rows)}]"
