"""Weak transformations between Gray-functors and their higher transfors.

Orientation conventions, fixed once for the whole package:

* 2-cell component of a transformation p: F -> G at f: X -> Y:
  ``p_f: comp1(Ff, p_Y) => comp1(p_X, Gf)`` (left adjoint of an adjoint
  equivalence in the hom);
* local constraint at phi: f => f' as a square,
  ``p_phi: [whisk2r(F phi, p_Y) then p_f'] ==> [p_f then whisk2l(p_X, G phi)]``;
* unitor ``p^X: id2(p_X) ==> p_{1_X}``;
* compositor at a composable pair written diagrammatically (f, g):
  ``p_(f,g): J(f, g) ==> p_{fg}`` where ``J(f, g)`` is the staircase
  ``vcomp2(whisk2l(Ff, p_g), whisk2r(p_f, Gg))``.

Note on the tabulated interchanger: pasting composites consume it in the
direction opposite to the tabulated one (the staircase of a composite
performs the later leg first), so ``inv3(gamma(...))`` below is the rule,
not an accident.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

from .graycategory import (
    GrayBase,
    Square,
    gamma_square,
    paste_h,
    paste_v,
    square,
    transpose,
    whisk_square_l,
    whisk_square_r,
)
from .homs import CellError
from .report import ValidationReport, timer


# ---------------------------------------------------------------------------
# fragments: the finite piece of a domain a datum is defined on
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Fragment:
    objects: tuple
    ones: tuple
    twos: tuple
    threes: tuple
    pairs: tuple
    triples: tuple


def tab_fragment(g) -> Fragment:
    ones = tuple(g.all_one_cells())
    pairs = tuple(
        (f, h) for f in ones for h in ones if g.one_tgt(f) == g.one_src(h)
    )
    triples = tuple(
        (f, h, k) for (f, h) in pairs for k in ones if g.one_tgt(h) == g.one_src(k)
    )
    return Fragment(
        tuple(g.obs()), ones, tuple(g.all_mors()), tuple(g.all_cells()), pairs, triples
    )


# ---------------------------------------------------------------------------
# Gray-functors with tabulated domains
# ---------------------------------------------------------------------------


@dataclass
class GrayFunctor:
    dom: GrayBase
    cod: GrayBase
    ob: dict
    one: dict
    two: dict
    three: dict
    name: str = "F"

    def F0(self, x):
        return self.ob[x]

    def F1(self, f):
        return self.one[f]

    def F2(self, a):
        return self.two[a]

    def F3(self, u):
        return self.three[u]


def identity_gray_functor(g) -> GrayFunctor:
    frag = tab_fragment(g)
    return GrayFunctor(
        g,
        g,
        {x: x for x in frag.objects},
        {f: f for f in frag.ones},
        {a: a for a in frag.twos},
        {u: u for u in frag.threes},
        name="Id",
    )


def validate_gray_functor(F: GrayFunctor, frag: Fragment | None = None) -> ValidationReport:
    rep = ValidationReport()
    with timer(rep):
        _validate_gf(F, frag or tab_fragment(F.dom), rep)
    return rep


def _validate_gf(F: GrayFunctor, frag: Fragment, rep: ValidationReport) -> None:
    dom, cod = F.dom, F.cod

    def img_of(level, cell):
        try:
            return level(cell)
        except (KeyError, CellError):
            return None

    for x in frag.objects:
        if img_of(F.F0, x) is None:
            rep.add("structure/gray-functor", (repr(x),), "object image missing")
    for f in frag.ones:
        img = img_of(F.F1, f)
        if img is None:
            rep.add("structure/gray-functor", (repr(f),), "1-cell image missing")
            continue
        if (cod.one_src(img), cod.one_tgt(img)) != (F.F0(dom.one_src(f)), F.F0(dom.one_tgt(f))):
            rep.add("structure/gray-functor", (repr(f),), "1-cell image misbound")
    for a in frag.twos:
        img = img_of(F.F2, a)
        if img is None:
            rep.add("structure/gray-functor", (repr(a),), "2-cell image missing")
            continue
        s, t = dom.mor_bound(a)
        if cod.mor_bound(img) != (F.F1(s), F.F1(t)):
            rep.add("structure/gray-functor", (repr(a),), "2-cell image misbound")
    for u in frag.threes:
        img = img_of(F.F3, u)
        if img is None:
            rep.add("structure/gray-functor", (repr(u),), "3-cell image missing")
            continue
        s, t = dom.cell_bound(u)
        if cod.cell_bound(img) != (F.F2(s), F.F2(t)):
            rep.add("structure/gray-functor", (repr(u),), "3-cell image misbound")
    if rep.is_structural():
        return
    for x in frag.objects:
        if F.F1(dom.id1(x)) != cod.id1(F.F0(x)):
            rep.add("functor-strict", (x,), "identity 1-cell not preserved")
    for f, h in frag.pairs:
        if F.F1(dom.comp1(f, h)) != cod.comp1(F.F1(f), F.F1(h)):
            rep.add("functor-strict", (f, h), "1-cell composition not preserved")
    for f in frag.ones:
        if F.F2(dom.id2(f)) != cod.id2(F.F1(f)):
            rep.add("functor-strict", (f,), "identity 2-cell not preserved")
    for a in frag.twos:
        if F.F3(dom.id3(a)) != cod.id3(F.F2(a)):
            rep.add("functor-strict", (a,), "identity 3-cell not preserved")
        for b in frag.twos:
            if dom.mor_home(a) == dom.mor_home(b) and dom.mor_tgt(a) == dom.mor_src(b):
                if F.F2(dom.vcomp2(a, b)) != cod.vcomp2(F.F2(a), F.F2(b)):
                    rep.add("functor-strict", (a, b), "vertical 2-composition not preserved")
    for u in frag.threes:
        for v in frag.threes:
            if dom.mor_home(dom.cell_src(u)) == dom.mor_home(dom.cell_src(v)) and dom.cell_tgt(u) == dom.cell_src(v):
                if F.F3(dom.vcomp3(u, v)) != cod.vcomp3(F.F3(u), F.F3(v)):
                    rep.add("functor-strict", (u, v), "vertical 3-composition not preserved")
    for f in frag.ones:
        for a in frag.twos:
            if dom.one_tgt(f) == dom.mor_home(a)[0]:
                if F.F2(dom.whisk2l(f, a)) != cod.whisk2l(F.F1(f), F.F2(a)):
                    rep.add("functor-strict", (f, a), "front whiskering not preserved")
            if dom.mor_home(a)[1] == dom.one_src(f):
                if F.F2(dom.whisk2r(a, f)) != cod.whisk2r(F.F2(a), F.F1(f)):
                    rep.add("functor-strict", (a, f), "rear whiskering not preserved")
        for u in frag.threes:
            a = dom.cell_src(u)
            if dom.one_tgt(f) == dom.mor_home(a)[0]:
                if F.F3(dom.whisk3l(f, u)) != cod.whisk3l(F.F1(f), F.F3(u)):
                    rep.add("functor-strict", (f, u), "front whiskering of 3-cells not preserved")
            if dom.mor_home(a)[1] == dom.one_src(f):
                if F.F3(dom.whisk3r(u, f)) != cod.whisk3r(F.F3(u), F.F1(f)):
                    rep.add("functor-strict", (u, f), "rear whiskering of 3-cells not preserved")
    for a in frag.twos:
        for b in frag.twos:
            if dom.mor_home(a)[1] == dom.mor_home(b)[0]:
                if F.F3(dom.gamma_of(a, b)) != cod.gamma_of(F.F2(a), F.F2(b)):
                    rep.add("functor-interchanger", (a, b), "interchanger not preserved")


# ---------------------------------------------------------------------------
# adjoint equivalences inside a hom
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdjEq:
    """left -| right with unit: id ==> left;right and counit: right;left ==> id."""

    left: object
    right: object
    unit: object
    counit: object


def adjeq_on_identity(g: GrayBase, f) -> AdjEq:
    i = g.id2(f)
    return AdjEq(i, i, g.id3(i), g.id3(i))


def adjeq_strict(g: GrayBase, mor) -> AdjEq:
    """Adjoint equivalence on a strictly invertible 2-cell with identity
    unit and counit."""
    inv = g.inv2(mor)
    return AdjEq(mor, inv, g.id3(g.vcomp2(mor, inv)), g.id3(g.vcomp2(inv, mor)))


def swap_adjeq(g: GrayBase, a: AdjEq) -> AdjEq:
    """The reverse adjoint equivalence (right -| left); an involution."""
    return AdjEq(a.right, a.left, g.inv3(a.counit), g.inv3(a.unit))


def star_mate(g: GrayBase, a1: AdjEq, a2: AdjEq, c):
    """Mate of a 3-cell c: a1.left ==> a2.left between parallel left
    adjoints: the 3-cell a2.right ==> a1.right."""
    r1, r2 = a1.right, a2.right
    return g.vcomp3_many(
        [
            g.hcomp3(g.id3(r2), a1.unit),
            g.hcomp3_many([g.id3(r2), c, g.id3(r1)]),
            g.hcomp3(a2.counit, g.id3(r1)),
        ]
    )


def square_star_mate(g: GrayBase, a1: AdjEq, a2: AdjEq, sq: Square):
    """Mate of a square whose top and bottom are the left adjoints of the
    given adjoint equivalences: the 3-cell

        vcomp2(sq.right, a2.right) ==> vcomp2(a1.right, sq.left)."""
    r1, r2 = a1.right, a2.right
    return g.vcomp3_many(
        [
            g.hcomp3(g.inv3(a1.counit), g.id3(g.vcomp2(sq.right, r2))),
            g.hcomp3_many([g.id3(r1), sq.cell, g.id3(r2)]),
            g.hcomp3_many([g.id3(r1), g.id3(sq.left), g.inv3(a2.unit)]),
        ]
    )


def whisk_adjeq(g: GrayBase, f, a: AdjEq, h) -> AdjEq:
    return AdjEq(
        g.whisk2(f, a.left, h),
        g.whisk2(f, a.right, h),
        g.whisk3(f, a.unit, h),
        g.whisk3(f, a.counit, h),
    )


def compose_adjeq(g: GrayBase, a1: AdjEq, a2: AdjEq) -> AdjEq:
    left = g.vcomp2(a1.left, a2.left)
    right = g.vcomp2(a2.right, a1.right)
    unit = g.vcomp3(
        a1.unit,
        g.hcomp3_many([g.id3(a1.left), a2.unit, g.id3(a1.right)]),
    )
    counit = g.vcomp3(
        g.hcomp3_many([g.id3(a2.right), a1.counit, g.id3(a2.left)]),
        a2.counit,
    )
    return AdjEq(left, right, unit, counit)


def validate_adjeq(g: GrayBase, a: AdjEq, rep: ValidationReport, ctx) -> None:
    s0, t0 = g.mor_bound(a.left)
    if g.mor_bound(a.right) != (t0, s0):
        rep.add("structure/adjoint-equivalence", ctx, "right adjoint misbound")
        return
    if g.cell_bound(a.unit) != (g.id2(s0), g.vcomp2(a.left, a.right)):
        rep.add("structure/adjoint-equivalence", ctx, "unit misbound")
        return
    if g.cell_bound(a.counit) != (g.vcomp2(a.right, a.left), g.id2(t0)):
        rep.add("structure/adjoint-equivalence", ctx, "counit misbound")
        return
    for u in (a.unit, a.counit):
        try:
            g.inv3(u)
        except CellError:
            rep.add("adjoint-equivalence", ctx, "unit or counit not invertible")
    t1 = g.vcomp3(
        g.hcomp3(a.unit, g.id3(a.left)),
        g.hcomp3(g.id3(a.left), a.counit),
    )
    if t1 != g.id3(a.left):
        rep.add("adjoint-equivalence", ctx, "first triangle identity fails")
    t2 = g.vcomp3(
        g.hcomp3(g.id3(a.right), a.unit),
        g.hcomp3(a.counit, g.id3(a.right)),
    )
    if t2 != g.id3(a.right):
        rep.add("adjoint-equivalence", ctx, "second triangle identity fails")


# ---------------------------------------------------------------------------
# trinatural transformations
# ---------------------------------------------------------------------------


@dataclass
class Trinatural:
    F: GrayFunctor
    G: GrayFunctor
    frag: Fragment
    ob: dict
    adj: dict
    three: dict
    unit: dict
    comp: dict
    name: str = "p"

    def pX(self, x):
        return self.ob[x]

    def padj(self, f) -> AdjEq:
        return self.adj[f]

    def pf(self, f):
        return self.adj[f].left

    def pstar(self, f):
        return self.adj[f].right

    def pphi(self, a):
        return self.three[a]

    def punit(self, x):
        return self.unit[x]

    def pcomp(self, f, h):
        return self.comp[(f, h)]

    def cod_ops(self) -> GrayBase:
        return self.F.cod

    def key(self):
        return (
            tuple(sorted(self.ob.items(), key=lambda kv: repr(kv[0]))),
            tuple(sorted(self.adj.items(), key=lambda kv: repr(kv[0]))),
            tuple(sorted(self.three.items(), key=lambda kv: repr(kv[0]))),
            tuple(sorted(self.unit.items(), key=lambda kv: repr(kv[0]))),
            tuple(sorted(self.comp.items(), key=lambda kv: repr(kv[0]))),
        )


def trinat_equal(p: Trinatural, q: Trinatural) -> bool:
    """Componentwise equality over the union of the two supports."""
    if p.frag != q.frag:
        keys_p = set(map(repr, p.ob)) | set(map(repr, p.adj))
        keys_q = set(map(repr, q.ob)) | set(map(repr, q.adj))
        if keys_p != keys_q:
            return False
    return p.key() == q.key()


def _local_square(g: GrayBase, p: Trinatural, a, F: GrayFunctor, G: GrayFunctor) -> Square:
    """The local-constraint square of ``p`` at the domain 2-cell ``a``."""
    dom = F.dom
    f, f2 = dom.mor_bound(a)
    x, y = dom.one_src(f), dom.one_tgt(f)
    return square(
        g,
        g.whisk2r(F.F2(a), p.pX(y)),
        p.pf(f2),
        p.pf(f),
        g.whisk2l(p.pX(x), G.F2(a)),
        p.pphi(a),
    )


def local_square(p: Trinatural, a) -> Square:
    return _local_square(p.cod_ops(), p, a, p.F, p.G)


def staircase(p: Trinatural, f, h):
    """J(f, h): the canonical route of ``p`` over the pair (f, h)."""
    g = p.cod_ops()
    dom = p.F.dom
    return g.vcomp2(
        g.whisk2l(p.F.F1(f), p.pf(h)),
        g.whisk2r(p.pf(f), p.G.F1(h)),
    )


def identity_trinatural(F: GrayFunctor, frag: Fragment | None = None) -> Trinatural:
    g = F.cod
    dom = F.dom
    frag = frag or tab_fragment(dom)
    ob = {x: g.id1(F.F0(x)) for x in frag.objects}
    adj = {f: adjeq_on_identity(g, F.F1(f)) for f in frag.ones}
    three = {}
    for a in frag.twos:
        f, f2 = dom.mor_bound(a)
        x, y = dom.one_src(f), dom.one_tgt(f)
        three[a] = g.id3(F.F2(a))
    unit = {x: g.id3(g.id2(g.id1(F.F0(x)))) for x in frag.objects}
    comp = {}
    for f, h in frag.pairs:
        comp[(f, h)] = g.id3(g.id2(F.F1(dom.comp1(f, h))))
    return Trinatural(F, F, frag, ob, adj, three, unit, comp, name=f"1[{F.name}]")


@dataclass(frozen=True)
class StrictnessFlags:
    unital: bool
    compositional: bool
    locally_strict: bool
    strict: bool

    @property
    def semi_strict(self) -> bool:
        return self.unital and self.compositional


def is_semistrict(p: Trinatural) -> StrictnessFlags:
    g = p.cod_ops()
    unital = all(g.is_id3(u) for u in p.unit.values())
    compositional = all(g.is_id3(u) for u in p.comp.values())
    locally = all(g.is_id3(u) for u in p.three.values()) and all(
        g.is_id3(a.unit) and g.is_id3(a.counit) for a in p.adj.values()
    )
    strict = (
        unital
        and compositional
        and locally
        and all(g.is_id2(a.left) for a in p.adj.values())
    )
    return StrictnessFlags(unital, compositional, locally, strict)


# ---------------------------------------------------------------------------
# composition of trinatural transformations
# ---------------------------------------------------------------------------


def compose_trinaturals(q: Trinatural, p: Trinatural) -> Trinatural:
    """Composite q . p of p: F -> G then q: G -> H, with the interchanger
    correction in the compositor."""
    if p.G is not q.F and p.G.name != q.F.name:
        raise CellError("trinaturals not composable")
    g = p.cod_ops()
    F, G, H = p.F, p.G, q.G
    dom = F.dom
    frag = p.frag
    ob = {x: g.comp1(p.pX(x), q.pX(x)) for x in frag.objects}
    adj = {}
    for f in frag.ones:
        x, y = dom.one_src(f), dom.one_tgt(f)
        first = whisk_adjeq(g, None, p.padj(f), q.pX(y))
        second = whisk_adjeq(g, p.pX(x), q.padj(f), None)
        adj[f] = compose_adjeq(g, first, second)
    three = {}
    for a in frag.twos:
        f, f2 = dom.mor_bound(a)
        y = dom.one_tgt(f)
        x = dom.one_src(f)
        A = whisk_square_r(g, local_square(p, a), q.pX(y))
        B = whisk_square_l(g, p.pX(x), local_square(q, a))
        three[a] = paste_v(g, A, B).cell
    unit = {}
    for x in frag.objects:
        unit[x] = g.hcomp3(
            g.whisk3r(p.punit(x), q.pX(x)),
            g.whisk3l(p.pX(x), q.punit(x)),
        )
    comp = {}
    for f, h in frag.pairs:
        x = dom.one_src(f)
        z = dom.one_tgt(h)
        Ff = F.F1(f)
        Hh = H.F1(h)
        chain0 = g.whisk2l(Ff, g.whisk2r(p.pf(h), q.pX(z)))
        chain3 = g.whisk2r(g.whisk2l(p.pX(x), q.pf(f)), Hh)
        step1 = g.hcomp3_many(
            [
                g.id3(chain0),
                g.inv3(g.gamma_of(p.pf(f), q.pf(h))),
                g.id3(chain3),
            ]
        )
        step2 = g.hcomp3(
            g.whisk3r(p.pcomp(f, h), q.pX(z)),
            g.whisk3l(p.pX(x), q.pcomp(f, h)),
        )
        comp[(f, h)] = g.vcomp3(step1, step2)
    return Trinatural(F, H, frag, ob, adj, three, unit, comp, name=f"{q.name}.{p.name}")


def composition_obstruction(q: Trinatural, p: Trinatural) -> dict:
    """The interchanger family controlling compositionality of q . p.

    Both inputs must be semi-strict; the composite is compositional exactly
    when every returned 3-cell is an identity."""
    if not is_semistrict(p).semi_strict or not is_semistrict(q).semi_strict:
        raise CellError("composition obstruction requires semi-strict inputs")
    g = p.cod_ops()
    return {
        (f, h): g.gamma_of(p.pf(f), q.pf(h))
        for (f, h) in p.frag.pairs
    }


# ---------------------------------------------------------------------------
# trimodifications
# ---------------------------------------------------------------------------


@dataclass
class Trimodification:
    p: Trinatural
    q: Trinatural
    ob: dict
    three: dict
    name: str = "s"

    def sX(self, x):
        return self.ob[x]

    def sf(self, f):
        return self.three[f]

    def cod_ops(self) -> GrayBase:
        return self.p.cod_ops()

    def key(self):
        return (
            tuple(sorted(self.ob.items(), key=lambda kv: repr(kv[0]))),
            tuple(sorted(self.three.items(), key=lambda kv: repr(kv[0]))),
        )


def trimod_square(s: Trimodification, f) -> Square:
    g = s.cod_ops()
    p, q = s.p, s.q
    dom = p.F.dom
    x, y = dom.one_src(f), dom.one_tgt(f)
    return square(
        g,
        p.pf(f),
        g.whisk2r(s.sX(x), p.G.F1(f)),
        g.whisk2l(p.F.F1(f), s.sX(y)),
        q.pf(f),
        s.sf(f),
    )


def identity_trimodification(p: Trinatural) -> Trimodification:
    g = p.cod_ops()
    ob = {x: g.id2(p.pX(x)) for x in p.frag.objects}
    three = {f: g.id3(p.pf(f)) for f in p.frag.ones}
    return Trimodification(p, p, ob, three, name=f"1[{p.name}]")


def trimod_vcompose(t: Trimodification, s: Trimodification) -> Trimodification:
    """Composite of s: p => q then t: q => r."""
    g = s.cod_ops()
    ob = {x: g.vcomp2(s.sX(x), t.sX(x)) for x in s.p.frag.objects}
    three = {}
    for f in s.p.frag.ones:
        three[f] = paste_v(g, trimod_square(s, f), trimod_square(t, f)).cell
    return Trimodification(s.p, t.q, ob, three, name=f"{t.name}.{s.name}")


def invert_square(g: GrayBase, s: Square) -> Square:
    l_inv = g.inv2(s.left)
    r_inv = g.inv2(s.right)
    cell = g.hcomp3_many([g.id3(l_inv), g.inv3(s.cell), g.id3(r_inv)])
    return square(g, s.bottom, r_inv, l_inv, s.top, cell)


def trimod_invert(s: Trimodification) -> Trimodification:
    g = s.cod_ops()
    ob = {x: g.inv2(s.sX(x)) for x in s.ob}
    three = {f: invert_square(g, trimod_square(s, f)).cell for f in s.three}
    return Trimodification(s.q, s.p, ob, three, name=f"{s.name}^-1")


def trimod_is_invertible(s: Trimodification) -> bool:
    g = s.cod_ops()
    try:
        for c in s.ob.values():
            g.inv2(c)
        for c in s.three.values():
            g.inv3(c)
    except CellError:
        return False
    return True


def trimod_is_costrict(s: Trimodification) -> bool:
    g = s.cod_ops()
    return all(g.is_id2(c) for c in s.ob.values())


def trimod_is_strict(s: Trimodification) -> bool:
    g = s.cod_ops()
    return all(g.is_id3(c) for c in s.three.values())


def whisker(side: str, p: Trinatural, t: Trimodification) -> Trimodification:
    """Whisker a trimodification by a trinatural transformation.

    ``side="pre"``: p: F -> G, t: q => q' with q, q': G -> H, giving
    t * p: q.p => q'.p.  ``side="post"``: p: G -> H, t: s => s' with
    s, s': F -> G, giving p * t: p.s => p.s'.
    """
    g = p.cod_ops()
    if side == "pre":
        dom = p.F.dom
        ob = {x: g.whisk2l(p.pX(x), t.sX(x)) for x in p.frag.objects}
        three = {}
        for f in p.frag.ones:
            x, y = dom.one_src(f), dom.one_tgt(f)
            left_sq = _gamma_square_of(g, p.pf(f), t.sX(y))
            right_sq = whisk_square_l(g, p.pX(x), trimod_square(t, f))
            three[f] = paste_h(g, left_sq, right_sq).cell
        return Trimodification(
            compose_trinaturals(t.p, p),
            compose_trinaturals(t.q, p),
            ob,
            three,
            name=f"{t.name}*{p.name}",
        )
    if side == "post":
        dom = p.F.dom
        ob = {x: g.whisk2r(t.sX(x), p.pX(x)) for x in p.frag.objects}
        three = {}
        for f in p.frag.ones:
            x, y = dom.one_src(f), dom.one_tgt(f)
            left_sq = whisk_square_r(g, trimod_square(t, f), p.pX(y))
            right_sq = transpose(g, _gamma_square_of(g, t.sX(x), p.pf(f)))
            three[f] = paste_h(g, left_sq, right_sq).cell
        return Trimodification(
            compose_trinaturals(p, t.p),
            compose_trinaturals(p, t.q),
            ob,
            three,
            name=f"{p.name}*{t.name}",
        )
    raise CellError(f"unknown whiskering side {side!r}")


def _gamma_square_of(g: GrayBase, a, b) -> Square:
    f0, f1 = g.mor_bound(a)
    g0, g1 = g.mor_bound(b)
    return square(
        g,
        g.whisk2r(a, g0),
        g.whisk2l(f1, b),
        g.whisk2l(f0, b),
        g.whisk2r(a, g1),
        g.gamma_of(a, b),
    )


# ---------------------------------------------------------------------------
# perturbations
# ---------------------------------------------------------------------------


@dataclass
class Perturbation:
    s: Trimodification
    t: Trimodification
    ob: dict
    name: str = "w"

    def wX(self, x):
        return self.ob[x]

    def cod_ops(self) -> GrayBase:
        return self.s.cod_ops()

    def key(self):
        return tuple(sorted(self.ob.items(), key=lambda kv: repr(kv[0])))


def identity_perturbation(s: Trimodification) -> Perturbation:
    g = s.cod_ops()
    return Perturbation(s, s, {x: g.id3(s.sX(x)) for x in s.ob}, name=f"1[{s.name}]")


def perturbation_vcompose(w2: Perturbation, w1: Perturbation) -> Perturbation:
    g = w1.cod_ops()
    return Perturbation(
        w1.s, w2.t, {x: g.vcomp3(w1.wX(x), w2.wX(x)) for x in w1.ob}, name=f"{w2.name}.{w1.name}"
    )


def perturbation_hcompose(w2: Perturbation, w1: Perturbation) -> Perturbation:
    """Horizontal composite across a shared trinatural boundary, w1 first."""
    g = w1.cod_ops()
    ob = {x: g.hcomp3(w1.wX(x), w2.wX(x)) for x in w1.ob}
    return Perturbation(
        trimod_vcompose(w2.s, w1.s), trimod_vcompose(w2.t, w1.t), ob, name=f"{w2.name}*{w1.name}"
    )


def perturbation_whisker(side: str, p: Trinatural, w: Perturbation) -> Perturbation:
    g = p.cod_ops()
    if side == "pre":
        ob = {x: g.whisk3l(p.pX(x), w.wX(x)) for x in w.ob}
    elif side == "post":
        ob = {x: g.whisk3r(w.wX(x), p.pX(x)) for x in w.ob}
    else:
        raise CellError(f"unknown whiskering side {side!r}")
    return Perturbation(
        whisker(side, p, w.s), whisker(side, p, w.t), ob, name=f"{p.name}*{w.name}"
    )


def trimod_interchanger(t: Trimodification, s: Trimodification) -> Perturbation:
    """Interchanger perturbation of an adjacent trimodification pair:
    s: p => p' over F -> G, t: q => q' over G -> H, componentwise the
    interchanger of the codomain."""
    g = s.cod_ops()
    ob = {x: g.gamma_of(s.sX(x), t.sX(x)) for x in s.ob}
    src = trimod_vcompose(whisker("pre", s.q, t), whisker("post", t.p, s))
    tgt = trimod_vcompose(whisker("post", t.q, s), whisker("pre", s.p, t))
    return Perturbation(src, tgt, ob, name=f"({t.name})_({s.name})")


# ---------------------------------------------------------------------------
# mates
# ---------------------------------------------------------------------------


def mate_cell(g: GrayBase, adj_f: AdjEq, adj_g: AdjEq, wF, wG, c):
    """Mate of c: [wF then adj_g.left] ==> [adj_f.left then wG]:
    the 3-cell [adj_f.right then wF] ==> [wG then adj_g.right]."""
    e1 = g.hcomp3(g.id3(g.vcomp2(adj_f.right, wF)), adj_g.unit)
    e2 = g.hcomp3_many([g.id3(adj_f.right), c, g.id3(adj_g.right)])
    e3 = g.hcomp3_many([adj_f.counit, g.id3(wG), g.id3(adj_g.right)])
    return g.vcomp3_many([e1, e2, e3])


def unmate_cell(g: GrayBase, adj_f: AdjEq, adj_g: AdjEq, wF, wG, m):
    """Inverse of ``mate_cell`` along the triangle identities."""
    e1 = g.hcomp3(adj_f.unit, g.id3(g.vcomp2(wF, adj_g.left)))
    e2 = g.hcomp3_many([g.id3(adj_f.left), m, g.id3(adj_g.left)])
    e3 = g.hcomp3(g.id3(g.vcomp2(adj_f.left, wG)), adj_g.counit)
    return g.vcomp3_many([e1, e2, e3])


def _mate_whiskers(p: Trinatural, a):
    g = p.cod_ops()
    dom = p.F.dom
    f, f2 = dom.mor_bound(a)
    y = dom.one_tgt(f)
    x = dom.one_src(f)
    wF = g.whisk2r(p.F.F2(a), p.pX(y))
    wG = g.whisk2l(p.pX(x), p.G.F2(a))
    return f, f2, wF, wG


def mate_component(p: Trinatural, a):
    """The mate of the local constraint at the domain 2-cell ``a``,
    computed by pasting with the unit and counit of the adjoint
    equivalences at its boundary 1-cells."""
    g = p.cod_ops()
    f, f2, wF, wG = _mate_whiskers(p, a)
    return mate_cell(g, p.padj(f), p.padj(f2), wF, wG, p.pphi(a))


def mate_unsquare(p: Trinatural, a):
    """Boundary of the mate: [pstar(f) then whisk(F a)] ==> [whisk(G a) then pstar(f2)]."""
    g = p.cod_ops()
    dom = p.F.dom
    f, f2 = dom.mor_bound(a)
    y = dom.one_tgt(f)
    x = dom.one_src(f)
    src = g.vcomp2(p.pstar(f), g.whisk2r(p.F.F2(a), p.pX(y)))
    tgt = g.vcomp2(g.whisk2l(p.pX(x), p.G.F2(a)), p.pstar(f2))
    return src, tgt


def double_mate(p: Trinatural, a):
    """Mate of the mate, using the dual pasting; equals the original."""
    g = p.cod_ops()
    f, f2, wF, wG = _mate_whiskers(p, a)
    return unmate_cell(g, p.padj(f), p.padj(f2), wF, wG, mate_component(p, a))


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def validate_trinatural(p: Trinatural) -> ValidationReport:
    rep = ValidationReport()
    with timer(rep):
        _validate_trinat(p, rep)
    return rep


def _support(rep, dic, key, family, what) -> bool:
    if key not in dic:
        rep.add("support", (repr(key),), f"{what} outside the declared support")
        return False
    return True


def _validate_trinat(p: Trinatural, rep: ValidationReport) -> None:
    g = p.cod_ops()
    F, G = p.F, p.G
    dom = F.dom
    frag = p.frag
    for x in frag.objects:
        if not _support(rep, p.ob, x, "support", "1-cell component"):
            continue
        c = p.pX(x)
        if (g.one_src(c), g.one_tgt(c)) != (F.F0(x), G.F0(x)):
            rep.add("structure/trinatural", (repr(x),), "1-cell component misbound")
    for f in frag.ones:
        if not _support(rep, p.adj, f, "support", "adjoint equivalence"):
            continue
        a = p.padj(f)
        x, y = dom.one_src(f), dom.one_tgt(f)
        want = (g.comp1(F.F1(f), p.pX(y)), g.comp1(p.pX(x), G.F1(f)))
        if g.mor_bound(a.left) != want:
            rep.add("structure/trinatural", (repr(f),), "2-cell component misbound")
            continue
        validate_adjeq(g, a, rep, (repr(f),))
    for a2 in frag.twos:
        if not _support(rep, p.three, a2, "support", "local constraint"):
            continue
        f, f2 = dom.mor_bound(a2)
        x, y = dom.one_src(f), dom.one_tgt(f)
        want_src = g.vcomp2(g.whisk2r(F.F2(a2), p.pX(y)), p.pf(f2))
        want_tgt = g.vcomp2(p.pf(f), g.whisk2l(p.pX(x), G.F2(a2)))
        if g.cell_bound(p.pphi(a2)) != (want_src, want_tgt):
            rep.add("structure/trinatural", (repr(a2),), "local constraint misbound")
    for x in frag.objects:
        if not _support(rep, p.unit, x, "support", "unitor"):
            continue
        if g.cell_bound(p.punit(x)) != (g.id2(p.pX(x)), p.pf(dom.id1(x))):
            rep.add("structure/trinatural", (repr(x),), "unitor misbound")
    for f, h in frag.pairs:
        if not _support(rep, p.comp, (f, h), "support", "compositor"):
            continue
        want = (staircase(p, f, h), p.pf(dom.comp1(f, h)))
        if g.cell_bound(p.pcomp(f, h)) != want:
            rep.add("structure/trinatural", (repr(f), repr(h)), "compositor misbound")
    if rep.violations:
        return
    for a2 in frag.twos:
        try:
            g.inv3(p.pphi(a2))
        except CellError:
            rep.add("invertibility", (repr(a2),), "local constraint not invertible")
    for x in frag.objects:
        try:
            g.inv3(p.punit(x))
        except CellError:
            rep.add("invertibility", (repr(x),), "unitor not invertible")
    for key in frag.pairs:
        try:
            g.inv3(p.comp[key])
        except CellError:
            rep.add("invertibility", tuple(map(repr, key)), "compositor not invertible")
    # local pseudonaturality: identities, naturality in 3-cells, vertical composition
    for f in frag.ones:
        if p.pphi(dom.id2(f)) != g.id3(p.pf(f)):
            rep.add("local-naturality", (repr(f),), "constraint at an identity 2-cell is not the identity")
    for u in frag.threes:
        a, b = dom.cell_bound(u)
        f, f2 = dom.mor_bound(a)
        x, y = dom.one_src(f), dom.one_tgt(f)
        lhs = g.vcomp3(
            p.pphi(a),
            g.hcomp3(g.id3(p.pf(f)), g.whisk3l(p.pX(x), G.F3(u))),
        )
        rhs = g.vcomp3(
            g.hcomp3(g.whisk3r(F.F3(u), p.pX(y)), g.id3(p.pf(f2))),
            p.pphi(b),
        )
        if lhs != rhs:
            rep.add("local-naturality", (repr(u),), "constraint not natural along a 3-cell")
    for a2 in frag.twos:
        for b2 in frag.twos:
            if dom.mor_home(a2) != dom.mor_home(b2) or dom.mor_tgt(a2) != dom.mor_src(b2):
                continue
            f, f1 = dom.mor_bound(a2)
            _, f2 = dom.mor_bound(b2)
            x, y = dom.one_src(f), dom.one_tgt(f)
            lhs = p.pphi(dom.vcomp2(a2, b2))
            rhs = g.vcomp3(
                g.hcomp3(g.id3(g.whisk2r(F.F2(a2), p.pX(y))), p.pphi(b2)),
                g.hcomp3(p.pphi(a2), g.id3(g.whisk2l(p.pX(x), G.F2(b2)))),
            )
            if lhs != rhs:
                rep.add("local-naturality", (repr(a2), repr(b2)), "constraint incompatible with vertical composition")
    # whiskering laws
    for a2 in frag.twos:
        f, f2 = dom.mor_bound(a2)
        x, y = dom.one_src(f), dom.one_tgt(f)
        for h in frag.ones:
            if dom.one_src(h) == y:
                w = dom.whisk2r(a2, h)
                if w not in p.three or (f, h) not in p.comp or (f2, h) not in p.comp:
                    rep.add("support", (repr(a2), repr(h)), "right whiskering instance outside support")
                    continue
                z = dom.one_tgt(h)
                Fw = F.F2(w)
                Gw = G.F2(w)
                step1 = g.hcomp3(
                    g.id3(g.whisk2l(F.F1(f), p.pf(h))),
                    g.whisk3r(g.inv3(p.pphi(a2)), G.F1(h)),
                )
                step2 = g.hcomp3(
                    g.inv3(g.gamma_of(F.F2(a2), p.pf(h))),
                    g.id3(g.whisk2r(p.pf(f2), G.F1(h))),
                )
                s_total = g.vcomp3(step1, step2)
                lhs = g.vcomp3(
                    s_total,
                    g.hcomp3(g.id3(g.whisk2r(Fw, p.pX(z))), p.pcomp(f2, h)),
                )
                rhs = g.vcomp3(
                    g.hcomp3(p.pcomp(f, h), g.id3(g.whisk2l(p.pX(x), Gw))),
                    g.inv3(p.pphi(w)),
                )
                if lhs != rhs:
                    rep.add("right-whiskering-law", (repr(a2), repr(h)), "compositor not natural under right whiskering")
            if dom.one_tgt(h) == x:
                w = dom.whisk2l(h, a2)
                if w not in p.three or (h, f) not in p.comp or (h, f2) not in p.comp:
                    rep.add("support", (repr(h), repr(a2)), "left whiskering instance outside support")
                    continue
                v = dom.one_src(h)
                Fw = F.F2(w)
                Gw = G.F2(w)
                step1 = g.hcomp3(
                    g.id3(g.whisk2l(F.F1(h), p.pf(f))),
                    g.gamma_of(p.pf(h), G.F2(a2)),
                )
                step2 = g.hcomp3(
                    g.whisk3l(F.F1(h), g.inv3(p.pphi(a2))),
                    g.id3(g.whisk2r(p.pf(h), G.F1(f2))),
                )
                t_total = g.vcomp3(step1, step2)
                lhs = g.vcomp3(
                    t_total,
                    g.hcomp3(g.id3(g.whisk2r(Fw, p.pX(y))), p.pcomp(h, f2)),
                )
                rhs = g.vcomp3(
                    g.hcomp3(p.pcomp(h, f), g.id3(g.whisk2l(p.pX(v), Gw))),
                    g.inv3(p.pphi(w)),
                )
                if lhs != rhs:
                    rep.add("left-whiskering-law", (repr(h), repr(a2)), "compositor not natural under left whiskering")
    # associativity coherence
    for e, f, h in frag.triples:
        w = dom.one_src(e)
        z = dom.one_tgt(h)
        pos3 = g.whisk2r(p.pf(e), G.F1(dom.comp1(f, h)))
        pos1 = g.whisk2l(F.F1(dom.comp1(e, f)), p.pf(h))
        lhs = g.vcomp3(
            g.hcomp3(g.whisk3l(F.F1(e), p.pcomp(f, h)), g.id3(pos3)),
            p.pcomp(e, dom.comp1(f, h)),
        )
        rhs = g.vcomp3(
            g.hcomp3(g.id3(pos1), g.whisk3r(p.pcomp(e, f), G.F1(h))),
            p.pcomp(dom.comp1(e, f), h),
        )
        if lhs != rhs:
            rep.add("associativity-coherence", (repr(e), repr(f), repr(h)), "compositor associativity fails")
    # unit laws
    for f in frag.ones:
        x, y = dom.one_src(f), dom.one_tgt(f)
        lhs = g.vcomp3(
            g.hcomp3(g.id3(p.pf(f)), g.whisk3r(p.punit(x), G.F1(f))),
            p.pcomp(dom.id1(x), f),
        )
        if lhs != g.id3(p.pf(f)):
            rep.add("unit-law-left", (repr(f),), "left unit law fails")
        rhs = g.vcomp3(
            g.hcomp3(g.whisk3l(F.F1(f), p.punit(y)), g.id3(p.pf(f))),
            p.pcomp(f, dom.id1(y)),
        )
        if rhs != g.id3(p.pf(f)):
            rep.add("unit-law-right", (repr(f),), "right unit law fails")


def validate_trimodification(s: Trimodification) -> ValidationReport:
    rep = ValidationReport()
    with timer(rep):
        _validate_trimod(s, rep)
    return rep


def _validate_trimod(s: Trimodification, rep: ValidationReport) -> None:
    g = s.cod_ops()
    p, q = s.p, s.q
    F, G = p.F, p.G
    dom = F.dom
    frag = p.frag
    for x in frag.objects:
        if not _support(rep, s.ob, x, "support", "2-cell component"):
            continue
        if g.mor_bound(s.sX(x)) != (p.pX(x), q.pX(x)):
            rep.add("structure/trimodification", (repr(x),), "2-cell component misbound")
    for f in frag.ones:
        if not _support(rep, s.three, f, "support", "3-cell component"):
            continue
        x, y = dom.one_src(f), dom.one_tgt(f)
        want_src = g.vcomp2(p.pf(f), g.whisk2r(s.sX(x), G.F1(f)))
        want_tgt = g.vcomp2(g.whisk2l(F.F1(f), s.sX(y)), q.pf(f))
        if g.cell_bound(s.sf(f)) != (want_src, want_tgt):
            rep.add("structure/trimodification", (repr(f),), "3-cell component misbound")
    if rep.violations:
        return
    for f in frag.ones:
        try:
            g.inv3(s.sf(f))
        except CellError:
            rep.add("invertibility", (repr(f),), "3-cell component not invertible")
    # local modification condition
    for a in frag.twos:
        f, f2 = dom.mor_bound(a)
        x, y = dom.one_src(f), dom.one_tgt(f)
        lhs = g.vcomp3_many(
            [
                g.hcomp3(s.sf(f), g.id3(g.whisk2l(q.pX(x), G.F2(a)))),
                g.hcomp3(g.id3(g.whisk2l(F.F1(f), s.sX(y))), g.inv3(q.pphi(a))),
                g.hcomp3(
                    g.inv3(g.gamma_of(F.F2(a), s.sX(y))),
                    g.id3(q.pf(f2)),
                ),
            ]
        )
        rhs = g.vcomp3_many(
            [
                g.hcomp3(g.id3(p.pf(f)), g.gamma_of(s.sX(x), G.F2(a))),
                g.hcomp3(g.inv3(p.pphi(a)), g.id3(g.whisk2r(s.sX(x), G.F1(f2)))),
                g.hcomp3(g.id3(g.whisk2r(F.F2(a), p.pX(y))), s.sf(f2)),
            ]
        )
        if lhs != rhs:
            rep.add("local-modification", (repr(a),), "local modification condition fails")
    # unit law
    for x in frag.objects:
        i = dom.id1(x)
        lhs = g.vcomp3(g.hcomp3(p.punit(x), g.id3(s.sX(x))), s.sf(i))
        rhs = g.hcomp3(g.id3(s.sX(x)), q.punit(x))
        if lhs != rhs:
            rep.add("unit-law", (repr(x),), "unit law fails")
    # composition law
    for f, h in frag.pairs:
        x = dom.one_src(f)
        z = dom.one_tgt(h)
        c = dom.comp1(f, h)
        lhs = g.vcomp3(
            g.hcomp3(p.pcomp(f, h), g.id3(g.whisk2r(s.sX(x), G.F1(c)))),
            s.sf(c),
        )
        A = whisk_square_l(g, F.F1(f), trimod_square(s, h))
        B = whisk_square_r(g, trimod_square(s, f), G.F1(h))
        rhs = g.vcomp3(
            paste_h(g, A, B).cell,
            g.hcomp3(g.id3(g.whisk2l(F.F1(c), s.sX(z))), q.pcomp(f, h)),
        )
        if lhs != rhs:
            rep.add("composition-law", (repr(f), repr(h)), "composition law fails")


def validate_perturbation(w: Perturbation) -> ValidationReport:
    rep = ValidationReport()
    with timer(rep):
        g = w.cod_ops()
        s, t = w.s, w.t
        p = s.p
        dom = p.F.dom
        for x in p.frag.objects:
            if not _support(rep, w.ob, x, "support", "component"):
                continue
            if g.cell_bound(w.wX(x)) != (s.sX(x), t.sX(x)):
                rep.add("structure/perturbation", (repr(x),), "component misbound")
        if rep.violations:
            return rep
        for f in p.frag.ones:
            x, y = dom.one_src(f), dom.one_tgt(f)
            lhs = g.vcomp3(
                g.hcomp3(g.id3(p.pf(f)), g.whisk3r(w.wX(x), p.G.F1(f))),
                t.sf(f),
            )
            rhs = g.vcomp3(
                s.sf(f),
                g.hcomp3(g.whisk3l(p.F.F1(f), w.wX(y)), g.id3(s.q.pf(f))),
            )
            if lhs != rhs:
                rep.add("perturbation-law", (repr(f),), "perturbation equation fails")
    return rep
