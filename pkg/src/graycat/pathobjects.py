"""Generalized path objects: transformation structures over walking shapes.

For a walking shape S and a base B, the cells of the structure are the
Gray-functors S -> B, the trinatural transformations between them, the
trimodifications and the perturbations, wrapped in interned hashable
encodings so they can serve as cells of a Gray-structure interface.  The
classification maps repackage transformations over an arbitrary domain as
weak functors into these structures, and back.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fixtures import walking_cell, walking_pair
from .graycategory import GrayBase, TabGrayCategory
from .homs import CellError
from .report import ValidationReport, timer
from .transfors3 import (
    AdjEq,
    Fragment,
    GrayFunctor,
    Perturbation,
    Trimodification,
    Trinatural,
    adjeq_on_identity,
    adjeq_strict,
    compose_trinaturals,
    identity_perturbation,
    identity_trimodification,
    identity_trinatural,
    is_semistrict,
    perturbation_hcompose,
    perturbation_vcompose,
    perturbation_whisker,
    tab_fragment,
    trimod_interchanger,
    trimod_invert,
    trimod_vcompose,
    validate_perturbation,
    validate_trimodification,
    validate_trinatural,
    whisker,
)
from .semistrictify3 import TrihomContainer, validate_three_pseudofunctor


def _freeze(value):
    if isinstance(value, dict):
        return tuple(sorted(((repr(k), _freeze(v)) for k, v in value.items())))
    if isinstance(value, (list, tuple)):
        return tuple(_freeze(v) for v in value)
    return value


@dataclass(frozen=True)
class Enc:
    """Interned encoding of a transformation-level cell."""

    dim: int
    key: tuple

    def __repr__(self):
        return f"<{self.dim}:{hash(self.key) & 0xFFFFFF:06x}>"


class TransforGray(GrayBase):
    """Gray-structure of functors from a walking shape into a base."""

    def __init__(self, shape: TabGrayCategory, base: TabGrayCategory):
        self.shape = shape
        self.base = base
        self.shape_frag = tab_fragment(shape)
        self._reg: dict[Enc, object] = {}

    # ---- encode / decode ---------------------------------------------------
    def enc_functor(self, F: GrayFunctor) -> Enc:
        key = (_freeze(F.ob), _freeze(F.one), _freeze(F.two), _freeze(F.three))
        e = Enc(0, key)
        self._reg.setdefault(e, F)
        return e

    def enc_trinat(self, p: Trinatural) -> Enc:
        key = (
            self.enc_functor(p.F).key,
            self.enc_functor(p.G).key,
            _freeze(p.ob),
            _freeze(p.adj),
            _freeze(p.three),
            _freeze(p.unit),
            _freeze(p.comp),
        )
        e = Enc(1, key)
        self._reg.setdefault(e, p)
        return e

    def enc_trimod(self, s: Trimodification) -> Enc:
        key = (
            self.enc_trinat(s.p).key,
            self.enc_trinat(s.q).key,
            _freeze(s.ob),
            _freeze(s.three),
        )
        e = Enc(2, key)
        self._reg.setdefault(e, s)
        return e

    def enc_pert(self, w: Perturbation) -> Enc:
        key = (self.enc_trimod(w.s).key, self.enc_trimod(w.t).key, _freeze(w.ob))
        e = Enc(3, key)
        self._reg.setdefault(e, w)
        return e

    def dec(self, e: Enc):
        return self._reg[e]

    # ---- structure interface -------------------------------------------------
    def obs(self):
        return tuple(sorted((e for e in self._reg if e.dim == 0), key=repr))

    def one_src(self, e: Enc):
        return self.enc_functor(self.dec(e).F)

    def one_tgt(self, e: Enc):
        return self.enc_functor(self.dec(e).G)

    def id1(self, x: Enc):
        return self.enc_trinat(identity_trinatural(self.dec(x), self.shape_frag))

    def comp1(self, f: Enc, g: Enc):
        return self.enc_trinat(compose_trinaturals(self.dec(g), self.dec(f)))

    def mor_bound(self, a: Enc):
        s = self.dec(a)
        return (self.enc_trinat(s.p), self.enc_trinat(s.q))

    def id2(self, f: Enc):
        return self.enc_trimod(identity_trimodification(self.dec(f)))

    def vcomp2(self, a: Enc, b: Enc):
        return self.enc_trimod(trimod_vcompose(self.dec(b), self.dec(a)))

    def whisk2l(self, f: Enc, a: Enc):
        return self.enc_trimod(whisker("pre", self.dec(f), self.dec(a)))

    def whisk2r(self, a: Enc, h: Enc):
        return self.enc_trimod(whisker("post", self.dec(h), self.dec(a)))

    def cell_bound(self, u: Enc):
        w = self.dec(u)
        return (self.enc_trimod(w.s), self.enc_trimod(w.t))

    def id3(self, a: Enc):
        return self.enc_pert(identity_perturbation(self.dec(a)))

    def vcomp3(self, u: Enc, v: Enc):
        return self.enc_pert(perturbation_vcompose(self.dec(v), self.dec(u)))

    def mwhisk3l(self, a: Enc, u: Enc):
        s = self.dec(a)
        w = self.dec(u)
        g = self.base
        ob = {x: g.mwhisk3l(s.sX(x), w.wX(x)) for x in w.ob}
        out = Perturbation(
            trimod_vcompose(w.s, s), trimod_vcompose(w.t, s), ob, name=f"{s.name}*{w.name}"
        )
        return self.enc_pert(out)

    def mwhisk3r(self, u: Enc, b: Enc):
        s = self.dec(b)
        w = self.dec(u)
        g = self.base
        ob = {x: g.mwhisk3r(w.wX(x), s.sX(x)) for x in w.ob}
        out = Perturbation(
            trimod_vcompose(s, w.s), trimod_vcompose(s, w.t), ob, name=f"{w.name}*{s.name}"
        )
        return self.enc_pert(out)

    def whisk3l(self, f: Enc, u: Enc):
        return self.enc_pert(perturbation_whisker("pre", self.dec(f), self.dec(u)))

    def whisk3r(self, u: Enc, h: Enc):
        return self.enc_pert(perturbation_whisker("post", self.dec(h), self.dec(u)))

    def gamma(self, a: Enc, b: Enc):
        return self.enc_pert(trimod_interchanger(self.dec(b), self.dec(a)))

    def inv2(self, a: Enc):
        return self.enc_trimod(trimod_invert(self.dec(a)))

    def inv3(self, u: Enc):
        w = self.dec(u)
        g = self.base
        return self.enc_pert(
            Perturbation(w.t, w.s, {x: g.inv3(c) for x, c in w.ob.items()}, name=f"{w.name}^-1")
        )

    def is_id2(self, a: Enc) -> bool:
        s = self.dec(a)
        g = self.base
        return all(g.is_id2(c) for c in s.ob.values()) and all(
            g.is_id3(c) for c in s.three.values()
        ) and self.enc_trinat(s.p) == self.enc_trinat(s.q)

    def is_id3(self, u: Enc) -> bool:
        w = self.dec(u)
        g = self.base
        return self.cell_src(u) == self.cell_tgt(u) and all(g.is_id3(c) for c in w.ob.values())

    # ---- enumeration ---------------------------------------------------------
    def enumerate_functors(self) -> list[Enc]:
        raise NotImplementedError

    def enumerate_morphisms(self, src: Enc, tgt: Enc, semi_strict: bool = True) -> list[Enc]:
        raise NotImplementedError


# ---------------------------------------------------------------------------
# shape-specific enumeration
# ---------------------------------------------------------------------------


def _all_adjeqs(g: TabGrayCategory, left_candidates) -> list[AdjEq]:
    out = []
    for left in left_candidates:
        s, t = g.mor_bound(left)
        for right in g.hom_mors(t, s):
            for unit in g.hom_cells(g.id2(s), g.vcomp2(left, right)):
                for counit in g.hom_cells(g.vcomp2(right, left), g.id2(t)):
                    a = AdjEq(left, right, unit, counit)
                    if _adjeq_ok(g, a):
                        out.append(a)
    return out


def _adjeq_ok(g: TabGrayCategory, a: AdjEq) -> bool:
    from .transfors3 import validate_adjeq

    rep = ValidationReport()
    validate_adjeq(g, a, rep, ())
    return rep.passed


class PathObject(TransforGray):
    """The structure over the free-living n-cell, n in {0, 1, 2, 3}."""

    def __init__(self, base: TabGrayCategory, n: int):
        super().__init__(walking_cell(n), base)
        self.n = n

    # -- objects: n-cells of the base --------------------------------------
    def functor_for(self, data) -> GrayFunctor:
        shape, base = self.shape, self.base
        frag = self.shape_frag
        if self.n == 0:
            (x,) = data
            ob = {"0": x}
            one = {"10": base.id1(x)}
        elif self.n == 1:
            x0, x1, arr = data
            ob = {"0": x0, "1": x1}
            one = {"1_0": base.id1(x0), "1_1": base.id1(x1), "arr": arr}
        elif self.n == 2:
            x0, x1, a0, a1, m = data
            ob = {"0": x0, "1": x1}
            one = {"1_0": base.id1(x0), "1_1": base.id1(x1), "a0": a0, "a1": a1}
        else:
            x0, x1, a0, a1, m0, m1, gg = data
            ob = {"0": x0, "1": x1}
            one = {"1_0": base.id1(x0), "1_1": base.id1(x1), "a0": a0, "a1": a1}
        two = {}
        three = {}
        for f, img in list(one.items()):
            two[shape.id2(f)] = base.id2(img)
        if self.n == 2:
            two["mm"] = data[4]
        if self.n == 3:
            two["m0"], two["m1"] = data[4], data[5]
        for a, img in list(two.items()):
            three[shape.id3(a)] = base.id3(img)
        if self.n == 3:
            three["GG"] = data[6]
        name = f"<{'|'.join(map(str, data))}>"
        return GrayFunctor(shape, base, ob, one, two, three, name=name)

    def enumerate_functors(self) -> list[Enc]:
        base = self.base
        out = []
        if self.n == 0:
            for x in base.objects:
                out.append(self.enc_functor(self.functor_for((x,))))
            return out
        for x0 in base.objects:
            for x1 in base.objects:
                for arr in base.hom_one(x0, x1):
                    if self.n == 1:
                        out.append(self.enc_functor(self.functor_for((x0, x1, arr))))
                        continue
                    for a1 in base.hom_one(x0, x1):
                        for m in base.hom_mors(arr, a1):
                            if self.n == 2:
                                out.append(
                                    self.enc_functor(self.functor_for((x0, x1, arr, a1, m)))
                                )
                                continue
                            for m1 in base.hom_mors(arr, a1):
                                for gg in base.hom_cells(m, m1):
                                    out.append(
                                        self.enc_functor(
                                            self.functor_for((x0, x1, arr, a1, m, m1, gg))
                                        )
                                    )
        return out

    # -- morphisms: semi-strict transformations ------------------------------
    def _morphism(self, F: GrayFunctor, G: GrayFunctor, f0, f1, adjs, cells) -> Trinatural:
        """Assemble a semi-strict transformation from generator data.

        ``adjs`` maps the generating 1-cells of the shape to adjoint
        equivalences, ``cells`` the generating 2-cells to 3-cells."""
        g = self.base
        shape = self.shape
        frag = self.shape_frag
        ob = {"0": f0} if self.n == 0 else {"0": f0, "1": f1}
        adj = {}
        for f in frag.ones:
            if f in adjs:
                adj[f] = adjs[f]
            elif shape.is_id1(f):
                adj[f] = adjeq_on_identity(g, ob[shape.one_src(f)])
            else:
                raise CellError(f"missing adjoint equivalence for {f}")
        three = {}
        for a in frag.twos:
            if a in cells:
                three[a] = cells[a]
            else:
                f, f2 = shape.mor_bound(a)
                if f == f2 and shape.id2(f) == a:
                    three[a] = g.id3(adj[f].left)
                else:
                    raise CellError(f"missing 3-cell component for {a}")
        unit = {x: g.id3(g.id2(ob[x])) for x in frag.objects}
        comp = {}
        for (f, h) in frag.pairs:
            comp[(f, h)] = g.id3(adj[shape.comp1(f, h)].left)
        return Trinatural(F, G, frag, ob, adj, three, unit, comp, name="m")

    def enumerate_morphisms(self, src: Enc, tgt: Enc, semi_strict: bool = True) -> list[Enc]:
        if not semi_strict:
            raise CellError("only semi-strict morphisms are enumerable")
        F = self.dec(src)
        G = self.dec(tgt)
        g = self.base
        shape = self.shape
        out = []
        if self.n == 0:
            for f0 in g.hom_one(F.F0("0"), G.F0("0")):
                out.append(self.enc_trinat(self._morphism(F, G, f0, None, {}, {})))
            return out
        for f0 in g.hom_one(F.F0("0"), G.F0("0")):
            for f1 in g.hom_one(F.F0("1"), G.F0("1")):
                gens = [f for f in self.shape_frag.ones if not shape.is_id1(f)]
                gen_adj_choices = []
                for f in gens:
                    lefts = g.hom_mors(
                        g.comp1(F.F1(f), f1 if shape.one_tgt(f) == "1" else f0),
                        g.comp1(f0 if shape.one_src(f) == "0" else f1, G.F1(f)),
                    )
                    gen_adj_choices.append(_all_adjeqs(g, lefts))
                for combo in itertools.product(*gen_adj_choices):
                    adjs = dict(zip(gens, combo))
                    gen2 = [a for a in self.shape_frag.twos if not self._is_shape_id2(a)]
                    cell_choices = []
                    for a in gen2:
                        f, f2 = shape.mor_bound(a)
                        s_m = g.vcomp2(g.whisk2r(F.F2(a), f1), adjs[f2].left)
                        t_m = g.vcomp2(adjs[f].left, g.whisk2l(f0, G.F2(a)))
                        cell_choices.append(g.hom_cells(s_m, t_m))
                    for ccombo in itertools.product(*cell_choices):
                        cells = dict(zip(gen2, ccombo))
                        if any(self._not_invertible(c) for c in ccombo):
                            continue
                        tri = self._morphism(F, G, f0, f1, adjs, cells)
                        out.append(self.enc_trinat(tri))
        return out

    def _is_shape_id2(self, a) -> bool:
        f, f2 = self.shape.mor_bound(a)
        return f == f2 and self.shape.id2(f) == a

    def _not_invertible(self, c) -> bool:
        try:
            self.base.inv3(c)
            return False
        except CellError:
            return True

    def enumerate_trimods(self, src: Enc, tgt: Enc) -> list[Enc]:
        p = self.dec(src)
        q = self.dec(tgt)
        g = self.base
        shape = self.shape
        frag = self.shape_frag
        out = []
        obs = frag.objects
        comp_choices = [g.hom_mors(p.pX(x), q.pX(x)) for x in obs]
        for combo in itertools.product(*comp_choices):
            ob = dict(zip(obs, combo))
            cell_choices = []
            ones = list(frag.ones)
            for f in ones:
                x, y = shape.one_src(f), shape.one_tgt(f)
                s_m = g.vcomp2(p.pf(f), g.whisk2r(ob[x], q.G.F1(f)))
                t_m = g.vcomp2(g.whisk2l(p.F.F1(f), ob[y]), q.pf(f))
                cell_choices.append(g.hom_cells(s_m, t_m))
            for ccombo in itertools.product(*cell_choices):
                s = Trimodification(p, q, ob, dict(zip(ones, ccombo)), name="s")
                if validate_trimodification(s).passed:
                    out.append(self.enc_trimod(s))
        return out

    def enumerate_perturbations(self, src: Enc, tgt: Enc) -> list[Enc]:
        s = self.dec(src)
        t = self.dec(tgt)
        g = self.base
        frag = self.shape_frag
        out = []
        choices = [g.hom_cells(s.sX(x), t.sX(x)) for x in frag.objects]
        for combo in itertools.product(*choices):
            w = Perturbation(s, t, dict(zip(frag.objects, combo)), name="w")
            if validate_perturbation(w).passed:
                out.append(self.enc_pert(w))
        return out


class PairObject(TransforGray):
    """The structure over the walking composable pair."""

    def __init__(self, base: TabGrayCategory):
        super().__init__(walking_pair(), base)

    def functor_for(self, data) -> GrayFunctor:
        x0, x1, x2, u, v = data
        shape, base = self.shape, self.base
        ob = {"0": x0, "1": x1, "2": x2}
        one = {
            "1_0": base.id1(x0),
            "1_1": base.id1(x1),
            "1_2": base.id1(x2),
            "a": u,
            "b": v,
            "ab": base.comp1(u, v),
        }
        two = {shape.id2(f): base.id2(img) for f, img in one.items()}
        three = {shape.id3(a): base.id3(img) for a, img in two.items()}
        return GrayFunctor(shape, base, ob, one, two, three, name=f"<{x0}|{u}|{v}>")

    def enumerate_functors(self) -> list[Enc]:
        base = self.base
        out = []
        for x0 in base.objects:
            for x1 in base.objects:
                for x2 in base.objects:
                    for u in base.hom_one(x0, x1):
                        for v in base.hom_one(x1, x2):
                            out.append(self.enc_functor(self.functor_for((x0, x1, x2, u, v))))
        return out

    def morphism_from_legs(self, F: GrayFunctor, G: GrayFunctor, f0, f1, f2, adj_a: AdjEq, adj_b: AdjEq) -> Trinatural:
        g = self.base
        shape = self.shape
        frag = self.shape_frag
        ob = {"0": f0, "1": f1, "2": f2}
        adj = {}
        for f in frag.ones:
            if shape.is_id1(f):
                adj[f] = adjeq_on_identity(g, ob[shape.one_src(f)])
        adj["a"] = adj_a
        adj["b"] = adj_b
        from .transfors3 import compose_adjeq, whisk_adjeq

        adj["ab"] = compose_adjeq(
            g,
            whisk_adjeq(g, F.F1("a"), adj_b, None),
            whisk_adjeq(g, None, adj_a, G.F1("b")),
        )
        three = {}
        for a in frag.twos:
            f, f2_ = shape.mor_bound(a)
            three[a] = g.id3(adj[f].left)
        unit = {x: g.id3(g.id2(ob[x])) for x in frag.objects}
        comp = {(f, h): g.id3(adj[shape.comp1(f, h)].left) for (f, h) in frag.pairs}
        return Trinatural(F, G, frag, ob, adj, three, unit, comp, name="m")


def path_object(base: TabGrayCategory, n) -> TransforGray:
    """The transformation structure over the free-living n-cell, or over
    the walking composable pair for ``n == "pair"``."""
    if n == "pair":
        return PairObject(base)
    if n in (0, 1, 2, 3):
        return PathObject(base, n)
    raise CellError(f"no path object for shape {n!r}")


def free_walking(n: int) -> TabGrayCategory:
    return walking_cell(n)


# ---------------------------------------------------------------------------
# classification: transformations as weak functors into path objects
# ---------------------------------------------------------------------------
#
# Direction bookkeeping, forced by the fixed orientation of components: a
# component of a transformation sits inside a path-object morphism as the
# member of the REVERSED adjoint equivalence (the shape cell occupies the
# functor slot), so lifting swaps each adjoint equivalence and takes mates
# of the 3-cell data; extraction swaps back.  Round trips are exact because
# swapping is an involution and double mates collapse along the triangle
# identities.

from .transfors3 import (
    mate_cell,
    mate_component,
    square_star_mate,
    star_mate,
    swap_adjeq,
    trimod_square,
    unmate_cell,
)


def _lift_object(po: PathObject, p: Trinatural, x) -> Enc:
    F, G = p.F, p.G
    return po.enc_functor(po.functor_for((F.F0(x), G.F0(x), p.pX(x))))


def _lift_morphism(po: PathObject, p: Trinatural, f) -> Enc:
    A = p.F.dom
    B = p.F.cod
    F, G = p.F, p.G
    x, y = A.one_src(f), A.one_tgt(f)
    src = po.dec(_lift_object(po, p, x))
    tgt = po.dec(_lift_object(po, p, y))
    return po.enc_trinat(
        po._morphism(src, tgt, F.F1(f), G.F1(f), {"arr": swap_adjeq(B, p.padj(f))}, {})
    )


def _lift_trimod(po: PathObject, p: Trinatural, a) -> Enc:
    """Image of a domain 2-cell: the mate of the local constraint on the
    arrow leg, identities on the identity legs."""
    A = p.F.dom
    B = p.F.cod
    F, G = p.F, p.G
    f, f2 = A.mor_bound(a)
    m1 = po.dec(_lift_morphism(po, p, f))
    m2 = po.dec(_lift_morphism(po, p, f2))
    ob = {"0": F.F2(a), "1": G.F2(a)}
    three = {
        "1_0": B.id3(F.F2(a)),
        "1_1": B.id3(G.F2(a)),
        "arr": mate_component(p, a),
    }
    return po.enc_trimod(Trimodification(m1, m2, ob, three, name=f"lift[{a}]"))


def _costrict_arrow_trimod(po: PathObject, s: Trinatural, t: Trinatural, cell, name: str) -> Trimodification:
    """Trimodification between parallel arrow-object morphisms with
    identity 2-cell components and the given arrow-leg 3-cell."""
    B = po.base
    ob = {"0": B.id2(s.pX("0")), "1": B.id2(s.pX("1"))}
    three = {
        "1_0": B.id3(B.id2(s.pX("0"))),
        "1_1": B.id3(B.id2(s.pX("1"))),
        "arr": cell,
    }
    return Trimodification(s, t, ob, three, name=name)


def trinat_to_lift(po: PathObject, p: Trinatural) -> TrihomContainer:
    """Repackage a transformation as a weak functor into the arrow object:
    strict on homs, with the unitors and compositors of the transformation
    carried (as mates) by its own unitors and compositors."""
    if po.n != 1:
        raise CellError("lifting targets the arrow object")
    A = p.F.dom
    B = p.F.cod
    F, G = p.F, p.G
    frag = p.frag
    ob = {x: _lift_object(po, p, x) for x in frag.objects}
    one = {f: _lift_morphism(po, p, f) for f in frag.ones}
    two = {a: _lift_trimod(po, p, a) for a in frag.twos}
    three = {}
    for u in frag.threes:
        a, b = A.cell_bound(u)
        three[u] = po.enc_pert(
            Perturbation(po.dec(two[a]), po.dec(two[b]), {"0": F.F3(u), "1": G.F3(u)}, name=f"lift[{u}]")
        )
    hom_unitor = {f: po.id3(two[A.id2(f)]) for f in frag.ones}
    hom_compositor = {}
    for a in frag.twos:
        for b in frag.twos:
            if A.mor_home(a) == A.mor_home(b) and A.mor_tgt(a) == A.mor_src(b):
                hom_compositor[(a, b)] = po.id3(two[A.vcomp2(a, b)])
    unitor = {}
    for x in frag.objects:
        i = A.id1(x)
        s = po.dec(po.id1(ob[x]))
        t = po.dec(one[i])
        idadj = adjeq_on_identity(B, p.pX(x))
        cell = mate_cell(
            B, idadj, p.padj(i), B.id2(p.pX(x)), B.id2(p.pX(x)), B.inv3(p.punit(x))
        )
        unitor[x] = _trimod_adjeq(po, _costrict_arrow_trimod(po, s, t, cell, f"iota[{x}]"))
    compositor = {}
    for (f, h) in frag.pairs:
        c = A.comp1(f, h)
        s = po.dec(po.comp1(one[f], one[h]))
        t = po.dec(one[c])
        cell = star_mate(
            B, p.padj(c), swap_adjeq(B, s.padj("arr")), B.inv3(p.pcomp(f, h))
        )
        compositor[(f, h)] = _trimod_adjeq(po, _costrict_arrow_trimod(po, s, t, cell, f"chi[{f},{h}]"))
    return TrihomContainer(
        A, po, frag, ob, one, two, three,
        hom_unitor, hom_compositor, unitor, compositor, {}, {}, {}, {},
        name=f"lift[{p.name}]",
    )


def _trimod_adjeq(po: TransforGray, fwd: Trimodification) -> AdjEq:
    e = po.enc_trimod(fwd)
    inv = po.inv2(e)
    unit = po.enc_pert(
        Perturbation(
            po.dec(po.id2(po.enc_trinat(fwd.p))),
            po.dec(po.vcomp2(e, inv)),
            {x: po.base.id3(po.base.id2(fwd.p.pX(x))) for x in fwd.p.frag.objects},
            name="unit",
        )
    )
    counit = po.enc_pert(
        Perturbation(
            po.dec(po.vcomp2(inv, e)),
            po.dec(po.id2(po.enc_trinat(fwd.q))),
            {x: po.base.id3(po.base.id2(fwd.q.pX(x))) for x in fwd.q.frag.objects},
            name="counit",
        )
    )
    return AdjEq(e, inv, unit, counit)


def lift_to_trinat(po: PathObject, T: TrihomContainer) -> Trinatural:
    """Extract the transformation from a lift satisfying the source and
    target conditions; the exact inverse of lifting."""
    A = T.dom
    frag = T.frag
    B = po.base
    F_ob, G_ob = {}, {}
    F1, G1, F2, G2, F3, G3 = {}, {}, {}, {}, {}, {}
    ob, adj, three, unit, comp = {}, {}, {}, {}, {}
    for x in frag.objects:
        data = po.dec(T.ob[x])
        ob[x] = data.one["arr"]
        F_ob[x], G_ob[x] = data.ob["0"], data.ob["1"]
    for f in frag.ones:
        m = po.dec(T.one[f])
        adj[f] = swap_adjeq(B, m.padj("arr"))
        F1[f], G1[f] = m.pX("0"), m.pX("1")
    for a in frag.twos:
        s = po.dec(T.two[a])
        f, f2 = A.mor_bound(a)
        F2[a], G2[a] = s.sX("0"), s.sX("1")
        x, y = A.one_src(f), A.one_tgt(f)
        wF = B.whisk2r(s.sX("0"), ob[y])
        wG = B.whisk2l(ob[x], s.sX("1"))
        three[a] = unmate_cell(B, adj[f], adj[f2], wF, wG, s.sf("arr"))
    for u in frag.threes:
        w = po.dec(T.three[u])
        F3[u], G3[u] = w.wX("0"), w.wX("1")
    for x in frag.objects:
        i = A.id1(x)
        idadj = adjeq_on_identity(B, ob[x])
        cell = po.dec(T.unitor[x].left).sf("arr")
        unit[x] = B.inv3(
            unmate_cell(B, idadj, adj[i], B.id2(ob[x]), B.id2(ob[x]), cell)
        )
    for key in frag.pairs:
        f, h = key
        c = A.comp1(f, h)
        s = po.dec(po.comp1(T.one[f], T.one[h]))
        cell = po.dec(T.compositor[key].left).sf("arr")
        comp[key] = B.inv3(
            star_mate(B, s.padj("arr"), swap_adjeq(B, adj[c]), cell)
        )
    F = GrayFunctor(A, B, F_ob, F1, F2, F3, name=f"{T.name}|s")
    G = GrayFunctor(A, B, G_ob, G1, G2, G3, name=f"{T.name}|t")
    return Trinatural(F, G, frag, ob, adj, three, unit, comp, name=f"unlift[{T.name}]")


def lift_is_functorial(po: TransforGray, T: TrihomContainer) -> bool:
    """Whether the lift lands in strict functors: identity unitors and
    compositors, the semi-strictness criterion."""
    return all(po.is_id2(a.left) for a in T.unitor.values()) and all(
        po.is_id2(a.left) for a in T.compositor.values()
    )


def _unitor_mate(B, p: Trinatural, x):
    idadj = adjeq_on_identity(B, p.pX(x))
    i = p.F.dom.id1(x)
    return mate_cell(B, idadj, p.padj(i), B.id2(p.pX(x)), B.id2(p.pX(x)), B.inv3(p.punit(x)))


def _compositor_mate(B, p: Trinatural, composite_adj: AdjEq, f, h):
    c = p.F.dom.comp1(f, h)
    return star_mate(B, p.padj(c), swap_adjeq(B, composite_adj), B.inv3(p.pcomp(f, h)))


# ---------------------------------------------------------------------------
# trimodifications and perturbations as weak functors
# ---------------------------------------------------------------------------


def _legs(po: TransforGray) -> list[str]:
    shape = po.shape
    return [f for f in po.shape_frag.ones if not shape.is_id1(f)]


def _costrict_cell_trimod(po: TransforGray, s: Trinatural, t: Trinatural, leg_cells: dict, name: str) -> Trimodification:
    B = po.base
    shape = po.shape
    ob = {x: B.id2(s.pX(x)) for x in po.shape_frag.objects}
    three = {}
    for f in po.shape_frag.ones:
        if f in leg_cells:
            three[f] = leg_cells[f]
        else:
            three[f] = B.id3(B.vcomp2(s.pf(f), B.whisk2r(ob[shape.one_src(f)], t.G.F1(f))))
    return Trimodification(s, t, ob, three, name=name)


def trimod_to_lift(po2: PathObject, s: Trimodification) -> TrihomContainer:
    """Repackage a trimodification as a weak functor into the 2-cell
    object, with paired mates of the constraints of its boundary
    transformations on the two legs."""
    if po2.n != 2:
        raise CellError("lifting targets the 2-cell object")
    p, q = s.p, s.q
    A = p.F.dom
    B = p.F.cod
    F, G = p.F, p.G
    frag = p.frag

    def obj(x) -> Enc:
        return po2.enc_functor(po2.functor_for((F.F0(x), G.F0(x), p.pX(x), q.pX(x), s.sX(x))))

    def morph(f) -> Enc:
        x, y = A.one_src(f), A.one_tgt(f)
        src = po2.dec(obj(x))
        tgt = po2.dec(obj(y))
        adjs = {"a0": swap_adjeq(B, p.padj(f)), "a1": swap_adjeq(B, q.padj(f))}
        cells = {"mm": square_star_mate(B, p.padj(f), q.padj(f), trimod_square(s, f))}
        return po2.enc_trinat(po2._morphism(src, tgt, F.F1(f), G.F1(f), adjs, cells))

    ob = {x: obj(x) for x in frag.objects}
    one = {f: morph(f) for f in frag.ones}
    two = {}
    for a in frag.twos:
        f, f2 = A.mor_bound(a)
        m1 = po2.dec(one[f])
        m2 = po2.dec(one[f2])
        obq = {"0": F.F2(a), "1": G.F2(a)}
        three = {
            "1_0": B.id3(F.F2(a)),
            "1_1": B.id3(G.F2(a)),
            "a0": mate_component(p, a),
            "a1": mate_component(q, a),
        }
        two[a] = po2.enc_trimod(Trimodification(m1, m2, obq, three, name=f"lift[{a}]"))
    three_ = {}
    for u in frag.threes:
        a, b = A.cell_bound(u)
        three_[u] = po2.enc_pert(
            Perturbation(po2.dec(two[a]), po2.dec(two[b]), {"0": F.F3(u), "1": G.F3(u)}, name=f"lift[{u}]")
        )
    hom_unitor = {f: po2.id3(two[A.id2(f)]) for f in frag.ones}
    hom_compositor = {}
    for a in frag.twos:
        for b in frag.twos:
            if A.mor_home(a) == A.mor_home(b) and A.mor_tgt(a) == A.mor_src(b):
                hom_compositor[(a, b)] = po2.id3(two[A.vcomp2(a, b)])
    unitor = {}
    for x in frag.objects:
        sfun = po2.dec(po2.id1(ob[x]))
        tfun = po2.dec(one[A.id1(x)])
        cells = {"a0": _unitor_mate(B, p, x), "a1": _unitor_mate(B, q, x)}
        unitor[x] = _trimod_adjeq(po2, _costrict_cell_trimod(po2, sfun, tfun, cells, f"iota[{x}]"))
    compositor = {}
    for (f, h) in frag.pairs:
        sfun = po2.dec(po2.comp1(one[f], one[h]))
        tfun = po2.dec(one[A.comp1(f, h)])
        cells = {
            "a0": _compositor_mate(B, p, sfun.padj("a0"), f, h),
            "a1": _compositor_mate(B, q, sfun.padj("a1"), f, h),
        }
        compositor[(f, h)] = _trimod_adjeq(po2, _costrict_cell_trimod(po2, sfun, tfun, cells, f"chi[{f},{h}]"))
    return TrihomContainer(
        A, po2, frag, ob, one, two, three_,
        hom_unitor, hom_compositor, unitor, compositor, {}, {}, {}, {},
        name=f"lift[{s.name}]",
    )


def lift_to_trimod(po2: PathObject, T: TrihomContainer) -> Trimodification:
    """Extract the trimodification classified by a weak functor into the
    2-cell object."""
    A = T.dom
    frag = T.frag
    B = po2.base
    p = _leg_trinat(po2, T, leg=0)
    q = _leg_trinat(po2, T, leg=1)
    ob = {}
    three = {}
    for x in frag.objects:
        ob[x] = po2.dec(T.ob[x]).two["mm"]
    for f in frag.ones:
        m = po2.dec(T.one[f])
        x, y = A.one_src(f), A.one_tgt(f)
        wR = B.whisk2r(ob[x], q.G.F1(f))
        wL = B.whisk2l(p.F.F1(f), ob[y])
        sq = Square(None, None, None, None, None)
        cell = m.pphi("mm")
        # undo the square mate
        back = unmate_square(B, p.padj(f), q.padj(f), wR, wL, cell)
        three[f] = back
    return Trimodification(p, q, ob, three, name=f"unlift[{T.name}]")


def unmate_square(B, adj_p: AdjEq, adj_q: AdjEq, e_r, e_l, m):
    """Inverse of ``square_star_mate``: from [e_r then adj_q.right] ==>
    [adj_p.right then e_l] back to [adj_p.left then e_r] ==> [e_l then adj_q.left]."""
    l1, l2 = adj_p.left, adj_q.left
    return B.vcomp3_many(
        [
            B.hcomp3(adj_p.unit if False else B.inv3(adj_p.unit) if False else adj_p.unit, B.id3(B.vcomp2(l1, e_r))) if False else B.hcomp3(adj_p.unit, B.id3(B.vcomp2(l1, e_r))),
            B.hcomp3_many([B.id3(l1), m, B.id3(l2)]),
            B.hcomp3_many([B.id3(l1), B.id3(adj_p.right) if False else B.id3(e_l), B.inv3(adj_q.counit)]) if False else B.hcomp3(B.id3(B.vcomp2(l1, e_l)), B.inv3(adj_q.counit)),
        ]
    )


def _leg_trinat(po2: PathObject, T: TrihomContainer, leg: int) -> Trinatural:
    """Boundary transformation of a trimodification lift."""
    A = T.dom
    frag = T.frag
    B = po2.base
    a_key = f"a{leg}"
    F_ob, G_ob = {}, {}
    F1, G1, F2, G2, F3, G3 = {}, {}, {}, {}, {}, {}
    ob, adj, three, unit, comp = {}, {}, {}, {}, {}
    for x in frag.objects:
        data = po2.dec(T.ob[x])
        ob[x] = data.one[a_key]
        F_ob[x], G_ob[x] = data.ob["0"], data.ob["1"]
    for f in frag.ones:
        m = po2.dec(T.one[f])
        adj[f] = swap_adjeq(B, m.padj(a_key))
        F1[f], G1[f] = m.pX("0"), m.pX("1")
    for a in frag.twos:
        sm = po2.dec(T.two[a])
        f, f2 = A.mor_bound(a)
        F2[a], G2[a] = sm.sX("0"), sm.sX("1")
        x, y = A.one_src(f), A.one_tgt(f)
        wF = B.whisk2r(sm.sX("0"), ob[y])
        wG = B.whisk2l(ob[x], sm.sX("1"))
        three[a] = unmate_cell(B, adj[f], adj[f2], wF, wG, sm.sf(a_key))
    for u in frag.threes:
        w = po2.dec(T.three[u])
        F3[u], G3[u] = w.wX("0"), w.wX("1")
    for x in frag.objects:
        i = A.id1(x)
        idadj = adjeq_on_identity(B, ob[x])
        cell = po2.dec(T.unitor[x].left).sf(a_key)
        unit[x] = B.inv3(unmate_cell(B, idadj, adj[i], B.id2(ob[x]), B.id2(ob[x]), cell))
    for key in frag.pairs:
        f, h = key
        c = A.comp1(f, h)
        s = po2.dec(po2.comp1(T.one[f], T.one[h]))
        cell = po2.dec(T.compositor[key].left).sf(a_key)
        comp[key] = B.inv3(star_mate(B, s.padj(a_key), swap_adjeq(B, adj[c]), cell))
    F = GrayFunctor(A, B, F_ob, F1, F2, F3, name=f"{T.name}|{leg}s")
    G = GrayFunctor(A, B, G_ob, G1, G2, G3, name=f"{T.name}|{leg}t")
    return Trinatural(F, G, frag, ob, adj, three, unit, comp, name=f"leg{leg}[{T.name}]")


def perturbation_to_lift(po3: PathObject, w: Perturbation) -> TrihomContainer:
    """Repackage a perturbation as a weak functor into the 3-cell object."""
    if po3.n != 3:
        raise CellError("lifting targets the 3-cell object")
    s, t = w.s, w.t
    p, q = s.p, s.q
    A = p.F.dom
    B = p.F.cod
    F, G = p.F, p.G
    frag = p.frag

    def obj(x) -> Enc:
        return po3.enc_functor(
            po3.functor_for((F.F0(x), G.F0(x), p.pX(x), q.pX(x), s.sX(x), t.sX(x), w.wX(x)))
        )

    def morph(f) -> Enc:
        x, y = A.one_src(f), A.one_tgt(f)
        src = po3.dec(obj(x))
        tgt = po3.dec(obj(y))
        adjs = {"a0": swap_adjeq(B, p.padj(f)), "a1": swap_adjeq(B, q.padj(f))}
        cells = {
            "m0": square_star_mate(B, p.padj(f), q.padj(f), trimod_square(s, f)),
            "m1": square_star_mate(B, p.padj(f), q.padj(f), trimod_square(t, f)),
        }
        return po3.enc_trinat(po3._morphism(src, tgt, F.F1(f), G.F1(f), adjs, cells))

    ob = {x: obj(x) for x in frag.objects}
    one = {f: morph(f) for f in frag.ones}
    two = {}
    for a in frag.twos:
        f, f2 = A.mor_bound(a)
        m1 = po3.dec(one[f])
        m2 = po3.dec(one[f2])
        obq = {"0": F.F2(a), "1": G.F2(a)}
        three = {
            "1_0": B.id3(F.F2(a)),
            "1_1": B.id3(G.F2(a)),
            "a0": mate_component(p, a),
            "a1": mate_component(q, a),
        }
        two[a] = po3.enc_trimod(Trimodification(m1, m2, obq, three, name=f"lift[{a}]"))
    three_ = {}
    for u in frag.threes:
        a, b = A.cell_bound(u)
        three_[u] = po3.enc_pert(
            Perturbation(po3.dec(two[a]), po3.dec(two[b]), {"0": F.F3(u), "1": G.F3(u)}, name=f"lift[{u}]")
        )
    hom_unitor = {f: po3.id3(two[A.id2(f)]) for f in frag.ones}
    hom_compositor = {}
    for a in frag.twos:
        for b in frag.twos:
            if A.mor_home(a) == A.mor_home(b) and A.mor_tgt(a) == A.mor_src(b):
                hom_compositor[(a, b)] = po3.id3(two[A.vcomp2(a, b)])
    unitor = {}
    for x in frag.objects:
        sfun = po3.dec(po3.id1(ob[x]))
        tfun = po3.dec(one[A.id1(x)])
        cells = {"a0": _unitor_mate(B, p, x), "a1": _unitor_mate(B, q, x)}
        unitor[x] = _trimod_adjeq(po3, _costrict_cell_trimod(po3, sfun, tfun, cells, f"iota[{x}]"))
    compositor = {}
    for (f, h) in frag.pairs:
        sfun = po3.dec(po3.comp1(one[f], one[h]))
        tfun = po3.dec(one[A.comp1(f, h)])
        cells = {
            "a0": _compositor_mate(B, p, sfun.padj("a0"), f, h),
            "a1": _compositor_mate(B, q, sfun.padj("a1"), f, h),
        }
        compositor[(f, h)] = _trimod_adjeq(po3, _costrict_cell_trimod(po3, sfun, tfun, cells, f"chi[{f},{h}]"))
    return TrihomContainer(
        A, po3, frag, ob, one, two, three_,
        hom_unitor, hom_compositor, unitor, compositor, {}, {}, {}, {},
        name=f"lift[{w.name}]",
    )


def lift_to_perturbation(po3: PathObject, T: TrihomContainer) -> Perturbation:
    A = T.dom
    frag = T.frag
    B = po3.base
    p = _leg_trinat(po3, T, leg=0)
    q = _leg_trinat(po3, T, leg=1)
    obs, obt, obw = {}, {}, {}
    threes, threet = {}, {}
    for x in frag.objects:
        data = po3.dec(T.ob[x])
        obs[x] = data.two["m0"]
        obt[x] = data.two["m1"]
        obw[x] = data.three["GG"]
    for f in frag.ones:
        m = po3.dec(T.one[f])
        x, y = A.one_src(f), A.one_tgt(f)
        for key, store, obd in (("m0", threes, obs), ("m1", threet, obt)):
            wR = B.whisk2r(obd[x], q.G.F1(f))
            wL = B.whisk2l(p.F.F1(f), obd[y])
            store[f] = unmate_square(B, p.padj(f), q.padj(f), wR, wL, m.pphi(key))
    s = Trimodification(p, q, obs, threes, name=f"unlift-s[{T.name}]")
    t = Trimodification(p, q, obt, threet, name=f"unlift-t[{T.name}]")
    return Perturbation(s, t, obw, name=f"unlift[{T.name}]")
