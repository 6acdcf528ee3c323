"""Strictification machinery in dimension two.

The path 2-category built over a base bicategory has paths of 1-cells as
its 1-cells and carrier-backed 2-cells: a 2-cell from path ``p`` to path
``q`` is a base 2-cell between their fixed evaluations.  Evaluation is the
left fold of the path (right-nested in applicative notation), so equality
of 2-cells is decidable and vertical and horizontal composition are strict.
The biased presentation (generating unitors, compositors and base 2-cells)
is exposed as a derived view whose relation families are theorems checked
by the test suite rather than quotients maintained at runtime.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .bicategory import BicatBase, TabBicategory, TabTwoCategory
from .computad import Graph, Path, enumerate_paths, path_compose
from .fixtures import FreeTwoCategory
from .homs import CellError
from .report import ValidationReport, timer


# ---------------------------------------------------------------------------
# the path 2-category over a base bicategory
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class St2TwoCell:
    src: Path
    tgt: Path
    carrier: str

    def __str__(self):
        return f"({self.src} => {self.tgt}, {self.carrier})"


class St2(BicatBase):
    """Strict 2-category of paths and carrier 2-cells over a bicategory."""

    def __init__(self, base: TabBicategory):
        self.base = base
        self.graph = Graph(
            tuple(base.objects),
            tuple((f, base.one_src(f), base.one_tgt(f)) for f in base.all_one_cells()),
        )

    # ---- 1-cells ---------------------------------------------------------
    def obs(self):
        return self.base.objects

    def one_src(self, p: Path):
        return p.start

    def one_tgt(self, p: Path):
        return p.end(self.graph)

    def id1(self, x):
        return Path(x)

    def comp1(self, p: Path, q: Path):
        return path_compose(self.graph, p, q)

    def eval(self, p: Path):
        """Evaluate a path in the base: empty to the identity, longer paths
        by the left fold (right-nested applicatively)."""
        if not p.edges:
            return self.base.id1(p.start)
        out = p.edges[0]
        for e in p.edges[1:]:
            out = self.base.comp1(out, e)
        return out

    # ---- canonical coherence cells ----------------------------------------
    def split_prefix(self, p: Path, j: int):
        """Base 2-cell eval(p) => comp1(eval(p[:j]), eval(p[j:]))."""
        b = self.base
        n = len(p.edges)
        if not 0 <= j <= n:
            raise CellError(f"split index {j} out of range for {p}")
        if j == n:
            return b.lam(self.eval(p))
        if j == 0:
            return b.rho(self.eval(p))
        if j == n - 1:
            return b.id2(self.eval(p))
        prefix = Path(p.start, p.edges[:j])
        rest = Path(p.start, p.edges[:-1])
        mid = Path(self.one_tgt(prefix), p.edges[j : n - 1])
        last = p.edges[n - 1]
        inner = self.split_prefix(rest, j)
        step = b.hcomp2(inner, b.id2(last))
        fix = b.inv2(b.assoc(self.eval(prefix), self.eval(mid), last))
        return b.vcomp2(step, fix)

    def constraint(self, p: Path, split: int):
        """Coherence cell for splitting off the trailing ``split`` edges."""
        return self.split_prefix(p, len(p.edges) - split)

    # ---- 2-cells -----------------------------------------------------------
    def cell(self, src: Path, tgt: Path, carrier) -> St2TwoCell:
        b = self.base
        if b.two_bound(carrier) != (self.eval(src), self.eval(tgt)):
            raise CellError(f"carrier {carrier} does not match {src} => {tgt}")
        return St2TwoCell(src, tgt, carrier)

    def two_bound(self, c: St2TwoCell):
        return (c.src, c.tgt)

    def id2(self, p: Path):
        return St2TwoCell(p, p, self.base.id2(self.eval(p)))

    def vcomp2(self, c1: St2TwoCell, c2: St2TwoCell):
        if c1.tgt != c2.src:
            raise CellError(f"cells not composable: {c1} then {c2}")
        return St2TwoCell(c1.src, c2.tgt, self.base.vcomp2(c1.carrier, c2.carrier))

    def hcomp2(self, c1: St2TwoCell, c2: St2TwoCell):
        b = self.base
        p, p2 = c1.src, c1.tgt
        q, q2 = c2.src, c2.tgt
        src = self.comp1(p, q)
        tgt = self.comp1(p2, q2)
        carrier = b.vcomp2_many(
            [
                self.split_prefix(src, len(p.edges)),
                b.hcomp2(c1.carrier, c2.carrier),
                b.inv2(self.split_prefix(tgt, len(p2.edges))),
            ]
        )
        return St2TwoCell(src, tgt, carrier)

    def assoc(self, p, q, r):
        return self.id2(self.comp1(self.comp1(p, q), r))

    def lam(self, p):
        return self.id2(p)

    def rho(self, p):
        return self.id2(p)

    def inv2(self, c: St2TwoCell):
        return St2TwoCell(c.tgt, c.src, self.base.inv2(c.carrier))

    def is_strict(self) -> bool:
        return True

    # ---- generators of the biased presentation ------------------------------
    def gen_two(self, a) -> St2TwoCell:
        f, g = self.base.two_bound(a)
        x = self.base.one_src(f)
        return St2TwoCell(Path(x, (f,)), Path(x, (g,)), a)

    def gen_iota(self, x) -> St2TwoCell:
        i = self.base.id1(x)
        return St2TwoCell(Path(x), Path(x, (i,)), self.base.id2(i))

    def gen_iota_inv(self, x) -> St2TwoCell:
        return self.inv2(self.gen_iota(x))

    def gen_chi(self, f, g) -> St2TwoCell:
        x = self.base.one_src(f)
        c = self.base.comp1(f, g)
        return St2TwoCell(Path(x, (f, g)), Path(x, (c,)), self.base.id2(c))

    def gen_chi_inv(self, f, g) -> St2TwoCell:
        return self.inv2(self.gen_chi(f, g))

    # ---- fragment enumeration ------------------------------------------------
    def paths(self, maxlen: int) -> list[Path]:
        out = []
        for x in self.base.objects:
            for y in self.base.objects:
                out.extend(enumerate_paths(self.graph, x, y, maxlen))
        return out

    def cells_between(self, p: Path, q: Path) -> list[St2TwoCell]:
        if (p.start, self.one_tgt(p)) != (q.start, self.one_tgt(q)):
            return []
        return [
            St2TwoCell(p, q, a)
            for a in self.base.hom_two(self.eval(p), self.eval(q))
        ]


def st2_eval(b: TabBicategory, p: Path):
    return St2(b).eval(p)


def st2_constraint(b: TabBicategory, p: Path, split: int):
    return St2(b).constraint(p, split)


# ---------------------------------------------------------------------------
# pseudofunctors and their 2-dimensional transfors
# ---------------------------------------------------------------------------


@dataclass
class Pseudofunctor:
    """Table-backed weak functor; ``dom`` must be tabulated, ``cod`` can be
    any structure implementing the bicategory operations."""

    dom: TabBicategory
    cod: BicatBase
    ob: dict
    one: dict
    two: dict
    unitor: dict
    compositor: dict
    name: str = "F"

    def F0(self, x):
        return self.ob[x]

    def F1(self, f):
        return self.one[f]

    def F2(self, a):
        return self.two[a]

    def iota(self, x):
        return self.unitor[x]

    def chi(self, f, g):
        return self.compositor[(f, g)]

    def is_strict_table(self) -> bool:
        c = self.cod
        return all(c.is_id2(v) for v in self.unitor.values()) and all(
            c.is_id2(v) for v in self.compositor.values()
        )


def identity_pseudofunctor(b: TabBicategory) -> Pseudofunctor:
    return Pseudofunctor(
        b,
        b,
        {x: x for x in b.objects},
        {f: f for f in b.all_one_cells()},
        {a: a for a in b.all_two_cells()},
        {x: b.id2(b.id1(x)) for x in b.objects},
        {
            (f, g): b.id2(b.comp1(f, g))
            for f in b.all_one_cells()
            for g in b.all_one_cells()
            if b.one_tgt(f) == b.one_src(g)
        },
        name="Id",
    )


def eta2(b: TabBicategory) -> Pseudofunctor:
    """The universal weak functor from a bicategory into its path 2-category:
    identity on objects, singleton paths on 1-cells, generating unitor and
    compositor cells with identity carriers."""
    s = St2(b)
    return Pseudofunctor(
        b,
        s,
        {x: x for x in b.objects},
        {f: Path(b.one_src(f), (f,)) for f in b.all_one_cells()},
        {a: s.gen_two(a) for a in b.all_two_cells()},
        {x: s.gen_iota(x) for x in b.objects},
        {
            (f, g): s.gen_chi(f, g)
            for f in b.all_one_cells()
            for g in b.all_one_cells()
            if b.one_tgt(f) == b.one_src(g)
        },
        name=f"eta[{b.name}]",
    )


def _composable_pairs(b: TabBicategory):
    ones = b.all_one_cells()
    for f in ones:
        for g in ones:
            if b.one_tgt(f) == b.one_src(g):
                yield f, g


def _composable_triples(b: TabBicategory):
    for f, g in _composable_pairs(b):
        for h in b.all_one_cells():
            if b.one_tgt(g) == b.one_src(h):
                yield f, g, h


def validate_pseudofunctor(F: Pseudofunctor) -> ValidationReport:
    rep = ValidationReport()
    with timer(rep):
        _validate_pf(F, rep)
    return rep


def _validate_pf(F: Pseudofunctor, rep: ValidationReport) -> None:
    dom, cod = F.dom, F.cod
    for x in dom.objects:
        if x not in F.ob:
            rep.add("structure/pseudofunctor", (x,), "object image missing")
    for f in dom.all_one_cells():
        if f not in F.one:
            rep.add("structure/pseudofunctor", (f,), "1-cell image missing")
            continue
        if (cod.one_src(F.F1(f)), cod.one_tgt(F.F1(f))) != (F.F0(dom.one_src(f)), F.F0(dom.one_tgt(f))):
            rep.add("structure/pseudofunctor", (f,), "1-cell image misbound")
    for a in dom.all_two_cells():
        if a not in F.two:
            rep.add("structure/pseudofunctor", (a,), "2-cell image missing")
            continue
        s, t = dom.two_bound(a)
        if cod.two_bound(F.F2(a)) != (F.F1(s), F.F1(t)):
            rep.add("structure/pseudofunctor", (a,), "2-cell image misbound")
    for x in dom.objects:
        i = F.unitor.get(x)
        want = (cod.id1(F.F0(x)), F.F1(dom.id1(x)))
        if i is None or cod.two_bound(i) != want:
            rep.add("structure/pseudofunctor", (x,), "unitor missing or misbound")
    for f, g in _composable_pairs(dom):
        c = F.compositor.get((f, g))
        want = (cod.comp1(F.F1(f), F.F1(g)), F.F1(dom.comp1(f, g)))
        if c is None or cod.two_bound(c) != want:
            rep.add("structure/pseudofunctor", (f, g), "compositor missing or misbound")
    if rep.is_structural():
        return
    for x in dom.objects:
        try:
            cod.inv2(F.iota(x))
        except CellError:
            rep.add("unitor-invertible", (x,), "unitor not invertible")
    for f, g in _composable_pairs(dom):
        try:
            cod.inv2(F.chi(f, g))
        except CellError:
            rep.add("compositor-invertible", (f, g), "compositor not invertible")
    # hom functors
    for f in dom.all_one_cells():
        if F.F2(dom.id2(f)) != cod.id2(F.F1(f)):
            rep.add("hom-functor", (f,), "identity 2-cell not preserved")
    for a in dom.all_two_cells():
        for b2 in dom.all_two_cells():
            if dom._two_home[a] != dom._two_home[b2] or dom.two_tgt(a) != dom.two_src(b2):
                continue
            if F.F2(dom.vcomp2(a, b2)) != cod.vcomp2(F.F2(a), F.F2(b2)):
                rep.add("hom-functor", (a, b2), "vertical composition not preserved")
    # naturality of the compositor in both arguments
    for a in dom.all_two_cells():
        fa, fa2 = dom.two_bound(a)
        for g in dom.all_one_cells():
            if dom.one_tgt(fa) == dom.one_src(g):
                lhs = cod.vcomp2(cod.hcomp2(F.F2(a), cod.id2(F.F1(g))), F.chi(fa2, g))
                rhs = cod.vcomp2(F.chi(fa, g), F.F2(dom.hcomp2(a, dom.id2(g))))
                if lhs != rhs:
                    rep.add("compositor-natural", (a, g), "compositor not natural in the first argument")
            if dom.one_tgt(g) == dom.one_src(fa):
                lhs = cod.vcomp2(cod.hcomp2(cod.id2(F.F1(g)), F.F2(a)), F.chi(g, fa2))
                rhs = cod.vcomp2(F.chi(g, fa), F.F2(dom.hcomp2(dom.id2(g), a)))
                if lhs != rhs:
                    rep.add("compositor-natural", (g, a), "compositor not natural in the second argument")
    # unit laws (with the structural cells of both sides inserted)
    for f in dom.all_one_cells():
        x, y = dom.one_src(f), dom.one_tgt(f)
        lhs = cod.vcomp2_many(
            [cod.lam(F.F1(f)), cod.hcomp2(cod.id2(F.F1(f)), F.iota(y)), F.chi(f, dom.id1(y))]
        )
        if lhs != F.F2(dom.lam(f)):
            rep.add("left-unit-law", (f,), "left unit law fails")
        rhs = cod.vcomp2_many(
            [cod.rho(F.F1(f)), cod.hcomp2(F.iota(x), cod.id2(F.F1(f))), F.chi(dom.id1(x), f)]
        )
        if rhs != F.F2(dom.rho(f)):
            rep.add("right-unit-law", (f,), "right unit law fails")
    # associativity law
    for f, g, h in _composable_triples(dom):
        Ff, Fg, Fh = F.F1(f), F.F1(g), F.F1(h)
        lhs = cod.vcomp2_many(
            [
                cod.hcomp2(cod.id2(Ff), F.chi(g, h)),
                F.chi(f, dom.comp1(g, h)),
                F.F2(dom.assoc(f, g, h)),
            ]
        )
        rhs = cod.vcomp2_many(
            [
                cod.assoc(Ff, Fg, Fh),
                cod.hcomp2(F.chi(f, g), cod.id2(Fh)),
                F.chi(dom.comp1(f, g), h),
            ]
        )
        if lhs != rhs:
            rep.add("associativity-law", (f, g, h), "associativity law fails")


@dataclass
class PseudonaturalTransformation:
    """Components ``p_X`` and invertible ``p_f: comp1(p_X, Gf) => comp1(Ff, p_Y)``."""

    F: Pseudofunctor
    G: Pseudofunctor
    ob: dict
    one: dict
    name: str = "p"

    def pX(self, x):
        return self.ob[x]

    def pf(self, f):
        return self.one[f]


def validate_pseudonatural(p: PseudonaturalTransformation) -> ValidationReport:
    rep = ValidationReport()
    with timer(rep):
        _validate_pn(p, rep)
    return rep


def _validate_pn(p: PseudonaturalTransformation, rep: ValidationReport) -> None:
    F, G = p.F, p.G
    dom, cod = F.dom, F.cod
    if G.dom is not dom or G.cod is not cod:
        rep.add("structure/pseudonatural", (), "parallel functors required")
        return
    for x in dom.objects:
        c = p.ob.get(x)
        if c is None or (cod.one_src(c), cod.one_tgt(c)) != (F.F0(x), G.F0(x)):
            rep.add("structure/pseudonatural", (x,), "1-cell component missing or misbound")
    for f in dom.all_one_cells():
        c = p.one.get(f)
        x, y = dom.one_src(f), dom.one_tgt(f)
        if c is None or cod.two_bound(c) != (
            cod.comp1(p.pX(x), G.F1(f)),
            cod.comp1(F.F1(f), p.pX(y)),
        ):
            rep.add("structure/pseudonatural", (f,), "2-cell component missing or misbound")
    if rep.is_structural():
        return
    for f in dom.all_one_cells():
        try:
            cod.inv2(p.pf(f))
        except CellError:
            rep.add("component-invertible", (f,), "2-cell component not invertible")
    for a in dom.all_two_cells():
        f, f2 = dom.two_bound(a)
        x, y = dom.one_src(f), dom.one_tgt(f)
        lhs = cod.vcomp2(cod.hcomp2(cod.id2(p.pX(x)), G.F2(a)), p.pf(f2))
        rhs = cod.vcomp2(p.pf(f), cod.hcomp2(F.F2(a), cod.id2(p.pX(y))))
        if lhs != rhs:
            rep.add("local-naturality", (a,), "component does not vary naturally along the 2-cell")
    for x in dom.objects:
        i = dom.id1(x)
        lhs = cod.vcomp2_many(
            [cod.lam(p.pX(x)), cod.hcomp2(cod.id2(p.pX(x)), G.iota(x)), p.pf(i)]
        )
        rhs = cod.vcomp2(cod.rho(p.pX(x)), cod.hcomp2(F.iota(x), cod.id2(p.pX(x))))
        if lhs != rhs:
            rep.add("unit-law", (x,), "unit law fails")
    for f, g in _composable_pairs(dom):
        x = dom.one_src(f)
        y = dom.one_tgt(f)
        z = dom.one_tgt(g)
        pX, pY, pZ = p.pX(x), p.pX(y), p.pX(z)
        lhs = cod.vcomp2(
            cod.hcomp2(cod.id2(pX), G.chi(f, g)),
            p.pf(dom.comp1(f, g)),
        )
        rhs = cod.vcomp2_many(
            [
                cod.assoc(pX, G.F1(f), G.F1(g)),
                cod.hcomp2(p.pf(f), cod.id2(G.F1(g))),
                cod.inv2(cod.assoc(F.F1(f), pY, G.F1(g))),
                cod.hcomp2(cod.id2(F.F1(f)), p.pf(g)),
                cod.assoc(F.F1(f), F.F1(g), pZ),
                cod.hcomp2(F.chi(f, g), cod.id2(pZ)),
            ]
        )
        if lhs != rhs:
            rep.add("composition-law", (f, g), "composition law fails")


@dataclass
class Icon:
    """Identity-component transformation between functors agreeing on objects."""

    F: Pseudofunctor
    G: Pseudofunctor
    one: dict
    name: str = "e"

    def ef(self, f):
        return self.one[f]


def identity_icon(F: Pseudofunctor) -> Icon:
    return Icon(F, F, {f: F.cod.id2(F.F1(f)) for f in F.dom.all_one_cells()}, name="1")


def icon_invert(e: Icon) -> Icon:
    cod = e.F.cod
    return Icon(e.G, e.F, {f: cod.inv2(v) for f, v in e.one.items()}, name=f"{e.name}^-1")


def icon_compose(j: Icon, i: Icon) -> Icon:
    """Composite of icons i: F -> G then j: G -> H, componentwise in homs."""
    if j.F is not i.G and j.F.one != i.G.one:
        raise CellError("icons not composable")
    cod = i.F.cod
    return Icon(
        i.F,
        j.G,
        {f: cod.vcomp2(i.ef(f), j.ef(f)) for f in i.one},
        name=f"{j.name}.{i.name}",
    )


def validate_icon(e: Icon) -> ValidationReport:
    rep = ValidationReport()
    with timer(rep):
        _validate_icon(e, rep)
    return rep


def _validate_icon(e: Icon, rep: ValidationReport) -> None:
    F, G = e.F, e.G
    dom, cod = F.dom, F.cod
    for x in dom.objects:
        if F.F0(x) != G.F0(x):
            rep.add("structure/icon", (x,), "functors disagree on an object")
    for f in dom.all_one_cells():
        c = e.one.get(f)
        if c is None or cod.two_bound(c) != (F.F1(f), G.F1(f)):
            rep.add("structure/icon", (f,), "component missing or misbound")
    if rep.is_structural():
        return
    for f in dom.all_one_cells():
        try:
            cod.inv2(e.ef(f))
        except CellError:
            rep.add("component-invertible", (f,), "component not invertible")
    for a in dom.all_two_cells():
        f, g = dom.two_bound(a)
        if cod.vcomp2(F.F2(a), e.ef(g)) != cod.vcomp2(e.ef(f), G.F2(a)):
            rep.add("local-naturality", (a,), "components not natural")
    for x in dom.objects:
        if G.iota(x) != cod.vcomp2(F.iota(x), e.ef(dom.id1(x))):
            rep.add("unit-law", (x,), "unit law fails")
    for f, g in _composable_pairs(dom):
        lhs = cod.vcomp2(cod.hcomp2(e.ef(f), e.ef(g)), G.chi(f, g))
        rhs = cod.vcomp2(F.chi(f, g), e.ef(dom.comp1(f, g)))
        if lhs != rhs:
            rep.add("composition-law", (f, g), "composition law fails")


@dataclass
class Modification:
    p: PseudonaturalTransformation
    q: PseudonaturalTransformation
    ob: dict
    name: str = "s"

    def sX(self, x):
        return self.ob[x]


def validate_modification(s: Modification) -> ValidationReport:
    rep = ValidationReport()
    with timer(rep):
        p, q = s.p, s.q
        F, G = p.F, p.G
        dom, cod = F.dom, F.cod
        for x in dom.objects:
            c = s.ob.get(x)
            if c is None or cod.two_bound(c) != (p.pX(x), q.pX(x)):
                rep.add("structure/modification", (x,), "component missing or misbound")
        if not rep.is_structural():
            for f in dom.all_one_cells():
                x, y = dom.one_src(f), dom.one_tgt(f)
                lhs = cod.vcomp2(cod.hcomp2(s.sX(x), cod.id2(G.F1(f))), q.pf(f))
                rhs = cod.vcomp2(p.pf(f), cod.hcomp2(cod.id2(F.F1(f)), s.sX(y)))
                if lhs != rhs:
                    rep.add("modification-law", (f,), "pasting equation fails")
    return rep


# ---------------------------------------------------------------------------
# factorization through the path 2-category
# ---------------------------------------------------------------------------


class StrictFactorization:
    """The strict functor out of the path 2-category induced by a weak
    functor into a strict codomain; composes with the universal functor to
    give back the original on the nose."""

    def __init__(self, F: Pseudofunctor, peel_front: bool = False):
        if not F.cod.is_strict():
            raise CellError("factorization requires a strict codomain")
        self.F = F
        self.st2 = St2(F.dom)
        self.peel_front = peel_front

    def on_ob(self, x):
        return self.F.F0(x)

    def on_path(self, p: Path):
        F = self.F
        if not p.edges:
            return F.cod.id1(F.F0(p.start))
        return F.cod.comp1_many([F.F1(e) for e in p.edges])

    def coherence(self, p: Path):
        """Canonical cell on_path(p) => F(eval(p)) built from the unitor and
        compositor of the weak functor."""
        F = self.F
        cod = F.cod
        if not p.edges:
            return F.iota(p.start)
        if len(p.edges) == 1:
            return cod.id2(F.F1(p.edges[0]))
        if self.peel_front:
            e, rest = p.edges[0], Path(self.st2.one_tgt(Path(p.start, p.edges[:1])), p.edges[1:])
            step = cod.hcomp2(cod.id2(F.F1(e)), self.coherence(rest))
            return cod.vcomp2(step, F.chi(e, self.st2.eval(rest)))
        rest, e = Path(p.start, p.edges[:-1]), p.edges[-1]
        step = cod.hcomp2(self.coherence(rest), cod.id2(F.F1(e)))
        return cod.vcomp2(step, F.chi(self.st2.eval(rest), e))

    def on_cell(self, c: St2TwoCell):
        F = self.F
        cod = F.cod
        return cod.vcomp2_many(
            [self.coherence(c.src), F.F2(c.carrier), cod.inv2(self.coherence(c.tgt))]
        )


def st2_factor(F: Pseudofunctor, peel_front: bool = False) -> StrictFactorization:
    return StrictFactorization(F, peel_front=peel_front)


# ---------------------------------------------------------------------------
# strictification of weak functors out of a free domain
# ---------------------------------------------------------------------------


def strictify_pseudofunctor(A: FreeTwoCategory, F: Pseudofunctor):
    """Strictify a weak functor whose domain's underlying category is free.

    Returns the strict functor agreeing with ``F`` on objects and edges,
    and the invertible icon from it to ``F``: the unitor on empty paths,
    the identity on edges, and compositor pastings on longer paths (peeling
    the first edge).
    """
    if F.dom is not A:
        raise CellError("functor domain is not the given free 2-category")
    cod = F.cod
    g = A.graph

    def edge_one(e: str) -> str:
        return A.one_of(Path(g.edge_src(e), (e,)))

    bar_one = {}
    for pid, p in A.paths.items():
        if not p.edges:
            bar_one[pid] = cod.id1(F.F0(p.start))
        else:
            bar_one[pid] = cod.comp1_many([F.F1(edge_one(e)) for e in p.edges])

    def e_component(p: Path):
        if not p.edges:
            return F.iota(p.start)
        if len(p.edges) == 1:
            return cod.id2(F.F1(edge_one(p.edges[0])))
        e0 = p.edges[0]
        rest = Path(g.edge_tgt(e0), p.edges[1:])
        step = cod.hcomp2(cod.id2(F.F1(edge_one(e0))), e_component(rest))
        return cod.vcomp2(step, F.chi(edge_one(e0), A.one_of(rest)))

    for f, h in _composable_pairs(A):
        if cod.comp1(bar_one[f], bar_one[h]) != bar_one[A.comp1_table[(f, h)]]:
            raise CellError("codomain composition is not strict enough on the image")
    icon_one = {pid: e_component(p) for pid, p in A.paths.items()}
    bar_two = {}
    for a in A.all_two_cells():
        s, t = A.two_bound(a)
        bar_two[a] = cod.vcomp2_many([icon_one[s], F.F2(a), cod.inv2(icon_one[t])])
    bar = Pseudofunctor(
        A,
        cod,
        dict(F.ob),
        bar_one,
        bar_two,
        {x: cod.id2(bar_one[A.id1_table[x]]) for x in A.objects},
        {
            (f, h): cod.id2(bar_one[A.comp1_table[(f, h)]])
            for f, h in _composable_pairs(A)
        },
        name=f"{F.name}|strict",
    )
    icon = Icon(bar, F, icon_one, name=f"e[{F.name}]")
    return bar, icon
