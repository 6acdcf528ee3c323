"""Cofibrant replacement for Gray-categories and strictification of weak
maps out of cofibrant domains.

A presented Gray-category is free in codimension one: its 1-cells are paths
over a graph, its 2-cells are sesquicategory terms over a 2-computad, and
its 3-cells are 3-cells of a tabulated base category between the
evaluations of parallel terms.  The replacement of a tabulated category has
one generating edge per 1-cell and one generating 2-cell per pair of
bounded parallel paths and base 2-cell between their evaluations.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .computad import (
    ComputadError,
    Graph,
    Path,
    SesquiTerm,
    Step,
    TwoComputad,
    check_term,
    enumerate_paths,
    enumerate_terms,
    gen_term,
    identity_term,
    path_compose,
    sesqui_inverse,
    sesqui_vcompose,
    sesqui_whisker,
)
from .graycategory import GrayBase, TabGrayCategory
from .homs import CellError
from .report import ValidationReport, timer
from .transfors3 import (
    AdjEq,
    Fragment,
    GrayFunctor,
    Trimodification,
    Trinatural,
    adjeq_on_identity,
    compose_adjeq,
    identity_trimodification,
    is_semistrict,
    paste_h,
    square,
    tab_fragment,
    trimod_square,
    validate_trinatural,
    whisk_adjeq,
    whisk_square_l,
    whisk_square_r,
)


@dataclass(frozen=True)
class TriCell:
    """3-cell of a presented Gray-category: a base 3-cell between the
    evaluations of two parallel terms."""

    src: SesquiTerm
    tgt: SesquiTerm
    cell: str


class PresentedGrayCategory(GrayBase):
    def __init__(self, name: str, computad: TwoComputad, base: TabGrayCategory,
                 eval_ob: dict, eval_edge: dict, eval_gen: dict, bound: int = 3):
        self.name = name
        self.computad = computad
        self.graph = computad.graph
        self.base = base
        self.eval_ob = eval_ob
        self.eval_edge = eval_edge
        self.eval_gen = eval_gen
        self.bound = bound
        self._path_cache: dict = {}
        self._term_cache: dict = {}

    # ---- evaluation ------------------------------------------------------
    def eval_path(self, p: Path):
        got = self._path_cache.get(p)
        if got is not None:
            return got
        if not p.edges:
            out = self.base.id1(self.eval_ob[p.start])
        else:
            out = self.eval_edge[p.edges[0]]
            for e in p.edges[1:]:
                out = self.base.comp1(out, self.eval_edge[e])
        self._path_cache[p] = out
        return out

    def eval_step(self, st: Step):
        cell = self.eval_gen[st.gen]
        if st.inv:
            cell = self.base.inv2(cell)
        return self.base.whisk2(self.eval_path(st.left), cell, self.eval_path(st.right))

    def eval_term(self, t: SesquiTerm):
        got = self._term_cache.get(t)
        if got is not None:
            return got
        b = self.base
        if not t.steps:
            out = b.id2(self.eval_path(t.source))
        else:
            cells = []
            for st in t.steps:
                cell = self.eval_gen[st.gen]
                if st.inv:
                    cell = b.inv2(cell)
                cells.append(b.whisk2(self.eval_path(st.left), cell, self.eval_path(st.right)))
            out = b.vcomp2_many(cells)
        self._term_cache[t] = out
        return out

    # ---- structure operations ---------------------------------------------
    def obs(self):
        return self.graph.objects

    def one_src(self, p: Path):
        return p.start

    def one_tgt(self, p: Path):
        return p.end(self.graph)

    def id1(self, x):
        return Path(x)

    def comp1(self, p, q):
        return path_compose(self.graph, p, q)

    def mor_bound(self, t: SesquiTerm):
        return (t.source, t.target)

    def id2(self, p: Path):
        return identity_term(p)

    def vcomp2(self, a, b):
        return sesqui_vcompose(self.computad, a, b)

    def whisk2l(self, f: Path, a: SesquiTerm):
        return sesqui_whisker(self.computad, f, a, Path(a.source.end(self.graph)))

    def whisk2r(self, a: SesquiTerm, h: Path):
        return sesqui_whisker(self.computad, Path(a.source.start), a, h)

    def cell_bound(self, u: TriCell):
        return (u.src, u.tgt)

    def id3(self, a: SesquiTerm):
        return TriCell(a, a, self.base.id3(self.eval_term(a)))

    def cell(self, src: SesquiTerm, tgt: SesquiTerm, base_cell) -> TriCell:
        if self.base.cell_bound(base_cell) != (self.eval_term(src), self.eval_term(tgt)):
            raise CellError("base cell does not match the term boundary")
        return TriCell(src, tgt, base_cell)

    def vcomp3(self, u: TriCell, v: TriCell):
        if u.tgt != v.src:
            raise CellError("3-cells not composable")
        return TriCell(u.src, v.tgt, self.base.vcomp3(u.cell, v.cell))

    def mwhisk3l(self, a: SesquiTerm, u: TriCell):
        return TriCell(
            self.vcomp2(a, u.src),
            self.vcomp2(a, u.tgt),
            self.base.hcomp3(self.base.id3(self.eval_term(a)), u.cell),
        )

    def mwhisk3r(self, u: TriCell, b: SesquiTerm):
        return TriCell(
            self.vcomp2(u.src, b),
            self.vcomp2(u.tgt, b),
            self.base.hcomp3(u.cell, self.base.id3(self.eval_term(b))),
        )

    def whisk3l(self, f: Path, u: TriCell):
        return TriCell(
            self.whisk2l(f, u.src),
            self.whisk2l(f, u.tgt),
            self.base.whisk3l(self.eval_path(f), u.cell),
        )

    def whisk3r(self, u: TriCell, h: Path):
        return TriCell(
            self.whisk2r(u.src, h),
            self.whisk2r(u.tgt, h),
            self.base.whisk3r(u.cell, self.eval_path(h)),
        )

    def inv3(self, u: TriCell):
        return TriCell(u.tgt, u.src, self.base.inv3(u.cell))

    def inv2(self, a: SesquiTerm):
        return sesqui_inverse(self.computad, a)

    def is_id2(self, a) -> bool:
        return not a.steps and a.source == a.target

    def is_id3(self, u) -> bool:
        return u.src == u.tgt and self.base.is_id3(u.cell)

    def gamma(self, a: SesquiTerm, b: SesquiTerm):
        f0, f1 = a.source, a.target
        g0, g1 = b.source, b.target
        route1 = self.vcomp2(self.whisk2r(a, g0), self.whisk2l(f1, b))
        route2 = self.vcomp2(self.whisk2l(f0, b), self.whisk2r(a, g1))
        return TriCell(route1, route2, self._gamma_eval(a, b))

    def _gamma_eval(self, a: SesquiTerm, b: SesquiTerm):
        """Base 3-cell of the interchanger: the canonical composite of base
        interchangers moving the steps of ``b`` past the steps of ``a``."""
        base = self.base
        ev = self.eval_term
        evp = self.eval_path
        if not a.steps or not b.steps:
            route1 = self.vcomp2(self.whisk2r(a, b.source), self.whisk2l(a.target, b))
            return base.id3(ev(route1))
        if len(a.steps) > 1:
            a1 = self._prefix(a, 1)
            arest = self._suffix(a, 1)
            c1 = base.hcomp3(
                base.id3(base.whisk2r(ev(a1), evp(b.source))), self._gamma_eval(arest, b)
            )
            c2 = base.hcomp3(
                self._gamma_eval(a1, b), base.id3(base.whisk2r(ev(arest), evp(b.target)))
            )
            return base.vcomp3(c1, c2)
        if len(b.steps) > 1:
            b1 = self._prefix(b, 1)
            brest = self._suffix(b, 1)
            c1 = base.hcomp3(
                self._gamma_eval(a, b1), base.id3(base.whisk2l(evp(a.target), ev(brest)))
            )
            c2 = base.hcomp3(
                base.id3(base.whisk2l(evp(a.source), ev(b1))), self._gamma_eval(a, brest)
            )
            return base.vcomp3(c1, c2)
        return base.gamma_of(ev(a), ev(b))

    def _prefix(self, t: SesquiTerm, n: int) -> SesquiTerm:
        run = t.source
        steps = t.steps[:n]
        for st in steps:
            from .computad import step_boundary

            _, run = step_boundary(self.computad, st)
        return check_term(self.computad, SesquiTerm(t.source, run, steps))

    def _suffix(self, t: SesquiTerm, n: int) -> SesquiTerm:
        run = t.source
        from .computad import step_boundary

        for st in t.steps[:n]:
            _, run = step_boundary(self.computad, st)
        return check_term(self.computad, SesquiTerm(run, t.target, t.steps[n:]))

    # ---- enumeration ---------------------------------------------------------
    def hom_one(self, x, y, maxlen: int | None = None):
        return enumerate_paths(self.graph, x, y, maxlen if maxlen is not None else self.bound)

    def hom_mors(self, p: Path, q: Path, max_steps: int = 2):
        return enumerate_terms(self.computad, p, q, max_steps)

    def hom_cells(self, a: SesquiTerm, b: SesquiTerm):
        if (a.source, a.target) != (b.source, b.target):
            return []
        out = []
        for c in self.base.hom_cells(self.eval_term(a), self.eval_term(b)):
            out.append(TriCell(a, b, c))
        return out


def presented_fragment(
    P: PresentedGrayCategory,
    maxlen: int | None = None,
    max_steps: int = 1,
    with_threes: bool = False,
) -> Fragment:
    maxlen = maxlen if maxlen is not None else P.bound
    objects = tuple(P.graph.objects)
    ones = []
    for x in objects:
        for y in objects:
            ones.extend(P.hom_one(x, y, maxlen))
    ones = tuple(ones)
    twos = []
    for x in objects:
        for y in objects:
            ps = P.hom_one(x, y, maxlen)
            for p in ps:
                for q in ps:
                    twos.extend(P.hom_mors(p, q, max_steps))
    twos = tuple(twos)
    threes = []
    if with_threes:
        for a in twos:
            for b in twos:
                if (a.source, a.target) == (b.source, b.target):
                    threes.extend(P.hom_cells(a, b))
    pairs = tuple(
        (p, q)
        for p in ones
        for q in ones
        if p.end(P.graph) == q.start and len(p.edges) + len(q.edges) <= maxlen
    )
    triples = tuple(
        (p, q, r)
        for (p, q) in pairs
        for r in ones
        if q.end(P.graph) == r.start and len(p.edges) + len(q.edges) + len(r.edges) <= maxlen
    )
    return Fragment(objects, ones, twos, tuple(threes), pairs, triples)


def free_presented(name: str, base: TabGrayCategory, eval_ob: dict, eval_edge: dict,
                   gens: tuple = (), eval_gen: dict | None = None,
                   invertible: frozenset = frozenset(), bound: int = 3) -> PresentedGrayCategory:
    """Presented Gray-category over the graph implied by ``eval_edge``.

    Edge endpoints are read off the base through ``eval_ob``; a reverse
    lookup keeps object names aligned."""
    rev = {v: k for k, v in eval_ob.items()}
    edges = []
    for e, img in sorted(eval_edge.items()):
        edges.append((e, rev[base.one_src(img)], rev[base.one_tgt(img)]))
    g = Graph(tuple(sorted(eval_ob)), tuple(edges))
    computad = TwoComputad(g, gens, invertible)
    return PresentedGrayCategory(name, computad, base, eval_ob, eval_edge, eval_gen or {}, bound)


# ---------------------------------------------------------------------------
# functors out of presented domains
# ---------------------------------------------------------------------------


@dataclass
class PresentedGrayFunctor:
    """Generator-determined strict functor out of a presented domain."""

    dom: PresentedGrayCategory
    cod: GrayBase
    ob: dict
    edge: dict
    gen: dict
    three_map: object = None  # callable base-3-cell -> cod 3-cell ingredient
    name: str = "F"

    def F0(self, x):
        return self.ob[x]

    def F1(self, p: Path):
        if not p.edges:
            return self.cod.id1(self.ob[p.start])
        return self.cod.comp1_many([self.edge[e] for e in p.edges])

    def F2(self, t: SesquiTerm):
        cod = self.cod
        if not t.steps:
            return cod.id2(self.F1(t.source))
        cells = []
        for st in t.steps:
            img = self.gen[st.gen]
            if st.inv:
                img = cod.inv2(img)
            cells.append(cod.whisk2(self.F1(st.left), img, self.F1(st.right)))
        return cod.vcomp2_many(cells)

    def F3(self, u: TriCell):
        if self.three_map is None:
            raise CellError(f"functor {self.name} has no 3-cell action")
        return self.three_map(self, u)


def eval_functor(P: PresentedGrayCategory, name: str = "eval") -> PresentedGrayFunctor:
    """The evaluation retraction from a presented category to its base."""

    def three_map(F, u: TriCell):
        return u.cell

    return PresentedGrayFunctor(
        P,
        P.base,
        dict(P.eval_ob),
        dict(P.eval_edge),
        dict(P.eval_gen),
        three_map,
        name=name,
    )


# ---------------------------------------------------------------------------
# trihomomorphism containers
# ---------------------------------------------------------------------------


@dataclass
class TrihomContainer:
    """Weak functor data between Gray-structures.

    Only structural well-formedness is checked in general; when the hom
    maps are strict and the coherence modifications are identities (the
    3-pseudofunctor case) the full axiom list is checked.
    """

    dom: GrayBase
    cod: GrayBase
    frag: Fragment
    ob: dict
    one: dict
    two: dict
    three: dict
    hom_unitor: dict        # f -> 3-cell: id2(F1 f) ==> F2(id2 f)
    hom_compositor: dict    # (a, b) -> 3-cell: vcomp2(F2 a, F2 b) ==> F2(vcomp2(a, b))
    unitor: dict            # X -> AdjEq on 2-cell id1(F0 X) => F1(id1 X)
    compositor: dict        # (f, g) -> AdjEq on comp1(F1 f, F1 g) => F1(comp1(f, g))
    comp_nat: dict          # ("l", a, g) or ("r", f, b) -> 3-cell, naturality of the compositor
    om: dict                # (f, g, h) -> 3-cell
    gam: dict               # f -> 3-cell
    delt: dict              # f -> 3-cell
    name: str = "T"

    def F0(self, x):
        return self.ob[x]

    def F1(self, f):
        return self.one[f]

    def F2(self, a):
        return self.two[a]

    def F3(self, u):
        return self.three[u]

    def chi(self, f, g) -> AdjEq:
        return self.compositor[(f, g)]

    def iota(self, x) -> AdjEq:
        return self.unitor[x]


def trihom_from_functor(F, frag: Fragment, name: str | None = None) -> TrihomContainer:
    """View a strict functor as a trihomomorphism with identity coherences."""
    cod = F.cod
    dom = F.dom
    one = {f: F.F1(f) for f in frag.ones}
    two = {a: F.F2(a) for a in frag.twos}
    three = {u: F.F3(u) for u in frag.threes}
    hom_unitor = {f: cod.id3(cod.id2(one[f])) for f in frag.ones}
    hom_compositor = {}
    for a in frag.twos:
        for b in frag.twos:
            if dom.mor_home(a) == dom.mor_home(b) and dom.mor_tgt(a) == dom.mor_src(b):
                hom_compositor[(a, b)] = cod.id3(cod.vcomp2(two[a], two[b]))
    unitor = {x: adjeq_on_identity(cod, cod.id1(F.F0(x))) for x in frag.objects}
    compositor = {
        (f, g): adjeq_on_identity(cod, cod.comp1(one[f], one[g])) for (f, g) in frag.pairs
    }
    comp_nat = {}
    for (f, g) in frag.pairs:
        for a in frag.twos:
            if dom.mor_bound(a)[0] == f:
                comp_nat[("l", a, g)] = cod.id3(cod.whisk2r(two[a], one[g]))
            if dom.mor_bound(a)[0] == g:
                comp_nat[("r", f, a)] = cod.id3(cod.whisk2l(one[f], two[a]))
    om = {
        (f, g, h): cod.id3(cod.id2(cod.comp1_many([one[f], one[g], one[h]])))
        for (f, g, h) in frag.triples
    }
    gam = {f: cod.id3(cod.id2(one[f])) for f in frag.ones}
    delt = {f: cod.id3(cod.id2(one[f])) for f in frag.ones}
    return TrihomContainer(
        dom, cod, frag, dict(F.ob), one, two, three,
        hom_unitor, hom_compositor, unitor, compositor, comp_nat, om, gam, delt,
        name=name or F.name,
    )


def validate_trihom_container(T: TrihomContainer) -> ValidationReport:
    """Structural well-formedness plus compositor naturality boundaries."""
    rep = ValidationReport()
    with timer(rep):
        dom, cod, frag = T.dom, T.cod, T.frag
        for f in frag.ones:
            if f not in T.one:
                rep.add("structure/trihom", (repr(f),), "1-cell image missing")
        for a in frag.twos:
            if a not in T.two:
                rep.add("structure/trihom", (repr(a),), "2-cell image missing")
                continue
            s, t = dom.mor_bound(a)
            if cod.mor_bound(T.two[a]) != (T.one[s], T.one[t]):
                rep.add("structure/trihom", (repr(a),), "2-cell image misbound")
        for x in frag.objects:
            a = T.unitor.get(x)
            if a is None or cod.mor_bound(a.left) != (cod.id1(T.ob[x]), T.one[dom.id1(x)]):
                rep.add("structure/trihom", (repr(x),), "unitor missing or misbound")
        for (f, g) in frag.pairs:
            a = T.compositor.get((f, g))
            want = (cod.comp1(T.one[f], T.one[g]), T.one[dom.comp1(f, g)])
            if a is None or cod.mor_bound(a.left) != want:
                rep.add("structure/trihom", (repr(f), repr(g)), "compositor missing or misbound")
        if rep.violations:
            return rep
        from .transfors3 import validate_adjeq

        for x in frag.objects:
            validate_adjeq(cod, T.unitor[x], rep, (repr(x),))
        for key in frag.pairs:
            validate_adjeq(cod, T.compositor[key], rep, tuple(map(repr, key)))
    return rep


def validate_three_pseudofunctor(T: TrihomContainer) -> ValidationReport:
    """Full check in the case of strict hom maps, 2-natural unitors and
    compositors, and identity coherence modifications."""
    rep = validate_trihom_container(T)
    with timer(rep):
        if rep.violations:
            return rep
        dom, cod, frag = T.dom, T.cod, T.frag
        for f in frag.ones:
            if not cod.is_id3(T.hom_unitor[f]):
                rep.add("hom-map-strict", (repr(f),), "hom unitor not the identity")
        for key, c in T.hom_compositor.items():
            if not cod.is_id3(c):
                rep.add("hom-map-strict", tuple(map(repr, key)), "hom compositor not the identity")
        for key, c in T.om.items():
            if not cod.is_id3(c):
                rep.add("coherence-identity", tuple(map(repr, key)), "associator modification not the identity")
        for d in (T.gam, T.delt):
            for key, c in d.items():
                if not cod.is_id3(c):
                    rep.add("coherence-identity", (repr(key),), "unitor modification not the identity")
        # strict 2-naturality of the compositor
        for (f, g) in frag.pairs:
            for a in frag.twos:
                s, t = dom.mor_bound(a)
                if s == f:
                    lhs = cod.vcomp2(cod.whisk2r(T.two[a], T.one[g]), T.chi(t, g).left)
                    rhs = cod.vcomp2(T.chi(f, g).left, T.two[dom.whisk2r(a, g)])
                    if lhs != rhs:
                        rep.add("compositor-natural", (repr(a), repr(g)), "compositor square does not commute")
                if s == g:
                    lhs = cod.vcomp2(cod.whisk2l(T.one[f], T.two[a]), T.chi(f, t).left)
                    rhs = cod.vcomp2(T.chi(f, g).left, T.two[dom.whisk2l(f, a)])
                    if lhs != rhs:
                        rep.add("compositor-natural", (repr(f), repr(a)), "compositor square does not commute")
        # strict unit laws
        for f in frag.ones:
            x, y = dom.one_src(f), dom.one_tgt(f)
            left = cod.vcomp2(cod.whisk2r(T.iota(x).left, T.one[f]), T.chi(dom.id1(x), f).left)
            if left != cod.id2(T.one[f]):
                rep.add("unit-law-left", (repr(f),), "left unit law fails")
            right = cod.vcomp2(cod.whisk2l(T.one[f], T.iota(y).left), T.chi(f, dom.id1(y)).left)
            if right != cod.id2(T.one[f]):
                rep.add("unit-law-right", (repr(f),), "right unit law fails")
        # strict associativity
        for (f, g, h) in frag.triples:
            lhs = cod.vcomp2(cod.whisk2r(T.chi(f, g).left, T.one[h]), T.chi(dom.comp1(f, g), h).left)
            rhs = cod.vcomp2(cod.whisk2l(T.one[f], T.chi(g, h).left), T.chi(f, dom.comp1(g, h)).left)
            if lhs != rhs:
                rep.add("associativity-law", (repr(f), repr(g), repr(h)), "associativity law fails")
    return rep


# ---------------------------------------------------------------------------
# cofibrant replacement
# ---------------------------------------------------------------------------


def _gr_gen_id(p: Path, q: Path, m: str) -> str:
    return f"[{p}|{q}|{m}]"


def gr_gray(A: TabGrayCategory, bound: int = 3):
    """Cofibrant replacement of a tabulated Gray-category, with its unit
    (materialized on the cells of ``A``) and the evaluating retraction."""
    eval_ob = {x: x for x in A.objects}
    eval_edge = {f: f for f in A.all_one_cells()}
    revitems = sorted(eval_edge)
    edges = tuple((f, A.one_src(f), A.one_tgt(f)) for f in revitems)
    g = Graph(tuple(A.objects), edges)
    gens = []
    eval_gen = {}
    for x in A.objects:
        for y in A.objects:
            paths = enumerate_paths(g, x, y, bound)
            for p in paths:
                for q in paths:
                    ep = _eval_path_in(A, p)
                    eq = _eval_path_in(A, q)
                    for m in A.hom_mors(ep, eq):
                        gid = _gr_gen_id(p, q, m)
                        gens.append((gid, p, q))
                        eval_gen[gid] = m
    computad = TwoComputad(g, tuple(gens), frozenset())
    P = PresentedGrayCategory(f"Gr[{A.name}]", computad, A, eval_ob, eval_edge, eval_gen, bound)
    eta = _gr_unit(A, P)
    eta_star = eval_functor(P, name=f"eval[{A.name}]")
    return P, eta, eta_star


def _eval_path_in(A: TabGrayCategory, p: Path):
    if not p.edges:
        return A.id1(p.start)
    out = p.edges[0]
    for e in p.edges[1:]:
        out = A.comp1(out, e)
    return out


def _gr_unit(A: TabGrayCategory, P: PresentedGrayCategory) -> TrihomContainer:
    """The universal weak functor from a category into its replacement,
    materialized on the cells of the tabulated domain."""
    frag = tab_fragment(A)

    def sgl(f) -> Path:
        return Path(A.one_src(f), (f,))

    def gen2(p: Path, q: Path, m) -> SesquiTerm:
        return gen_term(P.computad, _gr_gen_id(p, q, m))

    one = {f: sgl(f) for f in frag.ones}
    two = {}
    for a in frag.twos:
        s, t = A.mor_bound(a)
        two[a] = gen2(sgl(s), sgl(t), a)
    three = {}
    for u in frag.threes:
        s, t = A.cell_bound(u)
        three[u] = TriCell(two[s], two[t], u)
    hom_unitor = {}
    for f in frag.ones:
        hom_unitor[f] = TriCell(identity_term(sgl(f)), two[A.id2(f)], A.id3(A.id2(f)))
    hom_compositor = {}
    for a in frag.twos:
        for b in frag.twos:
            if A.mor_home(a) == A.mor_home(b) and A.mor_tgt(a) == A.mor_src(b):
                hom_compositor[(a, b)] = TriCell(
                    P.vcomp2(two[a], two[b]), two[A.vcomp2(a, b)], A.id3(A.vcomp2(a, b))
                )
    unitor = {}
    for x in frag.objects:
        i = A.id1(x)
        fwd = gen2(Path(x), sgl(i), A.id2(i))
        bwd = gen2(sgl(i), Path(x), A.id2(i))
        unitor[x] = AdjEq(
            fwd,
            bwd,
            TriCell(identity_term(Path(x)), P.vcomp2(fwd, bwd), A.id3(A.id2(i))),
            TriCell(P.vcomp2(bwd, fwd), identity_term(sgl(i)), A.id3(A.id2(i))),
        )
    compositor = {}
    for (f, g) in frag.pairs:
        c = A.comp1(f, g)
        pair_path = path_compose(P.graph, sgl(f), sgl(g))
        fwd = gen2(pair_path, sgl(c), A.id2(c))
        bwd = gen2(sgl(c), pair_path, A.id2(c))
        compositor[(f, g)] = AdjEq(
            fwd,
            bwd,
            TriCell(identity_term(pair_path), P.vcomp2(fwd, bwd), A.id3(A.id2(c))),
            TriCell(P.vcomp2(bwd, fwd), identity_term(sgl(c)), A.id3(A.id2(c))),
        )
    comp_nat = {}
    for (f, g) in frag.pairs:
        for a in frag.twos:
            s, t = A.mor_bound(a)
            if s == f:
                w = A.whisk2r(a, g)
                route1 = P.vcomp2(P.whisk2r(two[a], sgl(g)), compositor[(t, g)].left)
                route2 = P.vcomp2(compositor[(f, g)].left, two[w])
                comp_nat[("l", a, g)] = TriCell(route1, route2, A.id3(w))
            if s == g:
                w = A.whisk2l(f, a)
                route1 = P.vcomp2(P.whisk2l(sgl(f), two[a]), compositor[(f, t)].left)
                route2 = P.vcomp2(compositor[(f, g)].left, two[w])
                comp_nat[("r", f, a)] = TriCell(route1, route2, A.id3(w))
    om = {}
    for (f, g, h) in frag.triples:
        c = A.comp1_many([f, g, h])
        route1 = P.vcomp2(
            P.whisk2l(sgl(f), compositor[(g, h)].left), compositor[(f, A.comp1(g, h))].left
        )
        route2 = P.vcomp2(
            P.whisk2r(compositor[(f, g)].left, sgl(h)), compositor[(A.comp1(f, g), h)].left
        )
        om[(f, g, h)] = TriCell(route2, route1, A.id3(A.id2(c)))
    gam = {}
    delt = {}
    for f in frag.ones:
        x, y = A.one_src(f), A.one_tgt(f)
        gam_route = P.vcomp2(P.whisk2r(unitor[x].left, sgl(f)), compositor[(A.id1(x), f)].left)
        gam[f] = TriCell(gam_route, identity_term(sgl(f)), A.id3(A.id2(f)))
        delt_route = P.vcomp2(P.whisk2l(sgl(f), unitor[y].left), compositor[(f, A.id1(y))].left)
        delt[f] = TriCell(delt_route, identity_term(sgl(f)), A.id3(A.id2(f)))
    return TrihomContainer(
        A, P, frag,
        {x: x for x in frag.objects}, one, two, three,
        hom_unitor, hom_compositor, unitor, compositor, comp_nat, om, gam, delt,
        name=f"eta[{A.name}]",
    )


# ---------------------------------------------------------------------------
# generator-determined transfors over presented domains (semi-strict case)
# ---------------------------------------------------------------------------


def _staircase_adj(P: PresentedGrayCategory, cod: GrayBase, F, G, ob: dict, edge_adj: dict, p: Path) -> AdjEq:
    if not p.edges:
        return adjeq_on_identity(cod, ob[p.start])
    rest, e = Path(p.start, p.edges[:-1]), p.edges[-1]
    inner = _staircase_adj(P, cod, F, G, ob, edge_adj, rest)
    first = whisk_adjeq(cod, F.F1(rest), edge_adj[e], None)
    second = whisk_adjeq(cod, None, inner, G.F1(Path(rest.end(P.graph), (e,))))
    return compose_adjeq(cod, first, second)


def build_semistrict(
    P: PresentedGrayCategory,
    F,
    G,
    ob: dict,
    edge_adj: dict,
    gen_cells: dict,
    frag: Fragment,
    name: str = "p",
) -> Trinatural:
    """Unique semi-strict extension of generator data over a cofibrant
    domain: 1-cell components on objects, adjoint equivalences on edges,
    local constraints on generating 2-cells."""
    cod = F.cod
    adj = {}
    for p in frag.ones:
        adj[p] = _staircase_adj(P, cod, F, G, ob, edge_adj, p)
    unit = {x: cod.id3(cod.id2(ob[x])) for x in frag.objects}
    comp = {}
    for (p, q) in frag.pairs:
        comp[(p, q)] = cod.id3(adj[path_compose(P.graph, p, q)].left)
    tri = Trinatural(F, G, frag, dict(ob), adj, {}, unit, comp, name=name)
    three = {}
    for t in frag.twos:
        three[t] = _extend_local(P, tri, gen_cells, t)
    tri.three = three
    return tri


def _subterm(P: PresentedGrayCategory, t: SesquiTerm, i: int, j: int) -> SesquiTerm:
    from .computad import step_boundary

    run = t.source
    for st in t.steps[:i]:
        _, run = step_boundary(P.computad, st)
    start = run
    for st in t.steps[i:j]:
        _, run = step_boundary(P.computad, st)
    return check_term(P.computad, SesquiTerm(start, run, t.steps[i:j]))


def _extend_local(P: PresentedGrayCategory, tri: Trinatural, gen_cells: dict, t: SesquiTerm):
    """Local constraint of the semi-strict extension at an arbitrary term:
    pasting the whiskered single-step constraints along vertical
    composition in the domain hom."""
    cod = tri.F.cod
    F, G = tri.F, tri.G
    n = len(t.steps)
    if n == 0:
        return cod.id3(tri.adj[t.source].left)
    if n == 1:
        return _whiskered_step_cell(P, tri, gen_cells, t.steps[0])
    x = t.source.start
    y = t.source.end(P.graph)
    head = _subterm(P, t, 0, 1)
    tail = _subterm(P, t, 1, n)
    c_head = _whiskered_step_cell(P, tri, gen_cells, t.steps[0])
    c_tail = _extend_local(P, tri, gen_cells, tail)
    lead = cod.whisk2r(F.F2(head), tri.pX(y))
    trail = cod.whisk2l(tri.pX(x), G.F2(tail))
    return cod.vcomp3(
        cod.hcomp3(cod.id3(lead), c_tail),
        cod.hcomp3(c_head, cod.id3(trail)),
    )


def _whiskered_step_cell(P: PresentedGrayCategory, tri: Trinatural, gen_cells: dict, st: Step):
    """Local constraint at a single whiskered generator, forced by the
    whiskering laws of a semi-strict transformation."""
    cod = tri.F.cod
    gterm = gen_term(P.computad, st.gen, st.inv)
    if st.inv:
        cell = _inverse_gen_cell(P, tri, st.gen, gen_cells[st.gen])
    else:
        cell = gen_cells[st.gen]
    cur = gterm
    if st.right.edges:
        cell = _rear_whisk_local(P, tri, cell, cur, st.right)
        cur = P.whisk2r(cur, st.right)
    if st.left.edges:
        cell = _front_whisk_local(P, tri, cell, cur, st.left)
    return cell


def _inverse_gen_cell(P: PresentedGrayCategory, tri: Trinatural, gen: str, cell):
    """Constraint at a formally inverted generator, the conjugate of the
    constraint at the generator."""
    cod = tri.F.cod
    F, G = tri.F, tri.G
    src_p, tgt_p = P.computad.src2(gen), P.computad.tgt2(gen)
    gterm = gen_term(P.computad, gen)
    y = src_p.end(P.graph)
    x = src_p.start
    a = cod.whisk2r(F.F2(gterm), tri.pX(y))
    d = cod.whisk2l(tri.pX(x), G.F2(gterm))
    return cod.hcomp3_many(
        [cod.id3(cod.inv2(a)), cod.inv3(cell), cod.id3(cod.inv2(d))]
    )


def _rear_whisk_local(P: PresentedGrayCategory, tri: Trinatural, cell, term: SesquiTerm, h: Path):
    """Constraint at ``whisk2r(term, h)`` from the constraint at ``term``
    (the right whiskering law solved for the whiskered constraint)."""
    cod = tri.F.cod
    F, G = tri.F, tri.G
    src_p, tgt_p = term.source, term.target
    Fa = F.F2(term)
    step1 = cod.hcomp3(
        cod.gamma_of(Fa, tri.pf(h)),
        cod.id3(cod.whisk2r(tri.pf(tgt_p), G.F1(h))),
    )
    step2 = cod.hcomp3(
        cod.id3(cod.whisk2l(F.F1(src_p), tri.pf(h))),
        cod.whisk3r(cell, G.F1(h)),
    )
    return cod.vcomp3(step1, step2)


def _front_whisk_local(P: PresentedGrayCategory, tri: Trinatural, cell, term: SesquiTerm, e: Path):
    """Constraint at ``whisk2l(e, term)`` from the constraint at ``term``
    (the left whiskering law solved for the whiskered constraint)."""
    cod = tri.F.cod
    F, G = tri.F, tri.G
    src_p, tgt_p = term.source, term.target
    Ga = G.F2(term)
    step1 = cod.hcomp3(
        cod.whisk3l(F.F1(e), cell),
        cod.id3(cod.whisk2r(tri.pf(e), G.F1(tgt_p))),
    )
    step2 = cod.hcomp3(
        cod.id3(cod.whisk2l(F.F1(e), tri.pf(src_p))),
        cod.inv3(cod.gamma_of(tri.pf(e), Ga)),
    )
    return cod.vcomp3(step1, step2)


def build_trimod_gen(
    P: PresentedGrayCategory,
    p: Trinatural,
    q: Trinatural,
    ob: dict,
    edge_cells: dict,
    name: str = "s",
) -> Trimodification:
    """Unique trimodification between semi-strict transformations from
    2-cell components on objects and 3-cell components on generating edges."""
    cod = p.F.cod
    F, G = p.F, p.G
    three: dict = {}

    def sq(path: Path):
        x, y = path.start, path.end(P.graph)
        return square(
            cod,
            p.pf(path),
            cod.whisk2r(ob[x], G.F1(path)),
            cod.whisk2l(F.F1(path), ob[y]),
            q.pf(path),
            three[path],
        )

    for path in sorted(p.frag.ones, key=lambda t: (len(t.edges), str(t))):
        if not path.edges:
            three[path] = cod.id3(ob[path.start])
        elif len(path.edges) == 1:
            three[path] = edge_cells[path.edges[0]]
        else:
            rest, e = Path(path.start, path.edges[:-1]), Path(
                Path(path.start, path.edges[:-1]).end(P.graph), (path.edges[-1],)
            )
            A = whisk_square_l(cod, F.F1(rest), sq(e))
            B = whisk_square_r(cod, sq(rest), G.F1(e))
            three[path] = paste_h(cod, A, B).cell
    return Trimodification(p, q, dict(ob), three, name=name)


def build_perturbation_gen(s: Trimodification, t: Trimodification, ob: dict, name: str = "w"):
    from .transfors3 import Perturbation

    return Perturbation(s, t, dict(ob), name=name)


# ---------------------------------------------------------------------------
# semi-strictification of transformations
# ---------------------------------------------------------------------------


def semistrictify_trinatural(P: PresentedGrayCategory, p: Trinatural):
    """Replace a transformation over a cofibrant domain by the unique
    semi-strict one agreeing on objects and generators, together with the
    invertible costrict comparison trimodification."""
    cod = p.F.cod
    edge_adj = {}
    for e, s, t in P.graph.edges:
        edge_adj[e] = p.adj[Path(s, (e,))]
    gen_cells = {}
    for gid, sp, tp in P.computad.gen2:
        t = gen_term(P.computad, gid)
        if t in p.three:
            gen_cells[gid] = p.three[t]
    bar = build_semistrict(
        P, p.F, p.G, dict(p.ob), edge_adj, gen_cells, p.frag, name=f"{p.name}|ss"
    )
    ob = {x: cod.id2(p.pX(x)) for x in p.frag.objects}
    three: dict = {}
    for path in sorted(p.frag.ones, key=lambda t: (len(t.edges), str(t))):
        if not path.edges:
            three[path] = p.punit(path.start)
        elif len(path.edges) == 1:
            three[path] = cod.id3(p.pf(path))
        else:
            rest = Path(path.start, path.edges[:-1])
            e = Path(rest.end(P.graph), (path.edges[-1],))
            step = cod.hcomp3(
                cod.id3(cod.whisk2l(p.F.F1(rest), p.pf(e))),
                cod.whisk3r(three[rest], p.G.F1(e)),
            )
            three[path] = cod.vcomp3(step, p.pcomp(rest, e))
    i = Trimodification(bar, p, ob, three, name=f"i[{p.name}]")
    return bar, i


# ---------------------------------------------------------------------------
# strictification of trihomomorphisms
# ---------------------------------------------------------------------------


@dataclass
class StrictificationIcon:
    """The unital pseudo-icon comparison produced by strictification."""

    weak: TrihomContainer
    strict: PresentedGrayFunctor
    comp: dict  # Path -> AdjEq on a 2-cell strict(path) => weak(path)
    name: str = "e"

    def at(self, p: Path) -> AdjEq:
        return self.comp[p]


def strictify_trihomomorphism(P: PresentedGrayCategory, T: TrihomContainer):
    """Strictify a weak functor out of a cofibrant domain.

    The strict functor agrees with the weak one on the computad and the
    comparison has the unitor on empty paths, the identity on generating
    edges, and compositor pastings on longer paths (peeling the leftmost
    edge)."""
    cod = T.cod
    comp: dict = {}

    def eadj(p: Path) -> AdjEq:
        got = comp.get(p)
        if got is not None:
            return got
        if not p.edges:
            out = T.iota(p.start)
        elif len(p.edges) == 1:
            out = adjeq_on_identity(cod, T.one[p])
        else:
            g0 = Path(p.start, p.edges[:1])
            rest = Path(g0.end(P.graph), p.edges[1:])
            inner = whisk_adjeq(cod, T.one[g0], eadj(rest), None)
            out = compose_adjeq(cod, inner, T.chi(g0, rest))
        comp[p] = out
        return out

    for p in T.frag.ones:
        eadj(p)
    gen_img = {}
    for gid, sp, tp in P.computad.gen2:
        t = gen_term(P.computad, gid)
        if t in T.two:
            gen_img[gid] = cod.vcomp2_many([eadj(sp).left, T.two[t], eadj(tp).right])

    def three_map(func, u: TriCell):
        if P.is_id3(u) or (u.src == u.tgt and P.base.is_id3(u.cell)):
            return cod.id3(func.F2(u.src))
        raise CellError("strictification of non-identity 3-cells needs the full weak action")

    bar = PresentedGrayFunctor(
        P,
        cod,
        dict(T.ob),
        {e: T.one[Path(s, (e,))] for e, s, t in P.graph.edges},
        gen_img,
        three_map,
        name=f"{T.name}|strict",
    )
    icon = StrictificationIcon(T, bar, comp, name=f"e[{T.name}]")
    return bar, icon


def validate_strictification(P: PresentedGrayCategory, T: TrihomContainer,
                             bar: PresentedGrayFunctor, icon: StrictificationIcon) -> ValidationReport:
    """Check the stated properties of the strictification pair: agreement on
    the computad, unital comparison with identity edge components, adjoint
    equivalence components, and commutation of the comparison squares."""
    rep = ValidationReport()
    with timer(rep):
        cod = T.cod
        for e, s, t in P.graph.edges:
            pth = Path(s, (e,))
            if bar.F1(pth) != T.one[pth]:
                rep.add("agrees-on-generators", (e,), "strict functor differs on a generating edge")
            if not cod.is_id2(icon.at(pth).left):
                rep.add("icon-edge-identity", (e,), "comparison is not the identity on a generating edge")
        for x in P.graph.objects:
            if icon.at(Path(x)).left != T.iota(x).left:
                rep.add("icon-unital", (x,), "comparison on an identity is not the unitor")
        from .transfors3 import validate_adjeq

        for p in T.frag.ones:
            a = icon.at(p)
            want = (bar.F1(p), T.one[p])
            if cod.mor_bound(a.left) != want:
                rep.add("structure/strictification", (str(p),), "comparison component misbound")
                continue
            validate_adjeq(cod, a, rep, (str(p),))
        # peeled-edge recursion against the compositor of the weak functor
        for p in T.frag.ones:
            if len(p.edges) < 2:
                continue
            g0 = Path(p.start, p.edges[:1])
            rest = Path(g0.end(P.graph), p.edges[1:])
            want = cod.vcomp2(
                cod.whisk2l(T.one[g0], icon.at(rest).left), T.chi(g0, rest).left
            )
            if icon.at(p).left != want:
                rep.add("icon-compositor", (str(p),), "comparison does not match the compositor pasting")
        # conjugation squares on generating 2-cells
        for gid, sp, tp in P.computad.gen2:
            t = gen_term(P.computad, gid)
            if t not in T.two:
                continue
            lhs = cod.vcomp2(bar.F2(t), icon.at(tp).left)
            rhs = cod.vcomp2(icon.at(sp).left, T.two[t])
            if lhs != rhs:
                rep.add("icon-naturality", (gid,), "comparison square does not commute on a generator")
    return rep


# ---------------------------------------------------------------------------
# the replacement on higher cells
# ---------------------------------------------------------------------------


def gr_functor(PA: PresentedGrayCategory, PB: PresentedGrayCategory, F: GrayFunctor,
               name: str | None = None) -> PresentedGrayFunctor:
    """Image of a strict functor between tabulated categories under the
    replacement: edges to singleton paths, generators to generators."""
    A, B = F.dom, F.cod

    def map_path(p: Path) -> Path:
        return Path(F.F0(p.start), tuple(F.F1(e) for e in p.edges))

    gen = {}
    for gid, sp, tp in PA.computad.gen2:
        m = PA.eval_gen[gid]
        gen[gid] = gen_term(PB.computad, _gr_gen_id(map_path(sp), map_path(tp), F.F2(m)))

    def three_map(func, u: TriCell):
        return TriCell(func.F2(u.src), func.F2(u.tgt), F.F3(u.cell))

    return PresentedGrayFunctor(
        PA,
        PB,
        dict(F.ob),
        {e: Path(F.F0(s), (F.F1(e),)) for e, s, t in PA.graph.edges},
        gen,
        three_map,
        name=name or f"Gr[{F.name}]",
    )


def _collapse_cell(p: Trinatural, A: TabGrayCategory, path: Path):
    """Collapse of the staircase of ``p`` over an ambient path onto the
    component at its evaluation, built from the compositors of ``p``."""
    cod = p.F.cod
    if not path.edges:
        return p.punit(path.start)
    if len(path.edges) == 1:
        return cod.id3(p.pf(path.edges[0]))
    rest = Path(path.start, path.edges[:-1])
    e = path.edges[-1]
    ev_rest = _eval_path_in(A, rest)
    step = cod.hcomp3(
        cod.id3(cod.whisk2l(p.F.F1(ev_rest), p.pf(e))),
        cod.whisk3r(_collapse_cell(p, A, rest), p.G.F1(e)),
    )
    return cod.vcomp3(step, p.pcomp(ev_rest, e))


def _stair_of(p: Trinatural, A: TabGrayCategory, path: Path):
    cod = p.F.cod
    if not path.edges:
        return cod.id2(p.pX(path.start))
    rest = Path(path.start, path.edges[:-1])
    e = path.edges[-1]
    return cod.vcomp2(
        cod.whisk2l(p.F.F1(_eval_path_in(A, rest)), p.pf(e)),
        cod.whisk2r(_stair_of(p, A, rest), p.G.F1(e)),
    )


def gr_trinatural(PA: PresentedGrayCategory, PB: PresentedGrayCategory,
                  GrF: PresentedGrayFunctor, GrG: PresentedGrayFunctor,
                  p: Trinatural, frag: Fragment, name: str | None = None) -> Trinatural:
    """The semi-strict replacement of a transformation between strict
    functors of tabulated categories: the stated components on objects,
    singleton paths, and generating 2-cells, extended freely."""
    A = p.F.dom
    B = p.F.cod
    F, G = p.F, p.G
    ob = {x: Path(F.F0(x), (p.pX(x),)) for x in PA.graph.objects}
    edge_adj = {}
    for f, s, t in PA.graph.edges:
        x, y = s, t
        sq_src = Path(F.F0(x), (F.F1(f), p.pX(y)))
        sq_tgt = Path(F.F0(x), (p.pX(x), G.F1(f)))
        fwd = gen_term(PB.computad, _gr_gen_id(sq_src, sq_tgt, p.pf(f)))
        bwd = gen_term(PB.computad, _gr_gen_id(sq_tgt, sq_src, p.pstar(f)))
        edge_adj[f] = AdjEq(
            fwd,
            bwd,
            TriCell(identity_term(sq_src), PB.vcomp2(fwd, bwd), p.padj(f).unit),
            TriCell(PB.vcomp2(bwd, fwd), identity_term(sq_tgt), p.padj(f).counit),
        )
    gen_cells = {}
    for gid, sp, tp in PA.computad.gen2:
        m = PA.eval_gen[gid]
        gterm = gen_term(PA.computad, gid)
        y = sp.end(PA.graph)
        x = sp.start
        # base cell between the evaluated staircases
        k_t = _collapse_cell(p, A, tp)
        k_s = _collapse_cell(p, A, sp)
        wF = B.whisk2r(F.F2(m), p.pX(y))
        wG = B.whisk2l(p.pX(x), G.F2(m))
        base_cell = B.vcomp3_many(
            [
                B.hcomp3(B.id3(wF), k_t),
                p.pphi(m),
                B.inv3(B.hcomp3(k_s, B.id3(wG))),
            ]
        )
        src_term = PB.vcomp2(
            PB.whisk2r(GrF.F2(gterm), ob[y]),
            _staircase_adj(PA, PB, GrF, GrG, ob, edge_adj, tp).left,
        )
        tgt_term = PB.vcomp2(
            _staircase_adj(PA, PB, GrF, GrG, ob, edge_adj, sp).left,
            PB.whisk2l(ob[x], GrG.F2(gterm)),
        )
        gen_cells[gid] = PB.cell(src_term, tgt_term, base_cell)
    return build_semistrict(
        PA, GrF, GrG, ob, edge_adj, gen_cells, frag, name=name or f"Gr[{p.name}]"
    )


def gr_trimodification(PA, PB, grp: Trinatural, grq: Trinatural,
                       s: Trimodification, name: str | None = None) -> Trimodification:
    """Replacement of a trimodification: the stated components on objects
    and generating edges, extended freely."""
    B = s.p.F.cod
    A = s.p.F.dom
    ob = {}
    for x in PA.graph.objects:
        ob[x] = gen_term(
            PB.computad,
            _gr_gen_id(Path(s.p.F.F0(x), (s.p.pX(x),)), Path(s.p.F.F0(x), (s.q.pX(x),)), s.sX(x)),
        )
    edge_cells = {}
    for f, xx, yy in PA.graph.edges:
        pth = Path(xx, (f,))
        src_term = PB.vcomp2(grp.pf(pth), PB.whisk2r(ob[xx], grp.G.F1(pth)))
        tgt_term = PB.vcomp2(PB.whisk2l(grp.F.F1(pth), ob[yy]), grq.pf(pth))
        edge_cells[f] = PB.cell(src_term, tgt_term, s.sf(f))
    return build_trimod_gen(PA, grp, grq, ob, edge_cells, name=name or f"Gr[{s.name}]")


def gr_perturbation(PA, PB, grs: Trimodification, grt: Trimodification, w, name: str | None = None):
    from .transfors3 import Perturbation

    ob = {}
    for x in PA.graph.objects:
        ob[x] = PB.cell(grs.sX(x), grt.sX(x), w.wX(x))
    return Perturbation(grs, grt, ob, name=name or f"Gr[{w.name}]")
