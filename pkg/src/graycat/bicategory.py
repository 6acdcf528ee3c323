"""Tabulated bicategories and 2-categories with exhaustive validation.

Structural 2-cell conventions follow the rest of the package: composition
is diagrammatic, ``assoc(f, g, h)`` goes from the right-nested composite
``comp1(f, comp1(g, h))`` to the left-nested one, and the unitors point
from a 1-cell to its padded composite: ``lam(f): f => comp1(f, id1(Y))``
and ``rho(f): f => comp1(id1(X), f)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .homs import CellError, FinCat
from .report import ValidationReport, timer


class BicatBase:
    """Operation interface every bicategory-like structure implements."""

    def obs(self):  # pragma: no cover - abstract
        raise NotImplementedError

    def one_src(self, f):  # pragma: no cover - abstract
        raise NotImplementedError

    def one_tgt(self, f):  # pragma: no cover - abstract
        raise NotImplementedError

    def id1(self, x):  # pragma: no cover - abstract
        raise NotImplementedError

    def comp1(self, f, g):  # pragma: no cover - abstract
        raise NotImplementedError

    def two_bound(self, a):  # pragma: no cover - abstract
        raise NotImplementedError

    def id2(self, f):  # pragma: no cover - abstract
        raise NotImplementedError

    def vcomp2(self, a, b):  # pragma: no cover - abstract
        raise NotImplementedError

    def hcomp2(self, a, b):  # pragma: no cover - abstract
        raise NotImplementedError

    def assoc(self, f, g, h):  # pragma: no cover - abstract
        raise NotImplementedError

    def lam(self, f):  # pragma: no cover - abstract
        raise NotImplementedError

    def rho(self, f):  # pragma: no cover - abstract
        raise NotImplementedError

    def inv2(self, a):  # pragma: no cover - abstract
        raise NotImplementedError

    # ---- derived ---------------------------------------------------------
    def two_src(self, a):
        return self.two_bound(a)[0]

    def two_tgt(self, a):
        return self.two_bound(a)[1]

    def is_id1(self, f) -> bool:
        x = self.one_src(f)
        return x == self.one_tgt(f) and f == self.id1(x)

    def is_id2(self, a) -> bool:
        s, t = self.two_bound(a)
        return s == t and a == self.id2(s)

    def whisk2l(self, f, a):
        return self.hcomp2(self.id2(f), a)

    def whisk2r(self, a, h):
        return self.hcomp2(a, self.id2(h))

    def vcomp2_many(self, cells: Iterable):
        out = None
        for a in cells:
            out = a if out is None else self.vcomp2(out, a)
        if out is None:
            raise CellError("empty 2-cell list")
        return out

    def comp1_many(self, ones: Iterable):
        out = None
        for f in ones:
            out = f if out is None else self.comp1(out, f)
        if out is None:
            raise CellError("empty 1-cell list")
        return out

    def is_strict(self) -> bool:
        return False


@dataclass
class TabBicategory(BicatBase):
    name: str
    objects: tuple[str, ...]
    homs: dict[tuple[str, str], FinCat]
    id1_table: dict[str, str]
    comp1_table: dict[tuple[str, str], str]
    hcomp2_table: dict[tuple[str, str], str]
    assoc_table: dict[tuple[str, str, str], str]
    lam_table: dict[str, str]
    rho_table: dict[str, str]
    _one_home: dict[str, tuple[str, str]] = field(default_factory=dict, repr=False)
    _two_home: dict[str, tuple[str, str]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for key, hom in self.homs.items():
            for f in hom.objects:
                if f in self._one_home:
                    raise CellError(f"1-cell id {f!r} reused across homs")
                self._one_home[f] = key
            for a in hom.arrows:
                if a in self._two_home:
                    raise CellError(f"2-cell id {a!r} reused across homs")
                self._two_home[a] = key

    def hom_of_one(self, f) -> FinCat:
        return self.homs[self._one_home[f]]

    def hom_of_two(self, a) -> FinCat:
        return self.homs[self._two_home[a]]

    # ---- primitives -------------------------------------------------------
    def obs(self):
        return self.objects

    def one_src(self, f):
        return self._one_home[f][0]

    def one_tgt(self, f):
        return self._one_home[f][1]

    def id1(self, x):
        return self.id1_table[x]

    def comp1(self, f, g):
        if self.one_tgt(f) != self.one_src(g):
            raise CellError(f"1-cells not composable: {f} then {g}")
        return self.comp1_table[(f, g)]

    def two_bound(self, a):
        return self.hom_of_two(a).arrows[a]

    def id2(self, f):
        return self.hom_of_one(f).id_of(f)

    def vcomp2(self, a, b):
        return self.hom_of_two(a).comp(a, b)

    def hcomp2(self, a, b):
        if self._two_home[a][1] != self._two_home[b][0]:
            raise CellError(f"2-cells not adjacent: {a}, {b}")
        return self.hcomp2_table[(a, b)]

    def assoc(self, f, g, h):
        return self.assoc_table[(f, g, h)]

    def lam(self, f):
        return self.lam_table[f]

    def rho(self, f):
        return self.rho_table[f]

    def inv2(self, a):
        b = self.hom_of_two(a).inverse(a)
        if b is None:
            raise CellError(f"2-cell {a} is not invertible")
        return b

    # ---- enumeration -------------------------------------------------------
    def all_one_cells(self):
        return sorted(self._one_home)

    def all_two_cells(self):
        return sorted(self._two_home)

    def hom_one(self, x, y):
        hom = self.homs.get((x, y))
        return sorted(hom.objects) if hom else []

    def hom_two(self, f, g):
        if self._one_home[f] != self._one_home[g]:
            return []
        return self.hom_of_one(f).arrows_between(f, g)


class TabTwoCategory(TabBicategory):
    """A tabulated bicategory whose structural cells are all identities."""

    def is_strict(self) -> bool:
        return True


def as_two_category(b: TabBicategory) -> TabTwoCategory:
    for (f, g, h), c in b.assoc_table.items():
        if not b.is_id2(c):
            raise CellError(f"associator at ({f},{g},{h}) is not an identity")
    for f, c in list(b.lam_table.items()) + list(b.rho_table.items()):
        if not b.is_id2(c):
            raise CellError(f"unitor at {f} is not an identity")
    return TabTwoCategory(
        b.name, b.objects, b.homs, b.id1_table, b.comp1_table,
        b.hcomp2_table, b.assoc_table, b.lam_table, b.rho_table,
    )


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def validate_bicategory(b: TabBicategory) -> ValidationReport:
    """Structural totality plus functoriality, naturality, pentagon, triangle."""
    rep = ValidationReport()
    with timer(rep):
        _validate_bicat(b, rep)
    return rep


def _validate_bicat(b: TabBicategory, rep: ValidationReport) -> None:
    for key, hom in sorted(b.homs.items()):
        hom.validate(rep, ctx=f"hom{key}")
    for x in b.objects:
        i = b.id1_table.get(x)
        if i is None or b._one_home.get(i) != (x, x):
            rep.add("structure/bicategory", (x,), "missing identity 1-cell")
    if rep.is_structural():
        return
    ones = b.all_one_cells()
    twos = b.all_two_cells()
    for f in ones:
        for g in ones:
            if b.one_tgt(f) != b.one_src(g):
                continue
            c = b.comp1_table.get((f, g))
            if c is None or b._one_home.get(c) != (b.one_src(f), b.one_tgt(g)):
                rep.add("structure/bicategory", (f, g), "1-cell composition missing or misbound")
    for a in twos:
        for c in twos:
            if b._two_home[a][1] != b._two_home[c][0]:
                continue
            h = b.hcomp2_table.get((a, c))
            sa, ta = b.two_bound(a)
            sc, tc = b.two_bound(c)
            if h is None or b.two_bound(h) != (b.comp1_table[(sa, sc)], b.comp1_table[(ta, tc)]):
                rep.add("structure/bicategory", (a, c), "horizontal composition missing or misbound")
    for f in ones:
        x, y = b._one_home[f]
        lf, rf = b.lam_table.get(f), b.rho_table.get(f)
        if lf is None or b.two_bound(lf) != (f, b.comp1_table[(f, b.id1(y))]):
            rep.add("structure/bicategory", (f,), "left unitor missing or misbound")
        if rf is None or b.two_bound(rf) != (f, b.comp1_table[(b.id1(x), f)]):
            rep.add("structure/bicategory", (f,), "right unitor missing or misbound")
    for f in ones:
        for g in ones:
            if b.one_tgt(f) != b.one_src(g):
                continue
            for h in ones:
                if b.one_tgt(g) != b.one_src(h):
                    continue
                a = b.assoc_table.get((f, g, h))
                want = (b.comp1_table[(f, b.comp1_table[(g, h)])], b.comp1_table[(b.comp1_table[(f, g)], h)])
                if a is None or b.two_bound(a) != want:
                    rep.add("structure/bicategory", (f, g, h), "associator missing or misbound")
    if rep.is_structural():
        return
    for f in ones:
        for c in (b.lam(f), b.rho(f)):
            if b.hom_of_two(c).inverse(c) is None:
                rep.add("unitor-invertible", (f,), "unitor not invertible")
    for key, a in sorted(b.assoc_table.items()):
        if b.hom_of_two(a).inverse(a) is None:
            rep.add("associator-invertible", key, "associator not invertible")
    # horizontal composition is a functor
    for a in twos:
        for c in twos:
            if b._two_home[a][1] != b._two_home[c][0]:
                continue
            if b.is_id2(a) and b.is_id2(c):
                if b.hcomp2(a, c) != b.id2(b.comp1(b.two_src(a), b.two_src(c))):
                    rep.add("hcomp-functorial", (a, c), "identities do not compose to an identity")
    for a in twos:
        for a2 in twos:
            if b._two_home[a] != b._two_home[a2] or b.two_tgt(a) != b.two_src(a2):
                continue
            for c in twos:
                if b._two_home[a][1] != b._two_home[c][0]:
                    continue
                for c2 in twos:
                    if b._two_home[c] != b._two_home[c2] or b.two_tgt(c) != b.two_src(c2):
                        continue
                    lhs = b.hcomp2(b.vcomp2(a, a2), b.vcomp2(c, c2))
                    rhs = b.vcomp2(b.hcomp2(a, c), b.hcomp2(a2, c2))
                    if lhs != rhs:
                        rep.add("hcomp-functorial", (a, a2, c, c2), "horizontal composition not functorial")
    # naturality of the structural cells
    for u in twos:
        f, f2 = b.two_bound(u)
        x, y = b._two_home[u]
        if b.vcomp2(u, b.lam(f2)) != b.vcomp2(b.lam(f), b.hcomp2(u, b.id2(b.id1(y)))):
            rep.add("unitor-natural", (u,), "left unitor not natural")
        if b.vcomp2(u, b.rho(f2)) != b.vcomp2(b.rho(f), b.hcomp2(b.id2(b.id1(x)), u)):
            rep.add("unitor-natural", (u,), "right unitor not natural")
    for u in twos:
        for v in twos:
            if b._two_home[u][1] != b._two_home[v][0]:
                continue
            for w in twos:
                if b._two_home[v][1] != b._two_home[w][0]:
                    continue
                f, f2 = b.two_bound(u)
                g, g2 = b.two_bound(v)
                h, h2 = b.two_bound(w)
                lhs = b.vcomp2(b.hcomp2(u, b.hcomp2(v, w)), b.assoc(f2, g2, h2))
                rhs = b.vcomp2(b.assoc(f, g, h), b.hcomp2(b.hcomp2(u, v), w))
                if lhs != rhs:
                    rep.add("associator-natural", (u, v, w), "associator not natural")
    # triangle and pentagon
    for f in ones:
        for g in ones:
            if b.one_tgt(f) != b.one_src(g):
                continue
            y = b.one_tgt(f)
            lhs = b.vcomp2(b.hcomp2(b.id2(f), b.rho(g)), b.assoc(f, b.id1(y), g))
            rhs = b.hcomp2(b.lam(f), b.id2(g))
            if lhs != rhs:
                rep.add("triangle", (f, g), "triangle law fails")
    for f in ones:
        for g in ones:
            if b.one_tgt(f) != b.one_src(g):
                continue
            for h in ones:
                if b.one_tgt(g) != b.one_src(h):
                    continue
                for k in ones:
                    if b.one_tgt(h) != b.one_src(k):
                        continue
                    route1 = b.vcomp2(b.assoc(f, g, b.comp1(h, k)), b.assoc(b.comp1(f, g), h, k))
                    route2 = b.vcomp2_many([
                        b.hcomp2(b.id2(f), b.assoc(g, h, k)),
                        b.assoc(f, b.comp1(g, h), k),
                        b.hcomp2(b.assoc(f, g, h), b.id2(k)),
                    ])
                    if route1 != route2:
                        rep.add("pentagon", (f, g, h, k), "pentagon fails")


def validate_two_category(b: TabBicategory) -> ValidationReport:
    """Bicategory check plus strictness of all structural cells."""
    rep = validate_bicategory(b)
    with timer(rep):
        if not rep.is_structural():
            for key, a in sorted(b.assoc_table.items()):
                if not b.is_id2(a):
                    rep.add("strict-associativity", key, "non-identity associator")
            for f in b.all_one_cells():
                if not b.is_id2(b.lam(f)) or not b.is_id2(b.rho(f)):
                    rep.add("strict-unitality", (f,), "non-identity unitor")
    return rep
