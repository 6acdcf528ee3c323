"""Finite table-backed hom categories and hom 2-categories.

``FinCat`` is the hom-category type used by tabulated bicategories;
``FinTwoCat`` is the hom-2-category type used by tabulated Gray-categories.
All composition tables are written in diagrammatic order: ``compose[(a, b)]``
is "a, then b".
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .report import ValidationReport


class CellError(KeyError):
    pass


@dataclass
class FinCat:
    objects: tuple[str, ...]
    arrows: dict[str, tuple[str, str]]
    identity: dict[str, str]
    compose: dict[tuple[str, str], str]

    def src(self, a: str) -> str:
        return self.arrows[a][0]

    def tgt(self, a: str) -> str:
        return self.arrows[a][1]

    def id_of(self, x: str) -> str:
        return self.identity[x]

    def comp(self, a: str, b: str) -> str:
        if self.tgt(a) != self.src(b):
            raise CellError(f"arrows not composable: {a} then {b}")
        try:
            return self.compose[(a, b)]
        except KeyError:
            raise CellError(f"composition table missing ({a}, {b})")

    def arrows_between(self, x: str, y: str) -> list[str]:
        return sorted(a for a, (s, t) in self.arrows.items() if s == x and t == y)

    def is_identity(self, a: str) -> bool:
        return self.identity.get(self.src(a)) == a and self.src(a) == self.tgt(a)

    def inverse(self, a: str) -> str | None:
        s, t = self.arrows[a]
        for b in self.arrows_between(t, s):
            if self.compose.get((a, b)) == self.id_of(s) and self.compose.get((b, a)) == self.id_of(t):
                return b
        return None

    def validate(self, rep: ValidationReport, ctx: str = "") -> None:
        obs = set(self.objects)
        for a, (s, t) in sorted(self.arrows.items()):
            if s not in obs or t not in obs:
                rep.add("structure/hom-category", (ctx, a), "arrow endpoint not declared")
        for x in sorted(obs):
            i = self.identity.get(x)
            if i is None or i not in self.arrows or self.arrows[i] != (x, x):
                rep.add("structure/hom-category", (ctx, x), "missing or malformed identity arrow")
        for (a, b), c in sorted(self.compose.items()):
            if c not in self.arrows:
                rep.add("structure/hom-category", (ctx, a, b), "composite not declared")
                continue
            if self.arrows[c] != (self.src(a), self.tgt(b)):
                rep.add("structure/hom-category", (ctx, a, b), "composite has wrong boundary")
        arrs = sorted(self.arrows)
        for a in arrs:
            for b in arrs:
                if self.tgt(a) == self.src(b) and (a, b) not in self.compose:
                    rep.add("structure/hom-category", (ctx, a, b), "composition table not total")
        for a in arrs:
            x, y = self.arrows[a]
            if self.compose.get((self.id_of(x), a)) != a or self.compose.get((a, self.id_of(y))) != a:
                rep.add("category-unit", (ctx, a), "identity is not a unit")
        for a in arrs:
            for b in arrs:
                if self.tgt(a) != self.src(b):
                    continue
                for c in arrs:
                    if self.tgt(b) != self.src(c):
                        continue
                    lhs = self.compose.get((self.compose[(a, b)], c))
                    rhs = self.compose.get((a, self.compose[(b, c)]))
                    if lhs != rhs:
                        rep.add("category-associativity", (ctx, a, b, c), f"({a};{b});{c} != {a};({b};{c})")


@dataclass
class FinTwoCat:
    """A strict 2-category: objects, morphisms, cells, with whiskering tables.

    ``whisk_l[(m, u)]`` whiskers the cell ``u`` by the morphism ``m`` in
    front; ``whisk_r[(u, n)]`` by ``n`` behind.
    """

    objects: tuple[str, ...]
    mors: dict[str, tuple[str, str]]
    cells: dict[str, tuple[str, str]]
    mor_id: dict[str, str]
    mor_comp: dict[tuple[str, str], str]
    cell_id: dict[str, str]
    cell_vcomp: dict[tuple[str, str], str]
    whisk_l: dict[tuple[str, str], str]
    whisk_r: dict[tuple[str, str], str]

    # -- morphism level -------------------------------------------------
    def msrc(self, m: str) -> str:
        return self.mors[m][0]

    def mtgt(self, m: str) -> str:
        return self.mors[m][1]

    def mid(self, x: str) -> str:
        return self.mor_id[x]

    def mcomp(self, a: str, b: str) -> str:
        if self.mtgt(a) != self.msrc(b):
            raise CellError(f"morphisms not composable: {a} then {b}")
        try:
            return self.mor_comp[(a, b)]
        except KeyError:
            raise CellError(f"morphism composition missing ({a}, {b})")

    def mors_between(self, x: str, y: str) -> list[str]:
        return sorted(m for m, (s, t) in self.mors.items() if s == x and t == y)

    def is_mid(self, m: str) -> bool:
        return self.mor_id.get(self.msrc(m)) == m and self.msrc(m) == self.mtgt(m)

    def minv(self, m: str) -> str | None:
        x, y = self.mors[m]
        for n in self.mors_between(y, x):
            if self.mor_comp.get((m, n)) == self.mid(x) and self.mor_comp.get((n, m)) == self.mid(y):
                return n
        return None

    # -- cell level ------------------------------------------------------
    def csrc(self, u: str) -> str:
        return self.cells[u][0]

    def ctgt(self, u: str) -> str:
        return self.cells[u][1]

    def cid(self, m: str) -> str:
        return self.cell_id[m]

    def cvcomp(self, u: str, v: str) -> str:
        if self.ctgt(u) != self.csrc(v):
            raise CellError(f"cells not composable: {u} then {v}")
        try:
            return self.cell_vcomp[(u, v)]
        except KeyError:
            raise CellError(f"cell composition missing ({u}, {v})")

    def cells_between(self, m: str, n: str) -> list[str]:
        return sorted(u for u, (s, t) in self.cells.items() if s == m and t == n)

    def is_cid(self, u: str) -> bool:
        return self.cell_id.get(self.csrc(u)) == u and self.csrc(u) == self.ctgt(u)

    def cinv(self, u: str) -> str | None:
        m, n = self.cells[u]
        for v in self.cells_between(n, m):
            if self.cell_vcomp.get((u, v)) == self.cid(m) and self.cell_vcomp.get((v, u)) == self.cid(n):
                return v
        return None

    def wl(self, m: str, u: str) -> str:
        if self.mtgt(m) != self.msrc(self.csrc(u)):
            raise CellError(f"cannot whisker {u} by {m} in front")
        return self.whisk_l[(m, u)]

    def wr(self, u: str, n: str) -> str:
        if self.mtgt(self.csrc(u)) != self.msrc(n):
            raise CellError(f"cannot whisker {u} by {n} behind")
        return self.whisk_r[(u, n)]

    def hcomp(self, u: str, v: str) -> str:
        """Horizontal composite of cells along a shared object, u first."""
        m1 = self.ctgt(u)
        n0 = self.csrc(v)
        return self.cvcomp(self.wr(u, n0), self.wl(m1, v))

    # -- validation -------------------------------------------------------
    def validate(self, rep: ValidationReport, ctx: str = "") -> None:
        obs = set(self.objects)
        for m, (s, t) in sorted(self.mors.items()):
            if s not in obs or t not in obs:
                rep.add("structure/hom-2-category", (ctx, m), "morphism endpoint not declared")
        for u, (m, n) in sorted(self.cells.items()):
            if m not in self.mors or n not in self.mors:
                rep.add("structure/hom-2-category", (ctx, u), "cell boundary not declared")
            elif self.mors[m] != self.mors[n]:
                rep.add("structure/hom-2-category", (ctx, u), "cell boundary not parallel")
        cat = FinCat(self.objects, self.mors, self.mor_id, self.mor_comp)
        cat.validate(rep, ctx + "/mor")
        vert = FinCat(tuple(sorted(self.mors)), self.cells, self.cell_id, self.cell_vcomp)
        vert.validate(rep, ctx + "/cell")
        ms = sorted(self.mors)
        cs = sorted(self.cells)
        # whiskering totality and boundaries
        for m in ms:
            for u in cs:
                if self.mtgt(m) == self.msrc(self.csrc(u)):
                    w = self.whisk_l.get((m, u))
                    if w is None:
                        rep.add("structure/hom-2-category", (ctx, m, u), "front whiskering not total")
                    elif self.cells[w] != (self.mor_comp[(m, self.csrc(u))], self.mor_comp[(m, self.ctgt(u))]):
                        rep.add("structure/hom-2-category", (ctx, m, u), "front whisker has wrong boundary")
                if self.mtgt(self.csrc(u)) == self.msrc(m):
                    w = self.whisk_r.get((u, m))
                    if w is None:
                        rep.add("structure/hom-2-category", (ctx, u, m), "rear whiskering not total")
                    elif self.cells[w] != (self.mor_comp[(self.csrc(u), m)], self.mor_comp[(self.ctgt(u), m)]):
                        rep.add("structure/hom-2-category", (ctx, u, m), "rear whisker has wrong boundary")
        if rep.is_structural():
            return
        for m in ms:
            x = self.mtgt(m)
            for u in cs:
                if self.msrc(self.csrc(u)) != x:
                    continue
                if self.is_mid(m) and self.wl((m), u) != u:
                    rep.add("whisker-unit", (ctx, m, u), "whiskering by an identity changed the cell")
                for v in cs:
                    if self.csrc(v) == self.ctgt(u):
                        if self.wl(m, self.cvcomp(u, v)) != self.cvcomp(self.wl(m, u), self.wl(m, v)):
                            rep.add("whisker-functorial", (ctx, m, u, v), "front whisker not functorial")
            for n in ms:
                if self.msrc(n) != self.mtgt(m):
                    continue
                for u in cs:
                    if self.msrc(self.csrc(u)) != self.mtgt(n):
                        continue
                    if self.wl(self.mcomp(m, n), u) != self.wl(m, self.wl(n, u)):
                        rep.add("whisker-compose", (ctx, m, n, u), "front whisker by a composite broke up wrong")
        for u in cs:
            m = self.csrc(u)
            for n in ms:
                if self.msrc(n) != self.mtgt(m):
                    continue
                if self.is_mid(n) and self.wr(u, n) != u:
                    rep.add("whisker-unit", (ctx, u, n), "whiskering by an identity changed the cell")
                for n2 in ms:
                    if self.msrc(n2) == self.mtgt(n):
                        if self.wr(u, self.mcomp(n, n2)) != self.wr(self.wr(u, n), n2):
                            rep.add("whisker-compose", (ctx, u, n, n2), "rear whisker by a composite broke up wrong")
        for u in cs:
            for n in ms:
                if self.msrc(n) != self.mtgt(self.csrc(u)):
                    continue
                for v in cs:
                    if self.csrc(v) != self.ctgt(u):
                        continue
                    if self.wr(self.cvcomp(u, v), n) != self.cvcomp(self.wr(u, n), self.wr(v, n)):
                        rep.add("whisker-functorial", (ctx, u, v, n), "rear whisker not functorial")
        for m in ms:
            for u in cs:
                if self.mtgt(m) != self.msrc(self.csrc(u)):
                    continue
                for n in ms:
                    if self.msrc(n) != self.mtgt(self.csrc(u)):
                        continue
                    if self.wl(m, self.wr(u, n)) != self.wr(self.wl(m, u), n):
                        rep.add("whisker-commute", (ctx, m, u, n), "front and rear whiskers do not commute")
        # middle-four interchange inside the hom
        for u in cs:
            for v in cs:
                if self.msrc(self.csrc(v)) != self.mtgt(self.csrc(u)):
                    continue
                m0, m1 = self.cells[u]
                n0, n1 = self.cells[v]
                lhs = self.cvcomp(self.wr(u, n0), self.wl(m1, v))
                rhs = self.cvcomp(self.wl(m0, v), self.wr(u, n1))
                if lhs != rhs:
                    rep.add("interchange", (ctx, u, v), "middle-four interchange fails inside the hom")


def discrete_two_cat(object_ids: tuple[str, ...] = ()) -> FinTwoCat:
    """The 2-category with the given objects and only identity cells."""
    mors = {f"1[{x}]": (x, x) for x in object_ids}
    mor_id = {x: f"1[{x}]" for x in object_ids}
    cells = {f"1[{m}]": (m, m) for m in mors}
    cell_id = {m: f"1[{m}]" for m in mors}
    mor_comp = {(m, m): m for m in mors}
    cell_vcomp = {(u, u): u for u in cells}
    whisk_l: dict[tuple[str, str], str] = {}
    whisk_r: dict[tuple[str, str], str] = {}
    for m in mors:
        for u in cells:
            if mors[m][1] == mors[cells[u][0]][0]:
                whisk_l[(m, u)] = u
            if mors[cells[u][0]][1] == mors[m][0]:
                whisk_r[(u, m)] = u
    return FinTwoCat(tuple(object_ids), mors, cells, mor_id, mor_comp, cell_id, cell_vcomp, whisk_l, whisk_r)
