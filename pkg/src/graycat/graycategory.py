"""Gray-categories: the tabulated implementation, the operation interface
shared with computed structures, and the exhaustive axiom validator.

Conventions (used package-wide):

* diagrammatic order: ``comp1(f, g)`` is "f, then g"; ``vcomp2(a, b)`` is
  "a, then b"; likewise ``vcomp3``;
* ``whisk2l(f, a)`` puts the 1-cell ``f`` in front of the 2-cell ``a``,
  ``whisk2r(a, h)`` puts ``h`` behind; same naming one level up;
* the interchanger ``gamma(a, b)`` of adjacent 2-cells ``a: f => f'`` in
  hom(X, Y) and ``b: g => g'`` in hom(Y, Z) is the invertible 3-cell

      vcomp2(whisk2r(a, g), whisk2l(f', b))  ==>  vcomp2(whisk2l(f, b), whisk2r(a, g'))

  i.e. from the route that performs ``a`` first to the route that performs
  ``b`` first.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .homs import CellError, FinTwoCat
from .report import ValidationReport, timer


@dataclass(frozen=True)
class CellRef:
    """Dimension-tagged pointer to a cell of some structure."""

    dim: int
    ident: object

    def boundary(self, structure) -> tuple:
        if self.dim == 0:
            return ()
        if self.dim == 1:
            return (structure.one_src(self.ident), structure.one_tgt(self.ident))
        if self.dim == 2:
            return structure.mor_bound(self.ident)
        if self.dim == 3:
            return structure.cell_bound(self.ident)
        raise CellError(f"unsupported dimension {self.dim}")


class GrayBase:
    """Operation interface of a Gray-category.

    Concrete subclasses provide the primitive operations; the derived
    helpers (iterated composites, horizontal composition of 3-cells inside a
    hom, square pasting) live here so every implementation shares them.
    Cells are opaque hashable values; 1-cells, 2-cells and 3-cells may have
    different concrete types per implementation.
    """

    # ---- primitives every implementation must supply -------------------
    def obs(self) -> Sequence:  # pragma: no cover - abstract
        raise NotImplementedError

    def one_src(self, f):  # pragma: no cover - abstract
        raise NotImplementedError

    def one_tgt(self, f):  # pragma: no cover - abstract
        raise NotImplementedError

    def id1(self, x):  # pragma: no cover - abstract
        raise NotImplementedError

    def comp1(self, f, g):  # pragma: no cover - abstract
        raise NotImplementedError

    def mor_bound(self, a) -> tuple:  # (src 1-cell, tgt 1-cell)
        raise NotImplementedError

    def id2(self, f):  # pragma: no cover - abstract
        raise NotImplementedError

    def vcomp2(self, a, b):  # pragma: no cover - abstract
        raise NotImplementedError

    def whisk2l(self, f, a):  # pragma: no cover - abstract
        raise NotImplementedError

    def whisk2r(self, a, h):  # pragma: no cover - abstract
        raise NotImplementedError

    def cell_bound(self, u) -> tuple:  # (src 2-cell, tgt 2-cell)
        raise NotImplementedError

    def id3(self, a):  # pragma: no cover - abstract
        raise NotImplementedError

    def vcomp3(self, u, v):  # pragma: no cover - abstract
        raise NotImplementedError

    def mwhisk3l(self, a, u):
        """Whisker the 3-cell ``u`` by the 2-cell ``a`` in front (same hom)."""
        raise NotImplementedError

    def mwhisk3r(self, u, b):
        raise NotImplementedError

    def whisk3l(self, f, u):  # pragma: no cover - abstract
        raise NotImplementedError

    def whisk3r(self, u, h):  # pragma: no cover - abstract
        raise NotImplementedError

    def gamma(self, a, b):  # pragma: no cover - abstract
        raise NotImplementedError

    def inv3(self, u):  # pragma: no cover - abstract
        raise NotImplementedError

    def inv2(self, a):
        raise NotImplementedError

    # ---- derived helpers -------------------------------------------------
    def mor_src(self, a):
        return self.mor_bound(a)[0]

    def mor_tgt(self, a):
        return self.mor_bound(a)[1]

    def cell_src(self, u):
        return self.cell_bound(u)[0]

    def cell_tgt(self, u):
        return self.cell_bound(u)[1]

    def one_home(self, f) -> tuple:
        return (self.one_src(f), self.one_tgt(f))

    def mor_home(self, a) -> tuple:
        return self.one_home(self.mor_src(a))

    def is_id2(self, a) -> bool:
        s, t = self.mor_bound(a)
        return s == t and a == self.id2(s)

    def is_id3(self, u) -> bool:
        s, t = self.cell_bound(u)
        return s == t and u == self.id3(s)

    def comp1_many(self, fs: Iterable):
        out = None
        for f in fs:
            out = f if out is None else self.comp1(out, f)
        if out is None:
            raise CellError("empty 1-cell list")
        return out

    def vcomp2_many(self, cells: Iterable):
        out = None
        for a in cells:
            out = a if out is None else self.vcomp2(out, a)
        if out is None:
            raise CellError("empty 2-cell list")
        return out

    def vcomp3_many(self, cells: Iterable):
        out = None
        for u in cells:
            out = u if out is None else self.vcomp3(out, u)
        if out is None:
            raise CellError("empty 3-cell list")
        return out

    def hcomp3(self, u, v):
        """Horizontal composite of 3-cells inside a hom, ``u`` first."""
        m1 = self.cell_tgt(u)
        n0 = self.cell_src(v)
        return self.vcomp3(self.mwhisk3r(u, n0), self.mwhisk3l(m1, v))

    def hcomp3_many(self, cells: Sequence):
        out = None
        for u in cells:
            out = u if out is None else self.hcomp3(out, u)
        if out is None:
            raise CellError("empty 3-cell list")
        return out

    def whisk2(self, f, a, h):
        """Whisker on both sides; either side may be None."""
        out = a
        if f is not None:
            out = self.whisk2l(f, out)
        if h is not None:
            out = self.whisk2r(out, h)
        return out

    def whisk3(self, f, u, h):
        out = u
        if f is not None:
            out = self.whisk3l(f, out)
        if h is not None:
            out = self.whisk3r(out, h)
        return out

    # enumeration hooks; tabulated structures enumerate everything, computed
    # structures may take bounds through keyword arguments.
    def hom_one(self, x, y) -> list:  # pragma: no cover - abstract
        raise NotImplementedError

    def hom_mors(self, f, g) -> list:
        raise NotImplementedError

    def hom_cells(self, a, b) -> list:
        raise NotImplementedError


# ---------------------------------------------------------------------------
# square pasting algebra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Square:
    """A 3-cell presented as a square of 2-cells.

    ``cell`` goes from ``vcomp2(top, right)`` to ``vcomp2(left, bottom)``.
    ``paste_h`` glues along a shared vertical edge, ``paste_v`` along a
    shared horizontal edge; ``transpose`` swaps the two readings and inverts.
    """

    top: object
    right: object
    left: object
    bottom: object
    cell: object


def square(g: GrayBase, top, right, left, bottom, cell) -> Square:
    assert g.cell_src(cell) == g.vcomp2(top, right), "square source mismatch"
    assert g.cell_tgt(cell) == g.vcomp2(left, bottom), "square target mismatch"
    return Square(top, right, left, bottom, cell)


def sq_from_cell(g: GrayBase, cell) -> Square:
    """View a bare 3-cell as a degenerate square (identity left edge)."""
    s = g.cell_src(cell)
    f = g.mor_src(s)
    return Square(s, g.id2(g.mor_tgt(s)), g.id2(f), g.cell_tgt(cell), cell)


def paste_h(g: GrayBase, s1: Square, s2: Square) -> Square:
    assert s1.right == s2.left, "horizontal pasting needs a shared vertical edge"
    step1 = g.hcomp3(g.id3(s1.top), s2.cell)
    step2 = g.hcomp3(s1.cell, g.id3(s2.bottom))
    return square(
        g,
        g.vcomp2(s1.top, s2.top),
        s2.right,
        s1.left,
        g.vcomp2(s1.bottom, s2.bottom),
        g.vcomp3(step1, step2),
    )


def paste_v(g: GrayBase, s1: Square, s2: Square) -> Square:
    assert s1.bottom == s2.top, "vertical pasting needs a shared horizontal edge"
    step1 = g.hcomp3(s1.cell, g.id3(s2.right))
    step2 = g.hcomp3(g.id3(s1.left), s2.cell)
    return square(
        g,
        s1.top,
        g.vcomp2(s1.right, s2.right),
        g.vcomp2(s1.left, s2.left),
        s2.bottom,
        g.vcomp3(step1, step2),
    )


def transpose(g: GrayBase, s: Square) -> Square:
    return square(g, s.left, s.bottom, s.top, s.right, g.inv3(s.cell))


def whisk_square_l(g: GrayBase, f, s: Square) -> Square:
    return square(
        g,
        g.whisk2l(f, s.top),
        g.whisk2l(f, s.right),
        g.whisk2l(f, s.left),
        g.whisk2l(f, s.bottom),
        g.whisk3l(f, s.cell),
    )


def whisk_square_r(g: GrayBase, s: Square, h) -> Square:
    return square(
        g,
        g.whisk2r(s.top, h),
        g.whisk2r(s.right, h),
        g.whisk2r(s.left, h),
        g.whisk2r(s.bottom, h),
        g.whisk3r(s.cell, h),
    )


def gamma_square(g: GrayBase, a, b) -> Square:
    """The interchanger of adjacent 2-cells as a square."""
    f0, f1 = g.mor_bound(a)
    g0, g1 = g.mor_bound(b)
    return square(
        g,
        g.whisk2r(a, g0),
        g.whisk2l(f1, b),
        g.whisk2l(f0, b),
        g.whisk2r(a, g1),
        g.gamma(a, b),
    )


# ---------------------------------------------------------------------------
# tabulated Gray-categories
# ---------------------------------------------------------------------------


@dataclass
class TabGrayCategory(GrayBase):
    name: str
    objects: tuple[str, ...]
    homs: dict[tuple[str, str], FinTwoCat]
    id1_table: dict[str, str]
    comp1_table: dict[tuple[str, str], str]
    whisk2l_table: dict[tuple[str, str], str]
    whisk2r_table: dict[tuple[str, str], str]
    whisk3l_table: dict[tuple[str, str], str]
    whisk3r_table: dict[tuple[str, str], str]
    gamma_table: dict[tuple[str, str], str]
    _one_home: dict[str, tuple[str, str]] = field(default_factory=dict, repr=False)
    _mor_home: dict[str, tuple[str, str]] = field(default_factory=dict, repr=False)
    _cell_home: dict[str, tuple[str, str]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for key, hom in self.homs.items():
            for f in hom.objects:
                if f in self._one_home:
                    raise CellError(f"1-cell id {f!r} reused across homs")
                self._one_home[f] = key
            for m in hom.mors:
                if m in self._mor_home:
                    raise CellError(f"2-cell id {m!r} reused across homs")
                self._mor_home[m] = key
            for u in hom.cells:
                if u in self._cell_home:
                    raise CellError(f"3-cell id {u!r} reused across homs")
                self._cell_home[u] = key

    # ---- locating cells -------------------------------------------------
    def hom_of_one(self, f) -> FinTwoCat:
        return self.homs[self._one_home[f]]

    def hom_of_mor(self, a) -> FinTwoCat:
        return self.homs[self._mor_home[a]]

    def hom_of_cell(self, u) -> FinTwoCat:
        return self.homs[self._cell_home[u]]

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

    def mor_bound(self, a):
        hom = self.hom_of_mor(a)
        return hom.mors[a]

    def id2(self, f):
        return self.hom_of_one(f).mid(f)

    def vcomp2(self, a, b):
        return self.hom_of_mor(a).mcomp(a, b)

    def whisk2l(self, f, a):
        if self.one_tgt(f) != self._mor_home[a][0]:
            raise CellError(f"cannot whisker {a} by {f} in front")
        return self.whisk2l_table[(f, a)]

    def whisk2r(self, a, h):
        if self._mor_home[a][1] != self.one_src(h):
            raise CellError(f"cannot whisker {a} by {h} behind")
        return self.whisk2r_table[(a, h)]

    def cell_bound(self, u):
        return self.hom_of_cell(u).cells[u]

    def id3(self, a):
        return self.hom_of_mor(a).cid(a)

    def vcomp3(self, u, v):
        return self.hom_of_cell(u).cvcomp(u, v)

    def mwhisk3l(self, a, u):
        return self.hom_of_cell(u).wl(a, u)

    def mwhisk3r(self, u, b):
        return self.hom_of_cell(u).wr(u, b)

    def whisk3l(self, f, u):
        if self.one_tgt(f) != self._cell_home[u][0]:
            raise CellError(f"cannot whisker {u} by {f} in front")
        return self.whisk3l_table[(f, u)]

    def whisk3r(self, u, h):
        if self._cell_home[u][1] != self.one_src(h):
            raise CellError(f"cannot whisker {u} by {h} behind")
        return self.whisk3r_table[(u, h)]

    def gamma(self, a, b):
        if self._mor_home[a][1] != self._mor_home[b][0]:
            raise CellError(f"2-cells not adjacent: {a}, {b}")
        return self.gamma_table[(a, b)]

    def inv3(self, u):
        v = self.hom_of_cell(u).cinv(u)
        if v is None:
            raise CellError(f"3-cell {u} is not invertible")
        return v

    def inv2(self, a):
        b = self.hom_of_mor(a).minv(a)
        if b is None:
            raise CellError(f"2-cell {a} is not invertible")
        return b

    # ---- enumeration --------------------------------------------------------
    def hom_one(self, x, y):
        hom = self.homs.get((x, y))
        return sorted(hom.objects) if hom else []

    def hom_mors(self, f, g):
        if self._one_home[f] != self._one_home[g]:
            return []
        return self.hom_of_one(f).mors_between(f, g)

    def hom_cells(self, a, b):
        if self._mor_home[a] != self._mor_home[b]:
            return []
        return self.hom_of_mor(a).cells_between(a, b)

    def all_one_cells(self):
        return sorted(self._one_home)

    def all_mors(self):
        return sorted(self._mor_home)

    def all_cells(self):
        return sorted(self._cell_home)


def interchanger_lookup(g: TabGrayCategory, psi, phi):
    """Tabulated interchanger for horizontally adjacent 2-cells.

    ``phi`` lives in the first hom, ``psi`` in the second; identity on
    either side returns an identity 3-cell without a table hit.
    """
    if g._mor_home[phi][1] != g._mor_home[psi][0]:
        raise CellError(f"2-cells not adjacent: {psi}, {phi}")
    if g.is_id2(phi) or g.is_id2(psi):
        f0, _ = g.mor_bound(phi)
        g0, _ = g.mor_bound(psi)
        return g.id3(g.vcomp2(g.whisk2r(phi, g0), g.whisk2l(g.mor_tgt(phi), psi)))
    return g.gamma(phi, psi)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _adjacent_mor_pairs(g: TabGrayCategory):
    for (x, y), hom1 in sorted(g.homs.items()):
        for (y2, z), hom2 in sorted(g.homs.items()):
            if y2 != y:
                continue
            for a in sorted(hom1.mors):
                for b in sorted(hom2.mors):
                    yield a, b


def validate_gray_category(g: TabGrayCategory, max_checks: int | None = None) -> ValidationReport:
    """Exhaustive Gray-category axiom check over the tables.

    The axiom list is the standard one for categories enriched in the
    Gray tensor product: hom-wise strict 2-categories; strictly associative
    and unital 1-cell composition; 2-functorial whiskering; and an
    invertible interchanger, trivial on identities, natural in both
    arguments, compatible with vertical composition and with whiskering.
    """
    rep = ValidationReport()
    with timer(rep):
        _validate_gray(g, rep)
    return rep


def _validate_gray(g: TabGrayCategory, rep: ValidationReport) -> None:
    for key, hom in sorted(g.homs.items()):
        hom.validate(rep, ctx=f"hom{key}")
    if rep.is_structural():
        return
    ones = g.all_one_cells()
    # identities and binary composition
    for x in g.objects:
        i = g.id1_table.get(x)
        if i is None or g._one_home.get(i) != (x, x):
            rep.add("structure/gray", (x,), "missing identity 1-cell")
            return
    for f in ones:
        for h in ones:
            if g.one_tgt(f) != g.one_src(h):
                continue
            c = g.comp1_table.get((f, h))
            if c is None or g._one_home.get(c) != (g.one_src(f), g.one_tgt(h)):
                rep.add("structure/gray", (f, h), "1-cell composition missing or misbound")
    if rep.is_structural():
        return
    for f in ones:
        x, y = g._one_home[f]
        if g.comp1(g.id1(x), f) != f or g.comp1(f, g.id1(y)) != f:
            rep.add("one-unit", (f,), "identity 1-cell is not a strict unit")
    for f in ones:
        for h in ones:
            if g.one_tgt(f) != g.one_src(h):
                continue
            for k in ones:
                if g.one_tgt(h) != g.one_src(k):
                    continue
                if g.comp1(g.comp1(f, h), k) != g.comp1(f, g.comp1(h, k)):
                    rep.add("one-associativity", (f, h, k), "1-cell composition not associative")
    # whiskering tables: totality, boundaries, functoriality
    mors = g.all_mors()
    cells = g.all_cells()
    for f in ones:
        for a in mors:
            if g.one_tgt(f) == g._mor_home[a][0]:
                w = g.whisk2l_table.get((f, a))
                s, t = g.mor_bound(a)
                if w is None or g.mor_bound(w) != (g.comp1(f, s), g.comp1(f, t)):
                    rep.add("structure/gray", (f, a), "front 1-cell whisker of 2-cell missing or misbound")
            if g._mor_home[a][1] == g.one_src(f):
                w = g.whisk2r_table.get((a, f))
                s, t = g.mor_bound(a)
                if w is None or g.mor_bound(w) != (g.comp1(s, f), g.comp1(t, f)):
                    rep.add("structure/gray", (a, f), "rear 1-cell whisker of 2-cell missing or misbound")
        for u in cells:
            if g.one_tgt(f) == g._cell_home[u][0]:
                w = g.whisk3l_table.get((f, u))
                s, t = g.cell_bound(u)
                if w is None or g.cell_bound(w) != (g.whisk2l_table.get((f, s)), g.whisk2l_table.get((f, t))):
                    rep.add("structure/gray", (f, u), "front 1-cell whisker of 3-cell missing or misbound")
            if g._cell_home[u][1] == g.one_src(f):
                w = g.whisk3r_table.get((u, f))
                s, t = g.cell_bound(u)
                if w is None or g.cell_bound(w) != (g.whisk2r_table.get((s, f)), g.whisk2r_table.get((t, f))):
                    rep.add("structure/gray", (u, f), "rear 1-cell whisker of 3-cell missing or misbound")
    if rep.is_structural():
        return
    # whiskering by identities, composites, and 2-functoriality in the cell
    for f in ones:
        x, y = g._one_home[f]
        for a in mors:
            if g._mor_home[a][0] == y:
                if g.is_id1(f) and g.whisk2l(f, a) != a:
                    rep.add("whisker-unit", (f, a), "front whisker by identity 1-cell changed the 2-cell")
            if g._mor_home[a][1] == x:
                if g.is_id1(f) and g.whisk2r(a, f) != a:
                    rep.add("whisker-unit", (a, f), "rear whisker by identity 1-cell changed the 2-cell")
    for f in ones:
        for h in ones:
            if g.one_tgt(f) != g.one_src(h):
                continue
            fh = g.comp1(f, h)
            for a in mors:
                if g._mor_home[a][0] == g.one_tgt(h):
                    if g.whisk2l(fh, a) != g.whisk2l(f, g.whisk2l(h, a)):
                        rep.add("whisker-compose", (f, h, a), "front whisker by composite disagrees with iteration")
                if g._mor_home[a][1] == g.one_src(f):
                    if g.whisk2r(a, fh) != g.whisk2r(g.whisk2r(a, f), h):
                        rep.add("whisker-compose", (a, f, h), "rear whisker by composite disagrees with iteration")
    for f in ones:
        for a in mors:
            if g.one_tgt(f) != g._mor_home[a][0]:
                continue
            s, t = g.mor_bound(a)
            if g.is_id2(a) and g.whisk2l(f, a) != g.id2(g.comp1(f, s)):
                rep.add("whisker-functorial", (f, a), "front whisker of identity 2-cell is not an identity")
            for b in mors:
                if g._mor_home.get(b) != g._mor_home[a] or g.mor_src(b) != t:
                    continue
                if g.whisk2l(f, g.vcomp2(a, b)) != g.vcomp2(g.whisk2l(f, a), g.whisk2l(f, b)):
                    rep.add("whisker-functorial", (f, a, b), "front whisker not functorial on 2-cells")
        for a in mors:
            if g._mor_home[a][1] != g.one_src(f):
                continue
            s, t = g.mor_bound(a)
            if g.is_id2(a) and g.whisk2r(a, f) != g.id2(g.comp1(s, f)):
                rep.add("whisker-functorial", (a, f), "rear whisker of identity 2-cell is not an identity")
            for b in mors:
                if g._mor_home.get(b) != g._mor_home[a] or g.mor_src(b) != t:
                    continue
                if g.whisk2r(g.vcomp2(a, b), f) != g.vcomp2(g.whisk2r(a, f), g.whisk2r(b, f)):
                    rep.add("whisker-functorial", (a, b, f), "rear whisker not functorial on 2-cells")
    # front and rear whiskers commute
    for f in ones:
        for a in mors:
            if g.one_tgt(f) != g._mor_home[a][0]:
                continue
            for h in ones:
                if g._mor_home[a][1] != g.one_src(h):
                    continue
                if g.whisk2l(f, g.whisk2r(a, h)) != g.whisk2r(g.whisk2l(f, a), h):
                    rep.add("whisker-commute", (f, a, h), "front and rear 1-cell whiskers do not commute")
    # 3-cell whiskering is functorial and compatible with hom operations
    for f in ones:
        for u in cells:
            if g.one_tgt(f) == g._cell_home[u][0]:
                s, t = g.cell_bound(u)
                if g.is_id3(u) and g.whisk3l(f, u) != g.id3(g.whisk2l(f, s)):
                    rep.add("whisker-functorial", (f, u), "front whisker of identity 3-cell is not an identity")
                for v in cells:
                    if g._cell_home.get(v) != g._cell_home[u] or g.cell_src(v) != t:
                        continue
                    if g.whisk3l(f, g.vcomp3(u, v)) != g.vcomp3(g.whisk3l(f, u), g.whisk3l(f, v)):
                        rep.add("whisker-functorial", (f, u, v), "front whisker not functorial on 3-cells")
            if g._cell_home[u][1] == g.one_src(f):
                s, t = g.cell_bound(u)
                if g.is_id3(u) and g.whisk3r(u, f) != g.id3(g.whisk2r(s, f)):
                    rep.add("whisker-functorial", (u, f), "rear whisker of identity 3-cell is not an identity")
                for v in cells:
                    if g._cell_home.get(v) != g._cell_home[u] or g.cell_src(v) != t:
                        continue
                    if g.whisk3r(g.vcomp3(u, v), f) != g.vcomp3(g.whisk3r(u, f), g.whisk3r(v, f)):
                        rep.add("whisker-functorial", (u, v, f), "rear whisker not functorial on 3-cells")
    # 1-cell whiskering commutes with whiskering by 2-cells inside the hom
    for f in ones:
        for u in cells:
            if g.one_tgt(f) != g._cell_home[u][0]:
                continue
            hom = g.hom_of_cell(u)
            m0 = g.cell_src(u)
            for a in sorted(hom.mors):
                if hom.mtgt(a) == hom.msrc(m0):
                    lhs = g.whisk3l(f, g.mwhisk3l(a, u))
                    rhs = g.mwhisk3l(g.whisk2l(f, a), g.whisk3l(f, u))
                    if lhs != rhs:
                        rep.add("whisker-commute", (f, a, u), "front 1-cell whisker does not commute with hom whiskering")
                if hom.msrc(a) == hom.mtgt(m0):
                    lhs = g.whisk3l(f, g.mwhisk3r(u, a))
                    rhs = g.mwhisk3r(g.whisk3l(f, u), g.whisk2l(f, a))
                    if lhs != rhs:
                        rep.add("whisker-commute", (f, u, a), "front 1-cell whisker does not commute with hom whiskering")
    _validate_interchanger(g, rep)


def _validate_interchanger(g: TabGrayCategory, rep: ValidationReport) -> None:
    # totality, boundary, invertibility and identity-triviality
    for a, b in _adjacent_mor_pairs(g):
        f0, f1 = g.mor_bound(a)
        g0, g1 = g.mor_bound(b)
        src = g.vcomp2(g.whisk2r(a, g0), g.whisk2l(f1, b))
        tgt = g.vcomp2(g.whisk2l(f0, b), g.whisk2r(a, g1))
        c = g.gamma_table.get((a, b))
        if c is None:
            rep.add("structure/gray", (a, b), "interchanger table not total")
            continue
        if g.cell_bound(c) != (src, tgt):
            rep.add("structure/gray", (a, b), "interchanger has wrong boundary")
            continue
        if g.hom_of_cell(c).cinv(c) is None:
            rep.add("interchanger-invertible", (a, b), "interchanger is not invertible")
        if (g.is_id2(a) or g.is_id2(b)) and not g.is_id3(c):
            rep.add("interchanger-identity", (a, b), "interchanger on an identity 2-cell is not the identity")
    if rep.is_structural():
        return
    # naturality in both arguments
    for a, b in _adjacent_mor_pairs(g):
        f0, f1 = g.mor_bound(a)
        g0, g1 = g.mor_bound(b)
        hom_a = g.hom_of_mor(a)
        hom_b = g.hom_of_mor(b)
        for a2 in hom_a.mors_between(f0, f1):
            for w in hom_a.cells_between(a, a2):
                lhs = g.vcomp3(
                    g.hcomp3(g.whisk3r(w, g0), g.id3(g.whisk2l(f1, b))),
                    g.gamma(a2, b),
                )
                rhs = g.vcomp3(
                    g.gamma(a, b),
                    g.hcomp3(g.id3(g.whisk2l(f0, b)), g.whisk3r(w, g1)),
                )
                if lhs != rhs:
                    rep.add("interchanger-natural", (a, b, w), "interchanger not natural in the first argument")
        for b2 in hom_b.mors_between(g0, g1):
            for w in hom_b.cells_between(b, b2):
                lhs = g.vcomp3(
                    g.hcomp3(g.id3(g.whisk2r(a, g0)), g.whisk3l(f1, w)),
                    g.gamma(a, b2),
                )
                rhs = g.vcomp3(
                    g.gamma(a, b),
                    g.hcomp3(g.whisk3l(f0, w), g.id3(g.whisk2r(a, g1))),
                )
                if lhs != rhs:
                    rep.add("interchanger-natural", (a, b, w), "interchanger not natural in the second argument")
    # compatibility with vertical composition in each argument
    for a, b in _adjacent_mor_pairs(g):
        f0, f1 = g.mor_bound(a)
        g0, g1 = g.mor_bound(b)
        hom_a = g.hom_of_mor(a)
        hom_b = g.hom_of_mor(b)
        for a2 in sorted(hom_a.mors):
            if hom_a.msrc(a2) != f1:
                continue
            f2 = hom_a.mtgt(a2)
            composite = g.gamma(g.vcomp2(a, a2), b)
            step1 = g.hcomp3(g.id3(g.whisk2r(a, g0)), g.gamma(a2, b))
            step2 = g.hcomp3(g.gamma(a, b), g.id3(g.whisk2r(a2, g1)))
            if composite != g.vcomp3(step1, step2):
                rep.add("interchanger-vcomp", (a, a2, b), "interchanger incompatible with vertical composition (first argument)")
        for b2 in sorted(hom_b.mors):
            if hom_b.msrc(b2) != g1:
                continue
            composite = g.gamma(a, g.vcomp2(b, b2))
            step1 = g.hcomp3(g.gamma(a, b), g.id3(g.whisk2l(f1, b2)))
            step2 = g.hcomp3(g.id3(g.whisk2l(f0, b)), g.gamma(a, b2))
            if composite != g.vcomp3(step1, step2):
                rep.add("interchanger-vcomp", (a, b, b2), "interchanger incompatible with vertical composition (second argument)")
    # compatibility with outer and middle whiskering
    for a, b in _adjacent_mor_pairs(g):
        (x, y) = g._mor_home[a]
        (_, z) = g._mor_home[b]
        for e in g.all_one_cells():
            if g.one_tgt(e) == x:
                if g.gamma_of(g.whisk2l(e, a), b) != g.whisk3l(e, g.gamma(a, b)):
                    rep.add("interchanger-whisker", (e, a, b), "interchanger incompatible with front whiskering")
            if g.one_src(e) == z:
                if g.gamma_of(a, g.whisk2r(b, e)) != g.whisk3r(g.gamma(a, b), e):
                    rep.add("interchanger-whisker", (a, b, e), "interchanger incompatible with rear whiskering")
    # middle whiskering: a in hom(x,y), m: y -> y', b in hom(y',z)
    for a in g.all_mors():
        x, y = g._mor_home[a]
        for m in g.all_one_cells():
            if g.one_src(m) != y:
                continue
            yp = g.one_tgt(m)
            for b in g.all_mors():
                if g._mor_home[b][0] != yp:
                    continue
                if g.gamma_of(g.whisk2r(a, m), b) != g.gamma_of(a, g.whisk2l(m, b)):
                    rep.add("interchanger-whisker", (a, m, b), "interchanger incompatible with middle whiskering")


def _gamma_of(self, a, b):
    """Interchanger including the identity cases (no table hit needed)."""
    if self.is_id2(a) or self.is_id2(b):
        f0, f1 = self.mor_bound(a)
        g0, g1 = self.mor_bound(b)
        return self.id3(self.vcomp2(self.whisk2r(a, g0), self.whisk2l(f1, b)))
    return self.gamma(a, b)


def _is_id1(self, f) -> bool:
    x, y = self.one_src(f), self.one_tgt(f)
    return x == y and self.id1(x) == f


GrayBase.gamma_of = _gamma_of
GrayBase.is_id1 = _is_id1


def validate_three_category(g: TabGrayCategory) -> ValidationReport:
    """Gray-category check plus strict interchange (all interchangers identity)."""
    rep = validate_gray_category(g)
    with timer(rep):
        if not rep.is_structural():
            for (a, b), c in sorted(g.gamma_table.items()):
                if not g.is_id3(c):
                    rep.add("strict-interchange", (a, b), "non-identity interchanger")
    return rep


def has_only_trivial_composites(g: TabGrayCategory) -> bool:
    for f in g.all_one_cells():
        for h in g.all_one_cells():
            if g.one_tgt(f) != g.one_src(h):
                continue
            if not g.is_id1(f) and not g.is_id1(h):
                return False
    return True
