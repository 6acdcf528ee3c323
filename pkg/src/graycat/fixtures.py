"""The fixture library: small structures with every axiom checked at build.

FIX-TRIV   terminal Gray-category.
FIX-2GRP   one-object bicategory of the 2-group with pi0 = pi1 = Z/2 and the
           product 3-cocycle as associator (pentagon verified at build).
FIX-INT    three objects X, Y, Z with invertible 2-cells phi, psi in the two
           outer homs and one non-trivial interchanger; the hom (X, Z) is a
           mod-2 winding groupoid over the four composite 1-cells, with
           doubled 3-cells so mutation tests have room to move.
P0..P3     free-living n-cells as Gray-categories.
PAIR       the walking composable pair (has one non-trivial composite).
"""
from __future__ import annotations

from .bicategory import TabBicategory, TabTwoCategory, validate_bicategory
from .computad import Graph, Path, enumerate_paths
from .graycategory import TabGrayCategory, validate_gray_category, validate_three_category
from .homs import FinCat, FinTwoCat, discrete_two_cat


class FixtureError(ValueError):
    pass


# ---------------------------------------------------------------------------
# builder plumbing
# ---------------------------------------------------------------------------


def _finish_gray(name, objects, homs, id1, comp1, w2l, w2r, w3l, w3r, gamma) -> TabGrayCategory:
    """Complete the forced table entries (identity composites and whiskers,
    identity interchangers) and assemble the structure."""
    one_home = {}
    for key, hom in homs.items():
        for f in hom.objects:
            one_home[f] = key
    for f, (x, y) in one_home.items():
        comp1.setdefault((id1[x], f), f)
        comp1.setdefault((f, id1[y]), f)
    # whiskering by identity 1-cells is trivial
    for key, hom in homs.items():
        x, y = key
        for m in hom.mors:
            w2l.setdefault((id1[x], m), m)
            w2r.setdefault((m, id1[y]), m)
        for u in hom.cells:
            w3l.setdefault((id1[x], u), u)
            w3r.setdefault((u, id1[y]), u)
    # whiskering of identity 2-cells and 3-cells is forced by functoriality
    ones = sorted(one_home)
    for f in ones:
        x, y = one_home[f]
        for (h0, h1), hom in homs.items():
            if h0 == y:
                target_hom = homs[(x, h1)]
                for m in hom.mors:
                    if hom.is_mid(m):
                        w2l.setdefault((f, m), target_hom.mid(comp1[(f, hom.msrc(m))]))
                for u in hom.cells:
                    if hom.is_cid(u) and (f, hom.csrc(u)) in w2l:
                        w3l.setdefault((f, u), target_hom.cid(w2l[(f, hom.csrc(u))]))
            if h1 == x:
                target_hom = homs[(h0, y)]
                for m in hom.mors:
                    if hom.is_mid(m):
                        w2r.setdefault((m, f), target_hom.mid(comp1[(hom.msrc(m), f)]))
                for u in hom.cells:
                    if hom.is_cid(u) and (hom.csrc(u), f) in w2r:
                        w3r.setdefault((u, f), target_hom.cid(w2r[(hom.csrc(u), f)]))
    g = TabGrayCategory(name, tuple(objects), homs, id1, comp1, w2l, w2r, w3l, w3r, gamma)
    # identity interchangers for every adjacent pair not yet tabulated
    for (x, y), hom1 in homs.items():
        for (y2, z), hom2 in homs.items():
            if y2 != y:
                continue
            for a in hom1.mors:
                for b in hom2.mors:
                    if (a, b) in gamma:
                        continue
                    if not (hom1.is_mid(a) or hom2.is_mid(b)):
                        raise FixtureError(f"missing interchanger for ({a}, {b})")
                    f1 = hom1.mtgt(a)
                    g0 = hom2.msrc(b)
                    route = g.vcomp2(g.whisk2r(a, g0), g.whisk2l(f1, b))
                    gamma[(a, b)] = g.id3(route)
    return g


def _one_object_discrete(name: str, ob: str) -> TabGrayCategory:
    hom = discrete_two_cat((f"1{ob}",))
    return _finish_gray(name, (ob,), {(ob, ob): hom}, {ob: f"1{ob}"}, {}, {}, {}, {}, {}, {})


def fixture_triv() -> TabGrayCategory:
    return _one_object_discrete("FIX-TRIV", "T")


# ---------------------------------------------------------------------------
# FIX-2GRP
# ---------------------------------------------------------------------------


def fixture_2grp() -> TabBicategory:
    ones = ("e", "a")
    signs = ("pos", "neg")

    def cell(f, s):
        return f"{f}.{s}"

    arrows = {cell(f, s): (f, f) for f in ones for s in signs}
    identity = {f: cell(f, "pos") for f in ones}
    compose = {}
    for f in ones:
        for s in signs:
            for t in signs:
                u = "pos" if s == t else "neg"
                compose[(cell(f, s), cell(f, t))] = cell(f, u)
    hom = FinCat(ones, arrows, identity, compose)

    def add(f, g):
        return "e" if f == g else "a"

    comp1 = {(f, g): add(f, g) for f in ones for g in ones}
    hcomp2 = {}
    for f in ones:
        for g in ones:
            for s in signs:
                for t in signs:
                    u = "pos" if s == t else "neg"
                    hcomp2[(cell(f, s), cell(g, t))] = cell(add(f, g), u)
    assoc = {}
    for f in ones:
        for g in ones:
            for h in ones:
                tot = add(add(f, g), h)
                sign = "neg" if (f, g, h) == ("a", "a", "a") else "pos"
                assoc[(f, g, h)] = cell(tot, sign)
    lam = {f: cell(f, "pos") for f in ones}
    rho = {f: cell(f, "pos") for f in ones}
    b = TabBicategory(
        "FIX-2GRP", ("*",), {("*", "*"): hom}, {"*": "e"}, comp1, hcomp2, assoc, lam, rho
    )
    rep = validate_bicategory(b)
    if not rep.passed:
        raise FixtureError(f"FIX-2GRP failed its own validation: {rep.families()}")
    return b


# ---------------------------------------------------------------------------
# FIX-INT
# ---------------------------------------------------------------------------

_CORNERS = ("00", "01", "10", "11")


def _xz_mor(s: str, t: str, w: int) -> str:
    return f"XZ[{s}>{t}]{w}"


def _xz_cell(m0: str, m1: str, v: int) -> str:
    return f"<{m0}|{m1}>v{v}"


def _parse_mor(m: str) -> tuple[str, str, int]:
    body = m[m.index("[") + 1 : m.index("]")]
    s, t = body.split(">")
    return s, t, int(m[m.index("]") + 1 :])


def _outer_hom(f0: str, f1: str, iso: str) -> FinTwoCat:
    """Hom 2-category with two 1-cells and a strictly invertible 2-cell."""
    inv = iso + "~"
    mors = {
        f"1[{f0}]": (f0, f0),
        f"1[{f1}]": (f1, f1),
        iso: (f0, f1),
        inv: (f1, f0),
    }
    mor_id = {f0: f"1[{f0}]", f1: f"1[{f1}]"}
    mor_comp = {}
    for m, (s, t) in mors.items():
        for n, (s2, t2) in mors.items():
            if t != s2:
                continue
            if m == mor_id[s] and s == t:
                mor_comp[(m, n)] = n
            elif n == mor_id[t2] and s2 == t2:
                mor_comp[(m, n)] = m
            elif (m, n) in ((iso, inv),):
                mor_comp[(m, n)] = mor_id[f0]
            elif (m, n) in ((inv, iso),):
                mor_comp[(m, n)] = mor_id[f1]
    cells = {f"1[{m}]": (m, m) for m in mors}
    cell_id = {m: f"1[{m}]" for m in mors}
    cell_vcomp = {(u, u): u for u in cells}
    whisk_l = {}
    whisk_r = {}
    for m in mors:
        for u in cells:
            n = cells[u][0]
            if mors[m][1] == mors[n][0]:
                whisk_l[(m, u)] = cell_id[mor_comp[(m, n)]]
            if mors[n][1] == mors[m][0]:
                whisk_r[(u, m)] = cell_id[mor_comp[(n, m)]]
    return FinTwoCat((f0, f1), mors, cells, mor_id, mor_comp, cell_id, cell_vcomp, whisk_l, whisk_r)


def _winding_hom() -> FinTwoCat:
    objects = tuple(f"c{s}" for s in _CORNERS)
    mors = {}
    for s in _CORNERS:
        for t in _CORNERS:
            for w in (0, 1):
                mors[_xz_mor(s, t, w)] = (f"c{s}", f"c{t}")
    mor_id = {f"c{s}": _xz_mor(s, s, 0) for s in _CORNERS}
    mor_comp = {}
    for s in _CORNERS:
        for t in _CORNERS:
            for u in _CORNERS:
                for w1 in (0, 1):
                    for w2 in (0, 1):
                        mor_comp[(_xz_mor(s, t, w1), _xz_mor(t, u, w2))] = _xz_mor(s, u, (w1 + w2) % 2)
    cells = {}
    for m0, (src0, tgt0) in mors.items():
        for m1, (src1, tgt1) in mors.items():
            if (src0, tgt0) != (src1, tgt1):
                continue
            for v in (0, 1):
                cells[_xz_cell(m0, m1, v)] = (m0, m1)
    cell_id = {m: _xz_cell(m, m, 0) for m in mors}
    cell_vcomp = {}
    for u, (m0, m1) in cells.items():
        va = int(u[-1])
        for v2, (n0, n1) in cells.items():
            if n0 != m1:
                continue
            vb = int(v2[-1])
            cell_vcomp[(u, v2)] = _xz_cell(m0, n1, (va + vb) % 2)
    whisk_l = {}
    whisk_r = {}
    for m, (ms, mt) in mors.items():
        for u, (n0, n1) in cells.items():
            v = int(u[-1])
            if mt == mors[n0][0]:
                whisk_l[(m, u)] = _xz_cell(mor_comp[(m, n0)], mor_comp[(m, n1)], v)
            if mors[n0][1] == ms:
                whisk_r[(u, m)] = _xz_cell(mor_comp[(n0, m)], mor_comp[(n1, m)], v)
    return FinTwoCat(objects, mors, cells, mor_id, mor_comp, cell_id, cell_vcomp, whisk_l, whisk_r)


def fixture_int(winding: bool = True, name: str = "FIX-INT") -> TabGrayCategory:
    """The free-interchange fixture; ``winding=False`` collapses the two
    horizontal composite orders, yielding the interchanger-trivialized
    mutant, a strict 3-category."""
    hom_xy = _outer_hom("f", "f'", "phi")
    hom_yz = _outer_hom("g", "g'", "psi")
    hom_xz = _winding_hom()
    homs = {
        ("X", "X"): discrete_two_cat(("1X",)),
        ("Y", "Y"): discrete_two_cat(("1Y",)),
        ("Z", "Z"): discrete_two_cat(("1Z",)),
        ("X", "Y"): hom_xy,
        ("Y", "Z"): hom_yz,
        ("X", "Z"): hom_xz,
    }
    id1 = {"X": "1X", "Y": "1Y", "Z": "1Z"}
    fs = {"f": "0", "f'": "1"}
    gs = {"g": "0", "g'": "1"}
    comp1 = {(fn, gn): f"c{i}{j}" for fn, i in fs.items() for gn, j in gs.items()}

    w2l = {}
    w2r = {}
    for fn, i in fs.items():
        for m, (s, t) in hom_yz.mors.items():
            w = 1 if (winding and fn == "f'" and not hom_yz.is_mid(m)) else 0
            w2l[(fn, m)] = _xz_mor(f"{i}{gs[s]}", f"{i}{gs[t]}", w)
    for gn, j in gs.items():
        for m, (s, t) in hom_xy.mors.items():
            w2r[(m, gn)] = _xz_mor(f"{fs[s]}{j}", f"{fs[t]}{j}", 0)
    w3l = {}
    w3r = {}
    for fn in fs:
        for u in hom_yz.cells:
            m = hom_yz.cells[u][0]
            w3l[(fn, u)] = hom_xz.cid(w2l[(fn, m)])
    for gn in gs:
        for u in hom_xy.cells:
            m = hom_xy.cells[u][0]
            w3r[(u, gn)] = hom_xz.cid(w2r[(m, gn)])
    gamma = {}
    for a in ("phi", "phi~"):
        for b in ("psi", "psi~"):
            f0, f1 = hom_xy.mors[a]
            g0, g1 = hom_yz.mors[b]
            src = hom_xz.mor_comp[(w2r[(a, g0)], w2l[(f1, b)])]
            tgt = hom_xz.mor_comp[(w2l[(f0, b)], w2r[(a, g1)])]
            gamma[(a, b)] = _xz_cell(src, tgt, 1 if winding else 0)
    g = _finish_gray(name, ("X", "Y", "Z"), homs, id1, comp1, w2l, w2r, w3l, w3r, gamma)
    rep = validate_gray_category(g)
    if not rep.passed:
        raise FixtureError(f"{name} failed its own validation: {rep.families()}")
    if not winding:
        rep3 = validate_three_category(g)
        if not rep3.passed:
            raise FixtureError(f"{name} is not a strict 3-category: {rep3.families()}")
    return g


def fixture_int_flat() -> TabGrayCategory:
    return fixture_int(winding=False, name="FIX-INT-FLAT")


# ---------------------------------------------------------------------------
# walking cells
# ---------------------------------------------------------------------------


def _two_object_gray(name: str, hom01: FinTwoCat) -> TabGrayCategory:
    homs = {
        ("0", "0"): discrete_two_cat(("1_0",)),
        ("1", "1"): discrete_two_cat(("1_1",)),
        ("0", "1"): hom01,
    }
    id1 = {"0": "1_0", "1": "1_1"}
    return _finish_gray(name, ("0", "1"), homs, id1, {}, {}, {}, {}, {}, {})


def _p2_hom() -> FinTwoCat:
    mors = {"1[a0]": ("a0", "a0"), "1[a1]": ("a1", "a1"), "mm": ("a0", "a1")}
    mor_id = {"a0": "1[a0]", "a1": "1[a1]"}
    mor_comp = {
        ("1[a0]", "1[a0]"): "1[a0]",
        ("1[a1]", "1[a1]"): "1[a1]",
        ("1[a0]", "mm"): "mm",
        ("mm", "1[a1]"): "mm",
    }
    cells = {f"1[{m}]": (m, m) for m in mors}
    cell_id = {m: f"1[{m}]" for m in mors}
    cell_vcomp = {(u, u): u for u in cells}
    whisk_l = {}
    whisk_r = {}
    for m in mors:
        for u in cells:
            n = cells[u][0]
            if mors[m][1] == mors[n][0]:
                whisk_l[(m, u)] = cell_id[mor_comp[(m, n)]]
            if mors[n][1] == mors[m][0]:
                whisk_r[(u, m)] = cell_id[mor_comp[(n, m)]]
    return FinTwoCat(("a0", "a1"), mors, cells, mor_id, mor_comp, cell_id, cell_vcomp, whisk_l, whisk_r)


def _p3_hom() -> FinTwoCat:
    mors = {
        "1[a0]": ("a0", "a0"),
        "1[a1]": ("a1", "a1"),
        "m0": ("a0", "a1"),
        "m1": ("a0", "a1"),
    }
    mor_id = {"a0": "1[a0]", "a1": "1[a1]"}
    mor_comp = {("1[a0]", "1[a0]"): "1[a0]", ("1[a1]", "1[a1]"): "1[a1]"}
    for m in ("m0", "m1"):
        mor_comp[("1[a0]", m)] = m
        mor_comp[(m, "1[a1]")] = m
    cells = {f"1[{m}]": (m, m) for m in mors}
    cells["GG"] = ("m0", "m1")
    cell_id = {m: f"1[{m}]" for m in mors}
    cell_vcomp = {}
    for u, (m0, m1) in cells.items():
        for v, (n0, n1) in cells.items():
            if m1 != n0:
                continue
            hits = sum(1 for c in (u, v) if c == "GG")
            if hits == 0 and m0 == n1:
                cell_vcomp[(u, v)] = f"1[{m0}]"
            elif hits == 1:
                cell_vcomp[(u, v)] = "GG"
    whisk_l = {}
    whisk_r = {}
    for m in mors:
        for u, (n0, n1) in cells.items():
            if mors[m][1] == mors[n0][0]:
                src, tgt = mor_comp[(m, n0)], mor_comp[(m, n1)]
                whisk_l[(m, u)] = f"1[{src}]" if src == tgt else "GG"
            if mors[n0][1] == mors[m][0]:
                src, tgt = mor_comp[(n0, m)], mor_comp[(n1, m)]
                whisk_r[(u, m)] = f"1[{src}]" if src == tgt else "GG"
    return FinTwoCat(("a0", "a1"), mors, cells, mor_id, mor_comp, cell_id, cell_vcomp, whisk_l, whisk_r)


def walking_cell(n: int) -> TabGrayCategory:
    """The free-living n-cell, n in {0, 1, 2, 3}."""
    if n == 0:
        return _one_object_discrete("P0", "0")
    if n == 1:
        return _two_object_gray("P1", discrete_two_cat(("arr",)))
    if n == 2:
        return _two_object_gray("P2", _p2_hom())
    if n == 3:
        return _two_object_gray("P3", _p3_hom())
    raise FixtureError(f"no walking {n}-cell")


def walking_pair() -> TabGrayCategory:
    """The walking composable pair: 0 --a--> 1 --b--> 2 with composite ab."""
    homs = {
        ("0", "0"): discrete_two_cat(("1_0",)),
        ("1", "1"): discrete_two_cat(("1_1",)),
        ("2", "2"): discrete_two_cat(("1_2",)),
        ("0", "1"): discrete_two_cat(("a",)),
        ("1", "2"): discrete_two_cat(("b",)),
        ("0", "2"): discrete_two_cat(("ab",)),
    }
    id1 = {"0": "1_0", "1": "1_1", "2": "1_2"}
    comp1 = {("a", "b"): "ab"}
    w2l = {("a", "1[b]"): "1[ab]"}
    w2r = {("1[a]", "b"): "1[ab]"}
    w3l = {("a", "1[1[b]]"): "1[1[ab]]"}
    w3r = {("1[1[a]]", "b"): "1[1[ab]]"}
    return _finish_gray("PAIR", ("0", "1", "2"), homs, id1, comp1, w2l, w2r, w3l, w3r, {})


# ---------------------------------------------------------------------------
# bicategory-side helpers
# ---------------------------------------------------------------------------


def strict_two_group() -> TabTwoCategory:
    """FIX-2GRP with the associator flattened: a strict 2-category."""
    b = fixture_2grp()
    assoc = {key: b.id2(b.comp1(b.comp1(key[0], key[1]), key[2])) for key in b.assoc_table}
    return TabTwoCategory(
        "2GRP-STRICT", b.objects, b.homs, b.id1_table, b.comp1_table, b.hcomp2_table,
        assoc, dict(b.lam_table), dict(b.rho_table),
    )


class FreeTwoCategory(TabTwoCategory):
    """A 2-category whose underlying category is free on a graph.

    One-cell ids are the printed paths; each hom is the thin groupoid
    generated by swapping the interchangeable parallel edges.
    """

    graph: Graph = None
    paths: dict = None

    def path_of(self, one_id: str) -> Path:
        return self.paths[one_id]

    def one_of(self, p: Path) -> str:
        return str(p)


def thin_free_two_category() -> FreeTwoCategory:
    g = Graph(("0", "1", "2"), (("a", "0", "1"), ("a'", "0", "1"), ("b", "1", "2")))
    paths: dict[str, Path] = {}
    for x in g.objects:
        for y in g.objects:
            for p in enumerate_paths(g, x, y, 2):
                paths[str(p)] = p

    def skel(p: Path) -> tuple:
        return tuple("a" if e == "a'" else e for e in p.edges)

    homs = {}
    id1 = {x: str(Path(x)) for x in g.objects}
    for x in g.objects:
        for y in g.objects:
            obl = sorted(pid for pid, p in paths.items() if p.start == x and p.end(g) == y)
            if not obl:
                continue
            arrows = {}
            for p in obl:
                for q in obl:
                    if skel(paths[p]) == skel(paths[q]):
                        arrows[f"w[{p}>{q}]"] = (p, q)
            identity = {p: f"w[{p}>{p}]" for p in obl}
            compose = {}
            for aid, (p, q) in arrows.items():
                for bid, (q2, r) in arrows.items():
                    if q == q2:
                        compose[(aid, bid)] = f"w[{p}>{r}]"
            homs[(x, y)] = FinCat(tuple(obl), arrows, identity, compose)
    comp1 = {}
    hcomp2 = {}
    for (x, y), h1 in homs.items():
        for (y2, z), h2 in homs.items():
            if y2 != y:
                continue
            for p in h1.objects:
                for q in h2.objects:
                    comp1[(p, q)] = str(Path(x, paths[p].edges + paths[q].edges))
            for aid, (p, q) in h1.arrows.items():
                for bid, (r, s) in h2.arrows.items():
                    hcomp2[(aid, bid)] = f"w[{comp1[(p, r)]}>{comp1[(q, s)]}]"
    all_ones = {pid: key for key, h in homs.items() for pid in h.objects}
    assoc = {}
    for f in all_ones:
        for g2 in all_ones:
            if all_ones[f][1] != all_ones[g2][0]:
                continue
            for h in all_ones:
                if all_ones[g2][1] != all_ones[h][0]:
                    continue
                tot = comp1[(comp1[(f, g2)], h)]
                assoc[(f, g2, h)] = f"w[{tot}>{tot}]"
    lam = {f: f"w[{f}>{f}]" for f in all_ones}
    rho = {f: f"w[{f}>{f}]" for f in all_ones}
    cat = FreeTwoCategory("FREE2", g.objects, homs, id1, comp1, hcomp2, assoc, lam, rho)
    cat.graph = g
    cat.paths = paths
    return cat


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

_BUILDERS = {
    "FIX-TRIV": fixture_triv,
    "FIX-2GRP": fixture_2grp,
    "FIX-INT": fixture_int,
    "FIX-INT-FLAT": fixture_int_flat,
    "P0": lambda: walking_cell(0),
    "P1": lambda: walking_cell(1),
    "P2": lambda: walking_cell(2),
    "P3": lambda: walking_cell(3),
    "PAIR": walking_pair,
}


def fixture_names() -> list[str]:
    return sorted(_BUILDERS)


def build_fixture(name: str):
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise FixtureError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}")
    return builder()
