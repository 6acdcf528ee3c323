"""Graphs, 2-computads and normal forms for cells of free structures.

Composition order convention, used across the whole package: paths and all
composites are written in diagrammatic order, so ``path_compose(p, q)``
traverses ``p`` first and ``q`` second, and a path ``(a, b)`` means "a, then
b".  Two-cells of free sesquicategories are step sequences: each step
rewrites the running path by replacing the boundary of one whiskered
generator.  Because sesquicategories have no interchange law, such sequences
(after cancelling adjacent inverse pairs) are complete normal forms, so
equality is plain structural equality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .report import ValidationReport, timer


class ComputadError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    objects: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]  # (id, source, target)

    def __post_init__(self):
        obs = set(self.objects)
        if len(obs) != len(self.objects):
            raise ComputadError("duplicate object id")
        seen = set()
        for e, s, t in self.edges:
            if e in seen:
                raise ComputadError(f"duplicate edge id {e!r}")
            seen.add(e)
            if s not in obs or t not in obs:
                raise ComputadError(f"edge {e!r} has undeclared endpoint")

    def edge_src(self, e: str) -> str:
        return self._edge_map()[e][0]

    def edge_tgt(self, e: str) -> str:
        return self._edge_map()[e][1]

    def _edge_map(self) -> dict:
        m = getattr(self, "_emap", None)
        if m is None:
            m = {e: (s, t) for e, s, t in self.edges}
            object.__setattr__(self, "_emap", m)
        return m

    def has_edge(self, e: str) -> bool:
        return e in self._edge_map()


@dataclass(frozen=True)
class Path:
    """A composable sequence of edge ids, possibly empty, with a start object."""

    start: str
    edges: tuple[str, ...] = ()

    def __str__(self):
        inner = ",".join(self.edges) if self.edges else "-"
        return f"({inner})@{self.start}"

    def is_empty(self) -> bool:
        return not self.edges

    def end(self, g: Graph) -> str:
        cur = self.start
        for e in self.edges:
            if g.edge_src(e) != cur:
                raise ComputadError(f"path {self} breaks at {e!r}")
            cur = g.edge_tgt(e)
        return cur

    def check(self, g: Graph) -> "Path":
        self.end(g)
        return self


def path_compose(g: Graph, p: Path, q: Path) -> Path:
    """Concatenate composable paths; strictly associative and unital."""
    if p.end(g) != q.start:
        raise ComputadError(f"paths not composable: {p} then {q}")
    return Path(p.start, p.edges + q.edges)


def path_compose_many(g: Graph, paths: Iterable[Path]) -> Path:
    out = None
    for p in paths:
        out = p if out is None else path_compose(g, out, p)
    if out is None:
        raise ComputadError("empty path list")
    return out


def enumerate_paths(g: Graph, src: str, tgt: str, maxlen: int) -> list[Path]:
    """All paths src -> tgt of length <= maxlen, lexicographic by edge ids."""
    if src not in g.objects or tgt not in g.objects:
        raise ComputadError("unknown object")
    if maxlen < 0:
        raise ComputadError("maxlen must be >= 0")
    out: list[Path] = []
    by_src: dict[str, list[tuple[str, str]]] = {}
    for e, s, t in sorted(g.edges):
        by_src.setdefault(s, []).append((e, t))

    def walk(cur: str, acc: tuple[str, ...]):
        if cur == tgt:
            out.append(Path(src, acc))
        if len(acc) == maxlen:
            return
        for e, nxt in by_src.get(cur, ()):
            walk(nxt, acc + (e,))

    walk(src, ())
    out.sort(key=lambda p: (len(p.edges), p.edges))
    return out


@dataclass(frozen=True)
class TwoComputad:
    graph: Graph
    # id -> (source path, target path); both parallel
    gen2: tuple[tuple[str, Path, Path], ...]
    invertible: frozenset[str] = frozenset()

    def __post_init__(self):
        seen = set()
        for name, s, t in self.gen2:
            if name in seen:
                raise ComputadError(f"duplicate 2-cell id {name!r}")
            seen.add(name)
            s.check(self.graph)
            t.check(self.graph)
            if s.start != t.start or s.end(self.graph) != t.end(self.graph):
                raise ComputadError(f"2-cell {name!r} has non-parallel boundary")
        for name in self.invertible:
            if name not in seen:
                raise ComputadError(f"invertible flag on unknown 2-cell {name!r}")

    def gen_map(self) -> dict:
        m = getattr(self, "_gmap", None)
        if m is None:
            m = {name: (s, t) for name, s, t in self.gen2}
            object.__setattr__(self, "_gmap", m)
        return m

    def src2(self, name: str) -> Path:
        return self.gen_map()[name][0]

    def tgt2(self, name: str) -> Path:
        return self.gen_map()[name][1]


@dataclass(frozen=True)
class Step:
    """One whiskered generator in a sesquicategory term.

    ``left`` and ``right`` are the whiskering paths (left traversed first),
    ``inv`` marks a formal inverse, allowed only for invertible generators.
    """

    left: Path
    gen: str
    inv: bool
    right: Path

    def flipped(self) -> "Step":
        return Step(self.left, self.gen, not self.inv, self.right)


@dataclass(frozen=True)
class SesquiTerm:
    source: Path
    target: Path
    steps: tuple[Step, ...] = ()

    def is_identity(self) -> bool:
        return not self.steps and self.source == self.target


def identity_term(p: Path) -> SesquiTerm:
    return SesquiTerm(p, p)


def step_boundary(c: TwoComputad, st: Step) -> tuple[Path, Path]:
    g = c.graph
    s, t = c.gen_map()[st.gen]
    if st.inv:
        if st.gen not in c.invertible:
            raise ComputadError(f"generator {st.gen!r} is not invertible")
        s, t = t, s
    before = path_compose_many(g, [st.left, s, st.right])
    after = path_compose_many(g, [st.left, t, st.right])
    return before, after


def check_term(c: TwoComputad, t: SesquiTerm) -> SesquiTerm:
    g = c.graph
    t.source.check(g)
    t.target.check(g)
    run = t.source
    for st in t.steps:
        before, after = step_boundary(c, st)
        if before != run:
            raise ComputadError(f"step {st.gen!r} does not rewrite {run}")
        run = after
    if run != t.target:
        raise ComputadError(f"term ends at {run}, declared target {t.target}")
    return t


def _cancel(steps: tuple[Step, ...]) -> tuple[Step, ...]:
    out: list[Step] = []
    for st in steps:
        if out and out[-1] == st.flipped():
            out.pop()
        else:
            out.append(st)
    return tuple(out)


def sesqui_vcompose(c: TwoComputad, t1: SesquiTerm, t2: SesquiTerm) -> SesquiTerm:
    if t1.target != t2.source:
        raise ComputadError(f"terms not composable: {t1.target} vs {t2.source}")
    return check_term(c, SesquiTerm(t1.source, t2.target, _cancel(t1.steps + t2.steps)))


def sesqui_vcompose_many(c: TwoComputad, terms: Iterable[SesquiTerm]) -> SesquiTerm:
    out = None
    for t in terms:
        out = t if out is None else sesqui_vcompose(c, out, t)
    if out is None:
        raise ComputadError("empty term list")
    return out


def sesqui_whisker(c: TwoComputad, l: Path, t: SesquiTerm, r: Path) -> SesquiTerm:
    """Extend every step of ``t`` by the whiskers ``l`` (before) and ``r`` (after)."""
    g = c.graph
    if l.end(g) != t.source.start:
        raise ComputadError("left whisker not composable")
    src = path_compose_many(g, [l, t.source, r])
    tgt = path_compose_many(g, [l, t.target, r])
    steps = tuple(
        Step(path_compose(g, l, st.left), st.gen, st.inv, path_compose(g, st.right, r))
        for st in t.steps
    )
    return check_term(c, SesquiTerm(src, tgt, steps))


def gen_term(c: TwoComputad, name: str, inv: bool = False) -> SesquiTerm:
    s, t = c.gen_map()[name]
    if inv:
        s, t = t, s
    st = Step(Path(s.start), name, inv, Path(s.end(c.graph)))
    return check_term(c, SesquiTerm(s, t, (st,)))


def sesqui_inverse(c: TwoComputad, t: SesquiTerm) -> SesquiTerm:
    """Reverse a term; every step must be invertible."""
    steps = tuple(st.flipped() for st in reversed(t.steps))
    return check_term(c, SesquiTerm(t.target, t.source, steps))


def enumerate_terms(
    c: TwoComputad, src: Path, tgt: Path, max_steps: int, allow_inverses: bool = True
) -> list[SesquiTerm]:
    """All terms src -> tgt with at most ``max_steps`` steps, reduced, in a
    deterministic order.  Exhaustive-search oracle for bounded fragments."""
    g = c.graph
    start_obj, end_obj = src.start, src.end(g)

    def rewrites(p: Path) -> Iterator[Step]:
        names = sorted(c.gen_map())
        for name in names:
            variants = [False] + ([True] if (allow_inverses and name in c.invertible) else [])
            for inv in variants:
                s, t = c.gen_map()[name]
                if inv:
                    s, t = t, s
                sub = s.edges
                for i in range(len(p.edges) - len(sub) + 1):
                    if p.edges[i : i + len(sub)] == sub:
                        left = Path(p.start, p.edges[:i]).check(g)
                        if left.end(g) != s.start:
                            continue
                        right = Path(s.end(g), p.edges[i + len(sub) :])
                        yield Step(left, name, inv, right)
                if not sub:
                    # empty source path: insert at any object occurrence
                    cur = p.start
                    for i in range(len(p.edges) + 1):
                        if cur == s.start:
                            left = Path(p.start, p.edges[:i])
                            right = Path(cur, p.edges[i:])
                            yield Step(left, name, inv, right)
                        if i < len(p.edges):
                            cur = g.edge_tgt(p.edges[i])

    found: list[SesquiTerm] = []

    def walk(run: Path, acc: tuple[Step, ...]):
        if run == tgt:
            if _cancel(acc) == acc:
                found.append(SesquiTerm(src, tgt, acc))
        if len(acc) == max_steps:
            return
        for st in rewrites(run):
            if acc and st == acc[-1].flipped():
                continue
            _, after = step_boundary(c, st)
            walk(after, acc + (st,))

    walk(src, ())
    found.sort(key=lambda t: (len(t.steps), str(t)))
    return found


def validate_computad(c: TwoComputad) -> ValidationReport:
    rep = ValidationReport()
    with timer(rep):
        try:
            TwoComputad(c.graph, c.gen2, c.invertible)
        except ComputadError as e:  # pragma: no cover - constructor already raises
            rep.add("structure/computad", (), str(e))
    return rep
