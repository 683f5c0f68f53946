"""Doubly periodic tilings: sites, translated edges, rotation systems, faces.

A :class:`PeriodicTiling` stores one representative per translation class of
vertices (``sites``) and one representative per translation class of edges.
An edge ``(i, j, s)`` joins ``sites[i]`` to ``sites[j] + s[0]*u + s[1]*v``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, cmp_to_key
from typing import Iterable, Sequence

from .exact_geometry import ONE, ZERO, QuadExt, Vec2, angular_compare, qx_sign, rotate30, unit_direction

Shift = tuple[int, int]
Edge = tuple[int, int, Shift]

FACE_SIZES = (3, 4, 6, 12)


class TilingError(ValueError):
    """Raised when a periodic tiling is structurally broken."""


# -- vertex types -------------------------------------------------------------


@dataclass(frozen=True, order=True)
class VertexType:
    """Face-size cycle around a vertex, canonical up to rotation and reversal."""

    cycle: tuple[int, ...]

    @classmethod
    def from_cycle(cls, sizes: Iterable[int]) -> "VertexType":
        seq = tuple(sizes)
        if not seq:
            raise ValueError("empty face cycle")
        n = len(seq)
        candidates = []
        for s in (seq, seq[::-1]):
            for r in range(n):
                candidates.append(s[r:] + s[:r])
        return cls(min(candidates))

    @classmethod
    def parse(cls, text: str) -> "VertexType":
        """Parse ``"3^2,4,3,4"`` or ``"3.3.4.3.4"`` style notation."""
        text = text.strip().strip("[]")
        sizes: list[int] = []
        for part in text.replace(".", ",").split(","):
            part = part.strip()
            if not part:
                continue
            if "^" in part:
                p, k = part.split("^")
                sizes.extend([int(p)] * int(k))
            else:
                sizes.append(int(part))
        return cls.from_cycle(sizes)

    def runs(self) -> list[tuple[int, int]]:
        """Run-length form with adjacent runs distinct, cyclically.

        The canonical cycle is rotated so that no run wraps around the end.
        """
        c = list(self.cycle)
        if len(set(c)) == 1:
            return [(c[0], len(c))]
        k = 0
        while c[k - 1] == c[k]:
            k += 1
        c = c[k:] + c[:k]
        out: list[tuple[int, int]] = []
        for p in c:
            if out and out[-1][0] == p:
                out[-1] = (p, out[-1][1] + 1)
            else:
                out.append((p, 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.cycle)

    def __str__(self) -> str:
        return "[" + ",".join(f"{p}^{n}" if n > 1 else f"{p}" for p, n in self.runs()) + "]"


# -- lattice coordinates ------------------------------------------------------


def qx_floor(x: QuadExt) -> int:
    """Exact floor of a QuadExt."""
    # integer guess from isqrt, then exact correction
    r = math.isqrt(3 * x._q * x._q)
    n = (x._p + (r if x._q >= 0 else -r)) // x._d
    while qx_sign(x - n) < 0:
        n -= 1
    while qx_sign(x - (n + 1)) >= 0:
        n += 1
    return n


def lattice_coords(p: Vec2, basis: tuple[Vec2, Vec2]) -> tuple[QuadExt, QuadExt]:
    u, v = basis
    det = u.cross(v)
    return p.cross(v) / det, u.cross(p) / det


def as_int(x: QuadExt) -> int | None:
    if x._q == 0 and x._d == 1:
        return x._p
    return None


def reduce_point(p: Vec2, basis: tuple[Vec2, Vec2]) -> tuple[Vec2, Shift]:
    """Reduce ``p`` into the half-open cell ``[0,1) x [0,1)``.

    Returns ``(q, (m, n))`` with ``p = q + m*u + n*v``.
    """
    u, v = basis
    s, t = lattice_coords(p, basis)
    m, n = qx_floor(s), qx_floor(t)
    q = p - u.scale(m) - v.scale(n)
    return q, (m, n)


# -- the tiling -----------------------------------------------------------------


@dataclass(frozen=True)
class PeriodicTiling:
    id: object
    basis: tuple[Vec2, Vec2]
    sites: tuple[Vec2, ...]
    edges: tuple[Edge, ...]
    declared_types: tuple[VertexType, VertexType]
    name: str = ""
    _site_index: dict = field(default=None, compare=False, repr=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_site_index", {s: i for i, s in enumerate(self.sites)})

    # geometry helpers
    def shift_vector(self, s: Shift) -> Vec2:
        u, v = self.basis
        return u.scale(s[0]) + v.scale(s[1])

    def position(self, i: int, s: Shift = (0, 0)) -> Vec2:
        return self.sites[i] + self.shift_vector(s)

    def locate(self, p: Vec2) -> tuple[int, Shift] | None:
        """Site index and cell of a plane point, or None if it is not a vertex."""
        q, s = reduce_point(p, self.basis)
        i = self._site_index.get(q)
        return None if i is None else (i, s)

    @property
    def cell_area(self) -> QuadExt:
        u, v = self.basis
        a = u.cross(v)
        return a if qx_sign(a) > 0 else -a

    @property
    def type_pair_label(self) -> str:
        return f"[{str(self.declared_types[0])[1:-1]};{str(self.declared_types[1])[1:-1]}]"

    # combinatorics
    @cached_property
    def germs(self) -> tuple[tuple[tuple[int, Shift], ...], ...]:
        """Rotation system: CCW-sorted ``(j, shift)`` germs at every site."""
        return rotation_system(self)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.germs)

    @cached_property
    def faces(self) -> tuple["PlaneFace", ...]:
        return trace_faces(self)

    @cached_property
    def _edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def vertex_types(self) -> tuple[VertexType, ...]:
        return tuple(classify_vertex_type(self, i) for i in range(len(self.sites)))


def _canonical_edge(i: int, j: int, s: Shift) -> Edge:
    if (i, j) > (j, i) or (i == j and s < (0, 0)):
        return (j, i, (-s[0], -s[1]))
    return (i, j, s)


def canonical_edges(edges: Iterable[Edge]) -> tuple[Edge, ...]:
    out = set()
    for i, j, s in edges:
        if i == j and s == (0, 0):
            raise TilingError("degenerate loop edge")
        out.add(_canonical_edge(i, j, s))
    return tuple(sorted(out))


def make_tiling(
    id: object,
    basis: tuple[Vec2, Vec2],
    points: Iterable[Vec2],
    declared: Sequence[VertexType | str],
    name: str = "",
    search: int = 2,
) -> PeriodicTiling:
    """Build a tiling from vertex positions; edges join points at unit distance.

    ``points`` may contain lattice translates of each other; they are reduced
    into the fundamental cell and deduplicated.
    """
    reduced = sorted(
        {reduce_point(p, basis)[0] for p in points},
        key=lambda q: (q.y, q.x),
    )
    sites = tuple(reduced)
    index = {p: i for i, p in enumerate(sites)}
    u, v = basis
    edges = []
    for i, p in enumerate(sites):
        for m in range(-search, search + 1):
            for n in range(-search, search + 1):
                off = u.scale(m) + v.scale(n)
                for j, q in enumerate(sites):
                    if (q + off - p).norm2() == ONE:
                        edges.append((i, j, (m, n)))
    _ = index
    types = tuple(VertexType.parse(t) if isinstance(t, str) else t for t in declared)
    return PeriodicTiling(id, basis, sites, canonical_edges(edges), types, name)  # type: ignore[arg-type]


def rotation_system(t: PeriodicTiling) -> tuple[tuple[tuple[int, Shift], ...], ...]:
    inc: list[list[tuple[int, Shift]]] = [[] for _ in t.sites]
    for i, j, s in t.edges:
        inc[i].append((j, s))
        inc[j].append((i, (-s[0], -s[1])))
    out = []
    for i, germs in enumerate(inc):
        if not germs:
            raise TilingError(f"site {i} is isolated")
        here = t.sites[i]

        def key(g, here=here):
            return t.position(g[0], g[1]) - here

        germs.sort(key=cmp_to_key(lambda a, b: angular_compare(key(a), key(b))))
        for a, b in zip(germs, germs[1:] + germs[:1]):
            if a != b and angular_compare(key(a), key(b)) == 0:
                raise TilingError(f"overlapping edges at site {i}")
        out.append(tuple(germs))
    return tuple(out)


# -- faces --------------------------------------------------------------------


@dataclass(frozen=True)
class PlaneFace:
    """A face of the plane tiling, given by its boundary corners.

    ``corners`` lists ``(site, cell, germ)`` along the boundary walk; the walk
    follows ``sigma o alpha`` so the face lies to the right of each dart.
    """

    corners: tuple[tuple[int, Shift, int], ...]
    regular: bool
    closes: bool

    @property
    def size(self) -> int:
        return len(self.corners)


def _reverse_germ(t: PeriodicTiling, i: int, k: int) -> tuple[int, int]:
    j, s = t.germs[i][k]
    back = (i, (-s[0], -s[1]))
    return j, t.germs[j].index(back)


def _direction_index(d: Vec2) -> int | None:
    for k in range(12):
        if unit_direction(k) == d:
            return k
    return None


def trace_faces(t: PeriodicTiling) -> tuple[PlaneFace, ...]:
    """Orbits of ``sigma o alpha`` on the darts of one fundamental cell."""
    seen: set[tuple[int, int]] = set()
    faces = []
    for i0, gs in enumerate(t.germs):
        for k0 in range(len(gs)):
            if (i0, k0) in seen:
                continue
            corners = []
            dirs = []
            i, k, cell = i0, k0, (0, 0)
            while (i, k) not in seen:
                seen.add((i, k))
                j, s = t.germs[i][k]
                corners.append((i, cell, k))
                d = t.position(j, s) - t.sites[i]
                dirs.append(_direction_index(d))
                cell = (cell[0] + s[0], cell[1] + s[1])
                j, kb = _reverse_germ(t, i, k)
                i, k = j, (kb + 1) % len(t.germs[j])
            closes = (i, k) == (i0, k0) and cell == (0, 0)
            n = len(corners)
            regular = False
            if n in FACE_SIZES and None not in dirs:
                turns = {(dirs[(a + 1) % n] - dirs[a]) % 12 for a in range(n)}
                regular = turns == {(-12 // n) % 12}
            faces.append(PlaneFace(tuple(corners), regular, closes))
    return tuple(faces)


def face_sizes_at(t: PeriodicTiling, i: int) -> list[int]:
    """Face sizes around site ``i`` in CCW corner order."""
    size_of: dict[tuple[int, int], int] = {}
    for f in t.faces:
        for (a, _cell, k) in f.corners:
            size_of[(a, k)] = f.size
    deg = len(t.germs[i])
    out = []
    for k in range(deg):
        # corner between germ k and germ k+1 belongs to the face of dart (i, k+1)
        out.append(size_of[(i, (k + 1) % deg)])
    return out


def classify_vertex_type(t: PeriodicTiling, i: int) -> VertexType:
    for f in t.faces:
        if not f.closes:
            raise TilingError("face walk does not close")
    return VertexType.from_cycle(face_sizes_at(t, i))


# -- symmetry of the plane tiling -------------------------------------------------


def _rot(k: int, reflect: bool, p: Vec2) -> Vec2:
    return rotate30(p, k, reflect)


def point_symmetries(t: PeriodicTiling) -> list[tuple[int, bool, Vec2, tuple[int, ...]]]:
    """All isometries ``x -> R x + c`` of the tiling, modulo translations.

    Each entry is ``(k, reflect, c, perm)`` where ``R`` is rotation by 30k
    degrees (after reflecting in the x axis if ``reflect``) and ``perm`` is
    the induced permutation of sites.
    """
    out = []
    u, v = t.basis
    for reflect in (False, True):
        for k in range(12):
            ok = True
            for w in (u, v):
                a, b = lattice_coords(_rot(k, reflect, w), t.basis)
                if as_int(a) is None or as_int(b) is None:
                    ok = False
            if not ok:
                continue
            img0 = _rot(k, reflect, t.sites[0])
            for target in t.sites:
                c = target - img0
                perm = []
                for p in t.sites:
                    hit = t.locate(_rot(k, reflect, p) + c)
                    if hit is None:
                        break
                    perm.append(hit[0])
                else:
                    if len(set(perm)) == len(perm) and _maps_edges(t, k, reflect, c):
                        out.append((k, reflect, c, tuple(perm)))
    return out


def _maps_edges(t: PeriodicTiling, k: int, reflect: bool, c: Vec2) -> bool:
    for i, j, s in t.edges:
        a = t.locate(_rot(k, reflect, t.sites[i]) + c)
        b = t.locate(_rot(k, reflect, t.position(j, s)) + c)
        if a is None or b is None:
            return False
        ds = (b[1][0] - a[1][0], b[1][1] - a[1][1])
        if _canonical_edge(a[0], b[0], ds) not in t._edge_set:
            return False
    return True


def orbits_from_perms(n: int, perms: Iterable[Sequence[int]]) -> list[list[int]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for a, b in enumerate(p):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def symmetry_orbits(t: PeriodicTiling) -> list[list[int]]:
    """Vertex transitivity classes under the full symmetry group."""
    return orbits_from_perms(len(t.sites), (p for *_, p in point_symmetries(t)))
