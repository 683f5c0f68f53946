"""The twenty 2-uniform tilings K1..K20 and the square/triangle family K_m.

Each entry is built from an explicit exact construction (a lattice basis and a
generating set of vertex positions; edges are the unit-distance pairs), then
recentred at a point of inversion symmetry so that ``x -> -x`` maps the
tiling to itself.  :func:`validate_tiling` re-derives faces and vertex types
from scratch, so nothing below is trusted without being checked.
"""
from __future__ import annotations

import io
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Iterable, Sequence

from .exact_geometry import ONE, QuadExt, Vec2, angular_compare, qx_sign, rotate30, unit_direction
from .tiling import (
    FACE_SIZES,
    PeriodicTiling,
    TilingError,
    VertexType,
    _canonical_edge,
    make_tiling,
    orbits_from_perms,
    reduce_point,
)

__all__ = [
    "BOUNDS",
    "EQUALITY_CASES",
    "DECLARED_TYPES",
    "catalog",
    "all_tilings",
    "validate_tiling",
    "ValidationReport",
    "h_orbit_count",
    "g_orbit_count",
    "inversion_permutation",
    "dumps",
    "loads",
    "KmPatch",
    "build_Km",
]

# Orbit bounds m_i <= B_i for the torus quotients of K_i.
BOUNDS = (6, 4, 2, 2, 4, 7, 4, 3, 6, 3, 6, 2, 2, 6, 2, 3, 9, 3, 3, 9)
EQUALITY_CASES = frozenset({3, 4, 12, 13, 15})

DECLARED_TYPES: dict[int, tuple[str, str]] = {
    1: ("3^6", "3^4,6"),
    2: ("3^6", "3^4,6"),
    3: ("3^6", "3^3,4^2"),
    4: ("3^6", "3^3,4^2"),
    5: ("3^6", "3^2,4,3,4"),
    6: ("3^6", "3^2,4,12"),
    7: ("3^6", "3^2,6^2"),
    8: ("3^4,6", "3^2,6^2"),
    9: ("3^3,4^2", "3^2,4,3,4"),
    10: ("3^3,4^2", "3^2,4,3,4"),
    11: ("3^3,4^2", "3,4,6,4"),
    12: ("3^3,4^2", "4^4"),
    13: ("3^3,4^2", "4^4"),
    14: ("3^2,4,3,4", "3,4,6,4"),
    15: ("3^2,6^2", "3,6,3,6"),
    16: ("3,4,3,12", "3,12^2"),
    17: ("3,4^2,6", "3,4,6,4"),
    18: ("3,4^2,6", "3,6,3,6"),
    19: ("3,4^2,6", "3,6,3,6"),
    20: ("3,4,6,4", "4,6,12"),
}


# -- construction helpers -----------------------------------------------------


def _q(a: int | str | Fraction, b: int | str | Fraction = 0) -> QuadExt:
    return QuadExt(Fraction(a), Fraction(b))


def _v(x: tuple, y: tuple) -> Vec2:
    return Vec2(_q(*x), _q(*y))


def _d(k: int) -> Vec2:
    return unit_direction(k)


def _tri(a: int, b: int) -> Vec2:
    # triangular-lattice coordinates on the unit directions at 0 and 60 degrees
    return _d(0).scale(a) + _d(2).scale(b)


A = _q(1, 1)  # 1 + r3: hexagon-to-hexagon spacing in 3.4.6.4
C = _q(2, 1)  # 2 + r3: dodecagon-to-dodecagon across a shared edge
B = _q(3, 1)  # 3 + r3: dodecagon spacing across a square in 4.6.12
# One vertex of the unit dodecagon centred at 0 with edge normals at 30k degrees.
DODECA = Vec2(_q(1, "1/2"), _q("1/2"))


def _dodecagon(c: Vec2) -> list[Vec2]:
    return [c + rotate30(DODECA, k) for k in range(12)]


def _polygon_around(c: Vec2, ks: Iterable[int]) -> list[Vec2]:
    return [c + _d(k) for k in ks]


def _holey_triangle_lattice(l1: tuple[int, int], l2: tuple[int, int], holes: Sequence[tuple[int, int]]):
    """Triangular lattice minus the vertices at ``holes`` modulo ``<l1, l2>``."""
    basis = (_tri(*l1), _tri(*l2))
    gone = {reduce_point(_tri(*h), basis)[0] for h in holes}
    n = abs(l1[0] * l2[1] - l1[1] * l2[0])
    pts = []
    for a in range(n):
        for b in range(n):
            p = reduce_point(_tri(a, b), basis)[0]
            if p not in gone:
                pts.append(p)
    return basis, pts


def _k1():
    return _holey_triangle_lattice((3, 1), (-1, 4), [(0, 0)])


def _k2():
    return _holey_triangle_lattice((3, 0), (0, 3), [(0, 0)])


def _k7():
    return _holey_triangle_lattice((3, 0), (0, 3), [(0, 0), (1, 1)])


def _k8():
    return _holey_triangle_lattice((1, 1), (0, 5), [(0, 0)])


def _k15():
    return _holey_triangle_lattice((1, 1), (0, 4), [(0, 0)])


def _k3():
    # one row of squares between two-row bands of triangles
    h = _q(0, "1/2")
    basis = (Vec2.of(1, 0), Vec2(_q(0), _q(1, 1)))
    return basis, [Vec2.of(0, 0), Vec2(_q("1/2"), h), Vec2(_q("1/2"), -h)]


def _k4():
    # one row of squares between three-row bands of triangles
    h = _q(0, "1/2")
    basis = (Vec2.of(1, 0), Vec2(_q("1/2"), 3 * h + 1))
    q = Fraction(1, 4)
    pts = [
        Vec2(_q(-q), -h / 2),
        Vec2(_q(q), h / 2),
        Vec2(_q(-q), 3 * h / 2),
        Vec2(_q(q), -3 * h / 2),
    ]
    return basis, pts


def _k12():
    # two rows of squares, one row of triangles
    basis = (Vec2.of(1, 0), Vec2(_q("1/2"), _q(2, "1/2")))
    return basis, [Vec2.of(0, -1), Vec2.of(0, 0), Vec2.of(0, 1)]


def _k13():
    # three rows of squares, one row of triangles
    basis = (Vec2.of(1, 0), Vec2(_q("1/2"), _q(3, "1/2")))
    half = Fraction(1, 2)
    return basis, [Vec2.of(half, y) for y in (Fraction(-3, 2), -half, half, Fraction(3, 2))]


def _k5():
    # 3.4.6.4 with every hexagon cut into six triangles
    basis = (_d(1).scale(A), _d(3).scale(A))
    o = Vec2.of(0, 0)
    return basis, [o] + _polygon_around(o, range(0, 12, 2))


def _k6():
    # 4.6.12 with every hexagon cut into six triangles
    basis = (_d(0).scale(B), _d(2).scale(B))
    o = Vec2.of(0, 0)
    return basis, _dodecagon(o) + [_d(1).scale(A), _d(11).scale(A)]


def _k17():
    # 4.6.12 with every dodecagon cut into a hexagon, six squares, six triangles
    basis = (_d(0).scale(B), _d(2).scale(B))
    o = Vec2.of(0, 0)
    return basis, _dodecagon(o) + _polygon_around(o, range(1, 12, 2))


def _k20():
    # 3.4.6.4 whose hexagons on an index-4 sublattice grow into dodecagons
    l1, l2 = _d(1).scale(A), _d(3).scale(A)
    basis = (l1.scale(2), l2.scale(2))
    pts: list[Vec2] = []
    for c in (l1, l2, l1 + l2):
        pts += _polygon_around(c, range(0, 12, 2))
    return basis, pts


def _k11():
    # 3.12^2 with dodecagons dissected; squares sit on dodecagon-dodecagon edges
    basis = (_d(0).scale(C), _d(2).scale(C))
    o = Vec2.of(0, 0)
    return basis, _dodecagon(o) + _polygon_around(o, range(1, 12, 2))


def _k14():
    # 3.12^2 with dodecagons dissected; squares sit on dodecagon-triangle edges
    basis = (_d(0).scale(C), _d(2).scale(C))
    o = Vec2.of(0, 0)
    return basis, _dodecagon(o) + _polygon_around(o, range(0, 12, 2))


def _k16():
    # dodecagons on a square lattice sharing edges
    basis = (_d(0).scale(C), _d(3).scale(C))
    return basis, _dodecagon(Vec2.of(0, 0))


def _kagome_with_squares(shift: int):
    # kagome cut along every full row of triangles, a row of squares inserted
    h = _q(0, "1/2")
    basis = (Vec2.of(2, 0), Vec2(_q(shift), _q(1, 1)))
    pts = [
        Vec2.of(0, 0),
        Vec2.of(1, 0),
        Vec2(_q("1/2"), h),
        Vec2(_q(0), 2 * h),
        Vec2(_q(1), 2 * h),
    ]
    return basis, pts


def _k18():
    return _kagome_with_squares(0)


def _k19():
    return _kagome_with_squares(1)


def _sites(rows: Iterable[tuple[str, str, str, str]]) -> list[Vec2]:
    return [Vec2(_q(a, b), _q(c, d)) for a, b, c, d in rows]


def _k9():
    # Found by exhaustive torus search over square/triangle patches.
    basis = (Vec2(_q("3/2", 1), _q(0, "1/2")), Vec2(_q(0, "-1/2"), _q("3/2", 1)))
    return basis, _sites([
        ("0", "0", "0", "0"),
        ("1/2", "0", "0", "1/2"),
        ("3/2", "0", "0", "1/2"),
        ("1/2", "-1/2", "1/2", "1/2"),
        ("3/2", "1/2", "1/2", "1/2"),
        ("1", "0", "0", "1"),
        ("1", "-1/2", "1/2", "1"),
        ("1", "1/2", "1/2", "1"),
        ("1", "0", "1", "1"),
        ("3/2", "1/2", "1/2", "3/2"),
        ("1", "-1/2", "3/2", "1"),
        ("3/2", "0", "1", "3/2"),
    ])


def _k10():
    basis = (Vec2(_q(1, "1/2"), _q("1/2")), Vec2(_q(-1), _q(2, 1)))
    return basis, _sites([
        ("0", "0", "0", "0"),
        ("1/2", "0", "0", "1/2"),
        ("1/2", "1/2", "1/2", "1/2"),
        ("0", "0", "0", "1"),
        ("0", "1/2", "1/2", "1"),
        ("0", "0", "1", "1"),
        ("0", "1/2", "3/2", "1"),
        ("0", "0", "2", "1"),
    ])


_BUILDERS = {
    1: _k1, 2: _k2, 3: _k3, 4: _k4, 5: _k5, 6: _k6, 7: _k7, 8: _k8, 9: _k9, 10: _k10,
    11: _k11, 12: _k12, 13: _k13, 14: _k14, 15: _k15, 16: _k16, 17: _k17, 18: _k18,
    19: _k19, 20: _k20,
}


def _inversion_center(basis: tuple[Vec2, Vec2], pts: list[Vec2]) -> Vec2 | None:
    """A point ``c`` with ``2c - P = P`` for the periodic point set ``P``."""
    cell = sorted({reduce_point(p, basis)[0] for p in pts}, key=lambda q: (q.y, q.x))
    members = set(cell)
    u, v = basis
    p0 = cell[0]
    half = Fraction(1, 2)
    for q in cell:
        for lam in (Vec2.of(0, 0), u, v, u + v):
            c = (p0 + q + lam).scale(half)
            two_c = c.scale(2)
            if all(reduce_point(two_c - p, basis)[0] in members for p in cell):
                return c
    return None


@lru_cache(maxsize=None)
def catalog(i: int) -> PeriodicTiling:
    """The tiling ``K_i``, with its origin at a centre of inversion."""
    if not isinstance(i, int) or not 1 <= i <= 20:
        raise ValueError(f"catalog id must be in 1..20, got {i!r}")
    basis, pts = _BUILDERS[i]()
    c = _inversion_center(basis, pts)
    if c is None:
        raise TilingError(f"K{i}: no centre of inversion")
    pts = [p - c for p in pts]
    return make_tiling(i, basis, pts, DECLARED_TYPES[i], name=f"K{i}")


def all_tilings() -> list[PeriodicTiling]:
    return [catalog(i) for i in range(1, 21)]


# -- validation ---------------------------------------------------------------

_FACE_AREA = {
    3: QuadExt(0, Fraction(1, 4)),
    4: QuadExt(1),
    6: QuadExt(0, Fraction(3, 2)),
    12: QuadExt(6, 3),
}


@dataclass
class ValidationReport:
    tiling: object
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        if self.ok:
            return f"K{self.tiling}: ok"
        return f"K{self.tiling}: " + "; ".join(self.failures)


def inversion_permutation(t: PeriodicTiling) -> list[tuple[int, tuple[int, int]]] | None:
    """For each site ``i``, the site and cell of ``-sites[i]``; None if not a symmetry."""
    out = []
    for p in t.sites:
        hit = t.locate(-p)
        if hit is None:
            return None
        out.append(hit)
    return out


def _translation_is_symmetry(t: PeriodicTiling, w: Vec2) -> bool:
    for p in t.sites:
        if t.locate(p + w) is None:
            return False
    for i, j, s in t.edges:
        a = t.locate(t.sites[i] + w)
        b = t.locate(t.position(j, s) + w)
        ds = (b[1][0] - a[1][0], b[1][1] - a[1][1])
        if _canonical_edge(a[0], b[0], ds) not in t._edge_set:
            return False
    return True


def validate_tiling(t: PeriodicTiling) -> ValidationReport:
    """Run checks (a)-(e); the report lists every failed check."""
    rep = ValidationReport(t.id)
    if qx_sign(t.basis[0].cross(t.basis[1])) == 0:
        rep.failures.append("basis is degenerate")
        return rep
    # (a) unit edges
    for i, j, s in t.edges:
        if (t.position(j, s) - t.sites[i]).norm2() != ONE:
            rep.failures.append(f"(a) edge {i}-{j}{s} is not of unit length")
            break
    # (b) faces: closed, convex regular, and they tile the cell exactly once
    try:
        faces = t.faces
    except TilingError as exc:
        rep.failures.append(f"(b) {exc}")
        faces = ()
    bad = [f for f in faces if not (f.closes and f.regular and f.size in FACE_SIZES)]
    if bad:
        rep.failures.append(f"(b) {len(bad)} faces are not closed regular polygons")
    elif faces:
        # one face per translation class, so the areas must fill one cell
        area = QuadExt(0)
        for f in faces:
            area = area + _FACE_AREA[f.size]
        if area != t.cell_area:
            rep.failures.append("(b) face areas do not add up to the cell area")
    # (c) vertex types
    if not bad and faces:
        declared = set(t.declared_types)
        seen = set(t.vertex_types)
        extra = seen - declared
        if extra:
            rep.failures.append("(c) unexpected types " + ", ".join(sorted(map(str, extra))))
        missing = declared - seen
        if missing:
            rep.failures.append("(c) declared types missing " + ", ".join(sorted(map(str, missing))))
    # (d) inversion
    inv = inversion_permutation(t)
    if inv is None or not _maps_edges_by_inversion(t, inv):
        rep.failures.append("(d) x -> -x is not a symmetry")
    # (e) the basis spans all translations
    for j in range(1, len(t.sites)):
        if _translation_is_symmetry(t, t.sites[j] - t.sites[0]):
            rep.failures.append(f"(e) translation by s{j} - s0 is a symmetry")
            break
    return rep


def _maps_edges_by_inversion(t: PeriodicTiling, inv) -> bool:
    for i, j, s in t.edges:
        a = inv[i]
        bj, bs = inv[j]
        b = (bj, (bs[0] - s[0], bs[1] - s[1]))
        ds = (b[1][0] - a[1][0], b[1][1] - a[1][1])
        if _canonical_edge(a[0], b[0], ds) not in t._edge_set:
            return False
    return True


# -- orbit counts -----------------------------------------------------------------


def h_orbit_count(t: PeriodicTiling) -> tuple[int, list[int]]:
    """Vertex orbits under translations: one per site."""
    return len(t.sites), list(range(len(t.sites)))


def g_orbit_count(t: PeriodicTiling) -> tuple[int, list[int]]:
    """Vertex orbits under translations and ``x -> -x``, with representatives."""
    inv = inversion_permutation(t)
    if inv is None:
        raise TilingError(f"K{t.id}: origin is not a centre of inversion")
    orbits = orbits_from_perms(len(t.sites), [[j for j, _ in inv]])
    return len(orbits), [o[0] for o in orbits]


# -- plain-text serialisation ---------------------------------------------------


def _fmt(x: QuadExt) -> str:
    return f"{x.a} {x.b}"


def dumps(t: PeriodicTiling) -> str:
    """Exact text form.

    ``tiling <id> <type>;<type>`` then ``basis`` with four ``a b`` pairs
    (each coordinate is ``a + b*r3``), one ``site`` line per site and one
    ``edge i j sx sy`` line per edge class.
    """
    out = io.StringIO()
    d0, d1 = t.declared_types
    out.write(f"tiling {t.id} {str(d0)[1:-1]};{str(d1)[1:-1]}\n")
    u, v = t.basis
    out.write(f"basis {_fmt(u.x)} {_fmt(u.y)} {_fmt(v.x)} {_fmt(v.y)}\n")
    for k, p in enumerate(t.sites):
        out.write(f"site {k} {_fmt(p.x)} {_fmt(p.y)}\n")
    for i, j, s in t.edges:
        out.write(f"edge {i} {j} {s[0]} {s[1]}\n")
    return out.getvalue()


def loads(text: str) -> PeriodicTiling:
    tid: object = None
    types: tuple[VertexType, ...] = ()
    basis = None
    sites: list[Vec2] = []
    edges = []
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        tag = parts[0]
        if tag == "tiling":
            tid = int(parts[1]) if parts[1].isdigit() else parts[1]
            types = tuple(VertexType.parse(x) for x in parts[2].split(";"))
        elif tag == "basis":
            q = [QuadExt(Fraction(parts[k]), Fraction(parts[k + 1])) for k in range(1, 9, 2)]
            basis = (Vec2(q[0], q[1]), Vec2(q[2], q[3]))
        elif tag == "site":
            q = [QuadExt(Fraction(parts[k]), Fraction(parts[k + 1])) for k in (2, 4)]
            sites.append(Vec2(q[0], q[1]))
        elif tag == "edge":
            i, j, sx, sy = map(int, parts[1:5])
            edges.append((i, j, (sx, sy)))
        else:
            raise ValueError(f"unknown record {tag!r}")
    if basis is None:
        raise ValueError("missing basis line")
    return PeriodicTiling(tid, basis, tuple(sites), tuple(edges), types)  # type: ignore[arg-type]


# -- the K_m family ---------------------------------------------------------------

Point = tuple[int, int]


def in_S(i: int, m: int) -> bool:
    """Column ``i`` lies in a block ``{mk, ..., mk+m-1}`` with ``k`` odd."""
    return (i // m) % 2 == 1


@dataclass
class KmPatch:
    m: int
    radius: int
    vertices: list[Point]
    edges: set[frozenset]
    faces: list[tuple[Point, ...]]
    diagonal: dict[Point, str]  # lower-left corner of a unit square -> "/" or "\\"

    def neighbours(self, p: Point) -> list[Point]:
        out = []
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                q = (p[0] + dx, p[1] + dy)
                if q != p and frozenset((p, q)) in self.edges:
                    out.append(q)
        return out

    @property
    def interior(self) -> list[Point]:
        r = self.radius - 2
        return [p for p in self.vertices if abs(p[0]) <= r and abs(p[1]) <= r]

    def vertex_type(self, p: Point) -> VertexType:
        nbrs = self.neighbours(p)

        def key(q: Point) -> Vec2:
            return Vec2.of(q[0] - p[0], q[1] - p[1])

        nbrs.sort(key=cmp_to_key(lambda a, b: angular_compare(key(a), key(b))))
        by_corner = {}
        for f in self.faces:
            n = len(f)
            for k, x in enumerate(f):
                if x == p:
                    by_corner[frozenset((f[k - 1], f[(k + 1) % n]))] = n
        sizes = []
        for a, b in zip(nbrs, nbrs[1:] + nbrs[:1]):
            size = by_corner.get(frozenset((a, b)))
            if size is None:
                raise TilingError(f"no face at corner {a}-{p}-{b}")
            sizes.append(size)
        return VertexType.from_cycle(sizes)

    def interior_types(self) -> dict[VertexType, int]:
        out: dict[VertexType, int] = {}
        for p in self.interior:
            vt = self.vertex_type(p)
            out[vt] = out.get(vt, 0) + 1
        return dict(sorted(out.items()))

    def column_run(self) -> int:
        """Longest run of consecutive diagonal-free unit squares in a row."""
        r = self.radius
        best = 0
        for j in range(-r, r):
            run = 0
            for i in range(-r, r):
                if (i, j) in self.diagonal:
                    run = 0
                else:
                    run += 1
                    best = max(best, run)
        return best


def build_Km(m: int, radius: int) -> KmPatch:
    """Finite patch ``|i|, |j| <= radius`` of the grid-with-diagonals tiling K_m."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if radius < 3 * m:
        raise ValueError(f"radius must be at least 3m = {3 * m}")
    r = radius
    verts = [(i, j) for j in range(-r, r + 1) for i in range(-r, r + 1)]
    edges: set[frozenset] = set()
    for i, j in verts:
        if i < r:
            edges.add(frozenset(((i, j), (i + 1, j))))
        if j < r:
            edges.add(frozenset(((i, j), (i, j + 1))))
    diag: dict[Point, str] = {}
    for i, j in verts:
        if j % 2:
            continue
        if in_S(i, m) and i < r and j < r:
            diag[(i, j)] = "/"  # (i, j) ~ (i+1, j+1)
        if not in_S(i, m) and i < r and j > -r:
            diag[(i, j - 1)] = "\\"  # (i, j) ~ (i+1, j-1)
    faces: list[tuple[Point, ...]] = []
    for j in range(-r, r):
        for i in range(-r, r):
            sw, se, ne, nw = (i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)
            kind = diag.get((i, j))
            if kind == "/":
                edges.add(frozenset((sw, ne)))
                faces += [(sw, se, ne), (sw, ne, nw)]
            elif kind == "\\":
                edges.add(frozenset((nw, se)))
                faces += [(sw, se, nw), (se, ne, nw)]
            else:
                faces.append((sw, se, ne, nw))
    return KmPatch(m, r, verts, edges, faces, diag)
