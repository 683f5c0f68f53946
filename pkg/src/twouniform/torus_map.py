"""Torus quotients ``K / Gamma`` as dart-based combinatorial maps.

Darts are numbered by (site, coset, germ rank): all darts of vertex
``site*index + coset`` are consecutive and listed counterclockwise, so
``sigma`` is a rotation inside each block.  Faces are the cycles of
``sigma o alpha`` (apply alpha first).
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import cached_property
from typing import Sequence

from .catalog import BOUNDS, EQUALITY_CASES
from .lattice import SublatticeMatrix, reduce_to_coset
from .tiling import PeriodicTiling, VertexType

__all__ = [
    "FiniteMap",
    "OrbitReport",
    "quotient",
    "is_polyhedral",
    "vertex_link_type",
    "to_dot",
    "to_off",
    "report_json",
]


@dataclass(frozen=True, eq=False)
class FiniteMap:
    alpha: tuple[int, ...]
    sigma: tuple[int, ...]
    vertex_of: tuple[int, ...]
    n_vertices: int
    provenance: tuple[object, SublatticeMatrix | None] = (None, None)
    # covering projection: vertex -> (site, coset representative)
    lift: tuple[tuple[int, tuple[int, int]], ...] = field(default=(), repr=False)

    def __post_init__(self) -> None:
        n = len(self.alpha)
        if len(self.sigma) != n or len(self.vertex_of) != n:
            raise ValueError("alpha, sigma and vertex_of must have equal length")
        for d, e in enumerate(self.alpha):
            if e == d or self.alpha[e] != d:
                raise ValueError(f"alpha is not a fixed-point-free involution at dart {d}")
        if sorted(self.sigma) != list(range(n)):
            raise ValueError("sigma is not a permutation")

    @property
    def n_darts(self) -> int:
        return len(self.alpha)

    @cached_property
    def sigma_inv(self) -> tuple[int, ...]:
        inv = [0] * self.n_darts
        for d, e in enumerate(self.sigma):
            inv[e] = d
        return tuple(inv)

    @cached_property
    def phi(self) -> tuple[int, ...]:
        return tuple(self.sigma[self.alpha[d]] for d in range(self.n_darts))

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Face boundaries as dart cycles, each starting at its smallest dart."""
        return _cycles(self.phi)

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        out = [0] * self.n_darts
        for f, cyc in enumerate(self.faces):
            for d in cyc:
                out[d] = f
        return tuple(out)

    @cached_property
    def vertex_darts(self) -> tuple[tuple[int, ...], ...]:
        """Darts at each vertex in counterclockwise order."""
        out: list[tuple[int, ...]] = [()] * self.n_vertices
        for cyc in _cycles(self.sigma):
            out[self.vertex_of[cyc[0]]] = cyc
        return tuple(out)

    def target(self, d: int) -> int:
        return self.vertex_of[self.alpha[d]]

    @property
    def V(self) -> int:
        return self.n_vertices

    @property
    def E(self) -> int:
        return self.n_darts // 2

    @property
    def F(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.V - self.E + self.F

    def face_vertices(self, f: int) -> tuple[int, ...]:
        return tuple(self.vertex_of[d] for d in self.faces[f])

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for e in (self.alpha[d], self.sigma[d]):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        return len(seen) == self.n_darts


def _cycles(perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(tuple(cyc))
    return tuple(out)


def quotient(t: PeriodicTiling, m: SublatticeMatrix) -> FiniteMap:
    """The map ``t / Gamma`` for the sublattice ``Gamma`` given by ``m``."""
    n = m.index
    trans = m.transversal()
    germs = t.germs
    back = []
    for i, gs in enumerate(germs):
        row = []
        for j, s in gs:
            row.append(germs[j].index((i, (-s[0], -s[1]))))
        back.append(row)
    base = []
    acc = 0
    for i in range(len(t.sites)):
        for _ in range(n):
            base.append(acc)
            acc += len(germs[i])
    alpha = [0] * acc
    sigma = [0] * acc
    vertex_of = [0] * acc
    lift = []
    for i, gs in enumerate(germs):
        deg = len(gs)
        for ci, c in enumerate(trans):
            v = i * n + ci
            lift.append((i, c))
            b = base[v]
            for k, (j, s) in enumerate(gs):
                d = b + k
                sigma[d] = b + (k + 1) % deg
                vertex_of[d] = v
                w = j * n + m.coset_index((c[0] + s[0], c[1] + s[1]))
                alpha[d] = base[w] + back[i][k]
    return FiniteMap(tuple(alpha), tuple(sigma), tuple(vertex_of), len(t.sites) * n, (t.id, m), tuple(lift))


# -- polyhedrality ----------------------------------------------------------------


def is_polyhedral(x: FiniteMap) -> tuple[bool, str | None]:
    """Decide polyhedrality; on failure also return a witness string."""
    if not x.is_connected():
        return False, "graph is disconnected"
    for d in range(x.n_darts):
        if x.target(d) == x.vertex_of[d]:
            return False, f"loop at vertex {x.vertex_of[d]} (dart {d})"
    for v, ds in enumerate(x.vertex_darts):
        seen: dict[int, int] = {}
        for d in ds:
            w = x.target(d)
            if w in seen:
                return False, f"parallel edges {v}-{w} (darts {seen[w]}, {d})"
            seen[w] = d
    fverts = [x.face_vertices(f) for f in range(x.F)]
    for f, vs in enumerate(fverts):
        if len(set(vs)) != len(vs):
            return False, f"face {f} boundary repeats a vertex"
    edges_of = [_face_edges(vs) for vs in fverts]
    faces_at: list[list[int]] = [[] for _ in range(x.V)]
    for f, vs in enumerate(fverts):
        for v in vs:
            faces_at[v].append(f)
    for f, vs in enumerate(fverts):
        shared: dict[int, set[int]] = {}
        for v in vs:
            for g in faces_at[v]:
                if g > f:
                    shared.setdefault(g, set()).add(v)
        for g in sorted(shared):
            ok, why = _meet_ok(shared[g], edges_of[f], edges_of[g])
            if not ok:
                return False, f"faces {f} and {g} {why}"
    return True, None


def _face_edges(vs: Sequence[int]) -> set[frozenset]:
    return {frozenset((vs[k], vs[(k + 1) % len(vs)])) for k in range(len(vs))}


def _meet_ok(common: set[int], ef: set[frozenset], eg: set[frozenset]) -> tuple[bool, str]:
    if len(common) <= 1:
        return True, ""
    if len(common) == 2 and frozenset(common) in ef and frozenset(common) in eg:
        return True, ""
    return False, f"meet in vertices {sorted(common)}"


def vertex_link_type(x: FiniteMap, v: int) -> VertexType:
    ok, why = is_polyhedral(x)
    if not ok:
        raise ValueError(f"link type needs a polyhedral map: {why}")
    return _link_type(x, v)


def _link_type(x: FiniteMap, v: int) -> VertexType:
    sizes = [len(x.faces[x.face_of[d]]) for d in x.vertex_darts[v]]
    return VertexType.from_cycle(sizes)


# -- reports and exports ----------------------------------------------------------


@dataclass
class OrbitReport:
    tiling: object
    sublattice: tuple[int, int, int]
    V: int
    E: int
    F: int
    polyhedral: bool
    aut_order: int
    m: int
    bound: int
    verdict: str

    @classmethod
    def judge(
        cls, i: int, m: SublatticeMatrix, x: FiniteMap, polyhedral: bool, aut_order: int, orbits: int
    ) -> "OrbitReport":
        bound = BOUNDS[i - 1]
        if not polyhedral:
            verdict = "excluded"
        elif orbits <= bound and (i not in EQUALITY_CASES or orbits == 2):
            verdict = "pass"
        else:
            verdict = "fail"
        return cls(i, (m.a, m.b, m.d), x.V, x.E, x.F, polyhedral, aut_order, orbits, bound, verdict)

    @property
    def index(self) -> int:
        return self.sublattice[0] * self.sublattice[2]

    def csv_row(self) -> list[object]:
        a, b, d = self.sublattice
        return [self.tiling, self.index, a, b, d, self.V, self.E, self.F,
                int(self.polyhedral), self.aut_order, self.m, self.bound, self.verdict]


CSV_COLUMNS = ["tiling", "index", "a", "b", "d", "V", "E", "F", "polyhedral", "aut_order", "m", "bound", "verdict"]


def report_json(reports: Sequence[OrbitReport]) -> str:
    rows = []
    for r in reports:
        row = asdict(r)
        row["sublattice"] = list(r.sublattice)
        rows.append(row)
    return json.dumps(rows, indent=1, sort_keys=False) + "\n"


def _edges(x: FiniteMap) -> list[tuple[int, int]]:
    out = []
    for d in range(x.n_darts):
        e = x.alpha[d]
        if d < e:
            out.append((x.vertex_of[d], x.vertex_of[e]))
    return out


def to_dot(x: FiniteMap, name: str = "X") -> str:
    lines = [f"graph {name} {{"]
    for v in range(x.V):
        if x.lift:
            i, c = x.lift[v]
            lines.append(f'  {v} [label="s{i}@{c[0]},{c[1]}"];')
        else:
            lines.append(f"  {v};")
    for a, b in _edges(x):
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_off(x: FiniteMap, t: PeriodicTiling, digits: int = 12) -> str:
    """OFF file; each vertex sits at its lifted plane position."""
    lines = ["OFF", f"{x.V} {x.F} {x.E}"]
    for v in range(x.V):
        i, c = x.lift[v]
        p = t.position(i, c)
        lines.append(f"{p.x.to_decimal(digits)} {p.y.to_decimal(digits)} 0")
    for f in range(x.F):
        vs = x.face_vertices(f)
        lines.append(" ".join([str(len(vs))] + [str(v) for v in vs]))
    return "\n".join(lines) + "\n"


def covering_image(x: FiniteMap, m: SublatticeMatrix, site: int, cell: tuple[int, int]) -> int:
    """Vertex of the quotient covered by plane vertex ``site + cell``."""
    return site * m.index + m.coset_index(reduce_to_coset(cell, m))
