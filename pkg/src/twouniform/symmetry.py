"""Automorphism groups of torus maps and the two vertex-orbit counts.

``automorphism_group`` is the full map group, found by base-dart extension
in both chiralities.  ``quotient_group_orbits`` is the cheap count under the
translations modulo Gamma together with ``x -> -x``; every such element
induces a map automorphism, so it can only over-count orbits.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .catalog import catalog, inversion_permutation
from .exact_geometry import Isometry, Vec2, compose
from .lattice import SublatticeMatrix
from .tiling import PeriodicTiling, orbits_from_perms
from .torus_map import FiniteMap, _link_type

try:
    from . import _kernel as _k

    KERNEL = "cython"
except ImportError:  # pragma: no cover - exercised when the extension is absent
    from . import _kernel_py as _k

    KERNEL = "python"

__all__ = [
    "KERNEL",
    "MapAutomorphism",
    "automorphism_group",
    "vertex_orbit_count",
    "quotient_group_orbits",
    "verify_claim1",
    "Claim1Report",
]


@dataclass(frozen=True)
class MapAutomorphism:
    dart_perm: tuple[int, ...]
    chirality: str  # "preserving" or "reversing"

    def vertex_image(self, x: FiniteMap, v: int) -> int:
        return x.vertex_of[self.dart_perm[x.vertex_darts[v][0]]]


def _dart_signature(x: FiniteMap, d: int, link: list) -> tuple:
    # invariant under every automorphism of either chirality
    fa = len(x.faces[x.face_of[d]])
    fb = len(x.faces[x.face_of[x.alpha[d]]])
    return link[x.vertex_of[d]], link[x.target(d)], min(fa, fb), max(fa, fb)


def automorphism_group(x: FiniteMap, kernel=None) -> list[MapAutomorphism]:
    """Every automorphism of ``x``, sorted by the image of dart 0."""
    if not x.is_connected():
        raise ValueError("automorphism search needs a connected map")
    k = kernel or _k
    link = [_link_type(x, v) for v in range(x.V)]
    base = 0
    want = _dart_signature(x, base, link)
    cands = [d for d in range(x.n_darts) if _dart_signature(x, d, link) == want]
    found = k.search(list(x.alpha), list(x.sigma), base, cands)
    return [
        MapAutomorphism(tuple(perm), "reversing" if rev else "preserving")
        for _image, rev, perm in found
    ]


def vertex_orbit_count(x: FiniteMap, group: list[MapAutomorphism]) -> tuple[int, list[list[int]]]:
    perms = []
    for g in group:
        perms.append([x.vertex_of[g.dart_perm[x.vertex_darts[v][0]]] for v in range(x.V)])
    orbits = orbits_from_perms(x.V, perms)
    return len(orbits), orbits


def quotient_group_orbits(t: PeriodicTiling, m: SublatticeMatrix) -> tuple[int, list[list[int]]]:
    """Vertex orbits of ``t / Gamma`` under translations mod Gamma and inversion.

    Vertex ``site*index + coset`` as in :func:`torus_map.quotient`.
    """
    inv = inversion_permutation(t)
    if inv is None:
        raise ValueError(f"K{t.id} is not centred at an inversion centre")
    n = m.index
    trans = m.transversal()
    h = len(t.sites)
    perms = []
    for step in ((1, 0), (0, 1)):
        p = [0] * (h * n)
        for i in range(h):
            for ci, c in enumerate(trans):
                p[i * n + ci] = i * n + m.coset_index((c[0] + step[0], c[1] + step[1]))
        perms.append(p)
    p = [0] * (h * n)
    for i in range(h):
        j, s = inv[i]
        for ci, c in enumerate(trans):
            # -(site_i + c) = site_j + s - c
            p[i * n + ci] = j * n + m.coset_index((s[0] - c[0], s[1] - c[1]))
    perms.append(p)
    orbits = orbits_from_perms(h * n, perms)
    return len(orbits), orbits


# -- conjugation of translations by G elements ---------------------------------------


@dataclass
class Claim1Report:
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_claim1(samples: int = 1000, seed: int = 0, tilings=range(1, 21), span: int = 50) -> Claim1Report:
    """Check ``g k g^-1 = k^eps`` for random lattice translations ``k``.

    ``g`` runs over random elements ``x -> eps*x + t`` of ``G_i`` with ``t``
    in the lattice of ``K_i``.
    """
    rng = random.Random(seed)
    rep = Claim1Report()
    for i in tilings:
        u, v = catalog(i).basis
        for _ in range(samples):
            k = Isometry.translation(_lattice_vector(rng, u, v, span))
            eps = rng.choice((1, -1))
            g = Isometry(eps, _lattice_vector(rng, u, v, span))
            lhs = compose(compose(g, k), g.inverse())
            rhs = k.power(eps)
            rep.checked += 1
            if lhs != rhs:
                rep.failures.append(f"K{i}: g={g} k={k}")
    return rep


def _lattice_vector(rng: random.Random, u: Vec2, v: Vec2, span: int) -> Vec2:
    return u.scale(rng.randint(-span, span)) + v.scale(rng.randint(-span, span))

