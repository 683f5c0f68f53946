import dataclasses
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twouniform.catalog import (
    DECLARED_TYPES,
    build_Km,
    catalog,
    dumps,
    g_orbit_count,
    h_orbit_count,
    inversion_permutation,
    loads,
    validate_tiling,
)
from twouniform.exact_geometry import ONE, angular_compare, qx_sign, unit_direction
from twouniform.tiling import VertexType, classify_vertex_type, symmetry_orbits

IDS = range(1, 21)
T = VertexType.parse


@pytest.mark.parametrize("i", IDS)
def test_every_entry_validates(i):
    rep = validate_tiling(catalog(i))
    assert rep.ok, str(rep)


@pytest.mark.parametrize("i", IDS)
def test_two_uniform_under_full_symmetry_group(i):
    # independent oracle: all 24 point-group candidates combined with translations
    assert len(symmetry_orbits(catalog(i))) == 2


def test_declared_type_examples():
    assert catalog(12).declared_types == (T("3^3,4^2"), T("4^4"))
    assert catalog(1).declared_types == (T("3^6"), T("3^4,6"))
    assert len(catalog(1).sites) == 12


def test_out_of_range():
    for bad in (0, 21, -3):
        with pytest.raises(ValueError):
            catalog(bad)


def test_corrupted_edge_fails_unit_length():
    t = catalog(3)
    i, j, s = t.edges[0]
    broken = dataclasses.replace(t, edges=((i, j, (s[0] + 1, s[1])),) + t.edges[1:])
    rep = validate_tiling(broken)
    assert any(f.startswith("(a)") for f in rep.failures)


def test_off_centre_origin_fails_inversion_check():
    t = catalog(15)
    shift = unit_direction(1).scale(ONE / 7)
    moved = dataclasses.replace(t, sites=tuple(p + shift for p in t.sites))
    assert any(f.startswith("(d)") for f in validate_tiling(moved).failures)


def test_sublattice_basis_fails_maximality():
    from twouniform.tiling import make_tiling

    t = catalog(12)
    u, v = t.basis
    doubled = make_tiling(12, (u.scale(2), v), [p + u.scale(k) for p in t.sites for k in (0, 1)], t.declared_types)
    assert any(f.startswith("(e)") for f in validate_tiling(doubled).failures)


def test_k15_types():
    assert set(catalog(15).vertex_types) == {T("3^2,6^2"), T("3,6,3,6")}


def _gaps(t, i):
    here = t.sites[i]
    dirs = [t.position(j, s) - here for j, s in t.germs[i]]
    steps = []
    for a, b in zip(dirs, dirs[1:] + dirs[:1]):
        k = next(k for k in range(12) if angular_compare(a, unit_direction(k)) == 0)
        k2 = next(k for k in range(12) if angular_compare(b, unit_direction(k)) == 0)
        steps.append((k2 - k) % 12 * 30)
    return steps


def test_rotation_system_examples():
    t12 = catalog(12)
    sq = [i for i, vt in enumerate(t12.vertex_types) if vt == T("4^4")]
    assert _gaps(t12, sq[0]) == [90] * 4
    t3 = catalog(3)
    tri = [i for i, vt in enumerate(t3.vertex_types) if vt == T("3^6")]
    assert _gaps(t3, tri[0]) == [60] * 6
    assert set(catalog(16).degrees) <= {3, 4}


def test_classify_examples():
    t13 = catalog(13)
    assert T("4^4") in {classify_vertex_type(t13, i) for i in range(len(t13.sites))}
    assert set(catalog(7).vertex_types) <= {T("3^6"), T("3^2,6^2")}
    assert VertexType.from_cycle((4, 3, 3, 4, 3)) == T("3^2,4,3,4")
    assert str(T("3.3.4.3.4")) == "[3^2,4,3,4]"
    assert T("3^2,4,3,4").runs() == [(3, 2), (4, 1), (3, 1), (4, 1)]


def test_orbit_count_examples():
    assert h_orbit_count(catalog(1))[0] == 12
    assert g_orbit_count(catalog(1))[0] == 6
    assert g_orbit_count(catalog(2))[0] == 4
    assert g_orbit_count(catalog(17))[0] == 9


def _inversion_orbits_oracle(t):
    # orbits of s -> -s by pairing sites whose sum is a lattice vector
    from twouniform.tiling import as_int, lattice_coords

    parent = list(range(len(t.sites)))
    for a, p in enumerate(t.sites):
        for b, q in enumerate(t.sites):
            x, y = lattice_coords(p + q, t.basis)
            if as_int(x) is not None and as_int(y) is not None:
                parent[max(a, b)] = min(parent[a], parent[b])
    return len({min(a, parent[a]) for a in range(len(t.sites)) if parent[a] == a})


@pytest.mark.parametrize("i", IDS)
def test_g_orbits_match_pairing_oracle(i):
    t = catalog(i)
    assert g_orbit_count(t)[0] == _inversion_orbits_oracle(t)


@pytest.mark.parametrize("i", IDS)
def test_invariants(i):
    t = catalog(i)
    types = Counter(t.vertex_types)
    assert set(types) == set(t.declared_types)
    for k, vt in enumerate(t.vertex_types):
        assert t.degrees[k] == sum(n for _, n in vt.runs())
    assert 2 * len(t.edges) == sum(t.degrees)
    for k, (j, _s) in enumerate(inversion_permutation(t)):
        assert t.vertex_types[j] == t.vertex_types[k]
    assert qx_sign(t.cell_area) > 0


@pytest.mark.parametrize("i", IDS)
def test_text_round_trip(i):
    t = catalog(i)
    back = loads(dumps(t))
    assert back.sites == t.sites and back.edges == t.edges and back.basis == t.basis
    assert back.declared_types == t.declared_types
    assert dumps(back) == dumps(t)


def test_declared_table_matches_entries():
    for i, pair in DECLARED_TYPES.items():
        assert catalog(i).declared_types == tuple(T(x) for x in pair)


# -- the K_m family ----------------------------------------------------------------


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_km_two_interior_types(m):
    patch = build_Km(m, 3 * m + 2)
    assert len(patch.interior_types()) == 2


def test_km_example_and_run_statistic():
    assert len(build_Km(2, 8).interior_types()) == 2
    runs = [build_Km(m, 3 * m + 2).column_run() for m in (2, 3, 4, 5)]
    assert runs == sorted(set(runs)) and build_Km(2, 8).column_run() != build_Km(3, 9).column_run()


def test_km_domain_errors():
    with pytest.raises(ValueError):
        build_Km(2, 2)
    with pytest.raises(ValueError):
        build_Km(1, 10)


@settings(max_examples=10, deadline=None)
@given(st.integers(2, 5), st.integers(0, 3))
def test_km_faces_are_triangles_or_squares(m, extra):
    patch = build_Km(m, 3 * m + extra)
    assert {len(f) for f in patch.faces} <= {3, 4}
    # every unit square is either a face or split into two triangles
    r = patch.radius
    assert sum(1 if len(f) == 4 else 0.5 for f in patch.faces) == (2 * r) ** 2
