"""Smoke tests for the python bindings.

Importable two ways: as the installed package (mbmcone) or as the bare
extension straight out of the build tree (PYTHONPATH set by ctest).
"""

import json
import os
import subprocess
from fractions import Fraction

import pytest

try:
    import mbmcone as m
except ImportError:
    import _core as m


def k3(n):
    return m.Family("k3", n)


def kummer(n):
    return m.Family("kummer", n)


def test_family():
    fam = k3(2)
    assert fam.kind == "k3"
    assert fam.t == 2
    assert kummer(2).t == 6
    with pytest.raises(ValueError):
        m.Family("k3", 1)


def test_lattice_basics():
    fam = k3(3)
    e = m.PicClass(0, 1, 0, fam)
    assert m.bb_square(e) == -4
    assert m.divisibility(e) == 4
    assert m.delta_rep(e) == 1
    assert m.dual_class(e).square == Fraction(-1, 4)
    assert m.bb_pairing(m.PicClass(1, 0, 1, fam), m.PicClass(0, 1, 1, fam)) == 0
    assert not m.is_primitive(m.PicClass(2, 2, 1, fam))


def test_enumeration():
    orbits = m.enumerate_mbm_orbits(k3(2))
    assert [(o.a, o.b) for o in orbits] == [(-1, 0), (-1, 1), (0, 1)]
    assert {o.q_hat for o in orbits} == {Fraction(-2), Fraction(-5, 2), Fraction(-1, 2)}

    kum = m.enumerate_mbm_orbits(kummer(2))
    assert {o.q_hat for o in kum} == {Fraction(-1, 6), Fraction(-2, 3), Fraction(-3, 2)}


def test_classify():
    fam = k3(2)
    verdicts = {
        (0, 1, 0): "MBM",
        (3, 4, -1): "NotMBM",
        (1, 0, 1): "NonNegativeSquare",
    }
    for (f, c, d), expected in verdicts.items():
        assert m.classify(m.PicClass(f, c, d, fam)).verdict == expected

    cls = m.classify(m.PicClass(2, -3, 1, fam))
    assert (cls.orbit.a, cls.orbit.b) == (-1, 1)
    assert cls.orbit.q_hat == Fraction(-5, 2)
    assert cls.normalized.q_x == -2

    with pytest.raises(ValueError):
        m.classify(m.PicClass(2, 2, 1, fam))

    torus = m.classify(m.PicClass(1, 0, -1, kummer(2)))
    assert torus.verdict == "NotMBM"
    assert "torus" in torus.reason


def test_normalize_preserves_square():
    fam = k3(2)
    alpha = m.PicClass(3, 4, -1, fam)
    nc = m.normalize(alpha)
    assert (nc.r, nc.b_norm, nc.q_x) == (1, 0, -50)
    assert m.bb_square(alpha) == -50


def test_curves():
    fam = k3(2)
    orbit = next(o for o in m.enumerate_mbm_orbits(fam) if (o.a, o.b) == (-1, 1))
    real = m.realize_orbit(fam, orbit)
    assert (real.genus, real.k) == (0, 2)
    assert real.homology_class.square == Fraction(-5, 2)
    assert m.genus_bound(fam) == 1
    assert m.extremal_qhat(fam) == Fraction(-5, 2)
    exc = m.realize_orbit(fam, next(o for o in m.enumerate_mbm_orbits(fam) if o.b == 1 and o.a == 0))
    assert exc.exceptional_fiber
    assert exc.locus_dim == 2 * fam.n - 1


def test_mukai_bridge():
    fam = k3(2)
    assert m.wall_predicate(fam, 0, -2, 0)
    assert m.wall_to_orbit(fam, 0, -2, 0) == (-1, 0)
    assert m.wall_to_orbit(fam, 0, 2, 0) is None
    assert m.orbit_to_wall(fam, 0, 1, 1) == (1, 0, 0)
    expected = {(o.a, o.b) for o in m.enumerate_mbm_orbits(fam)}
    assert m.scan_wall_orbits(fam, 5, 10, 32) == expected


def test_walls_and_chambers():
    fam = k3(2)
    walls = m.scan_walls(fam, 1, 10)
    assert [(w.p, w.q) for w in walls] == [(3, -2), (1, 0), (3, 2)]
    assert walls[0].slope == Fraction(-2, 3)
    assert (walls[0].source.f, walls[0].source.c) == (2, -3)

    chamber = m.chamber_of(fam, 1, m.PicClass(4, -1, 1, fam), 10)
    assert (chamber.lower.p, chamber.lower.q) == (3, -2)
    assert (chamber.upper.p, chamber.upper.q) == (1, 0)

    narrow = m.scan_walls(fam, 1, 10, slope_lo=Fraction(-1, 2), slope_hi=Fraction(1, 2))
    assert [(w.p, w.q) for w in narrow] == [(1, 0)]

    with pytest.raises(ValueError):
        m.scan_walls(fam, 1, 0)


def test_enumerate_json_matches_schema():
    record = json.loads(m.enumerate_json(k3(3)))
    assert record["schema_version"] == "1"
    assert len(record["payload"]["orbits"]) == 5

    schema_path = os.environ.get("MBMCONE_SCHEMA")
    if schema_path:
        jsonschema = pytest.importorskip("jsonschema")
        with open(schema_path) as fh:
            jsonschema.validate(record, json.load(fh))


def test_cli_roundtrip():
    cli = os.environ.get("MBMCONE_CLI")
    if not cli:
        pytest.skip("CLI path not provided")
    out = subprocess.run(
        [cli, "classify", "--type", "k3", "--n", "2", "--f", "0", "--c", "1", "--d", "0"],
        capture_output=True, text=True, check=True)
    record = json.loads(out.stdout)
    assert record["payload"]["verdict"] == "MBM"
    assert record["payload"]["orbit"]["b"] == 1
