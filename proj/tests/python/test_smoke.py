import json
import os
import subprocess

import pytest

import zdgenus as z


def test_catalog_ring_summary():
    r = z.ring("Z_16")
    assert r.order == 16
    assert r.is_local()
    assert len(r.zero_divisors()) == 7
    assert len(r.ideals()) == 5


def test_product_graph():
    r = z.ring("Z_6xZ_2")
    i = z.ideal(r, ["(0,1)"])
    assert i.size == 2
    g = z.ideal_graph(i)
    assert (g.order, g.edge_count) == (6, 8)


def test_synthesized_genus_one():
    t = z.ring("Z_9")
    _, i = z.synthesized(t, 3)
    g = z.ideal_graph(i)
    b = z.genus(g)
    assert b["exact"] and b["lower"] == 1
    cert = json.loads(b["certificate"])
    assert cert["genus"] == 1


def test_formula_helpers():
    assert z.genus_complete(7) == 1
    assert z.genus_biclique(4, 6) == 2


def test_graph_constructor_and_planarity():
    k5 = z.Graph(5, [(a, b) for a in range(5) for b in range(a + 1, 5)])
    assert not z.is_planar(k5)
    assert z.genus(k5)["upper"] == 1


def test_verify_reports():
    reports = z.verify("Diameter3")
    assert reports and all(r["agreement"] for r in reports)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        z.ring("no such ring")
    with pytest.raises(ValueError):
        z.verify("NoSuchResult")


@pytest.mark.skipif("ZDG_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes():
    cli = os.environ["ZDG_CLI"]
    ok = subprocess.run([cli, "ring", "Z_16"], capture_output=True, text=True)
    assert ok.returncode == 0 and "order           16" in ok.stdout
    bad = subprocess.run([cli, "verify", "nope"], capture_output=True, text=True)
    assert bad.returncode == 2
    low = subprocess.run([cli, "--budget", "10", "ring", "Z_4"], capture_output=True, text=True)
    assert low.returncode == 2
