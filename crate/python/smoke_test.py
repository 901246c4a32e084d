"""Smoke test for the squarelab_py extension module.

Build and install first, e.g. `maturin build --release -m crates/py/Cargo.toml`
followed by `pip install` of the produced wheel, then run this file.
"""

import squarelab_py as sl


def main():
    d2 = sl.gen_dk(2)
    assert len(d2) == 42
    assert (d2.min(), d2.max()) == (-14, 28)
    assert sl.witness_r(0, 0, 2) >= 1

    sq = sl.PointSet2D([(0, 0), (2, 0), (0, 2), (2, 2)])
    assert sl.find_vertex_centers_2d(sq) == [(2, 2, 2)]
    assert sl.main_lemma_2d(sq)
    assert sl.find_centers_1d(sl.IntSet1D([0, 2])) == [(2, 2)]

    ring = sl.PointSet2D([(x, y) for x in (-1, 0, 1) for y in (-1, 0, 1) if (x, y) != (0, 0)])
    assert sl.find_boundary_centers_2d(ring, 3) == [(0, 0, 2)]

    scale, a, t = sl.gen_cantor_truncation("2/1", 2)
    assert a.to_list() == sl.gen_an(2).to_list()
    assert t.to_list() == list(range(16))

    assert sl.covering_count_1d(sl.IntSet1D([0, 1, 5]), 1) == 2
    assert sl.dyadic_box_count_2d(sl.PointSet2D([(0, 0), (1, 1), (3, 3)]), 0, -1) == 2

    ratios = dict((j, v) for j, v, _ in sl.falconer_ratios("2/1", 12))
    assert 1.0 <= ratios[12] <= 1.25

    checks = sl.verify("dk", k=3)
    assert all(c["ok"] for c in checks)
    scan = sl.family_scan("dk_size", 2, 4)
    assert scan["rows"][0] == {"param": 2, "x": 2, "y": 42}

    try:
        sl.gen_dk(1)
    except ValueError:
        pass
    else:
        raise AssertionError("k = 1 must be refused")

    print("smoke test ok")


if __name__ == "__main__":
    main()
