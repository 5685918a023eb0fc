"""Smoke test for the kalvar extension module.

Build and install first, e.g. `maturin develop -m crates/py/Cargo.toml`,
then run `python python/smoke_test.py`.
"""

from fractions import Fraction

import kalvar


def main():
    assert kalvar.degree(2, 3, 5) == 12
    assert kalvar.degree(1, 3, 9, method="binomial") == 36

    k = kalvar.Stratum(2, 3, 5)
    assert repr(k) == "Stratum(s=2, d=3, n=5)"
    assert k.codimension() == 4
    report = k.degrees()
    assert report["agree"] and report["values"] == {"schur": "12", "univariate": "12", "koutschan": "12"}
    assert k.schur_expansion() == {(): 1, (1,): 5, (1, 1): 12, (2,): 11}

    assert kalvar.Stratum(1, 2, 4).census() == {2: 1, 3: 4, 4: 1}
    assert kalvar.Stratum(1, 1, 3).generators() == ["a21", "a31"]

    identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert kalvar.Stratum(1, 1, 3).contains(identity)
    shift = [[0, 0, 0], [1, 0, 0], [0, 1, 0]]
    assert not kalvar.Stratum(1, 1, 3).contains(shift)
    halves = [[Fraction(1, 2), "3/4"], [0, 5]]
    assert kalvar.Stratum(1, 1, 2).contains(halves)

    k = kalvar.Stratum(2, 3, 4)
    a = k.witness(seed=3, p=3)
    assert a == k.witness(seed=3, p=3)
    assert k.contains(a, p=3) and k.brute_force_contains(a, p=3)
    m = k.membership(a, p=3)
    assert m["member"] and m["small_rank"] <= m["small_bound"]

    checks = kalvar.gb_check(5)
    assert len(checks) == 7 and all(c["pass"] for c in checks)
    assert len(kalvar.gb_generators(5)) == 3 + 6
    assert [kalvar.hilbert_function(4, t) for t in range(3)] == [1, 16, 135]
    assert set(kalvar.hilbert_data(4)) == {"series", "polynomial"}
    assert kalvar.multidegree(4)[1] == [1, 4, 6, 4]
    assert all(r["agree"] for r in kalvar.degree_grid(5))

    try:
        kalvar.Stratum(3, 2, 5)
    except ValueError as e:
        assert "invalid stratum" in str(e)
    else:
        raise AssertionError("expected ValueError")

    print("kalvar smoke test passed")


if __name__ == "__main__":
    main()
