"""Smoke test for the `twl` extension module.

Build it with `maturin develop -m crates/py/Cargo.toml`, or with
`cargo build --release -p twl-py --features extension-module` and put
`target/release/libtwl.so` on the path as `twl.so`.
"""

import json
from fractions import Fraction

import twl


def main():
    assert twl.lah(4, 2) == 36
    assert twl.stirling(2, 5, 3) == 25
    assert twl.bell(10) == 115975
    assert [twl.twl(2, 3, 2, m) for m in ("recurrence", "explicit", "product", "scaled")] == [12] * 4
    assert twl.dowling(1, 10) == twl.bell(10)
    assert abs(twl.dobinski(2, 8) - twl.dowling(2, 8)) / twl.dowling(2, 8) < 1e-9

    q = twl.LaurentPoly("q")
    assert str(twl.qint(3)) == "1 + q + q^2"
    assert twl.qbinom(4, 2) == 1 + q + 2 * q**2 + q**3 + q**4
    assert str(twl.qlah(2, 1)) == "1 + q"
    assert str(twl.qw1(1, 2, 1)) == "-q^-1"
    assert twl.qwl(2, 5, 3).eval_q1() == Fraction(2 ** 2 * twl.lah(5, 3))
    assert twl.qdowling(1, 3).terms() == {0: 1, 1: 2, 2: 1, 3: 1}
    assert (twl.qfact(4) * q).div_exact(twl.qfact(3)) == twl.qint(4) * q

    r = twl.check_identity("qr2", {"alpha": 1, "k": 1, "n": 1, "mode": "as_printed"})
    assert not r["passed"] and r["rhs"] == "-1 - q", r

    report = json.loads(twl.run_suite("all", [1, 2], 5))
    assert report["failed"] == [] and report["total"] == report["passed"] > 0

    try:
        twl.tw2(0, 3, 1)
    except ValueError:
        pass
    else:
        raise AssertionError("alpha = 0 must be rejected")

    print(f"smoke test passed ({report['total']} identity checks)")


if __name__ == "__main__":
    main()
