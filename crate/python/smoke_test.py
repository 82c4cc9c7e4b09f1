#!/usr/bin/env python3
"""Smoke test for the doubler_py extension module.

Builds nothing itself: run `cargo build -p doubler-py` first, then
`python3 python/smoke_test.py`. The script locates the compiled cdylib,
copies it next to a temp directory under an importable name, and exercises
the bindings end to end.
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path


def locate_cdylib():
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / profile / name
        for profile in ("debug", "release")
        for name in ("libdoubler_py.so", "libdoubler_py.dylib", "doubler_py.dll")
    ]
    for path in candidates:
        if path.exists():
            return path
    sys.exit("doubler_py cdylib not found; run `cargo build -p doubler-py` first")


def main():
    lib = locate_cdylib()
    tmp = Path(tempfile.mkdtemp(prefix="doubler_py_"))
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    shutil.copy2(lib, tmp / f"doubler_py{suffix}")
    sys.path.insert(0, str(tmp))
    import doubler_py as dp

    # towers and basis arithmetic: e_3 * e_2 = e_4 in the quaternion-like tower
    quat = dp.Tower("cd:-1,cd:-1")
    assert quat.dim == 4 and quat.depth == 2
    e2, e3, e4 = (dp.basis(quat, i) for i in (2, 3, 4))
    assert (e3 * e2) == e4
    assert (e2 * e3) == -e4

    # exact rational coordinates and the dual norm routes
    x = dp.Element(quat, ["3/5", "4/5", "0", "0"])
    assert x.norm_form() == "1"
    assert x.norm_via_mul() == "1"
    assert x.trace() == "6/5"
    assert x.inverse().coords() == ["3/5", "-4/5", "0", "0"]

    # hilbert-90 witness, both branches
    w, branch = dp.witness(dp.Element(dp.Tower("cd:-1"), ["3/5", "4/5"]))
    assert branch == "general" and w.coords() == ["8/5", "4/5"]
    w, branch = dp.witness(dp.Element(dp.Tower("cd:-1"), ["-1", "0"]))
    assert branch == "minus_one" and w.coords() == ["0", "1"]

    # norm-one elements from seeds on a 16-dimensional 2^n-on tower
    tower16 = dp.Tower("cs:-1,cs:-1,cs:-1,cs:-1")
    seed = dp.random(tower16, seed=7, bound=4)
    one = dp.norm_one(seed)
    assert one.norm_form() == "1"
    assert dp.param(tower16, seed.coords()) == one.coords()

    # pythagorean tuples, including values beyond 64 bits
    assert dp.pythagoras([2, 1]) == [3, 4, 5]
    assert dp.pythagoras([2, 1, 1, 1]) == [1, 4, 4, 4, 7]
    big = dp.pythagoras([10**12, 3, -5])
    assert sum(v * v for v in big[:-1]) == big[-1] ** 2

    # property checker: deterministic JSON reports
    report = dp.check(tower16, "NormMultiplicative", trials=50, seed=3)
    assert report == dp.check(tower16, "NormMultiplicative", trials=50, seed=3)
    assert json.loads(report)["outcome"] == "AllPassed"

    sed = dp.Tower("cd:-1,cd:-1,cd:-1,cd:-1")
    found = json.loads(dp.search(sed, "LeftAlt"))
    assert found["outcome"] == "CounterexampleFound"

    diverged = json.loads(dp.diff(sed, tower16, trials=50, seed=1))
    assert diverged["outcome"] == "CounterexampleFound"

    assert "FiveFoldIdentity" in dp.identity_names()

    # domain errors surface as ValueError with the stable code
    try:
        dp.Element(dp.Tower("cd:1"), ["1", "1"]).inverse()
    except ValueError as err:
        assert "NotInvertible" in str(err)
    else:
        sys.exit("expected NotInvertible")

    print("doubler_py smoke test: all assertions passed")


if __name__ == "__main__":
    main()
