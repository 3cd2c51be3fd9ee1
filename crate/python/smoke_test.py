"""Smoke test for the polystoch_py extension module.

Build the library first:

    cargo build --release -p polystoch-py --features extension-module

then run ``python3 python/smoke_test.py [path/to/libpolystoch_py.so]``.
Without an argument the release build is tried, then the debug build.
"""

import importlib
import json
import shutil
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def find_library(argv):
    if len(argv) > 1:
        return Path(argv[1])
    for profile in ("release", "debug"):
        for name in ("libpolystoch_py.so", "libpolystoch_py.dylib", "polystoch_py.dll"):
            path = ROOT / "target" / profile / name
            if path.exists():
                return path
    sys.exit("libpolystoch_py not found; run cargo build -p polystoch-py first")


def load(path):
    # Python imports extension modules by module name, so copy the cargo
    # artifact to polystoch_py.so (or .pyd) in a scratch directory.
    suffix = ".pyd" if path.suffix == ".dll" else ".so"
    scratch = Path(tempfile.mkdtemp())
    shutil.copy(path, scratch / f"polystoch_py{suffix}")
    sys.path.insert(0, str(scratch))
    return importlib.import_module("polystoch_py")


def main():
    ps = load(find_library(sys.argv))

    assert "V3_3" in ps.catalog_names()
    v = ps.catalog("V3_3")
    m = ps.catalog("M3_3")
    assert (v.n, v.d, v.support_size()) == (3, 3, 17)
    assert v.is_polystochastic() and ps.is_vertex(v)
    assert Fraction(v.get([0, 1, 1])) == Fraction(1, 2)

    vv = ps.kronecker(v, v)
    assert not ps.is_vertex(vv)
    cert = ps.certificate(vv)
    assert cert is not None and ps.verify_certificate(vv, cert)
    assert json.loads(cert)["lambda"] == "1/2"

    mv = ps.dot(m, v)
    assert ps.is_vertex(mv) and mv.support_size() == 51
    assert ps.are_equivalent(mv, ps.catalog("M33_dot_V33"))
    assert ps.dot_plane_equivalence_check(m, v)

    canon = ps.canonical_form(v)
    assert ps.canonical_form(canon) == canon
    assert ps.MultiMatrix.from_json(v.to_json()) == v
    half = ps.MultiMatrix(2, 2, [Fraction(1, 2)] * 4)
    assert half.entries() == ["1/2"] * 4 and half.is_polystochastic()

    vertices = ps.enumerate_vertices(3, 2)
    assert len(vertices) == 6 and all(x.is_permutation() for x in vertices)

    sample = ps.sample_vertex(3, 4, 7)
    assert ps.is_vertex(sample) and ps.check_support_bound(sample)
    assert ps.sample_vertex(3, 4, 7) == sample

    report = json.loads(ps.survey(3, 3, 4, 0))
    assert sum(c["count"] for c in report["classes"]) == 4

    bounds = json.loads(ps.bound_report(3, 4))
    assert bounds["support_bound"] == "65"

    try:
        ps.catalog("nope")
    except ps.PolystochError:
        pass
    else:
        raise AssertionError("unknown catalog name accepted")

    try:
        ps.MultiMatrix(2, 2, ["2/4", "0", "0", "1"])
    except ps.PolystochError:
        pass
    else:
        raise AssertionError("non-canonical entry accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
