#!/usr/bin/env python3
"""Smoke test for the polycat_py extension.

Builds nothing itself: run `cargo build -p polycat-py` first, then
`python3 python/smoke_test.py`. The script copies the cdylib next to a
temp dir under the name Python expects and imports it from there.
"""

import pathlib
import shutil
import sys
import sysconfig
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / "debug" / "libpolycat_py.so",
        ROOT / "target" / "release" / "libpolycat_py.so",
        ROOT / "target" / "debug" / "libpolycat_py.dylib",
        ROOT / "target" / "release" / "libpolycat_py.dylib",
    ]
    lib = next((p for p in candidates if p.exists()), None)
    if lib is None:
        sys.exit("build the extension first: cargo build -p polycat-py")
    tmp = pathlib.Path(tempfile.mkdtemp(prefix="polycat_py_"))
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy(lib, tmp / f"polycat_py{suffix}")
    sys.path.insert(0, str(tmp))
    import polycat_py

    return polycat_py


def main():
    polycat_py = load_module()
    fixtures = ROOT / "fixtures"

    p = polycat_py.Polygraph.load(str(fixtures / "pseudomonoid.pol"))
    p.validate()
    assert p.name == "pseudomonoid" and p.dim == 3
    assert p.gens(2) == ["mu", "eta"]
    assert p.boundary("mu") == ("a *0 a", "a")

    ty = p.type_of("(mu *0 a) *1 mu")
    assert ty == {"dim": 2, "src": "a *0 a *0 a", "tgt": "a"}, ty

    assert (
        p.normalize("(a *0 a *0 mu) *1 (mu *0 a) *1 mu")
        == "(mu *0 (a *0 a)) *1 (a *0 mu) *1 mu"
    )
    assert p.equal("(mu *0 a *0 a) *1 (a *0 mu)", "(a *0 a *0 mu) *1 (mu *0 a)")
    assert not p.equal("(mu *0 a) *1 mu", "(a *0 mu) *1 mu")

    loop = polycat_py.Polygraph.load(str(fixtures / "loop.pol"))
    assert loop.enumerate(1, 3) == ["id(x)", "f", "f *0 f", "f *0 f *0 f"]

    try:
        p.equal("L", "R")
    except ValueError as e:
        assert "dimension" in str(e)
    else:
        sys.exit("expected a dimension error for 3-cell equality")

    mon = (fixtures / "mon.eat").read_text()
    assert polycat_py.check_theory(mon) == "mon"
    good = polycat_py.check_model(mon, (fixtures / "z2.model").read_text())
    assert good["ok"] and not good["violations"]
    bad = polycat_py.check_model(mon, (fixtures / "z2bad.model").read_text())
    assert not bad["ok"] and bad["violations"]

    print("smoke test passed")


if __name__ == "__main__":
    main()
