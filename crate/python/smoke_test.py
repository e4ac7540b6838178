#!/usr/bin/env python3
"""Smoke test for the evoclass_py extension module.

Builds nothing itself: run `cargo build --release -p evoclass-py` first,
then `python3 python/smoke_test.py`. The script locates the compiled
cdylib in target/, links it under the importable module name, and drives
the main operations end to end.
"""

import shutil
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def locate_module():
    names = {
        "linux": ("libevoclass_py.so", "evoclass_py.so"),
        "darwin": ("libevoclass_py.dylib", "evoclass_py.so"),
    }
    built, importable = names.get(sys.platform, names["linux"])
    for profile in ("release", "debug"):
        src = ROOT / "target" / profile / built
        if src.exists():
            dst = src.parent / importable
            if not dst.exists() or src.stat().st_mtime > dst.stat().st_mtime:
                shutil.copy2(src, dst)
            sys.path.insert(0, str(src.parent))
            return
    sys.exit(
        "compiled module not found; run `cargo build --release -p evoclass-py` first"
    )


locate_module()
import evoclass_py as ec  # noqa: E402

failures = 0


def check(label, condition):
    global failures
    status = "ok" if condition else "FAIL"
    print(f"  [{status}] {label}")
    if not condition:
        failures += 1


print("evoclass_py smoke test")

# catalog shape
names = ec.catalog_names()
check("catalog has 46 entries", len(names) == 46)
check("dimension 5 has 29 families", len(ec.catalog_names(5)) == 29)

# basic algebra operations
a = ec.Algebra.from_catalog("E_2_2")
check("E_2_2 table", a.table() == "e1^2 = e2")
check("E_2_2 nilpotency", a.nilpotency_index() == 3)
check("e1 * e1 = e2", a.multiply([1, 0], [1, 0]) == ["0", "1"])
check("e1 * e2 = 0", a.multiply([1, 0], [0, 1]) == ["0", "0"])

chain = ec.Algebra.from_catalog("E_5_24")
check("chain power dims", chain.power_chain_dims() == [5, 4, 3, 2, 1, 0])
check("chain annihilator", chain.annihilator_basis() == [5])

# constructing and inverting extensions
base = ec.Algebra.from_catalog("E_4_5")
ext = ec.extend(base, [[0, 1, 0, 1]])
check("extension table", ext.table() == ec.Algebra.from_catalog("E_5_17").table())
rec_base, thetas, perm = ec.reconstruct(ext)
check("reconstruct recovers the base", rec_base == base)
check("reconstruct recovers the cocycle", thetas == [["0", "1", "0", "1"]])
check("reconstruct keeps the order", perm == [0, 1, 2, 3, 4])

# entry verification and structure recomputation
rep = ec.verify_entry("E_4_8")
check("E_4_8 verifies", rep["pass"])
check("dimension 3 verifies over F_7", ec.verify_dimension(3, "fp:7"))

# the Psi invariant by the rational and finite-field routes
for field in ("q", "fp:5"):
    b = ec.Algebra.from_catalog("E_4_6", field)
    check(f"psi (3) over {field}", ec.psi(b, [[0, 0, 0, 1]]) == [3])
    check(f"psi (2) over {field}", ec.psi(b, [[0, 0, 1, 1]]) == [2])

# isomorphism decisions
f5 = "fp:5"
x = ec.Algebra.from_catalog("E_5_21", f5)
y = ec.Algebra.from_catalog("E_5_22", f5)
v = ec.isomorphism_check(x, y)
check("distinguished pair", v["verdict"] == "non-isomorphic" and "Psi" in v["invariant"])

m = ec.Algebra.from_catalog("E_5_18", "fp:13", 4)
n = ec.Algebra.from_catalog("E_5_18", "fp:13", 10)
v = ec.isomorphism_check(m, n)
check("family members isomorphic", v["verdict"] == "isomorphic")
check("witness is 5x5", len(v["witness"]) == 5)

shuffled = x.permuted([2, 0, 1, 3, 4])
v = ec.isomorphism_check(x, shuffled)
check("permuted presentation isomorphic", v["verdict"] == "isomorphic")

# orbit enumeration over a finite field
res = ec.enumerate_orbits(ec.Algebra.from_catalog("E_4_9", "fp:3"), 1)
check("chain enumeration has one class", len(res["iso_classes"]) == 1)
check("enumeration complete", res["complete"])

# family parameter identities
orbit = ec.family_orbit("fp:13", 4)
check("orbit of 4 collapses to {4, 10}", sorted(set(orbit)) == ["10", "4"])
ok, unit = ec.verify_sextic_identity()
check("sextic identity", ok and unit == 1)

# the classification document
text = ec.classification_report(5)
check("report lists all blocks", all(f"E_5_{i}\n" in text for i in range(1, 30)))

# JSON round trip
back = ec.Algebra.from_json(x.to_json())
check("json round trip", back == x)

if failures:
    sys.exit(f"{failures} smoke checks failed")
print("all smoke checks passed")
