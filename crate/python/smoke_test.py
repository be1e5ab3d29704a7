"""Smoke test for the charclass_py extension (build it with `maturin build` in crates/python)."""

import charclass_py as cc

ring = cc.Ring(["x", "y", "z", "w"])
twisted = cc.Ideal(ring, "y^2 - x*z, y*z - x*w, z^2 - y*w")
assert twisted.proj_dim() == 1 and twisted.degree() == 3

chern = cc.chern_class(twisted, seed=1)
assert chern.degrees == [3, 2], chern
assert chern.poly == "3*H^2 + 2*H^3", chern
assert cc.segre_class(twisted, seed=1).degrees == [3, -10]
assert cc.euler_characteristic(twisted, seed=1) == 2

whitney = cc.Ideal.jacobian(ring, "x^2*w - y^2*z")
assert cc.segre_class(whitney, seed=2).degrees == [1, 0]

censor = cc.Ring(["p0", "p1", "p2", "p12"])
f = cc.Ideal(censor, "2*p0*p1*p2 + p1^2*p2 + p1*p2^2 - p0^2*p12 + p1*p2*p12")
g = cc.Ideal(censor, "p0^2*p1*p2*p12 + p0*p1^2*p2*p12 + p0*p1*p2^2*p12 + p0*p1*p2*p12^2")
assert cc.euler_characteristic(f, seed=3) == 5
assert cc.euler_complement(f, g, seed=3) == 3

plane = cc.Ring(["x", "y", "z"])
assert cc.csm_class(cc.Ideal(plane, ["y^2*z - x^3 - x^2*z"])).poly == "3*H + H^2"
assert cc.Ideal(plane, "x").intersection(cc.Ideal(plane, "y")) == cc.Ideal(plane, "x*y")

try:
    cc.Ideal(plane, "x + 1")
except ValueError as e:
    assert "not homogeneous" in str(e)
else:
    raise AssertionError("inhomogeneous generator accepted")

print("smoke test passed")
