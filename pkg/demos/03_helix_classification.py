"""Classifying curve/field pairs.

A field f is eikonal along a curve when |grad f| is constant on it. The
curve is an f-helix when additionally <grad f, V1> is a nonzero constant,
and an f-slant helix when <grad f, Vn> is. A vanishing Hessian along the
curve means grad f is a fixed vector (a parallel gradient), the setting in
which the axis identities of demo 04 hold.
"""

from eikohelix import catalog, classify

for name in catalog.names():
    if name == "circle_in_r3":  # degenerate probe, classified in demo 02
        continue
    spec = catalog.load(name)
    c = classify(spec)
    print(f"{name} (n = {spec.dimension})")
    print(f"  eikonal           : {c.eikonal}   |grad f| = {c.grad_norm:.9g}"
          f" (spread {c.spreads['grad_norm']:.2e})")
    print(f"  helix             : {c.helix}   <grad f, V1> = {c.ip_tangent:.9g}"
          f" (spread {c.spreads['ip_tangent']:.2e})")
    print(f"  slant helix       : {c.slant}   <grad f, Vn> = {c.ip_last:.9g}"
          f" (spread {c.spreads['ip_last']:.2e})")
    print(f"  parallel gradient : {c.parallel_gradient}")
    print(f"  theta             : {c.theta:.9g}")
    print()

print("notes:")
print("- paper_3_1 is a helix for a curved field: the gradient norm is")
print("  constant along the curve even though the Hessian is not zero.")
print("- wcurve_r4 keeps constant curvatures but its tangent angle drifts,")
print("  so it is not a helix; its last frame vector does keep a constant")
print("  angle against this co-rotating field.")
print("- in R^4 a single constant gradient cannot serve both families at")
print("  once, so helix_r4 is a helix but not a slant helix.")
