# coding: utf-8

# # The (h,q)-zeta function
#
# For 0 < q < 1 and h >= 1 the defining series converges for every complex
# s.  At s = -n it reproduces G_{n+1}(x)/(n+1).

from hqgenocchi import ZetaParams, zeta_eval
from hqgenocchi.zeta import distribution_sides, interpolation_sides, zeta_symmetry_sides


params = ZetaParams(0.5, 1, 1.0)
for s in (0, 2, -1, 1.5 + 2j):
    print(s, zeta_eval(s, params))


# Negative integers against the exact polynomial values.

for n in range(5):
    z, exact = interpolation_sides(n, ZetaParams(0.7, 2, 2.0))
    print(n, z.real, float(exact), abs(z - float(exact)))


# Two identities that mix q and q**a.

print(zeta_symmetry_sides(1.5 + 2j, 1.0, 3, 5, 2, 0.4))
print(distribution_sides(2, 1.0, 3, 1, 0.5))
