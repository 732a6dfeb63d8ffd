# coding: utf-8

# # Integrating q-Bernstein polynomials
#
# The fermionic integral of B_{k,n}(x, q) against the weight q**((h-1)x) can
# be written through Genocchi numbers at q or through reflected moments at
# 1/q.  Both land on the same rational.

from fractions import Fraction as F

from hqgenocchi import GenSpec, QPoint, bernstein
from hqgenocchi import genocchi as gq


spec = GenSpec(1, QPoint(F(1, 2)))

# A q-Bernstein value at an integer point.
print(bernstein(1, 3, 2, spec.q))

for n in range(1, 5):
    for k in range(n):
        direct = gq.bernstein_moment_direct(k, n, spec)
        reflected = gq.bernstein_moment_reflected(k, n, spec)
        print(k, n, direct, reflected, direct == reflected)


# Products of several Bernstein polynomials work the same way.

print(gq.product_moment_sides(0, [1, 1], spec))
print(gq.product_moment_sides(1, [2, 3, 2], GenSpec(2, QPoint(F(3, 5)))))


# Reading the index in the reflected route as n+1 instead of n-l+1 gives a
# different number, which is why the library keeps the corrected index.

print(gq.bernstein_moment_printed(1, 2, spec), gq.bernstein_moment_reflected(1, 2, spec))
