# coding: utf-8

# # (h,q)-Genocchi numbers, two ways
#
# Everything here is exact: values are Fractions and q is carried as t**b so
# that fractional powers of q stay rational.

from fractions import Fraction as F

from hqgenocchi import GenSpec, QPoint, classical_genocchi
from hqgenocchi import hq_genocchi_closed, hq_genocchi_poly, hq_genocchi_rec


# Pick q = 1/2 and h = 1.

spec = GenSpec(1, QPoint(F(1, 2)))

for n in range(8):
    print(n, hq_genocchi_closed(n, spec), hq_genocchi_rec(n, spec))


# The closed sum and the umbral recurrence agree term by term.  Push q toward
# 1 and the numbers drift back to the ordinary Genocchi numbers 0, 1, -1, 0, 1, 0, -3, ...

near_one = GenSpec(2, QPoint(1 - F(1, 10**6)))
for n in range(9):
    approx = hq_genocchi_closed(n, near_one)
    print(n, float(approx), classical_genocchi(n))


# Polynomials take an argument x.  A half-integer x needs q to be a perfect
# square, so we put q = t**2 with t = 2/3.

half_scale = GenSpec(3, QPoint(F(2, 3), 2))
for x in (F(0), F(1, 2), F(1), F(3, 2)):
    print(x, hq_genocchi_poly(4, x, half_scale))
