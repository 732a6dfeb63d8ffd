# coding: utf-8

# # Riemann sums that converge p-adically
#
# Sum the integrand over y = 0 .. p**N - 1 with alternating weights.  The
# error against the exact Genocchi value shrinks p-adically: its valuation
# climbs with N even though the partial sums themselves grow.

from hqgenocchi import PadicContext, convergence_profile


# Classical case q = 1 at p = 3: the partial sums of y and y**2.

for n in (1, 2):
    profile = convergence_profile(n, 1, 1, 0, PadicContext(3, 5))
    print("n =", n, "target", profile.target)
    for N, partial, v in profile.entries:
        print("  N =", N, "partial", partial, "valuation", v)


# A genuine q: q = 1 + p is close to 1 in the 3-adic sense.

profile = convergence_profile(2, 2, 4, 0, PadicContext(3, 5))
print(profile.valuations())
print(profile.to_json()[0])  # the partial sums get long quickly
