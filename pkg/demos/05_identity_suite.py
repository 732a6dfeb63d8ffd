# coding: utf-8

# # Checking everything at once
#
# The verify module knows every identity by name.  A small grid keeps this
# quick; the default grid is what the command-line `qgk verify` uses.

from hqgenocchi import GridConfig, list_identities, run_all, run_identity


print(list_identities())

small = GridConfig(q=("1/2", "2/3"), h=(1, 2), n_max=5, m_max=5, k_max=2, odd=(1, 3),
                   x=("0", "1/2", "1"), s=("-1", "2"), p=(3,), padic_levels=3)
report = run_all(small)
print(report.cases_run, "cases,", len(report.failures), "failures")
print("known misprints reproduced:", report.expected_failures_confirmed)


# One identity on its own, written out as CSV.

one = run_identity("thm2-reflection", small)
print(one.to_csv().splitlines()[:3])
