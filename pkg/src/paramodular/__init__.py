"""Exact computations around paramodular Siegel threefolds at a prime p.

Submodules: ``wd_core`` (Weil-Deligne representations and purity),
``local_reps`` (K(p)-spherical local types), ``ss_locus`` (supersingular
locus combinatorics), ``picard_lefschetz`` (vanishing-cycle ledger, component
group, Mazur's principle), ``dimensions`` (dimension identities), ``cli``.
"""

__version__ = "0.1.0"
