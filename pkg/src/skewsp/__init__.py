"""Exact computations for skew invariant theory of symplectic groups.

Modules: exalg (exterior algebra on V (x) W), spops (sp(g) and sp(V)
operators), reps (weights, dimensions, multiplicities), pn (the pairing
relations), genus (Chern roots and the pluri chi_y genus), k3 (K3 tables and
traces), graphs (marked uni-trivalent graphs), cli.
"""

__version__ = "0.1.0"
