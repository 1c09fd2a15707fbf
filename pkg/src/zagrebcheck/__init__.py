"""Exact Zagreb-index Hamiltonicity conditions checked against exhaustive small-graph search.

Submodules: ``graph`` (bitset graphs, graph6), ``invariants``, ``inequalities``,
``theorems``, ``constructors``, ``harness`` (corpus sweeps) and ``cli``.
The search kernels come from the compiled extension when it is built; see
``zagrebcheck.kernels``.
"""

__version__ = "0.1.0"
