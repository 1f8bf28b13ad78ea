"""Exact combinatorics of level-1 lattice paths, q-Fock spaces, crystal
graphs, canonical bases and Specht modules for deformed symmetric-group
algebras at roots of unity.

Subpackages are independent layers: qseries (exact Laurent/series
arithmetic), partitions (diagram combinatorics and the affine weight
lattice), fock (quantum generator actions), crystal (good-node operators
and graphs), canonical (global lower basis and decomposition numbers),
paths (lattice paths, bijection, classification, direct enumerations),
branching (closed-form q-series), specht (tableaux and representation
matrices), cli (command-line front end).
"""

__version__ = "0.1.0"

__all__ = [
    "qseries",
    "partitions",
    "fock",
    "crystal",
    "canonical",
    "paths",
    "branching",
    "specht",
    "cli",
    "errors",
]
