"""Exact-arithmetic branching for holomorphic and general discrete series
of SU(p,q) and Sp(n,R): cascades, chambers, parameter maps, K-type
multiplicities, and admissibility of restrictions to compact subgroups."""

__version__ = "0.1.0"

# Version of the JSON shapes emitted by the CLI, bumped on breaking changes.
SCHEMA_VERSION = "1"
