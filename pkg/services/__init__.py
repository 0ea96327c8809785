"""Graded quiver algebras toolkit.

Services:
- quiver_core: GF(2^m), quivers, paths, algebra elements, degrees
- rewrite_engine: completion, normal forms, radical layers
- grading_engine: homogeneity lattice, positivity, tightness
- block_catalog: dihedral-type block constructors and known profiles
- outer_group: H_r, automorphisms, normalized outer coordinates, cocharacters
- complex_transfer: graded complexes, tilting complexes, grading transfer
- cli: description language, JSON reports, the gqa command
"""

__version__ = "0.1.0"
