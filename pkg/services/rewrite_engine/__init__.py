"""
Rewrite Engine

Turns a quiver with relations into a confluent rewriting system and exposes
normal forms, the monomial basis, Hom spaces between projectives and radical
layer tables.
"""

from .completion import RewriteRule, RewriteSystem, complete_rules
from .presentation import AlgebraPresentation, complete, dimension, hom_space, normal_form
from .radical import LayerEntry, LayerTable, radical_layers, radical_power_bases, radical_square_corrections
from .relations import Relation

__all__ = [
    "AlgebraPresentation",
    "LayerEntry",
    "LayerTable",
    "Relation",
    "RewriteRule",
    "RewriteSystem",
    "complete",
    "complete_rules",
    "dimension",
    "hom_space",
    "normal_form",
    "radical_layers",
    "radical_power_bases",
    "radical_square_corrections",
]
