#!/usr/bin/env python3
'''
Finite groups: the group kernel, structural invariants, automorphisms and the
builders of the concrete families

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'Group',
    'Subgroup',
    'Automorphism',

    # submodules
    'group',
    'parsing',
    'structure',
    'automorphism',
    'constructions',
]

from .group import Group, Subgroup
from .automorphism import Automorphism
