#!/usr/bin/env python3
'''
Exact arithmetic: finite fields, integer polynomials as identities, the bound
functions and the additive identities of Frobenius maps

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'make_field',
    'IntPolynomial',
    'UnorderedIdentity',

    # submodules
    'finite_field',
    'polynomials',
    'frobenius_identity',
]

from .finite_field import make_field
from .polynomials import IntPolynomial, UnorderedIdentity
