#!/usr/bin/env python3
'''
The verification harness: catalogs, identity search, verification and reports

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'CatalogEntry',
    'load_catalog',
    'builtin_catalog',
    'identity_search',
    'verify_entry',
    'run_catalog',

    # submodules
    'catalog',
    'search',
    'verification',
    'report',
]

from .catalog import CatalogEntry, builtin_catalog, load_catalog
from .search import identity_search
from .verification import run_catalog, verify_entry
