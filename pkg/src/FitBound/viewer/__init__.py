#!/usr/bin/env python3
'''
An optional PyQt5 viewer for verification reports

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    # submodules
    'colors',
    'report_viewer',
]
