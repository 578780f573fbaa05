#!/usr/bin/env python3
'''
Reading groups from text

Permutation files hold one generator per line, either in 1-based cycle notation
"(1 2 3)(4 5)" or as a 1-based image list "2 3 1 5 4". Blank lines and
everything after a "#" are ignored. Cayley table files hold N on the first line
followed by N rows of N 1-based indices.

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'parse_permutation',
    'read_permutation_file',
    'read_cayley_file',
    'degree_of',
    'load_group_file',
]

import os
import re
import typing
import logging

import numpy as np
from sympy.combinatorics import Permutation

from ..errors import GroupAxiomError

log = logging.getLogger(__name__)

_CYCLE = re.compile(r'\(([^()]*)\)')


def _strip_comment(line: str) -> str:
    return line.split('#', 1)[0].strip()


def degree_of(text: str) -> int:
    '''the largest point mentioned in a 1-based permutation string'''
    points = [int(t) for t in re.findall(r'\d+', text)]
    return max(points, default=1)


def parse_permutation(text: str, degree: typing.Optional[int] = None) -> np.ndarray:
    '''
    parse one permutation in 1-based cycle or image notation

    @parameters :
    * `text`    :   e.g. "(1 2 3)(4 5)", "(1,2)", "()" or "2 3 1 5 4"
    * `degree`  :   (optional) the number of points, default the largest point mentioned

    @returns :
    * the 0-based image array as np.int16
    '''
    text = _strip_comment(text)
    if degree is None:
        degree = degree_of(text)
    try:
        if text.startswith('('):
            cycles = []
            for body in _CYCLE.findall(text):
                cycle = [int(t) - 1 for t in re.split(r'[\s,]+', body.strip()) if t]
                if len(cycle) > 1:
                    cycles.append(cycle)
            leftover = _CYCLE.sub('', text).strip()
            if leftover:
                raise GroupAxiomError(f"unexpected text '{leftover}' in a cycle")
            perm = Permutation(cycles, size=degree)
        else:
            images = [int(t) - 1 for t in re.split(r'[\s,]+', text) if t]
            if len(images) != degree:
                raise GroupAxiomError(f"image list of length {len(images)} on {degree} points",
                                      witness=text)
            perm = Permutation(images)
    except ValueError as e:
        if isinstance(e, GroupAxiomError):
            raise
        raise GroupAxiomError(f"'{text}' is not a permutation: {e}") from e
    if perm.size != degree:
        raise GroupAxiomError(f"'{text}' moves points beyond the degree {degree}")
    return np.array(perm.array_form, dtype=np.int16)


def read_permutation_file(filename: str) -> 'tuple[int, list[np.ndarray]]':
    '''
    read a permutation generator file

    @returns :
    * `(degree, generators)`, the degree being the largest point mentioned
    '''
    with open(filename) as f:
        lines = [_strip_comment(line) for line in f]
    lines = [line for line in lines if line]
    if not lines:
        raise GroupAxiomError(f"no generators in '{filename}'")
    degree = max(degree_of(line) if line.startswith('(') else len(line.split()) for line in lines)
    generators = [parse_permutation(line, degree) for line in lines]
    log.debug(f"read {len(generators)} generators on {degree} points from '{filename}'")
    return degree, generators


def read_cayley_file(filename: str) -> np.ndarray:
    '''read a 1-based Cayley table file and return the 0-based table'''
    with open(filename) as f:
        lines = [_strip_comment(line) for line in f]
    lines = [line for line in lines if line]
    if not lines:
        raise GroupAxiomError(f"empty Cayley table file '{filename}'")
    try:
        n = int(lines[0])
        rows = [[int(t) - 1 for t in line.split()] for line in lines[1:]]
    except ValueError as e:
        raise GroupAxiomError(f"malformed Cayley table in '{filename}': {e}") from e
    if len(rows) != n or any(len(row) != n for row in rows):
        raise GroupAxiomError(f"'{filename}' announces order {n} but holds a "
                              f"{len(rows)}-row table")
    return np.array(rows, dtype=np.int64).reshape(n, n)


def _looks_like_cayley(filename: str) -> bool:
    with open(filename) as f:
        for line in f:
            line = _strip_comment(line)
            if line:
                return line.isdigit()
    return False


def load_group_file(filename: str, kind: str = 'auto', name: str = ''):
    '''
    build a group from a permutation or Cayley table file

    @parameters :
    * `filename`    :   the file
    * `kind`        :   'permutations', 'cayley' or 'auto' (a lone integer on the first
                        line announces a Cayley table)
    * `name`        :   (optional) a label, default the file name
    '''
    from .group import from_cayley_table, from_permutations

    name = name or os.path.basename(filename)
    if kind == 'auto':
        kind = 'cayley' if _looks_like_cayley(filename) else 'permutations'
    if kind == 'cayley':
        return from_cayley_table(read_cayley_file(filename), name)
    if kind == 'permutations':
        degree, generators = read_permutation_file(filename)
        return from_permutations(degree, generators, name)
    raise ValueError(f"unknown group file kind '{kind}'")
