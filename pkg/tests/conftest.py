#!/usr/bin/env python3
'''
Shared fixtures: small groups and automorphisms, and a clean Settings object per test

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

import pytest

from FitBound.config import Settings, get_settings, set_settings
from FitBound.groups.automorphism import from_generator_images
from FitBound.groups.constructions import stock


@pytest.fixture(autouse=True)
def default_settings():
    previous = get_settings()
    set_settings(Settings())
    yield
    set_settings(previous)


@pytest.fixture
def s3():
    return stock('S3')


@pytest.fixture
def s4():
    return stock('S4')


@pytest.fixture
def a4():
    return stock('A4')


@pytest.fixture
def a5():
    return stock('A5')


@pytest.fixture
def d8():
    return stock('D8')


@pytest.fixture
def c7():
    return stock('C7')


@pytest.fixture
def c7_square(c7):
    '''C7 with g -> g^2, an automorphism of order 3 without fixed points'''
    g = c7.generators[0]
    return from_generator_images(c7, {g: c7.power(g, 2)}, name='square')
