#!/usr/bin/env python3
'''
The exceptions raised throughout the project

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'FitBoundError',
    'ConfigurationError',
    'CapExceededError',
    'NotPrimeError',
    'GroupAxiomError',
    'NotNormalError',
    'NotInvariantError',
    'NotSolubleError',
    'HomomorphismError',
    'DegenerateFrobeniusError',
    'CatalogError',
    'ImplementationError',
]

import typing


class FitBoundError(Exception):
    '''
    base class of all project errors

    @parameters :
    * `message` :   the human readable message
    * `witness` :   (optional) the offending element(s), appended to the message
    '''

    def __init__(self, message: str, witness: typing.Any = None) -> None:
        self.witness = witness
        if witness is not None:
            message = f"{message} (witness: {witness!r})"
        super().__init__(message)


class ConfigurationError(FitBoundError, ValueError):
    '''a settings file or settings override is malformed'''


class CapExceededError(FitBoundError, ValueError):
    '''a construction would exceed one of the configured caps'''


class NotPrimeError(FitBoundError, ValueError):
    '''an argument that must be prime is not'''


class GroupAxiomError(FitBoundError, ValueError):
    '''a multiplication table or generator list does not define a group'''


class NotNormalError(FitBoundError, ValueError):
    '''a subgroup is not normal where normality is required'''


class NotInvariantError(FitBoundError, ValueError):
    '''a subgroup is not mapped onto itself by an automorphism'''


class NotSolubleError(FitBoundError, ValueError):
    '''the Fitting height was requested for a non-soluble group'''


class HomomorphismError(FitBoundError, ValueError):
    '''a map fails to be a bijective homomorphism'''


class DegenerateFrobeniusError(FitBoundError, ValueError):
    '''the Frobenius map is the identity, so its minimal identity degenerates'''


class CatalogError(FitBoundError, ValueError):
    '''a catalog entry cannot be resolved to concrete objects'''


class ImplementationError(FitBoundError, RuntimeError):
    '''an internal cross-check failed: a proven statement was contradicted'''
