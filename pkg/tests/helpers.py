"""Shared, lazily built fixtures for module tests and property tests."""

from functools import cache

from krasner.workbench import BUILTINS, builtin_structure, default_corpus


@cache
def corpus():
    return default_corpus()


@cache
def builtin(name):
    return builtin_structure(name)


def small_structures(max_size=8):
    return [G for G in corpus() if G.size <= max_size]


BUILTIN_NAMES = BUILTINS
