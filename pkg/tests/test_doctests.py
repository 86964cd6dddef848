"""Keep the docstring examples honest."""

import doctest

import ppx.products
import ppx.rings
import ppx.series


def test_rings_doctests():
    failures, _ = doctest.testmod(ppx.rings)
    assert failures == 0


def test_series_doctests():
    failures, _ = doctest.testmod(ppx.series)
    assert failures == 0


def test_products_doctests():
    failures, _ = doctest.testmod(ppx.products)
    assert failures == 0
