from __future__ import annotations

import pytest

from jetbrackets.catalog import build_catalog
from jetbrackets.groebner import certify_jet_substitution
from jetbrackets.jets import JetContext


@pytest.fixture(scope="session")
def catalog5():
    return build_catalog(JetContext(2, 5), with_ghosts=False)


@pytest.fixture(scope="session")
def jetsub_report26(catalog5):
    # expensive (half a minute of exact arithmetic); shared across files
    return certify_jet_substitution(catalog5)
