"""Shared fixtures."""

import urllib.request

import pytest

from trigbase.core.oeis import OeisClient


@pytest.fixture
def cache_dir(tmp_path):
    path = tmp_path / "oeis-cache"
    path.mkdir()
    return path


@pytest.fixture
def offline_client(cache_dir):
    return OeisClient(cache_dir=cache_dir, offline=True)


@pytest.fixture
def no_network(mocker):
    """Fail the test if anything tries to open a URL."""
    return mocker.patch.object(
        urllib.request, "urlopen", side_effect=AssertionError("network access in an offline test")
    )
