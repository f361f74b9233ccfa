"""
Shared fixtures and the deterministic hypothesis profile.
"""
import pytest
from click.testing import CliRunner
from hypothesis import settings

settings.register_profile("deterministic", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("deterministic")


@pytest.fixture
def runner():
    return CliRunner()
