import pytest

from solarlink.cli import ToolConfig
from solarlink.solar import integrated_flux


@pytest.fixture
def default_config():
    return ToolConfig()


@pytest.fixture
def default_link():
    return ToolConfig().link_config()


@pytest.fixture
def flux_60_329():
    return integrated_flux(60.0, 329.0)
