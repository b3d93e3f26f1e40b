import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "cotame", deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("cotame")


@pytest.fixture(scope="session")
def field_u():
    from cotame.coeffs import ParamField

    return ParamField(invertible=("u",))


@pytest.fixture(scope="session")
def u(field_u):
    return field_u.symbol("u")
