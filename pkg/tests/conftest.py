import pytest
from hypothesis import settings

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def f8q():
    from dgroupoid.figure_eight import build_f8q
    return build_f8q()
