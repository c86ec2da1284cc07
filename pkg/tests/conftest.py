import random

import pytest

from splitoct import field_from_string
from splitoct.octonion import Octonion

BACKEND_SPECS = ["C", "Q", "F:5", "F:2^4"]


@pytest.fixture(params=BACKEND_SPECS, ids=lambda s: s.replace(":", ""))
def any_field(request):
    return field_from_string(request.param)


@pytest.fixture
def rng():
    return random.Random(12345)


def random_oct(field, rng):
    return Octonion(field, tuple(field.rand(rng) for _ in range(8)))


def assert_oct_eq(a, b, msg=""):
    assert a == b, f"{msg}: {a!r} != {b!r}"


def magnitude(x):
    """Largest coordinate magnitude of a complex-backend octonion."""
    return max(abs(c) for c in x.coords)


def scalar_close(field, x, y, scale=1.0):
    """Backend equality, widened on the complex backend to the forward
    error achievable when the computation passed through coordinates of
    the given magnitude (float64 loses ~scale * 1e-16 absolute accuracy).
    Exact backends ignore the scale."""
    eps = getattr(field, "epsilon", None)
    if eps is None:
        return field.eq(x, y)
    return abs(x - y) <= eps * max(1.0, abs(x), abs(y), scale)


def oct_close(a, b, scale=1.0):
    """Componentwise scalar_close."""
    f = a.field
    return all(scalar_close(f, x, y, scale) for x, y in zip(a.coords, b.coords))
