"""Row-sweep dynamic programming over vertical-edge masks."""

import math

import pytest

from asmice.asm import x_enumerate_brute
from asmice.intpoly import IntPoly
from asmice.transfer import (DEFAULT_BOUND, ENV_BACKEND, INT64_SAFE_N,
                             available_backends, coeff_count, transfer_count)


def formula_count(n):
    num = math.prod(math.factorial(3 * i + 1) for i in range(n))
    den = math.prod(math.factorial(n + i) for i in range(n))
    return num // den


def test_backends_present():
    names = available_backends()
    assert "python" in names and "numpy" in names


def test_matches_brute_enumeration():
    for n in (1, 2, 3, 4, 5):
        assert transfer_count(n, backend="python") == x_enumerate_brute(n)


def test_backends_agree():
    for backend in available_backends():
        for n in (1, 3, 6, 8):
            p = transfer_count(n, backend=backend)
            assert p(1) == formula_count(n), (backend, n)
            assert len(p.ascending()) <= coeff_count(n)


def test_pinned_values():
    assert transfer_count(3) == IntPoly([6, 1])
    assert transfer_count(4) == IntPoly([24, 16, 2])
    assert transfer_count(10)(2) == 2 ** 45


def test_coeff_count():
    assert [coeff_count(n) for n in (1, 2, 3, 4, 5)] == [1, 1, 2, 3, 5]


def test_bound_checks():
    with pytest.raises(ValueError):
        transfer_count(0)
    with pytest.raises(ValueError):
        transfer_count(DEFAULT_BOUND + 1)


def test_int64_guard_on_explicit_narrow_backend():
    with pytest.raises(ValueError, match="int64"):
        transfer_count(INT64_SAFE_N + 1, backend="numpy")


def test_default_backend_falls_back_to_python_beyond_int64(monkeypatch):
    monkeypatch.delenv(ENV_BACKEND, raising=False)
    p = transfer_count(INT64_SAFE_N + 1)
    assert p(1) == formula_count(INT64_SAFE_N + 1)


def test_env_var_selects_backend(monkeypatch):
    monkeypatch.setenv(ENV_BACKEND, "python")
    assert transfer_count(4)(1) == 42
    monkeypatch.setenv(ENV_BACKEND, "abacus")
    with pytest.raises(ValueError, match="backend"):
        transfer_count(4)


def test_unknown_backend_argument():
    with pytest.raises(ValueError, match="backend"):
        transfer_count(3, backend="gpu")
