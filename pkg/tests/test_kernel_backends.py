import os
import random
import subprocess
import sys

import pytest

from sharksfin.jets import _pykernel, compiled_available

ck = pytest.importorskip("sharksfin.jets._ckernel") if compiled_available() else None
needs_compiled = pytest.mark.skipif(ck is None, reason="compiled kernel not built")


def _vec(rng, order, big=False, zero_const=False):
    n = _pykernel.size(order)
    hi = 10 ** 30 if big else 50
    out = [rng.randint(-hi, hi) for _ in range(n)]
    if zero_const:
        out[0] = 0
    return out


@needs_compiled
@pytest.mark.parametrize("big", [False, True])
def test_mul_int_parity(big):
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(0, 6)
        a, b = _vec(rng, n, big), _vec(rng, n, big)
        assert list(ck.mul_int(a, b, n)) == list(_pykernel.mul(a, b, n))


@needs_compiled
@pytest.mark.parametrize("big", [False, True])
def test_compose_int_parity(big):
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(1, 6)
        o = _vec(rng, n, big)
        g1, g2 = _vec(rng, n, big, True), _vec(rng, n, big, True)
        assert list(ck.compose_int(o, g1, g2, n)) == list(_pykernel.compose(o, g1, g2, n))


@needs_compiled
def test_int64_overflow_falls_back_to_python_ints():
    n = 6
    a = [2 ** 40] * _pykernel.size(n)
    got = list(ck.mul_int(a, a, n))
    assert got == list(_pykernel.mul(a, a, n))
    assert max(got) > 2 ** 63


@needs_compiled
def test_float_parity():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 6)
        size = _pykernel.size(n)
        a = [rng.uniform(-2, 2) for _ in range(size)]
        b = [rng.uniform(-2, 2) for _ in range(size)]
        g1 = [0.0] + [rng.uniform(-2, 2) for _ in range(size - 1)]
        g2 = [0.0] + [rng.uniform(-2, 2) for _ in range(size - 1)]
        for x, y in zip(ck.mul_float(a, b, n), _pykernel.mul(a, b, n)):
            assert x == pytest.approx(y, rel=1e-12, abs=1e-12)
        for x, y in zip(ck.compose_float(a, g1, g2, n), _pykernel.compose(a, g1, g2, n, one=1.0)):
            assert x == pytest.approx(y, rel=1e-12, abs=1e-10)


def _run(code, pure):
    env = dict(os.environ)
    env["SHARKSFIN_PURE_PYTHON"] = "1" if pure else "0"
    return subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout


def test_environment_switch_selects_pure_backend():
    assert _run("from sharksfin.jets import BACKEND; print(BACKEND)", True).strip() == "python"


@needs_compiled
def test_classification_identical_across_backends():
    code = (
        "import random\n"
        "from sharksfin.oracle import random_a_equivalence\n"
        "from sharksfin.classify import classify_germ\n"
        "from sharksfin.jets import Jet2, MapJet2\n"
        "f = MapJet2(Jet2(4, {(1, 1): 1}), Jet2(4, {(2, 0): 1, (0, 2): 1, (3, 0): 1}))\n"
        "for s in range(20):\n"
        "    c = classify_germ(random_a_equivalence(f, s))\n"
        "    print(c.verdict.value, c.product)\n"
    )
    assert _run(code, True) == _run(code, False)
