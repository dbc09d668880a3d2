import os
import random
import subprocess
import sys

import pytest

from arrowpoly import arrow
from arrowpoly.arrow import arrow_bracket, state_counts
from arrowpoly.moves import random_code

compiled = pytest.mark.skipif(arrow._compiled_state_counts is None, reason="extension not built")


@compiled
def test_compiled_matches_python():
    rng = random.Random(21)
    for _ in range(60):
        code = random_code(rng, rng.randint(0, 8), rng.choice((1, 2)))
        assert state_counts(code, "compiled") == state_counts(code, "python")


@compiled
def test_compiled_rejects_oversized_input():
    partner = list(range(4 * 25))
    with pytest.raises(OverflowError):
        arrow._compiled_state_counts(partner, [1] * 25, [])


def test_python_kernel_bracket(virtual):
    code = virtual["3.7*"]
    assert arrow_bracket(code, kernel="python") == arrow_bracket(code)


def test_unknown_kernel():
    with pytest.raises(ValueError):
        state_counts(random_code(random.Random(0), 2), "fortran")


def test_env_forces_fallback():
    env = dict(os.environ, ARROWPOLY_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import arrowpoly.arrow as a; print(a.KERNEL)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
