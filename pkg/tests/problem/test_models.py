import numpy as np
import pytest

from kglr.problem.models import (
    CountingProblemSpec,
    Nonlinearity,
    ProblemSpec,
    SpectralState,
)
from kglr.problem.nonlinearity import eval_f, eval_U
from tests.common.parametrizes import (
    NONLINEAR_TAGS,
    PARAM_CUBIC_TWO,
    PARAM_SINE_HALF_PI,
    PARAM_SINE_ZERO,
)
from tests.common.tolerances import FD_DELTA, FINITE_DIFFERENCE

pytestmark = pytest.mark.unit


class TestNonlinearity:
    """Tests for the registered nonlinearity/potential pairs."""

    @pytest.mark.parametrize(
        ("test_case", "tag", "value", "expected"),
        [PARAM_SINE_ZERO, PARAM_SINE_HALF_PI, PARAM_CUBIC_TWO],
    )
    def test_eval_f_pointwise(
        self,
        test_case: str,
        tag: Nonlinearity,
        value: float,
        expected: float,
    ) -> None:
        """Test f applied to a constant field."""

        spec = ProblemSpec(nonlinearity=tag)

        out = eval_f(spec, np.full(6, value))

        np.testing.assert_allclose(out, np.full(6, expected), err_msg=test_case)

    def test_sine_potential_values(self) -> None:
        """Test U(0) = 2 and U(pi) = 0 for the sine nonlinearity."""

        spec = ProblemSpec(nonlinearity=Nonlinearity.SINE)

        assert eval_U(spec, 0.0) == 2.0
        assert eval_U(spec, np.pi) == pytest.approx(0.0)

    @pytest.mark.parametrize("tag", NONLINEAR_TAGS)
    def test_force_is_minus_potential_derivative(self, tag: Nonlinearity) -> None:
        """Test -U' = f by central differences on 100 points in [-3, 3]."""

        spec = ProblemSpec(nonlinearity=tag)
        u = np.linspace(-3.0, 3.0, 100)

        derivative = (spec.U(u + FD_DELTA) - spec.U(u - FD_DELTA)) / (2 * FD_DELTA)

        np.testing.assert_allclose(-derivative, spec.f(u), atol=FINITE_DIFFERENCE)

    @pytest.mark.parametrize("tag", list(Nonlinearity))
    def test_force_vanishes_at_zero_and_potential_nonnegative(
        self,
        tag: Nonlinearity,
    ) -> None:
        """Test f(0) = 0 and U >= 0 for every tag."""

        spec = ProblemSpec(nonlinearity=tag)
        u = np.linspace(-10.0, 10.0, 401)

        assert spec.f(np.zeros(1))[0] == 0.0
        assert (spec.U(u) >= 0.0).all()

    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("Sine", Nonlinearity.SINE),
            ("CubicDefocusing", Nonlinearity.CUBIC_DEFOCUSING),
            ("cubic-defocusing", Nonlinearity.CUBIC_DEFOCUSING),
            (" linear ", Nonlinearity.LINEAR),
        ],
    )
    def test_parse_accepts_spellings(self, text: str, expected: Nonlinearity) -> None:
        """Test the lenient tag parser."""

        assert Nonlinearity.parse(text) is expected

    def test_parse_rejects_unknown(self) -> None:
        """Test that an unknown tag raises ValueError."""

        with pytest.raises(ValueError, match="unknown nonlinearity"):
            Nonlinearity.parse("quintic")


class TestProblemSpec:
    """Tests for ProblemSpec validation and helpers."""

    @pytest.mark.parametrize(
        "kwargs",
        [{"rho": -1.0}, {"theta": 0.0}, {"data_scale": -0.5}],
    )
    def test_invalid_parameters_raise(self, kwargs: dict[str, float]) -> None:
        """Test that out-of-range parameters are rejected."""

        with pytest.raises(ValueError, match="must be"):
            ProblemSpec(**kwargs)

    def test_without_nonlinearity_keeps_other_fields(self) -> None:
        """Test that only the tag changes."""

        spec = ProblemSpec(rho=0.5, theta=2.0, seed=9)

        linear = spec.without_nonlinearity()

        assert linear.nonlinearity is Nonlinearity.LINEAR
        assert (linear.rho, linear.theta, linear.seed) == (0.5, 2.0, 9)


class TestCountingProblemSpec:
    """Tests for the evaluation-counting wrapper."""

    def test_counts_every_call(self) -> None:
        """Test that f and f' calls are tallied separately."""

        spec = CountingProblemSpec.wrap(ProblemSpec())

        spec.f(np.zeros(4))
        spec.f(np.zeros(4))
        spec.df(np.zeros(4))
        spec.U(np.zeros(4))

        assert spec.calls["f"] == 2
        assert spec.calls["df"] == 1

    def test_wrap_copies_fields_and_is_idempotent(self) -> None:
        """Test that wrapping keeps the parameters and does not nest."""

        base = ProblemSpec(rho=1.0, theta=3.0, seed=4)

        wrapped = CountingProblemSpec.wrap(base)

        assert (wrapped.rho, wrapped.theta, wrapped.seed) == (1.0, 3.0, 4)
        assert CountingProblemSpec.wrap(wrapped) is wrapped


class TestSpectralState:
    """Tests for the coefficient pair container."""

    def test_shape_mismatch_raises(self) -> None:
        """Test that q and p must have the same length."""

        with pytest.raises(ValueError, match="differ in shape"):
            SpectralState(q=np.zeros(4, dtype=complex), p=np.zeros(6, dtype=complex))

    def test_scaled_and_finite(self) -> None:
        """Test scaling and the finiteness check."""

        state = SpectralState(q=np.ones(4, dtype=complex), p=np.ones(4, dtype=complex))

        assert np.all(state.scaled(2.0).q == 2.0)
        assert state.is_finite()
        assert not state.scaled(np.nan).is_finite()
