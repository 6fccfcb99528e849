"""Tests for the built-in problems and their evaluation helpers."""

import math

import numpy as np
import pytest

from shishkin_ivp import (
    EvaluationError,
    Problem,
    exact_eval,
    linear_coeffs_eval,
    make_builtin,
    rhs_eval,
)


class TestMakeBuiltin:
    def test_decay_initial_value(self):
        problem = make_builtin("decay", 2.0**-4)
        assert exact_eval(problem, 0.0) == 1.0
        assert problem.y0 == 1.0

    def test_layer1_initial_value(self):
        """x - exp(-x/eps) + 1 vanishes at x = 0."""
        for eps in (1.0, 2.0**-7, 2.0**-20):
            assert exact_eval(make_builtin("layer1", eps), 0.0) == 0.0

    def test_layer1_rhs_at_origin(self):
        """(eps + 1)/eps with eps = 1/4."""
        assert rhs_eval(make_builtin("layer1", 0.25), 0.0, 0.0) == 5.0

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="unknown builtin"):
            make_builtin("oscillator", 0.5)

    @pytest.mark.parametrize("eps", [0.0, -0.5, 1.5])
    def test_epsilon_domain(self, eps):
        with pytest.raises(ValueError):
            make_builtin("decay", eps)


class TestRhsEval:
    def test_decay_unit_epsilon(self):
        assert rhs_eval(make_builtin("decay", 1.0), 0.3, 2.0) == -2.0

    def test_decay_scaled(self):
        assert rhs_eval(make_builtin("decay", 0.25), 0.0, 1.0) == -4.0

    def test_layer1_unit_epsilon(self):
        """(1 + e^0 + 0)/1 = 2."""
        assert rhs_eval(make_builtin("layer1", 1.0), 0.0, 0.0) == 2.0

    def test_outside_domain(self):
        with pytest.raises(ValueError, match="outside problem domain"):
            rhs_eval(make_builtin("decay", 1.0), 1.5, 1.0)

    def test_non_finite_rejected(self):
        bad = Problem(
            epsilon=1.0, x0=0.0, y0=0.0, rhs=lambda x, y: math.nan, label="nan"
        )
        with pytest.raises(EvaluationError):
            rhs_eval(bad, 0.5, 0.0)

    def test_overflow_rejected(self):
        bad = Problem(
            epsilon=1.0,
            x0=0.0,
            y0=0.0,
            rhs=lambda x, y: math.exp(1000.0 + x),
            label="overflow",
        )
        with pytest.raises(EvaluationError):
            rhs_eval(bad, 0.5, 0.0)


class TestLinearCoeffs:
    def test_decay_constant_coefficients(self):
        assert linear_coeffs_eval(make_builtin("decay", 0.25), 0.7) == (-4.0, 0.0)

    def test_layer1_at_origin(self):
        """p(0) = 0, q(0) = (eps + 1)/eps = 2 at eps = 1."""
        p, q = linear_coeffs_eval(make_builtin("layer1", 1.0), 0.0)
        assert p == 0.0
        assert q == 2.0

    @pytest.mark.parametrize("eps", [1.0, 2.0**-5, 2.0**-12])
    def test_layer1_p_vanishes_at_origin(self, eps):
        p, _ = linear_coeffs_eval(make_builtin("layer1", eps), 0.0)
        assert p == 0.0

    def test_missing_linear_form(self):
        plain = Problem(
            epsilon=1.0, x0=0.0, y0=0.0, rhs=lambda x, y: y * y, label="sq"
        )
        with pytest.raises(ValueError, match="no linear form"):
            linear_coeffs_eval(plain, 0.5)


class TestExactEval:
    def test_decay_value(self):
        assert exact_eval(make_builtin("decay", 0.5), 0.5) == pytest.approx(
            0.36787944117144233, rel=1e-15
        )

    def test_layer1_right_end_limit(self):
        """x - e^(-x/eps) + 1 -> 2 at x = 1 as eps -> 0."""
        assert exact_eval(make_builtin("layer1", 2.0**-20), 1.0) == pytest.approx(
            2.0, abs=1e-12
        )

    def test_missing_exact(self):
        plain = Problem(
            epsilon=1.0, x0=0.0, y0=0.0, rhs=lambda x, y: -y, label="plain"
        )
        with pytest.raises(ValueError, match="no exact solution"):
            exact_eval(plain, 0.5)


class TestProblemValidation:
    def test_exact_must_match_y0(self):
        with pytest.raises(ValueError, match="does not match y0"):
            Problem(
                epsilon=1.0,
                x0=0.0,
                y0=0.0,
                rhs=lambda x, y: -y,
                exact=lambda x: math.exp(-x),
            )

    def test_domain_must_be_nonempty(self):
        with pytest.raises(ValueError, match="domain_end"):
            Problem(epsilon=1.0, x0=1.0, y0=0.0, rhs=lambda x, y: 0.0, domain_end=1.0)

    def test_linear_form_must_match_rhs(self):
        with pytest.raises(ValueError, match="linear form"):
            Problem(
                epsilon=1.0,
                x0=0.0,
                y0=1.0,
                rhs=lambda x, y: -y,
                linear=(lambda x: -1.0, lambda x: 3.0),
            )


@pytest.mark.parametrize("name", ["decay", "layer1"])
@pytest.mark.parametrize("eps", [1.0, 2.0**-3, 2.0**-8])
class TestAnalyticConsistency:
    def test_exact_satisfies_ode(self, name, eps):
        """Central difference of the exact solution tracks the rhs."""
        problem = make_builtin(name, eps)
        delta = 1e-6 * max(eps, 1e-3)
        xs = np.linspace(delta, 1.0 - delta, 100)
        for x in xs:
            slope = (exact_eval(problem, x + delta) - exact_eval(problem, x - delta)) / (
                2.0 * delta
            )
            assert abs(slope - rhs_eval(problem, x, exact_eval(problem, x))) <= 1e-6

    def test_rhs_matches_linear_form(self, name, eps):
        problem = make_builtin(name, eps)
        rng = np.random.default_rng(7)
        for _ in range(200):
            x = rng.uniform(0.0, 1.0)
            y = rng.uniform(-3.0, 3.0)
            p, q = linear_coeffs_eval(problem, x)
            r = rhs_eval(problem, x, y)
            assert abs(r - (p * y + q)) <= 1e-12 * (1.0 + abs(r))

    def test_initial_condition_exact(self, name, eps):
        problem = make_builtin(name, eps)
        assert exact_eval(problem, problem.x0) == problem.y0
