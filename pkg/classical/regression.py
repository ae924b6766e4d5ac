"""
Linear hypothesis h(x) = theta_0 + sum theta_i x_i, its mean-halved squared
error cost, and a plain full-batch gradient descent fit.

The normal-equation solution is kept alongside as the reference the fit is
checked against; it is not what `fit` uses.
"""

import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd

from config import DIVERGENCE_PATIENCE
from errors import ConvergenceError, DomainError, ParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RegressionModel:
    theta: np.ndarray

    def __post_init__(self):
        theta = np.array(self.theta, dtype=np.float64).reshape(-1)
        if theta.size == 0:
            raise DomainError("a model needs at least the bias parameter theta_0")
        if not np.all(np.isfinite(theta)):
            raise DomainError("model parameters must be finite")
        theta.setflags(write=False)
        object.__setattr__(self, "theta", theta)

    @property
    def feature_count(self):
        return self.theta.size - 1

    @classmethod
    def zeros(cls, feature_count):
        return cls(np.zeros(feature_count + 1))


@dataclass(frozen=True, eq=False)
class TrainingSet:
    features: np.ndarray
    targets: np.ndarray

    def __post_init__(self):
        targets = np.array(self.targets, dtype=np.float64).reshape(-1)
        features = np.array(self.features, dtype=np.float64)
        if features.ndim == 1:
            features = features.reshape(-1, 1) if features.size else features.reshape(targets.size, 0)
        if features.ndim != 2:
            raise DomainError(f"features must be a 2-D table, got {features.ndim} dimensions")
        if targets.size < 1:
            raise DomainError("training set needs at least one sample")
        if features.shape[0] != targets.size:
            raise DomainError(f"{features.shape[0]} feature rows for {targets.size} targets")
        object.__setattr__(self, "features", features)
        object.__setattr__(self, "targets", targets)

    @property
    def sample_count(self):
        return self.targets.size

    @property
    def feature_count(self):
        return self.features.shape[1]

    def design_matrix(self):
        """Features with a leading column of ones for theta_0."""
        return np.hstack([np.ones((self.sample_count, 1)), self.features])


def _check_width(model, data):
    if model.feature_count != data.feature_count:
        raise DomainError(
            f"model has {model.feature_count} feature weights, data has {data.feature_count} features"
        )


def hypothesis(model, x):
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    if x.size != model.feature_count:
        raise DomainError(f"model expects {model.feature_count} features, got {x.size}")
    return float(model.theta[0] + x @ model.theta[1:])


def cost(model, data):
    _check_width(model, data)
    residuals = data.design_matrix() @ model.theta - data.targets
    return float(residuals @ residuals / (2 * data.sample_count))


def cost_gradient(model, data):
    _check_width(model, data)
    design = data.design_matrix()
    residuals = design @ model.theta - data.targets
    return design.T @ residuals / data.sample_count


def fit_linear(data, learning_rate, iterations, initial=None):
    if learning_rate <= 0:
        raise DomainError(f"learning rate must be positive, got {learning_rate}")
    if iterations < 0:
        raise DomainError(f"iterations must be >= 0, got {iterations}")
    model = initial if initial is not None else RegressionModel.zeros(data.feature_count)
    _check_width(model, data)

    design = data.design_matrix()
    theta = model.theta.copy()
    m = data.sample_count
    previous = cost(model, data)
    rising = 0
    for step in range(1, iterations + 1):
        residuals = design @ theta - data.targets
        theta -= learning_rate * (design.T @ residuals) / m
        residuals = design @ theta - data.targets
        current = float(residuals @ residuals / (2 * m))
        if not np.isfinite(current):
            raise ConvergenceError(f"cost became non-finite at iteration {step}")
        rising = rising + 1 if current > previous else 0
        if rising >= DIVERGENCE_PATIENCE:
            raise ConvergenceError(
                f"cost rose {DIVERGENCE_PATIENCE} iterations in a row (iteration {step}, cost {current:.6g}); "
                f"try a smaller learning rate than {learning_rate}"
            )
        previous = current
        if step % 1000 == 0:
            logger.info("fit iteration %d cost %.6g", step, current)
    return RegressionModel(theta)


def normal_equation(data):
    """Least-squares minimizer of cost, via numpy.linalg.lstsq."""
    theta, *_ = np.linalg.lstsq(data.design_matrix(), data.targets, rcond=None)
    return RegressionModel(theta)


def load_training_csv(path):
    """One sample per row: features, then the target in the last column."""
    try:
        df = pd.read_csv(path, header=None, skip_blank_lines=False, skipinitialspace=True)
    except pd.errors.EmptyDataError:
        raise ParseError("training data is empty", path=path, line=1)
    except (pd.errors.ParserError, OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read training data: {e}", path=path)

    numeric = df.apply(pd.to_numeric, errors="coerce")
    blank = df.isna().all(axis=1)
    bad = numeric.isna().any(axis=1) & ~blank
    if bad.any():
        line = int(bad.idxmax()) + 1
        raise ParseError("non-numeric or missing value", path=path, line=line)
    numeric = numeric[~blank]
    if numeric.empty:
        raise ParseError("training data has no samples", path=path, line=1)

    values = numeric.to_numpy(dtype=np.float64)
    return TrainingSet(values[:, :-1], values[:, -1])
