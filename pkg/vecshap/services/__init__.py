"""Service modules: Shapley engine, axiom checks, Gaussian-linear SHAP, predictors."""

from .shapley_engine import (
    ShapleyWeightTable,
    coalition_weight,
    game_from_dividends,
    harsanyi_dividends,
    shapley_permutation,
    shapley_subset,
    shapley_value,
    shapley_via_unanimity,
)
from .gaussian_linear import (
    ConditionalMatrixSet,
    GaussianInput,
    attribution_matrices,
    attribution_matrix,
    conditional_matrix,
    gaussian_game,
    shap_linear_correlated,
    shap_linear_independent,
)
from .predictors import (
    CombinedPredictor,
    ConstantPredictor,
    LinearPredictor,
    PolynomialPredictor,
    Predictor,
)
from .predictor_bridge import (
    BackgroundSample,
    ExplanationResult,
    efficiency_residual,
    empirical_moments,
    explain,
    explain_gaussian,
    interventional_game,
    predictor_stability,
)
from .similarity import cosine_similarity, importance_from_attributions, spearman_correlation

__all__ = [
    "ShapleyWeightTable",
    "coalition_weight",
    "game_from_dividends",
    "harsanyi_dividends",
    "shapley_permutation",
    "shapley_subset",
    "shapley_value",
    "shapley_via_unanimity",
    "ConditionalMatrixSet",
    "GaussianInput",
    "attribution_matrices",
    "attribution_matrix",
    "conditional_matrix",
    "gaussian_game",
    "shap_linear_correlated",
    "shap_linear_independent",
    "CombinedPredictor",
    "ConstantPredictor",
    "LinearPredictor",
    "PolynomialPredictor",
    "Predictor",
    "BackgroundSample",
    "ExplanationResult",
    "efficiency_residual",
    "empirical_moments",
    "explain",
    "explain_gaussian",
    "interventional_game",
    "predictor_stability",
    "cosine_similarity",
    "importance_from_attributions",
    "spearman_correlation",
]
