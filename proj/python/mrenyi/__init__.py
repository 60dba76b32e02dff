"""Matrix-based Renyi alpha-order entropy, multivariate information measures,
and information-theoretic feature selection."""

from mrenyi._core import (
    InputError,
    NumericalError,
    ParameterError,
    co_information,
    conditional_entropy,
    discretize,
    entropy,
    generate_madelon_like,
    gram_matrix,
    interaction_information,
    joint_entropy,
    knn_classify,
    label_gram,
    multivariate_mi,
    mutual_information,
    nemenyi_cd,
    rbf_kernel,
    score_candidate,
    select,
    shannon_conditional_mi,
    shannon_entropy,
    shannon_mi,
    shannon_pair_mi,
    sigma_heuristic,
    spectrum,
    total_correlation,
)

__all__ = [
    "InputError",
    "NumericalError",
    "ParameterError",
    "co_information",
    "conditional_entropy",
    "discretize",
    "entropy",
    "generate_madelon_like",
    "gram_matrix",
    "interaction_information",
    "joint_entropy",
    "knn_classify",
    "label_gram",
    "multivariate_mi",
    "mutual_information",
    "nemenyi_cd",
    "rbf_kernel",
    "score_candidate",
    "select",
    "shannon_conditional_mi",
    "shannon_entropy",
    "shannon_mi",
    "shannon_pair_mi",
    "sigma_heuristic",
    "spectrum",
    "total_correlation",
]

__version__ = "0.1.0"
