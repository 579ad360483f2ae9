"""Rank agreement, region overlap and the packaged experiments."""

from .catalog import (
    BoundaryExperiment,
    CorrelationExperiment,
    OverlapExperiment,
    build_experiment,
    default_registry,
    matrix_frame,
)
from .experiment import (
    BandVerdict,
    BaseExperiment,
    ExperimentOutcome,
    available_experiments,
    load_experiment_config,
)
from .experiments import (
    BoundaryReport,
    BoundarySide,
    ScalingReport,
    boundary_side,
    central_regions,
    run_boundary_experiment,
    run_correlation_experiment,
    run_overlap_experiment,
    time_depth_scaling,
)
from .matrix import MethodMatrix
from .overlap import OverlapMatrix, jaccard_overlap, overlap_matrix
from .rank import CorrelationMatrix, spearman, spearman_matrix
from .registry import ExperimentRegistry

__all__ = [
    "BandVerdict",
    "BaseExperiment",
    "BoundaryExperiment",
    "BoundaryReport",
    "BoundarySide",
    "CorrelationExperiment",
    "CorrelationMatrix",
    "ExperimentOutcome",
    "ExperimentRegistry",
    "MethodMatrix",
    "OverlapExperiment",
    "OverlapMatrix",
    "ScalingReport",
    "available_experiments",
    "boundary_side",
    "build_experiment",
    "central_regions",
    "default_registry",
    "jaccard_overlap",
    "load_experiment_config",
    "matrix_frame",
    "overlap_matrix",
    "run_boundary_experiment",
    "run_correlation_experiment",
    "run_overlap_experiment",
    "spearman",
    "spearman_matrix",
    "time_depth_scaling",
]
