"""Girth estimation, roundtrip covers and roundtrip spanners."""

from .base import BasePipeline, GirthResult, RunStats
from .cover import Ball, Cover, ball_from_searches, realized_radius, roundtrip_ball, union_tree_edges
from .covers_det import RoundtripCoverBuilder, det_girth, det_spanner, good_cut, roundtrip_cover
from .covers_klogk import (
    KlogkParams,
    OnFlags,
    RoundtripCover2Builder,
    SimilarityData,
    ball_grow,
    build_similar,
    good_cut2,
    klogk_girth,
    klogk_spanner,
    roundtrip_cover2,
    similar,
)
from .error_tracker import ErrorTracker
from .filtering import SimilarSetParams, WitnessFilter
from .girth3 import GirthApprox3, SimilarSetOutcome, girth_approx, girth_estimate, similar_set
from .oracle import (
    APSP_LIMIT,
    CoverReport,
    StretchReport,
    distance_matrix,
    exact_girth,
    roundtrip_matrix,
    verify_cover,
    verify_spanner,
)
from .regularize import RegularizedGraph, lift_cycle, lift_subgraph, regularize
from .spanner8 import (
    SpannerAccumulator,
    SpannerApprox8,
    SurvivorSet,
    full_spanner,
    similar_set_spanner,
    spanner_approx,
)

__all__ = [
    'APSP_LIMIT',
    'Ball',
    'BasePipeline',
    'Cover',
    'CoverReport',
    'ErrorTracker',
    'GirthApprox3',
    'GirthResult',
    'KlogkParams',
    'OnFlags',
    'RegularizedGraph',
    'RoundtripCover2Builder',
    'RoundtripCoverBuilder',
    'RunStats',
    'SimilarSetOutcome',
    'SimilarSetParams',
    'SimilarityData',
    'SpannerAccumulator',
    'SpannerApprox8',
    'StretchReport',
    'SurvivorSet',
    'WitnessFilter',
    'ball_from_searches',
    'ball_grow',
    'build_similar',
    'det_girth',
    'det_spanner',
    'distance_matrix',
    'exact_girth',
    'full_spanner',
    'girth_approx',
    'girth_estimate',
    'good_cut',
    'good_cut2',
    'klogk_girth',
    'klogk_spanner',
    'lift_cycle',
    'lift_subgraph',
    'realized_radius',
    'regularize',
    'roundtrip_ball',
    'roundtrip_cover',
    'roundtrip_cover2',
    'roundtrip_matrix',
    'similar',
    'similar_set',
    'similar_set_spanner',
    'spanner_approx',
    'union_tree_edges',
    'verify_cover',
    'verify_spanner',
]
