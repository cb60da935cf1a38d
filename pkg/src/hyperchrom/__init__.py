"""Chromatic polynomials of hypergraphs, with the graph polynomials
(independence, Tutte) and orientation counts they are tied to."""

from ._kernels import backend_name
from .chromatic import (
    chrom_count,
    chrom_interpolate,
    chrom_level,
    chrom_partition,
    chrom_poly,
    clique_cut_factor,
    whitney_coeffs,
)
from .constructions import attach, complete_hypergraph, family_st, h_apex, h_edge
from .hypergraph import Hypergraph, HypergraphError, ParseError, parse_hypergraph
from .independence import SimpleGraph, independence_number, independence_poly
from .multigraph import Multigraph, MultigraphError, parse_multigraph
from .orientations import count_acyclic, count_totally_cyclic, orientation_counts
from .poly import BivarLaurent, IntPolynomial, RealRoot, sturm_real_roots
from .tutte import tutte_dc, tutte_eval, tutte_subset

__version__ = "0.1.0"

__all__ = [
    "BivarLaurent",
    "Hypergraph",
    "HypergraphError",
    "IntPolynomial",
    "Multigraph",
    "MultigraphError",
    "ParseError",
    "RealRoot",
    "SimpleGraph",
    "attach",
    "backend_name",
    "chrom_count",
    "chrom_interpolate",
    "chrom_level",
    "chrom_partition",
    "chrom_poly",
    "clique_cut_factor",
    "complete_hypergraph",
    "count_acyclic",
    "count_totally_cyclic",
    "family_st",
    "h_apex",
    "h_edge",
    "independence_number",
    "independence_poly",
    "orientation_counts",
    "parse_hypergraph",
    "parse_multigraph",
    "sturm_real_roots",
    "tutte_dc",
    "tutte_eval",
    "tutte_subset",
    "whitney_coeffs",
]
