"""Indexing weighted sequences (position weight matrices).

Quick start::

    from wpmx import parse_pwm, build_index, weighted_prefix_table

    X = parse_pwm(open("seq.pwm"))
    index = build_index(X, z=4)
    index.report("aba")
"""

from .covers import CoverReport, MaxgapStructure, compute_covers, covers, shortest_covers
from .index import MatchPoint, QueryStats, WeightedIndex, build_index, finalize, trim
from .pwm import (
    PWMFormatError,
    WeightedSequence,
    format_pwm,
    generate_random,
    heavy_string,
    match_probability,
    meets_threshold,
    parse_pwm,
    validate,
)
from .suffix_tree import SuffixTreeOfTrie, build_suffix_tree, upward_label
from .trie import SolidFactorTrie, annotate_end_len, build_trie
from .widx import IndexFormatError, dumps, load, loads, save
from .wlcp import WlcpOracle, weighted_prefix_table

__version__ = "0.1.0"
