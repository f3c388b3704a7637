"""
gradedargs - Preferential reasoning over many-valued labellings of weighted argumentation graphs.

Builds Σ, the set of labellings of a weighted (bipolar) argumentation graph admitted
by the coherent, faithful or φ-coherent semantics over the truth set
C_n = {0, 1/n, ..., 1}, and answers questions about it:
- graded implications, plain (``A -> B >= 1/2``) or defeasible (``T(A) -> B >= 1/2``),
  and boolean combinations of them
- probabilities of formulas as fuzzy events over a distribution on Σ

Usage:
    from gradedargs import (
        GOEDEL, PreferentialInterpretation, SemanticsChoice, build_graph,
        check_graded, enumerate_labellings,
    )
    from gradedargs.query_dsl import parse_queries

    graph = build_graph(["A", "B"], [("A", "B", 2.0)])
    sigma = enumerate_labellings(graph, 2, SemanticsChoice.phi_coherent())
    len(sigma)  # 3

Command line:
    gradedargs run --graph g.graph --queries q.queries --n 2
"""

import logging

__version__ = "0.1.0"

from .dsl_error import BoundOutOfRangeError as BoundOutOfRangeError
from .dsl_error import DslError as DslError
from .dsl_error import DslSyntaxError as DslSyntaxError
from .dsl_error import NestedTypicalityError as NestedTypicalityError
from .enumeration import LabellingSet as LabellingSet
from .enumeration import SizeLimitExceededError as SizeLimitExceededError
from .enumeration import brute_force as brute_force
from .enumeration import enumerate_labellings as enumerate_labellings
from .enumeration import search_order as search_order
from .formula import And as And
from .formula import Arg as Arg
from .formula import Bot as Bot
from .formula import Formula as Formula
from .formula import Impl as Impl
from .formula import LabelAtom as LabelAtom
from .formula import Neg as Neg
from .formula import Or as Or
from .formula import Top as Top
from .formula import Typ as Typ
from .formula import render as render
from .graph import Edge as Edge
from .graph import WeightedGraph as WeightedGraph
from .graph import build_graph as build_graph
from .graph import predecessors as predecessors
from .graph_dsl import parse_graph as parse_graph
from .graph_dsl import serialize_graph as serialize_graph
from .graph_error import DuplicateArgumentError as DuplicateArgumentError
from .graph_error import DuplicateEdgeError as DuplicateEdgeError
from .graph_error import GraphError as GraphError
from .graph_error import UnknownArgumentError as UnknownArgumentError
from .graph_error import UnknownEndpointError as UnknownEndpointError
from .graph_error import ZeroOrNonfiniteWeightError as ZeroOrNonfiniteWeightError
from .labelling import Labelling as Labelling
from .logic import GOEDEL as GOEDEL
from .logic import LOGICS as LOGICS
from .logic import LUKASIEWICZ as LUKASIEWICZ
from .logic import LogicSystem as LogicSystem
from .logic import MissingTypicalityContextError as MissingTypicalityContextError
from .logic import closure_check as closure_check
from .logic import eval_plain as eval_plain
from .missing_dependency_error import MissingDependencyError as MissingDependencyError
from .phi import ExplicitTable as ExplicitTable
from .phi import PhiSpec as PhiSpec
from .phi import SigmoidNearest as SigmoidNearest
from .phi import StepThreshold as StepThreshold
from .phi import apply_phi as apply_phi
from .preferential import BoundKind as BoundKind
from .preferential import GradedImplication as GradedImplication
from .preferential import LabellingNotInSigmaError as LabellingNotInSigmaError
from .preferential import PreferentialError as PreferentialError
from .preferential import PreferentialInterpretation as PreferentialInterpretation
from .preferential import QueryAnd as QueryAnd
from .preferential import QueryImplies as QueryImplies
from .preferential import QueryLeaf as QueryLeaf
from .preferential import QueryNot as QueryNot
from .preferential import QueryOr as QueryOr
from .preferential import TypicalityInPreferenceFormulaError as TypicalityInPreferenceFormulaError
from .preferential import Verdict as Verdict
from .preferential import check_graded as check_graded
from .preferential import eval_query as eval_query
from .preferential import implication_degree as implication_degree
from .preferential import preferred_labellings as preferred_labellings
from .preferential import prefers as prefers
from .preferential import typicality_value as typicality_value
from .probability import ConditioningOnNullEventError as ConditioningOnNullEventError
from .probability import Distribution as Distribution
from .probability import EmptySigmaError as EmptySigmaError
from .probability import InvalidDistributionError as InvalidDistributionError
from .probability import ProbabilityError as ProbabilityError
from .probability import conditional_probability as conditional_probability
from .probability import fuzzy_size as fuzzy_size
from .probability import load_distribution as load_distribution
from .probability import probability as probability
from .query_dsl import parse_queries as parse_queries
from .semantics import SemanticsChoice as SemanticsChoice
from .semantics import SemanticsKind as SemanticsKind
from .semantics import is_coherent as is_coherent
from .semantics import is_faithful as is_faithful
from .semantics import is_phi_coherent as is_phi_coherent
from .semantics import weight_of as weight_of
from .session import Report as Report
from .session import Session as Session
from .session import run_session as run_session
from .truth_degree import ResolutionMismatchError as ResolutionMismatchError
from .truth_degree import TruthDegree as TruthDegree
from .truth_degree import TruthDegreeError as TruthDegreeError

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "GOEDEL",
    "LOGICS",
    "LUKASIEWICZ",
    "And",
    "Arg",
    "Bot",
    "BoundKind",
    "BoundOutOfRangeError",
    "ConditioningOnNullEventError",
    "Distribution",
    "DslError",
    "DslSyntaxError",
    "DuplicateArgumentError",
    "DuplicateEdgeError",
    "Edge",
    "EmptySigmaError",
    "ExplicitTable",
    "Formula",
    "GradedImplication",
    "GraphError",
    "Impl",
    "InvalidDistributionError",
    "LabelAtom",
    "Labelling",
    "LabellingNotInSigmaError",
    "LabellingSet",
    "LogicSystem",
    "MissingDependencyError",
    "MissingTypicalityContextError",
    "Neg",
    "NestedTypicalityError",
    "Or",
    "PhiSpec",
    "PreferentialError",
    "PreferentialInterpretation",
    "ProbabilityError",
    "QueryAnd",
    "QueryImplies",
    "QueryLeaf",
    "QueryNot",
    "QueryOr",
    "Report",
    "ResolutionMismatchError",
    "SemanticsChoice",
    "SemanticsKind",
    "Session",
    "SigmoidNearest",
    "SizeLimitExceededError",
    "StepThreshold",
    "Top",
    "TruthDegree",
    "TruthDegreeError",
    "Typ",
    "TypicalityInPreferenceFormulaError",
    "UnknownArgumentError",
    "UnknownEndpointError",
    "Verdict",
    "WeightedGraph",
    "ZeroOrNonfiniteWeightError",
    "apply_phi",
    "brute_force",
    "build_graph",
    "check_graded",
    "closure_check",
    "conditional_probability",
    "enumerate_labellings",
    "eval_plain",
    "eval_query",
    "fuzzy_size",
    "implication_degree",
    "load_distribution",
    "parse_graph",
    "parse_queries",
    "predecessors",
    "preferred_labellings",
    "prefers",
    "probability",
    "render",
    "run_session",
    "search_order",
    "serialize_graph",
    "typicality_value",
    "weight_of",
]
