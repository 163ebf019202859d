"""Equivalent independent axiomatizations of finite propositional theories."""

__version__ = "0.1.0"

from .boolfunc import BoolFunc, canonicalize, essential_symbols, forget
from .errors import (
    CertificationError,
    DisjointnessError,
    HypothesisViolationError,
    IndependizeError,
    NotEntailedError,
    ParseError,
    PartitionError,
    ResourceLimitError,
    SizeError,
    UndefinedSymbolError,
)
from .formula import (
    FALSE,
    TRUE,
    And,
    Const,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Theory,
    Valuation,
    Var,
    conjoin,
    evaluate,
    symbols,
    to_text,
)
from .genfuzz import GenConfig, gen_entailed_pair, gen_theory, shrink
from .interpolation import Interpolant, check_interpolant, interpolate
from .oracle import (
    Certificate,
    Oracle,
    entails,
    equivalent_theories,
    independent,
    is_independent,
    satisfiable,
    valid,
)
from .parser import parse, parse_theory
from .partition import (
    PartitionState,
    TransformedSets,
    build_partition,
    build_transformed,
    divides,
    strictly_divides,
)
from .pipelines import (
    CertifiedResult,
    TarskiChain,
    certify,
    independize,
    reznikoff_merge,
    reznikoff_pipeline,
    tarski_chain,
    tarski_pipeline,
    tarski_transform,
)
from .starify import LayeredTheory, check_star, layered, starify
