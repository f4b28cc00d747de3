"""Exact commutator length in free groups and cyclic block-interchange distance."""
from .cbi import (
    BlockInterchange,
    InterchangeSequence,
    apply_interchange,
    d_cbi,
    extract_sequence,
    oracle_bfs,
    verify_sequence,
)
from .certify import exhaustive_delta_check, nu_lower_bound, nu_total
from .errors import (
    ClgenusError,
    DomainError,
    InvalidInstance,
    NotASolution,
    NotBoundary,
    NotRelated,
    OutOfBounds,
    ParseError,
    PreconditionError,
    SizeGuard,
)
from .fi import decide_cl_leq, factorize
from .genus import cl_at_most, cl_chain, cl_word, verify_certificate
from .words import Chain, CyclicWord, Word, cyclic_reduce, free_reduce, invert, parse_chain, parse_word

__version__ = "0.1.0"
