"""Exact computations in extended loop braid groups via their action on free groups."""

from .braid import (
    BraidWord,
    GenLetter,
    Kind,
    RelationReport,
    StrandIndexError,
    WordSyntaxError,
    format_word,
    invert_word,
    is_pure,
    nu,
    parse_word,
    permutation,
    random_word,
    relation_suite,
    sigma_parity,
    tau_normal_form,
    word_equal,
)
from .conjugacy import (
    Conjugate,
    Distinguished,
    SearchConfig,
    Unknown,
    check_certificate,
    normal_form_conjugator,
    refute,
    search_witness,
)
from .freegroup import (
    FreeAut,
    FreeWord,
    ImageNotConjugateOfGenerator,
    NotAPermutation,
    PCForm,
    SignedPerm,
    abelianize,
    apply,
    aut_equal,
    compose,
    concat,
    extract_pc_form,
    invert,
    reduce,
)
from .markov import (
    ClosureInvariant,
    NotClosable,
    NotDestabilizable,
    StabKind,
    closure_invariants,
    conjugate,
    destabilize,
    is_closable,
    stabilize,
)

__version__ = "0.1.0"
