"""invword: word problems for inverse monoids and their relatives.

Modules by theme:

- :mod:`invword.words` - alphabets, free reduction, formal inverses,
  idempotent words.
- :mod:`invword.munn` - the free inverse monoid via birooted trees,
  plus a brute-force rewriting oracle.
- :mod:`invword.stephen` - budgeted, sound-only equality semi-decision
  for finitely presented inverse monoids; right units and prefix
  generators.
- :mod:`invword.raag` - right-angled Artin groups: canonical normal
  forms, parabolic membership.
- :mod:`invword.hnn` - HNN extensions of such groups, pinch reduction,
  the path-graph instance and its one-relator group.
- :mod:`invword.freeprod` - free products with an infinite cyclic
  factor, reduced sequences, bounded submonoid searches.
- :mod:`invword.construct` - the compiler from submonoid membership
  queries to right-invertibility queries.
- :mod:`invword.acceptance` - the desk-scale verification suite.
"""

from .errors import (
    BudgetExceeded,
    InvwordError,
    NotConstructionShape,
    NotSpecialPresentation,
    OracleMissing,
    ParseError,
    StableLetterClash,
    UnknownVertex,
)
from .words import (
    EPSILON,
    Alphabet,
    Letter,
    Word,
    alphabet,
    formal_inverse,
    idempotent_word,
    is_idempotent_word,
    parse_word,
    prefixes,
    reduce,
    word,
)
from .wordgraph import WordGraph, fold, fold_graph
from .munn import MunnTree, fim_equal, fim_leq, munn_tree, vagner_oracle
from .stephen import (
    Approximant,
    Budget,
    GroupPresentation,
    InvPresentation,
    Verdict,
    expand_round,
    initial_approximant,
    is_right_invertible,
    max_group_image,
    prefix_generators,
    stephen_equal,
)
from .raag import (
    P4,
    NormalForm,
    SimpGraph,
    induced_subgraph,
    parabolic_membership,
    path_graph,
    raag_equal,
    raag_normal_form,
)
from .hnn import (
    BrittonForm,
    HnnPresentation,
    britton_reduce,
    hnn_equal,
    hnn_is_trivial,
    one_relator_wp,
    p4_instance,
    theta_embed,
    verify_embedding_sample,
)
from .freeprod import (
    FiniteGroup,
    FreeGroupOracle,
    FreeProdElement,
    FreeProduct,
    GroupOracle,
    fp_length,
    fp_multiply,
    ideal_complement_check,
    key_claim_check,
    submonoid_member_bounded,
    theta_to_fgt,
)
from .construct import (
    ConstructionInstance,
    QueryBundle,
    build_presentation,
    equivalent_presentations,
    forward_certificate,
    free_group_wp,
    free_instance,
    group_triviality_oracle,
    headline_instance,
    max_group_consistency,
    membership_query,
)

__version__ = "0.1.0"
