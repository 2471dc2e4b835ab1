"""Accepting-state complexity of reversal on permutation automata.

Builds the k-subset witness family, runs the reverse subset construction,
minimizes and measures accepting-state complexity, and machine-verifies the
exact reversal spectrum at desk scale.
"""

from .dfa import (
    Dfa,
    Word,
    accepts,
    apply_word,
    is_permutation_automaton,
    reachable_states,
)
from .errors import CapacityError, NotInGroupError
from .minimize import are_equivalent, asc, distinguishing_word, minimize
from .perms import (
    KSubset,
    Perm,
    act_on_subset,
    colex_rank,
    colex_unrank,
    cycle_perm,
    identity_perm,
    ksubsets,
    orbit,
    perm_compose,
    perm_from_word,
    perm_inverse,
    perm_order,
    synthesize_word,
    transposition_perm,
)
from .reversal import (
    SubsetState,
    finals_mask,
    mask_states,
    reverse_dfa,
    reverse_step,
    reverse_subsets,
    reverse_word,
    subset_mask,
)
from .spectrum import (
    MagicProbeReport,
    SpectrumReport,
    SpectrumRow,
    asc_pair,
    magic_one_probe,
    random_pfa,
    spectrum_point,
    spectrum_table,
    trivial_rows,
)
from .textio import (
    ParseError,
    emit_dfa,
    emit_dot,
    parse_dfa,
    report_to_json,
    word_from_str,
    word_to_str,
)
from .witness import (
    Star,
    StarClassification,
    WitnessParams,
    WitnessReport,
    apply_star_labels,
    build_witness,
    classify_reverse_states,
    star_label,
    star_members,
    subset_label,
    verify_witness,
)

__version__ = "0.1.0"
