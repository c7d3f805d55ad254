"""Insertion shapes of random words over bounded alphabets.

The package implements the insertion correspondence sending a word to a
pair of same-shape tableaux (an increasing insertion tableau and a standard
set-valued recording tableau), the jeu-de-taquin style rectification that
computes the same insertion tableau through switch operators, the exact
shape measures these induce on Young diagrams, and a reproducible Monte
Carlo harness for the induced LIS/LDS statistics across alphabet-size
regimes, plus patience sorting with ties.
"""

__version__ = "0.1.0"

from .words import (
    Word,
    Permutation,
    lis,
    lds,
    lis_end_positions,
    reverse,
    random_word,
    hecke_product,
    coxeter_length,
    longest_element,
)
from .tableaux import (
    YoungDiagram,
    IncreasingTableau,
    SetValuedStandardTableau,
    SemistandardTableau,
    conjugate,
    corners,
    staircase,
    superstandard,
    reading_word,
    count_increasing,
    count_set_valued_standard,
    count_standard,
    count_semistandard,
)
from .insertion import (
    HeckePair,
    InsertionStep,
    hecke,
    hecke_insert,
    hecke_inverse,
    heckeshape,
    reverse_hecke,
    rsk_shape,
    schensted_shape,
)
from .kjdt import (
    MixedTableau,
    switch,
    standard_sequence,
    is_viable,
    k_infusion,
    k_rectify,
)
from .measures import (
    ExactDistribution,
    exact_plancherel_hecke,
    sample_plancherel_hecke,
    expected_lis_exact,
    prob_lis_exact,
    plancherel_rsk_prob,
    plancherel_prob,
    markov_transition,
    markov_sample_path,
    gamma_estimate,
)
from .asymptotics import (
    SweepConfig,
    SweepResult,
    sweep,
    sweep_at,
    rescale,
    plancherel_curve,
    line_curve,
    sup_norm_distance,
    beta,
    erdos_szekeres_bound,
    check_es,
    staircase_check,
)
from .patience import PileState, play_greedy, pile_tops, pile_count, deck_simulation
