"""Coplactic crystal operators on shifted semistandard tableaux.

Words and tableaux over the alphabet 1' < 1 < 2' < 2 < ... < n' < n, the
operator families F_i, E_i, F_i', E_i' defined through lattice walks and
critical substrings, the resulting edge-labeled weighted crystal graphs,
a mechanical checker for the local axioms, and Schur-Q-positive expansion
of skew crystals via highest-weight enumeration.
"""

from .axioms import (
    ALL_AXIOMS,
    AXIOM_IDS,
    CheckReport,
    DeltaPair,
    Violation,
    check,
    check_all,
    delta,
    delta_dual,
    first_violation,
)
from .errors import (
    BrokenSemistandard,
    InvalidIndex,
    MalformedGraph,
    MissingArrow,
    NotAString,
    NotContained,
    NotStrict,
    NotStrictWeight,
    NotUnique,
)
from .expansion import (
    Expansion,
    ExpansionReport,
    Polynomial,
    expand,
    genfun,
    genfun_weighted,
    schur_P,
    schur_Q,
    verify_expansion,
)
from .graph import (
    CrystalGraph,
    GraphEdge,
    GraphVertex,
    StringShape,
    StringStats,
    build_graph,
    classify_string,
    component_isomorphic,
    components,
    export_dot,
    export_json,
    highest_weight,
    import_json,
    string_stats,
)
from .ops import (
    CriticalMatch,
    OpKind,
    Walk,
    alternate_E2prime,
    apply,
    apply_to_tableau,
    final_critical_substring,
    lattice_walk,
    primed_by_standardization,
)
from .tableaux import (
    ShiftedTableau,
    SkewShape,
    StrictPartition,
    enumerate_tableaux,
    is_special,
    make_skew_shape,
    parse_tableau,
    reading_word,
    rows_from_strings,
    strict_partitions,
)
from .words import (
    Letter,
    RawWord,
    StandardWord,
    WeightVector,
    Word,
    canonicalize,
    eta,
    representatives,
    standardize,
    weight,
)

__all__ = [name for name in dir() if not name.startswith("_")]
