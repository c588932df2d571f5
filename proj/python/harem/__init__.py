"""Computable perfect (1,k)-matchings and paradoxical decompositions."""

from ._harem import (
    BallBudgetExceeded,
    CEHHCViolation,
    Engine,
    Graph,
    HaremError,
    ParseError,
    SizeGuardError,
    ball,
    brute_force_harem,
    check_hall_harem,
    classic_rows,
    folner_search,
    index_to_word,
    inv,
    mul,
    reduce,
    run_cli,
    solve_harem,
    verify_classic,
    verify_matching,
    wbt_free,
    word_to_index,
)

__all__ = [
    "BallBudgetExceeded",
    "CEHHCViolation",
    "Engine",
    "Graph",
    "HaremError",
    "ParseError",
    "SizeGuardError",
    "ball",
    "brute_force_harem",
    "check_hall_harem",
    "classic_rows",
    "folner_search",
    "index_to_word",
    "inv",
    "mul",
    "reduce",
    "run_cli",
    "solve_harem",
    "verify_classic",
    "verify_matching",
    "wbt_free",
    "word_to_index",
]
