"""Invariants of quiver representations and their moduli spaces."""

import json

from ._quiverinv import (  # noqa: F401
    DomainError,
    BudgetExceeded,
    InputError,
    InternalError,
    Quiver,
    betti,
    classify_root,
    count_semistable,
    decomposition,
    euler_form,
    ext,
    hn_types,
    hom,
    is_schur,
    mass_ss,
    min_ext,
    monoid_equal,
    run_cli,
    ss_nonempty,
    two_row_series,
    word_leq,
)


def cli(*args):
    """Run a command line and return (exit code, parsed JSON output)."""
    code, out, _ = run_cli([str(a) for a in args])
    return code, json.loads(out)
