"""Exact-arithmetic toolkit for subalgebras of the full matrix algebra.

Thin convenience layer over the compiled core: algebras move across the
boundary as exact fraction strings or as the same JSON documents the CLI
reads and writes.
"""

import json

try:
    from ._subalg import (  # wheel layout: module installed inside the package
        Algebra,
        ToolkitError,
        classify_gamma,
        classify_omega,
        cli,
        gamma_check,
        recognize_max_nonunital,
        recognize_parabolic,
        reverify,
        run_suite_json,
        suite_ids,
    )
except ImportError:  # dev layout: module on PYTHONPATH next to the build tree
    from _subalg import (
        Algebra,
        ToolkitError,
        classify_gamma,
        classify_omega,
        cli,
        gamma_check,
        recognize_max_nonunital,
        recognize_parabolic,
        reverify,
        run_suite_json,
        suite_ids,
    )

__all__ = [
    "Algebra",
    "ToolkitError",
    "classify_gamma",
    "classify_omega",
    "cli",
    "gamma_check",
    "recognize_max_nonunital",
    "recognize_parabolic",
    "reverify",
    "run_suite",
    "run_suite_json",
    "suite_ids",
]


def run_suite(suite, n=3, trials=200, seed=0, bound=3, field="Q"):
    """Run one verification suite and return the report as a dict."""
    return json.loads(run_suite_json(suite, n, trials, seed, bound, field))
