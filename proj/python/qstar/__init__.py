"""Exact verification of the dual quotient bundle ideal on G(2,n)."""

import json

from ._core import (
    QstarError,
    analyze_k6_lift,
    associahedron,
    bundle_ideal,
    check_vanishing,
    degree_check,
    grassmannian_ideal,
    is_reflexive,
    kn_complex,
    lower_facets,
    normal_form,
    normal_form_lemma,
    pfaffian,
    quadric_f,
    run_cli,
    t1_slice,
    t1_window,
    verify_initial_ideal,
    verify_syzygies,
)


def run_json(*args):
    """Runs a command with --json and returns (exit code, parsed report)."""
    code, out, err = run_cli(["--json", *map(str, args)])
    if code == 2:
        raise QstarError(err.strip())
    return code, json.loads(out)


__all__ = [
    "QstarError",
    "analyze_k6_lift",
    "associahedron",
    "bundle_ideal",
    "check_vanishing",
    "degree_check",
    "grassmannian_ideal",
    "is_reflexive",
    "kn_complex",
    "lower_facets",
    "normal_form",
    "normal_form_lemma",
    "pfaffian",
    "quadric_f",
    "run_cli",
    "run_json",
    "t1_slice",
    "t1_window",
    "verify_initial_ideal",
    "verify_syzygies",
]
