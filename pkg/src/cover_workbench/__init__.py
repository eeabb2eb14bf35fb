"""Workbench for integer covering problems.

A covering system is a finite set of arithmetic progressions a mod m whose
union is all of Z.  Given a multiset of moduli, the *integer covering
problem* asks whether residues can be chosen so that the progressions cover
Z.  This package provides:

- exact verification of covering systems (`cover`),
- number-theoretic reduction transformations and candidate-lcm enumeration
  (`reduce`),
- a 0/1 constraint-program encoding with LP and DIMACS CNF export (`model`),
- a built-in exact search that returns a verified witness or an
  exhaustive-search infeasibility certificate (`solver`),
- a command-line interface with self-checking reproduction pipelines
  (`cli`, `presets`).
"""

from cover_workbench.cover import CoveringSystem, Progression, VerificationReport, verify
from cover_workbench.model import CoverInstance, EncodedModel, build_instance, encode
from cover_workbench.reduce import CandidateReport, ModuliMultiset, enumerate_candidates
from cover_workbench.solver import Budget, SolveOutcome, solve

__all__ = [
    "Budget",
    "CandidateReport",
    "CoverInstance",
    "CoveringSystem",
    "EncodedModel",
    "ModuliMultiset",
    "Progression",
    "SolveOutcome",
    "VerificationReport",
    "build_instance",
    "encode",
    "enumerate_candidates",
    "solve",
    "verify",
]

__version__ = "0.1.0"
