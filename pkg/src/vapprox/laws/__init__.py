"""Property-based law checking over generated instances."""

from .registry import LAWS, OBSERVATION, THEOREM, Law, Verdict, select
from .runner import LawReport, LawResult, run_law, run_laws

__all__ = ["LAWS", "OBSERVATION", "THEOREM", "Law", "Verdict", "select",
           "LawReport", "LawResult", "run_law", "run_laws"]
