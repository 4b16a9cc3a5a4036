"""Solver routing and solve reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Optional

from .approx_tree import solve_tree_approx
from .dispersal import Dispersal, first_violation
from .dp import DEFAULT_DEGREE_CAP, dp_solve
from .errors import CapExceededError, UnsupportedInstanceError
from .graph import Edge, Graph, RequestSet, build_request_graph, classify_structure
from .oracle import brute_force_mcd
from .steiner import DEFAULT_TERMINAL_CAP, solve_star
from .treegraph import solve_treegraph

SOLVERS = ("auto", "dp", "treegraph", "approx", "star", "oracle")


class SolverBug(AssertionError):
    """A solver returned a dispersal that fails the feasibility check."""


def route(g: Graph, r: RequestSet, degree_cap: int = DEFAULT_DEGREE_CAP) -> str:
    """Pick a solver from the shapes of G and H_R alone."""
    if classify_structure(g).is_tree:
        return "treegraph"
    if len(r) == 0:
        return "star"
    shape = classify_structure(build_request_graph(r).graph)
    if shape.kind == "star":
        return "star"
    if shape.kind == "tree":
        return "dp" if shape.max_degree <= degree_cap else "approx"
    raise UnsupportedInstanceError(
        f"unsupported instance class: graph is not a tree and requests form a {shape.kind}")


@dataclass
class SolveReport:
    solver: str
    dispersal: Dispersal
    feasible: bool
    wall_time: float
    violated: Optional[Edge] = None
    oracle_cost: Optional[int] = None

    @property
    def cost(self) -> int:
        return self.dispersal.cost()

    @property
    def gap(self) -> Optional[int]:
        return None if self.oracle_cost is None else self.cost - self.oracle_cost

    def to_record(self, timing: bool = True) -> dict:
        rec = {
            "solver": self.solver,
            "cost": self.cost,
            "feasible": self.feasible,
            "oracle_cost": self.oracle_cost,
            "gap": self.gap,
            "dispersal": {str(v): [list(e) for e in sorted(es)]
                          for v, es in self.dispersal.local.items()},
        }
        if timing:
            rec["wall_time"] = round(self.wall_time, 6)
        return rec

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_record(timing), separators=(",", ":"))

    def to_text(self) -> str:
        lines = [f"solver: {self.solver}", f"cost: {self.cost}",
                 f"feasible: {'yes' if self.feasible else 'no'}"]
        if self.violated is not None:
            lines.append(f"violated request: {self.violated[0]} {self.violated[1]}")
        if self.oracle_cost is not None:
            lines.append(f"oracle cost: {self.oracle_cost} (gap {self.gap})")
        lines.append(f"wall time: {self.wall_time:.6f}s")
        for v, es in self.dispersal.local.items():
            held = " ".join(f"{a}-{b}" for a, b in sorted(es))
            lines.append(f"  D_{v} ({len(es)}): {held}")
        return "\n".join(lines)


def run_solver(name: str, g: Graph, r: RequestSet, degree_cap: int = DEFAULT_DEGREE_CAP,
               star_cap: int = DEFAULT_TERMINAL_CAP, mode: str = "auto") -> Dispersal:
    if name == "treegraph":
        if not classify_structure(g).is_tree:
            raise UnsupportedInstanceError("treegraph solver needs a tree host graph")
        return solve_treegraph(g, r)
    if name == "star":
        return solve_star(g, r, mode, star_cap)
    if name == "dp":
        return dp_solve(g, r, degree_cap)
    if name == "approx":
        return solve_tree_approx(g, r, mode, cap=star_cap)
    if name == "oracle":
        return brute_force_mcd(g, r).witness
    raise ValueError(f"unknown solver {name!r}")


def solve(g: Graph, r: RequestSet, solver: str = "auto", degree_cap: int = DEFAULT_DEGREE_CAP,
          star_cap: int = DEFAULT_TERMINAL_CAP, mode: str = "auto",
          with_oracle: bool = False) -> SolveReport:
    """Run a solver and re-check its output; an infeasible result raises SolverBug."""
    name = route(g, r, degree_cap) if solver == "auto" else solver
    start = time.perf_counter()
    try:
        d = run_solver(name, g, r, degree_cap, star_cap, mode)
    except CapExceededError as exc:
        raise UnsupportedInstanceError(str(exc)) from exc
    elapsed = time.perf_counter() - start
    bad = first_violation(g, d, r)
    if bad is not None:
        raise SolverBug(f"{name} produced an infeasible dispersal (request {bad})")
    report = SolveReport(name, d, True, elapsed)
    if with_oracle:
        report.oracle_cost = brute_force_mcd(g, r).cost
    return report
