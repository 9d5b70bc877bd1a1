#!/usr/bin/env python3
"""Minimal DIMACS front end for the solvers bundled with python-sat.

Usage: pysat_solve.py [--solver NAME] FILE.cnf

Prints the usual `s SATISFIABLE` / `s UNSATISFIABLE` line plus `v` lines and
exits with 10 / 20, so it can stand in for any competition-style solver.
"""

import argparse
import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--solver", default="cadical195")
    parser.add_argument("cnf")
    args = parser.parse_args()

    formula = CNF(from_file=args.cnf)
    with Solver(name=args.solver, bootstrap_with=formula.clauses) as solver:
        if not solver.solve():
            print("s UNSATISFIABLE")
            return 20
        model = solver.get_model() or []
        print("s SATISFIABLE")
        line = []
        for lit in model:
            line.append(str(lit))
            if len(line) == 20:
                print("v " + " ".join(line))
                line = []
        print("v " + " ".join(line + ["0"]))
        return 10


if __name__ == "__main__":
    sys.exit(main())
