"""Smoke test for the Python bindings.

Build and install first, for example:

    maturin build --release -m crates/py/Cargo.toml -o dist
    pip install dist/chromratio-*.whl
    python python/smoke_test.py
"""

import json
import sys

import chromratio
from chromratio import Graph


def check(cond, what):
    if not cond:
        print(f"FAIL {what}")
        sys.exit(1)
    print(f"ok   {what}")


def main():
    c5 = Graph.cycle(5)
    check(c5.to_graph6() == "Dhc", "graph6 of C5")
    check(Graph.from_graph6("Dhc") == c5, "graph6 round trip")
    check(c5.clique_number() == 2 and c5.independence_number() == 2, "C5 invariants")
    chi = c5.chromatic_bounds()
    check(chi["exact"] and chi["upper"] == 3, "chi(C5) = 3")

    grotzsch = Graph.mycielski_tower(2)
    check(grotzsch.n == 11 and grotzsch.chromatic_bounds()["upper"] == 4, "Grotzsch graph")
    greedy = Graph.paley(13).greedy_coloring(2)
    check(greedy["stats"]["colors_used"] <= greedy["bound"], "greedy bound on Paley(13)")

    p = Graph.random(9, 0.5, seed=4)
    q = Graph(9, [(p.n - 1 - u, p.n - 1 - v) for u, v in p.edges()])
    check(p.canonical() == q.canonical(), "canonical form ignores labels")

    r34 = chromratio.ramsey_exact_small(3, 4)
    check(r34["exact"] and r34["lower"] == 9, "R(3,4) = 9")
    derived = json.loads(chromratio.ramsey_table(derive=True))
    r44 = next(r for r in derived if (r["s"], r["t"]) == (4, 4))
    check((r44["lower"], r44["upper"]) == (18, 18), "R(4,4) = 18 from computation")

    report = chromratio.maximize_phi()
    check(3.7190 < report["phi_max_sq"] < 3.71943, "phi^2 window")
    check(abs(chromratio.diagonal_constant() - 3.70831) < 1e-4, "diagonal constant")
    check(abs(chromratio.diagonal_constant(0.0) - 4.0) < 1e-9, "delta = 0 gives 4")

    f5 = chromratio.f_exact(5)
    check((f5["chi"], f5["omega"]) == (3, 2) and f5["exhaustive"], "f(5) = 3/2")
    f11 = chromratio.f_lower_search(11, strategy="constructions")
    check(f11["chi"] >= 2 * f11["omega"], "f(11) >= 2")
    check(chromratio.verify_f_table() == 8, "shipped f-table verifies")

    verdicts = chromratio.check_weak_mult_rdc()
    check(all(v["status"] != "violated" for v in verdicts), "weak multiplicative form holds")
    rates = chromratio.empirical_rates()
    check(rates["max_diagonal_rate"][1] == 4, "largest diagonal rate at R(4,4)")
    check(chromratio.min_product_binom(70) == (8, 16), "central binomial rule at 70")

    try:
        Graph.from_graph6("not graph6")
    except ValueError:
        print("ok   bad graph6 raises ValueError")
    else:
        check(False, "bad graph6 raises ValueError")


if __name__ == "__main__":
    main()
