"""Built-in reproduction scenarios.

Each scenario is a script exercising one of the worked families: the
toric-surface-against-a-line intersection, the coordinate-axes colon
obstruction, and the two structural criteria.  `run_scenario` drives
them through the ordinary script pipeline, so their reports carry the
same determinism guarantees as user scripts.
"""

from __future__ import annotations

from .errors import ScriptError
from .script import ReportDocument, RunOptions, parse_script, run_script

BADINTERSECT = """\
# A toric surface prime P meeting the line Q = V(T, X, Y) in F_2[T, X, Y, Z].
ring S = poly(p=2; T, X, Y, Z) / meet(ideal(T*Y - X*Z, T^2*X - Z^2, T*X^2 - Y*Z, X^3 - Y^2), ideal(T, X, Y)) with primes [ideal(T*Y - X*Z, T^2*X - Z^2, T*X^2 - Y*Z, X^3 - Y^2), ideal(T, X, Y)]
let P = ideal(T*Y - X*Z, T^2*X - Z^2, T*X^2 - Y*Z, X^3 - Y^2)
let Q = ideal(T, X, Y)
let I = ideal(Z, X - T)
check equal(meet(P, Q), ideal(T*Y - X*Z, T*X^2 - Y*Z, X^3 - Y^2, T^3*X - T*Z^2))
check equal(I + Q, ideal(T, X, Y, Z))
check equal(I + meet(P, Q), meet(I + P, I + Q))
check equal(I + meet(P, Q), ideal(Z, X - T, X*Y, X^3, Y^2))
check equal(ker(U, T; T -> T, X -> U^2, Y -> U^3, Z -> U*T), P)
check sop(I)
check member(X*Y, I)
report closedness(ideal(0), tight)
report closedness(I, tight)
report contain(I)
report structural(P, I, unmixed)
report capture(I)
"""

BADCOLON = """\
# Coordinate axes in F_2[X, Y, Z]: the zero ideal is tightly closed but not
# NE-closed, and the colon 0 : Y captures X.
ring R = poly(p=2; X, Y, Z) / ideal(X*Y, X*Z) with primes [ideal(X), ideal(Y, Z)]
let O = ideal(0)
let I = ideal(Y, X - Z)
check sop(I)
check equal(colon(O, ideal(Y)), ideal(X))
check equal(dc(O, tight), ideal(0))
check equal(dc(O, ne), ideal(X))
check member(X, dc(O, ne))
report closedness(O, tight)
report closedness(O, ne)
report capture(I)
report frobenius(O, X, Y)
report frobenius(O, X, X + Y)
report netest()
"""

CONTAIN_DEMO = """\
# A plane against a line with P + Q equal to the full coordinate ideal, so
# every system of parameters lands inside P + Q.
ring R = poly(p=2; X, Y1, Y2) / meet(ideal(X), ideal(Y1, Y2)) with primes [ideal(X), ideal(Y1, Y2)]
let I = ideal(Y1 - X, Y2)
check sop(I)
check equal(ideal(X) + ideal(Y1, Y2), ideal(X, Y1, Y2))
report contain(I)
report closedness(I, tight)
"""

CMDVR_DEMO = """\
# A Cohen-Macaulay plane P = (Y) against the line Q = (X1, X2): the
# CM-component criterion certifies without any closure computation.
ring R = poly(p=2; X1, X2, Y) / meet(ideal(Y), ideal(X1, X2)) with primes [ideal(Y), ideal(X1, X2)]
let P = ideal(Y)
let I = ideal(X1 - Y, X2)
check sop(I)
report structural(P, I)
report contain(I)
"""

SCENARIOS = {
    "badintersect": BADINTERSECT,
    "badcolon": BADCOLON,
    "contain-demo": CONTAIN_DEMO,
    "cmdvr-demo": CMDVR_DEMO,
}


def scenario_script(name: str) -> str:
    try:
        return SCENARIOS[name]
    except KeyError:
        known = ", ".join(sorted(SCENARIOS))
        raise ScriptError(f"unknown scenario {name!r}; available: {known}") from None


def run_scenario(name: str, options: RunOptions = RunOptions()) -> ReportDocument:
    """Parse and evaluate a built-in scenario under the given options."""
    script = parse_script(scenario_script(name))
    return run_script(script, options, scenario=name)
