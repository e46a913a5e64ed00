"""Exact rational feasibility for systems of strict linear inequalities.

Strictness is handled by adjoining one margin variable: each constraint
``a·x < r`` becomes ``a·x + e ≤ r``, and the system is satisfiable strictly
iff the weak system admits a solution with ``e > 0``.  Variables are
eliminated by Fourier–Motzkin over ``fractions.Fraction``; a witness is
recovered by choosing the margin first and back-substituting through the
recorded elimination stages in reverse.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

# A constraint is (coeffs, rhs) meaning sum(coeffs[i] * x[i]) <= rhs.
Constraint = tuple


def _normalize(coeffs: tuple, rhs: Fraction) -> Optional[Constraint]:
    """Scale by the first nonzero coefficient's magnitude (a positive
    number, so the inequality is preserved); constant rows return None."""
    for c in coeffs:
        if c != 0:
            scale = abs(c)
            return (tuple(x / scale for x in coeffs), rhs / scale)
    return None


def _eliminate(constraints: set, k: int) -> Optional[set]:
    """Project out variable ``k``; None signals a violated constant row."""
    pos, neg, rest = [], [], set()
    for coeffs, rhs in constraints:
        if coeffs[k] > 0:
            pos.append((coeffs, rhs))
        elif coeffs[k] < 0:
            neg.append((coeffs, rhs))
        else:
            rest.add((coeffs, rhs))
    for pc, pr in pos:
        for nc, nr in neg:
            coeffs = tuple(
                pcoef / pc[k] - ncoef / nc[k] for pcoef, ncoef in zip(pc, nc)
            )
            rhs = pr / pc[k] - nr / nc[k]
            norm = _normalize(coeffs, rhs)
            if norm is None:
                if rhs < 0:
                    return None
            else:
                rest.add(norm)
    return rest


def _bounds_for(constraints, k: int, values: dict):
    """Lower/upper bounds on variable ``k`` given already-chosen values for
    every other variable appearing with a nonzero coefficient."""
    lo, hi = None, None
    for coeffs, rhs in constraints:
        ck = coeffs[k]
        if ck == 0:
            continue
        residual = rhs - sum(
            c * values[i] for i, c in enumerate(coeffs) if c != 0 and i != k
        )
        bound = residual / ck
        if ck > 0:
            hi = bound if hi is None else min(hi, bound)
        else:
            lo = bound if lo is None else max(lo, bound)
    return lo, hi


def solve_strict(
    nvars: int, constraints: Iterable[Constraint]
) -> Optional[tuple]:
    """A rational witness for ``coeffs · x < rhs`` on every constraint, or
    None when the strict system is infeasible.

    Each constraint is ``(coeffs, rhs)`` with ``len(coeffs) == nvars``;
    entries may be ints or Fractions.  The witness is a tuple of ``nvars``
    Fractions satisfying every constraint strictly.

    >>> solve_strict(1, [((1,), 1), ((-1,), 0)])
    (Fraction(1, 2),)
    >>> solve_strict(1, [((1,), 0), ((-1,), 0)]) is None
    True
    """
    margin = nvars  # index of the adjoined margin variable
    system = set()
    for coeffs, rhs in constraints:
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != nvars:
            raise ValueError(f"expected {nvars} coefficients, got {len(coeffs)}")
        norm = _normalize(coeffs + (Fraction(1),), Fraction(rhs))
        system.add(norm)

    # Eliminate the original variables, cheapest first, keeping each
    # pre-elimination stage for back-substitution.
    stages = []
    remaining = list(range(nvars))
    while remaining:
        def cost(k):
            p = sum(1 for c, _ in system if c[k] > 0)
            m = sum(1 for c, _ in system if c[k] < 0)
            return p * m if (p and m) else p + m
        k = min(remaining, key=cost)
        remaining.remove(k)
        stages.append((k, system))
        result = _eliminate(system, k)
        if result is None:
            return None
        system = result

    # Only the margin variable is left; it never acquires a negative
    # coefficient, so it has upper bounds and constant rows only.
    hi = None
    for coeffs, rhs in system:
        ck = coeffs[margin]
        if ck == 0:
            if rhs < 0:
                return None
        else:
            bound = rhs / ck
            hi = bound if hi is None else min(hi, bound)
    if hi is not None and hi <= 0:
        return None
    values = {margin: Fraction(1) if hi is None else hi / 2}

    # Reverse back-substitution: each stage's system constrains its variable
    # only through variables chosen later.
    for k, stage in reversed(stages):
        lo, up = _bounds_for(stage, k, values)
        if lo is None and up is None:
            values[k] = Fraction(0)
        elif lo is None:
            values[k] = up - 1
        elif up is None:
            values[k] = lo + 1
        else:
            values[k] = (lo + up) / 2
    return tuple(values[i] for i in range(nvars))


def check_strict(
    witness: Sequence, constraints: Iterable[Constraint]
) -> bool:
    """True iff the witness satisfies every ``coeffs · x < rhs`` strictly."""
    for coeffs, rhs in constraints:
        total = sum(Fraction(c) * Fraction(x) for c, x in zip(coeffs, witness))
        if not total < Fraction(rhs):
            return False
    return True
