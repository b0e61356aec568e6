"""Randomized exact identity checks.

Each check draws fresh positive rationals for every free point and scalar,
evaluates both sides of an identity with exact arithmetic and compares them
with ``==``. Trial ``t`` of a check draws only from ``trial_rng(seed, t)``,
so trials can run in any order or in parallel and give the same report.

Every trial also asserts strict positivity of the values it produces.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import d6
from .d6 import (
    V1_NODES,
    V2_NODES,
    PointV1,
    PointV2,
    act_e0_v1,
    act_e0_via_sigma,
    act_e_v1,
    act_e_v2,
    build_V1,
    build_V2,
    epsilon_v1,
    epsilon_v2,
    gamma_v1,
    gamma_v2,
    k_family,
    sigma_bar,
    sigma_bar_inv,
)
from .exact_arith import DEFAULT_BOUND, format_rational, sample_positive, trial_rng
from .spin import CARTAN, SIGMA, SpinVector, apply_sigma, basis_from_signs

__all__ = [
    "ASSERTED",
    "EXPLORATORY",
    "CATALOG",
    "CheckSpec",
    "CheckReport",
    "UnknownCheck",
    "run_trial",
    "run_check",
    "run_suite",
    "resolve_suite",
]

DEFAULT_TRIALS = 100
DEFAULT_SEED = 42


class UnknownCheck(KeyError):
    pass


class _Mismatch(Exception):
    def __init__(self, case: str, lhs, rhs):
        super().__init__(case)
        self.case, self.lhs, self.rhs = case, lhs, rhs


class _NotApplicable(Exception):
    pass


def _jsonable(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (PointV1, PointV2)):
        return v.to_json()
    if isinstance(v, SpinVector):
        return v.full_json()
    if isinstance(v, d6.KFamily):
        return {k: format_rational(r) for k, r in v.as_dict().items()}
    if isinstance(v, (tuple, list)):
        return [_jsonable(u) for u in v]
    if isinstance(v, dict):
        return {k: _jsonable(u) for k, u in v.items()}
    return v


class _Trial:
    """Draws the inputs of one trial and records them for the counterexample."""

    def __init__(self, seed: int, trial: int, bound: int):
        self.rng = trial_rng(seed, trial)
        self.bound = bound
        self.inputs: dict = {}

    def _draw(self) -> Fraction:
        return sample_positive(self.rng, self.bound)

    def v1(self, name: str = "x") -> PointV1:
        p = PointV1.from_values([self._draw() for _ in range(15)])
        self.inputs[name] = p.to_json()
        return p

    def v2(self, name: str = "y") -> PointV2:
        q = PointV2.from_values([self._draw() for _ in range(15)])
        self.inputs[name] = q.to_json()
        return q

    def scalar(self, name: str = "c") -> Fraction:
        c = self._draw()
        self.inputs[name] = format_rational(c)
        return c


def _eq(case: str, lhs, rhs) -> None:
    if lhs != rhs:
        raise _Mismatch(case, lhs, rhs)


def _pos(case: str, value) -> None:
    if isinstance(value, (PointV1, PointV2)):
        ok = value.is_positive()
    elif isinstance(value, SpinVector):
        ok = len(value) == 32 and all(r > 0 for _, r in value)
    elif isinstance(value, d6.KFamily):
        ok = all(r > 0 for r in value.as_dict().values())
    else:
        ok = value > 0
    if not ok:
        raise _Mismatch(f"positivity: {case}", value, "> 0")


def _pos_point(case: str, value):
    _pos(case, value)
    return value


def _adjacent_or_commuting_pairs(nodes):
    return [(i, j) for i, j in itertools.combinations(nodes, 2)]


# -- generic axiom bodies, shared by the V1 (affine) and V2 checks ------------


def _gamma_covariance(t: _Trial, nodes, act, gamma, point) -> None:
    x = point(t)
    c = t.scalar()
    for i in nodes:
        y = _pos_point(f"e_{i}^c(x)", act(i, c, x))
        for j in nodes:
            g = gamma(j, x)
            _pos(f"gamma_{j}(x)", g)
            _eq(f"gamma_{j}(e_{i}^c x) = c^a({i},{j}) gamma_{j}(x)", gamma(j, y), c ** CARTAN[i][j] * g)


def _verma(t: _Trial, nodes, act, point) -> None:
    x = point(t)
    c1, c2 = t.scalar("c1"), t.scalar("c2")
    for i, j in _adjacent_or_commuting_pairs(nodes):
        a = CARTAN[i][j]
        if a == 0:
            lhs = act(i, c1, act(j, c2, x))
            rhs = act(j, c2, act(i, c1, x))
            _eq(f"e_{i}^c1 e_{j}^c2 = e_{j}^c2 e_{i}^c1", lhs, rhs)
        else:
            lhs = act(i, c1, act(j, c1 * c2, act(i, c2, x)))
            rhs = act(j, c2, act(i, c1 * c2, act(j, c1, x)))
            _eq(f"e_{i}^c1 e_{j}^c1c2 e_{i}^c2 = e_{j}^c2 e_{i}^c1c2 e_{j}^c1", lhs, rhs)
        _pos(f"Verma pair ({i},{j})", lhs)


def _epsilon_laws(t: _Trial, nodes, act, epsilon, point) -> None:
    x = point(t)
    c = t.scalar()
    for i in nodes:
        e = epsilon(i, x)
        _pos(f"epsilon_{i}(x)", e)
        _eq(f"epsilon_{i}(e_{i}^c x) = epsilon_{i}(x)/c", epsilon(i, act(i, c, x)), e / c)
        for j in nodes:
            if j != i and CARTAN[i][j] == 0:
                _eq(f"epsilon_{i}(e_{j}^c x) = epsilon_{i}(x)", epsilon(i, act(j, c, x)), e)


def _action_law(t: _Trial, nodes, act, point) -> None:
    x = point(t)
    c1, c2 = t.scalar("c1"), t.scalar("c2")
    for i in nodes:
        _eq(f"e_{i}^1 = id", act(i, Fraction(1), x), x)
        lhs = act(i, c1, act(i, c2, x))
        _eq(f"e_{i}^c1 e_{i}^c2 = e_{i}^(c1 c2)", lhs, act(i, c1 * c2, x))
        _pos(f"e_{i}^c1 e_{i}^c2 x", lhs)


def _v1(t: _Trial) -> PointV1:
    return t.v1()


def _v2(t: _Trial) -> PointV2:
    return t.v2()


# -- the catalog --------------------------------------------------------------


def check_axiom_gamma_covariance(t: _Trial) -> None:
    _gamma_covariance(t, V1_NODES, act_e_v1, gamma_v1, _v1)


def check_axiom_verma(t: _Trial) -> None:
    _verma(t, V1_NODES, act_e_v1, _v1)


def check_axiom_epsilon(t: _Trial) -> None:
    _epsilon_laws(t, V1_NODES, act_e_v1, epsilon_v1, _v1)


def check_action_law(t: _Trial) -> None:
    _action_law(t, V1_NODES, act_e_v1, _v1)


def check_lemma_sigma_bar(t: _Trial) -> None:
    x = t.v1()
    q, a = sigma_bar(x)
    _pos("sigma_bar(x)", q)
    _pos("a(x)", a)
    v1 = build_V1(x)
    _pos("V1(x)", v1)
    v2 = build_V2(q)
    _pos("V2(sigma_bar(x))", v2)
    _eq("V2(sigma_bar(x)) = a(x) sigma(V1(x))", v2, apply_sigma(v1).scale(a))


def check_prop_inverse(t: _Trial) -> None:
    x = t.v1()
    q, _ = sigma_bar(x)
    back = sigma_bar_inv(q)
    _pos("sigma_bar_inv(sigma_bar(x))", back)
    _eq("sigma_bar_inv(sigma_bar(x)) = x", back, x)
    y = t.v2()
    x2 = _pos_point("sigma_bar_inv(y)", sigma_bar_inv(y))
    _eq("sigma_bar(sigma_bar_inv(y)) = y", sigma_bar(x2)[0], y)


def check_prop_intertwine_24(t: _Trial) -> None:
    x = t.v1()
    c = t.scalar()
    lhs = sigma_bar(act_e_v1(2, c, x))[0]
    rhs = act_e_v2(4, c, sigma_bar(x)[0])
    _pos("sigma_bar(e_2^c x)", lhs)
    _eq("sigma_bar(e_2^c x) = bar e_4^c sigma_bar(x)", lhs, rhs)


def check_e0_two_routes(t: _Trial) -> None:
    x = t.v1()
    c = t.scalar()
    _pos("K-family(x, c)", k_family(x, c))
    lhs = act_e0_v1(c, x)
    _pos("e_0^c(x)", lhs)
    _eq("closed-form e_0^c(x) = sigma_bar^-1 bar e_6^c sigma_bar(x)", lhs, act_e0_via_sigma(c, x))


def check_closed_vs_generic_v1(t: _Trial) -> None:
    x = t.v1()
    c = t.scalar()
    for k in range(1, 7):
        _eq(f"e_{k}^c closed = generic", act_e_v1(k, c, x), d6.generic_act_e_v1(k, c, x))
        _eq(f"gamma_{k} closed = generic", gamma_v1(k, x), d6.generic_gamma_v1(k, x))
        _eq(f"epsilon_{k} closed = generic", epsilon_v1(k, x), d6.generic_epsilon_v1(k, x))


def check_closed_vs_generic_v2(t: _Trial) -> None:
    y = t.v2()
    c = t.scalar()
    for k in V2_NODES:
        _eq(f"bar e_{k}^c closed = generic", act_e_v2(k, c, y), d6.generic_act_e_v2(k, c, y))
        _eq(f"bar gamma_{k} closed = generic", gamma_v2(k, y), d6.generic_gamma_v2(k, y))
        _eq(f"bar epsilon_{k} closed = generic", epsilon_v2(k, y), d6.generic_epsilon_v2(k, y))


def check_zero_node_consistency(t: _Trial) -> None:
    x = t.v1()
    q, _ = sigma_bar(x)
    _eq("gamma_0(x) = bar gamma_6(sigma_bar(x))", gamma_v1(0, x), gamma_v2(6, q))
    _eq("epsilon_0(x) = bar epsilon_6(sigma_bar(x))", epsilon_v1(0, x), epsilon_v2(6, q))
    _eq("epsilon_0(x) = K", epsilon_v1(0, x), k_family(x, 1).K)


def check_theorem_relations(t: _Trial) -> None:
    x = t.v1()
    c1, c2 = t.scalar("c1"), t.scalar("c2")
    g0 = gamma_v1(0, x)
    for k in V1_NODES:
        _eq(f"gamma_0(e_{k}^c x) = c^a({k},0) gamma_0(x)",
            gamma_v1(0, act_e_v1(k, c1, x)), c1 ** CARTAN[k][0] * g0)
        _eq(f"gamma_{k}(e_0^c x) = c^a(0,{k}) gamma_{k}(x)",
            gamma_v1(k, act_e0_v1(c1, x)), c1 ** CARTAN[0][k] * gamma_v1(k, x))
    _eq("epsilon_0(e_0^c x) = epsilon_0(x)/c", epsilon_v1(0, act_e0_v1(c1, x)), epsilon_v1(0, x) / c1)
    for k in (1, 3, 4, 5, 6):
        _eq(f"e_0^c1 e_{k}^c2 = e_{k}^c2 e_0^c1",
            act_e0_v1(c1, act_e_v1(k, c2, x)), act_e_v1(k, c2, act_e0_v1(c1, x)))
    lhs = act_e0_v1(c1, act_e_v1(2, c1 * c2, act_e0_v1(c2, x)))
    rhs = act_e_v1(2, c2, act_e0_v1(c1 * c2, act_e_v1(2, c1, x)))
    _eq("e_0^c1 e_2^c1c2 e_0^c2 = e_2^c2 e_0^c1c2 e_2^c1", lhs, rhs)
    _pos("e_0 e_2 e_0 x", lhs)


def check_positivity_all(t: _Trial) -> None:
    x = t.v1()
    y = t.v2()
    c = t.scalar()
    _pos("V1(x)", build_V1(x))
    _pos("V2(y)", build_V2(y))
    for k in V1_NODES:
        _pos(f"e_{k}^c(x)", act_e_v1(k, c, x))
        _pos(f"gamma_{k}(x)", gamma_v1(k, x))
        _pos(f"epsilon_{k}(x)", epsilon_v1(k, x))
    for k in V2_NODES:
        _pos(f"bar e_{k}^c(y)", act_e_v2(k, c, y))
        _pos(f"bar gamma_{k}(y)", gamma_v2(k, y))
        _pos(f"bar epsilon_{k}(y)", epsilon_v2(k, y))
    q, a = sigma_bar(x)
    _pos("sigma_bar(x)", q)
    _pos("a(x)", a)
    _pos("sigma_bar_inv(y)", sigma_bar_inv(y))
    _pos("K-family(x, c)", k_family(x, c))
    _pos("e_0^c via sigma_bar", act_e0_via_sigma(c, x))


def check_v2_axioms(t: _Trial) -> None:
    _gamma_covariance(t, V2_NODES, act_e_v2, gamma_v2, _v2)
    _verma(t, V2_NODES, act_e_v2, lambda t: t.v2("y_verma"))
    _epsilon_laws(t, V2_NODES, act_e_v2, epsilon_v2, lambda t: t.v2("y_epsilon"))
    _action_law(t, V2_NODES, act_e_v2, lambda t: t.v2("y_action"))


def _spot_v1(x: PointV1) -> dict[str, Fraction]:
    return {
        "++++++": x.x6_3 * x.x6_2 * x.x6_1,
        "++++--": x.x6_2 * x.x6_1 + x.x4_4 * x.x4_3 * x.x6_1 / x.x6_3
        + x.x4_4 * x.x4_3 * x.x4_2 * x.x4_1 / (x.x6_3 * x.x6_2),
        "-++++-": x.x5_2 * x.x5_1,
        "--++++": x.x6_3 * x.x6_2,
        "+----+": x.x1_1,
        "-+---+": x.x2_2,
        "---++-": x.x5_2,
        "--+--+": x.x3_3,
        "---+-+": x.x4_4,
        "----++": x.x6_3,
        "------": Fraction(1),
    }


def _spot_v2(y: PointV2) -> dict[str, Fraction]:
    return {
        "-++++-": y.y5_3 * y.y5_2 * y.y5_1,
        "-+++-+": y.y5_2 * y.y5_1 + y.y4_4 * y.y4_3 * y.y5_1 / y.y5_3
        + y.y4_4 * y.y4_3 * y.y4_2 * y.y4_1 / (y.y5_3 * y.y5_2),
        "++++++": y.y6_2 * y.y6_1,
        "+-+++-": y.y5_3 * y.y5_2,
        "------": y.y0_1,
        "++----": y.y2_2,
        "+--+++": y.y6_2,
        "+-+---": y.y3_3,
        "+--+--": y.y4_4,
        "+---+-": y.y5_3,
        "+----+": Fraction(1),
    }


def check_spot_expansion(t: _Trial) -> None:
    x = t.v1()
    v1 = build_V1(x)
    for s, want in _spot_v1(x).items():
        _eq(f"V1 coefficient {s}", v1[basis_from_signs(s)], want)
    _eq("V1 coefficient ++---- = K", v1[basis_from_signs("++----")], k_family(x, 1).K)
    y = t.v2()
    v2 = build_V2(y)
    for s, want in _spot_v2(y).items():
        _eq(f"V2 coefficient {s}", v2[basis_from_signs(s)], want)


def _explore_intertwine(k: int) -> Callable[[_Trial], None]:
    def body(t: _Trial) -> None:
        target = SIGMA[k]
        if target not in V2_NODES:
            raise _NotApplicable(f"node sigma({k}) = {target} has no action on V2")
        x = t.v1()
        c = t.scalar()
        _eq(
            f"sigma_bar(e_{k}^c x) = bar e_{target}^c sigma_bar(x)",
            sigma_bar(act_e_v1(k, c, x))[0],
            act_e_v2(target, c, sigma_bar(x)[0]),
        )

    body.__name__ = f"check_explore_sigma_intertwine_k{k}"
    return body


ASSERTED: dict[str, Callable[[_Trial], None]] = {
    "axiom_gamma_covariance": check_axiom_gamma_covariance,
    "axiom_verma": check_axiom_verma,
    "axiom_epsilon": check_axiom_epsilon,
    "action_law": check_action_law,
    "lemma_sigma_bar": check_lemma_sigma_bar,
    "prop_inverse": check_prop_inverse,
    "prop_intertwine_24": check_prop_intertwine_24,
    "e0_two_routes": check_e0_two_routes,
    "closed_vs_generic_v1": check_closed_vs_generic_v1,
    "closed_vs_generic_v2": check_closed_vs_generic_v2,
    "zero_node_consistency": check_zero_node_consistency,
    "theorem_relations": check_theorem_relations,
    "positivity_all": check_positivity_all,
    "v2_axioms": check_v2_axioms,
    "spot_expansion": check_spot_expansion,
}

EXPLORATORY: dict[str, Callable[[_Trial], None]] = {
    f"explore_sigma_intertwine_k{k}": _explore_intertwine(k) for k in (1, 3, 4, 5, 6)
}

CATALOG = {**ASSERTED, **EXPLORATORY}


def severity_of(name: str) -> str:
    if name in ASSERTED:
        return "asserted"
    if name in EXPLORATORY:
        return "exploratory"
    raise UnknownCheck(name)


@dataclass(frozen=True)
class CheckSpec:
    name: str
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    bound: int = DEFAULT_BOUND
    severity: Optional[str] = None

    def __post_init__(self):
        if self.name not in CATALOG:
            raise UnknownCheck(self.name)
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.bound < 1:
            raise ValueError("bound must be >= 1")
        if self.severity is None:
            object.__setattr__(self, "severity", severity_of(self.name))
        elif self.severity not in ("asserted", "exploratory"):
            raise ValueError(f"bad severity {self.severity!r}")


@dataclass
class CheckReport:
    name: str
    severity: str
    trials: int
    failures: int = 0
    counterexample: Optional[dict] = None
    ms: Optional[float] = None
    note: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "name": self.name,
            "severity": self.severity,
            "trials": self.trials,
            "failures": self.failures,
            "counterexample": self.counterexample,
            "ms": round(self.ms, 3) if timing and self.ms is not None else None,
        }
        if self.note is not None:
            out["note"] = self.note
        return out


def run_trial(name: str, seed: int, trial: int, bound: int) -> Optional[dict]:
    """Run one trial; return a counterexample dict or ``None`` when it holds."""
    if name not in CATALOG:
        raise UnknownCheck(name)
    t = _Trial(seed, trial, bound)
    try:
        CATALOG[name](t)
    except _Mismatch as m:
        return {
            "trial": trial,
            "case": m.case,
            "inputs": t.inputs,
            "lhs": _jsonable(m.lhs),
            "rhs": _jsonable(m.rhs),
        }
    return None


def _run_trial_args(args):
    return run_trial(*args)


def run_check(spec: CheckSpec, jobs: int = 1) -> CheckReport:
    start = time.perf_counter()
    report = CheckReport(spec.name, spec.severity, spec.trials)
    try:
        CATALOG[spec.name](_Trial(spec.seed, 0, spec.bound))
    except _NotApplicable as exc:
        report.trials = 0
        report.note = f"not applicable: {exc}"
        report.ms = (time.perf_counter() - start) * 1000
        return report
    except _Mismatch:
        pass
    args = [(spec.name, spec.seed, t, spec.bound) for t in range(spec.trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_trial_args, args, chunksize=max(1, len(args) // (4 * jobs))))
    else:
        results = [run_trial(*a) for a in args]
    failed = [r for r in results if r is not None]
    report.failures = len(failed)
    report.counterexample = failed[0] if failed else None
    report.ms = (time.perf_counter() - start) * 1000
    return report


def resolve_suite(suite: str, include_exploratory: bool = False) -> list[str]:
    """``"all"`` or a comma separated list of catalog names."""
    if suite.strip() == "all":
        names = list(ASSERTED)
        if include_exploratory:
            names += list(EXPLORATORY)
        return names
    names = [n.strip() for n in suite.split(",") if n.strip()]
    if not names:
        raise UnknownCheck(suite)
    for n in names:
        if n not in CATALOG:
            raise UnknownCheck(n)
    if include_exploratory:
        names += [n for n in EXPLORATORY if n not in names]
    return names


def run_suite(
    suite: str = "all",
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    bound: int = DEFAULT_BOUND,
    include_exploratory: bool = False,
    timing: bool = True,
    jobs: int = 1,
) -> dict:
    names = resolve_suite(suite, include_exploratory)
    reports = [run_check(CheckSpec(n, trials, seed, bound), jobs=jobs) for n in names]
    return {
        "suite": suite,
        "seed": seed,
        "bound": bound,
        "checks": [r.to_json(timing) for r in reports],
        "pass": all(r.passed for r in reports if r.severity == "asserted"),
    }
