"""Verification suites: seeded, deterministic checks of the package invariants.

Each suite bundles the invariants of one corner of the package and returns
a report of labeled pass/fail checks; the command line prints one line per
check and the acceptance tests assert on the same reports.  Suites are
pure functions of (samples, seed), so a fixed invocation is reproducible
byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from decimal import Decimal
from math import gcd as _int_gcd, isqrt

import numpy as np

from . import reference
from .codes import (
    code_min_distance,
    ext_field_build,
    is_group_code,
    mult_group_order_check,
    prime_field,
    span,
)
from .constellation import build, compare_table, energy_report
from .eisenstein import (
    BETA,
    Eisenstein,
    canonical_associate,
    euclid_divmod,
    ideal_member,
    is_primitive,
    primitivity_structure_check,
)
from .errors import NoSuitableAssociate, ReduciblePolynomial
from .gaussian import Gaussian, g_mod_reduce, g_residue_system, mannheim_weight
from .metrics import hex_weight, min_class_hex_weight
from .partition import recursive_partition, subgroup_nonprimitive, subgroup_primitive
from .quotient import (
    class_equal,
    decompose,
    mu_reduce,
    pi_lift,
    residue_system,
)

DEFAULT_SEED = 20240815

SUITE_NAMES = (
    "relnormhex",
    "roundtrip",
    "primitivity",
    "partition",
    "mannheim-oracle",
    "table5",
    "residue-tables",
    "fields",
)


@dataclass
class Check:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, label: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(label, passed, detail))

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            extra = f"  {c.detail}" if c.detail else ""
            out.append(f"{status} {self.suite}: {c.label}{extra}")
        return out


def _random_eisenstein(rng: random.Random, lo: int = -100, hi: int = 100) -> Eisenstein:
    return Eisenstein(rng.randint(lo, hi), rng.randint(lo, hi))


def _hex_weight_cases(a: int, b: int) -> int:
    # the branchy piecewise form, kept as a redundant oracle
    if a <= 0 <= b or b <= 0 <= a:
        return abs(a) + abs(b)
    if 0 <= a <= b or b <= a <= 0:
        return abs(a - b) + abs(a)
    return abs(a - b) + abs(b)


# ---------------------------------------------------------------------------
# hexagonal weight properties


def suite_relnormhex(samples: int | None = None, seed: int = DEFAULT_SEED) -> SuiteReport:
    samples = 10_000 if samples is None else samples
    rng = random.Random(seed)
    rep = SuiteReport("relnormhex")
    bad: dict[str, str] = {}

    def record(label: str, ok: bool, witness: str) -> None:
        if not ok and label not in bad:
            bad[label] = witness

    for _ in range(samples):
        alpha = _random_eisenstein(rng)
        theta = _random_eisenstein(rng)
        if theta.is_zero():
            theta = Eisenstein(1, 0)
        k = rng.randint(-10, 10)
        w = hex_weight(alpha)
        n = alpha.norm()
        record("i: sqrt(N) <= wt <= N", w * w >= n and w <= n, f"alpha={alpha}")
        record("ii: wt(a) <= wt(a*t)", w <= hex_weight(alpha * theta), f"alpha={alpha} theta={theta}")
        record("iii: wt(conj) = wt", hex_weight(alpha.conjugate()) == w, f"alpha={alpha}")
        record("iv: wt(k*a) = |k|*wt(a)", hex_weight(alpha * k) == abs(k) * w, f"alpha={alpha} k={k}")
        if not alpha.is_zero():
            hits = [
                t for t in alpha.associates() if t.a == w and 0 <= t.b < t.a
            ]
            record("v: unique associate n+k*rho, 0<=k<n", len(hits) == 1, f"alpha={alpha}")
        same_norm = alpha.associates() + alpha.conjugate().associates()
        record(
            "vi: equal norm -> equal wt",
            all(hex_weight(t) == w for t in same_norm),
            f"alpha={alpha}",
        )
        record(
            "vii: wt(a*t) <= wt(a)*wt(t)",
            hex_weight(alpha * theta) <= w * hex_weight(theta),
            f"alpha={alpha} theta={theta}",
        )
        record(
            "closed form = case form",
            w == _hex_weight_cases(alpha.a, alpha.b),
            f"alpha={alpha}",
        )

    for label in (
        "i: sqrt(N) <= wt <= N",
        "ii: wt(a) <= wt(a*t)",
        "iii: wt(conj) = wt",
        "iv: wt(k*a) = |k|*wt(a)",
        "v: unique associate n+k*rho, 0<=k<n",
        "vi: equal norm -> equal wt",
        "vii: wt(a*t) <= wt(a)*wt(t)",
        "closed form = case form",
    ):
        rep.add(f"{label} [{samples} samples]", label not in bad, bad.get(label, ""))

    witnesses = (
        (Eisenstein(4, 4), 4, 16),
        (Eisenstein(3, 4), 4, 13),
        (Eisenstein(8, 4), 8, 48),
        (Eisenstein(7, 7), 7, 49),
    )
    ok = all(hex_weight(x) == w and x.norm() == n for x, w, n in witnesses)
    rep.add("converse-failure witnesses (wt 4/4 norms 16/13, wt 8/7 norms 48/49)", ok)
    return rep


# ---------------------------------------------------------------------------
# reduce/lift round trips and residue-system cardinality


ROUNDTRIP_MODULI = (
    Eisenstein(6, 0),
    Eisenstein(6, 12),
    Eisenstein(-6, 5),
    Eisenstein(4, 6),
    Eisenstein(18, 6),
)


def suite_roundtrip(samples: int | None = None, seed: int = DEFAULT_SEED) -> SuiteReport:
    samples = 200 if samples is None else samples
    rng = random.Random(seed)
    rep = SuiteReport("roundtrip")

    for eta in ROUNDTRIP_MODULI:
        mod = decompose(eta)
        system = residue_system(mod)
        forward = all(
            pi_lift(e, mod) == g for g, e in zip(system.r_points, system.e_points)
        )
        backward = all(mu_reduce(pi_lift(e, mod), mod) == e for e in system.e_points)
        distinct = len({(e.a, e.b) for e in system.e_points}) == mod.norm
        rep.add(f"pi(mu(grid)) identity for eta={eta}", forward)
        rep.add(f"mu(pi(rep)) identity for eta={eta}", backward)
        rep.add(f"|reduced system| = N = {mod.norm} for eta={eta}", distinct)

    # primitive moduli give the integer line 0 .. N-1
    line_ok = True
    for eta in (Eisenstein(-6, 5), Eisenstein(3, 4), Eisenstein(-1, 16)):
        mod = decompose(eta)
        if mod.t != 1:
            line_ok = False
        if [g.a for g in residue_system(mod).r_points] != list(range(mod.norm)):
            line_ok = False
    rep.add("primitive moduli reduce to the integer line", line_ok)

    # class_equal must agree with the ideal-membership divisibility test
    agree = True
    witness = ""
    pool = [decompose(eta) for eta in ROUNDTRIP_MODULI]
    for _ in range(max(samples, 1) * 5):
        mod = rng.choice(pool)
        alpha = _random_eisenstein(rng, -50, 50)
        theta = _random_eisenstein(rng, -50, 50)
        lhs = class_equal(alpha, theta, mod)
        rhs = ideal_member(alpha - theta, mod.t, mod.core) if not (alpha - theta).is_zero() else True
        direct = euclid_divmod(alpha - theta, mod.working_eta)[1].is_zero()
        if lhs != rhs or lhs != direct:
            agree = False
            witness = f"alpha={alpha} theta={theta} eta={mod.eta}"
            break
    rep.add("class_equal = ideal membership = zero remainder", agree, witness)

    # random moduli: cardinality, distinctness, forward round trip
    accepted = 0
    rejected = 0
    ok = True
    witness = ""
    while accepted < samples:
        eta = Eisenstein(rng.randint(-36, 36), rng.randint(-36, 36))
        if eta.is_zero() or eta.norm() > 1000:
            continue
        try:
            mod = decompose(eta)
        except NoSuitableAssociate:
            rejected += 1
            continue
        accepted += 1
        system = residue_system(mod)
        if len({(e.a, e.b) for e in system.e_points}) != mod.norm:
            ok = False
            witness = f"eta={eta}"
            break
        if any(pi_lift(e, mod) != g for g, e in zip(system.r_points, system.e_points)):
            ok = False
            witness = f"eta={eta}"
            break
    total = accepted + rejected
    reject_pct = (100.0 * rejected / total) if total else 0.0
    rep.add(
        f"{samples} random moduli N<=1000: distinct reps and exact lift",
        ok,
        witness or f"rejects {rejected}/{total} ({reject_pct:.2f}%)",
    )
    if samples:
        rep.add(
            "reject rate below 5%",
            reject_pct < 5.0,
            f"{reject_pct:.2f}% of {total} sampled moduli",
        )
    return rep


# ---------------------------------------------------------------------------
# primitivity and core arithmetic invariants


def _all_nonzero_up_to_norm(max_norm: int):
    bound = isqrt(4 * max_norm // 3) + 1
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            x = Eisenstein(a, b)
            if not x.is_zero() and x.norm() <= max_norm:
                yield x


def suite_primitivity(samples: int | None = None, seed: int = DEFAULT_SEED) -> SuiteReport:
    max_norm = 500 if samples is None else samples
    rng = random.Random(seed)
    rep = SuiteReport("primitivity")

    mismatch = ""
    corollary = ""
    count = 0
    for eta in _all_nonzero_up_to_norm(max_norm):
        count += 1
        prim = is_primitive(eta)
        if prim != primitivity_structure_check(eta):
            mismatch = mismatch or f"eta={eta}"
        if prim:
            n = eta.norm()
            if n % 9 == 0:
                corollary = corollary or f"eta={eta} norm divisible by 9"
            else:
                f = 2
                while f * f <= n:
                    if n % f == 0 and f % 3 == 2:
                        corollary = corollary or f"eta={eta} norm divisible by {f}"
                        break
                    f += 1
    rep.add(
        f"gcd primitivity = factorization form on all {count} moduli with N <= {max_norm}",
        not mismatch,
        mismatch,
    )
    rep.add(
        "primitive norms avoid 9 and primes = 2 mod 3",
        not corollary,
        corollary,
    )

    mult_ok = divmod_ok = canon_ok = True
    norm_pair_ok = ideal_ok = True
    witness = {}
    for _ in range(2000):
        x = _random_eisenstein(rng, -60, 60)
        y = _random_eisenstein(rng, -60, 60)
        if (x * y).norm() != x.norm() * y.norm():
            mult_ok = False
            witness.setdefault("mult", f"{x}, {y}")
        if not y.is_zero():
            q, r = euclid_divmod(x, y)
            if q * y + r != x or r.norm() >= y.norm():
                divmod_ok = False
                witness.setdefault("divmod", f"{x}, {y}")
        if not x.is_zero():
            canon = canonical_associate(x)
            if x.associates().count(canon) != 1 or canonical_associate(canon) != canon:
                canon_ok = False
                witness.setdefault("canon", str(x))
        k = rng.randint(-6, 6) or 1
        g = _random_eisenstein(rng, -8, 8)
        if not g.is_zero():
            member = ideal_member(x, k, g)
            by_rem = euclid_divmod(x, g * k)[1].is_zero()
            if member != by_rem:
                ideal_ok = False
                witness.setdefault("ideal", f"x={x} k={k} g={g}")
    rep.add("norm is multiplicative (2000 samples)", mult_ok, witness.get("mult", ""))
    rep.add("division: exact reconstruction and N(r) < N(eta)", divmod_ok, witness.get("divmod", ""))
    rep.add("canonical associate unique and idempotent", canon_ok, witness.get("canon", ""))
    rep.add("ideal membership = zero remainder", ideal_ok, witness.get("ideal", ""))

    # Associates and conjugate-associates share the norm.  The converse is
    # false in general: composite norms with two split primes admit classes
    # mixing a prime with the other's conjugate.  Smallest case is norm 91,
    # e.g. 5+11*rho vs -1+9*rho, which even have hexagonal weights 11 vs 10.
    small = list(_all_nonzero_up_to_norm(200))
    for _ in range(400):
        x = rng.choice(small)
        for y in x.associates() + x.conjugate().associates():
            if x.norm() != y.norm():
                norm_pair_ok = False
                witness.setdefault("normpair", f"{x}, {y}")
    rep.add(
        "associates and conjugates share the norm (N <= 200)",
        norm_pair_ok,
        witness.get("normpair", ""),
    )
    a, b = Eisenstein(5, 11), Eisenstein(-1, 9)
    unrelated = b not in a.associates() + a.conjugate().associates()
    rep.add(
        "norm-91 witness: equal norm without associate relation",
        a.norm() == b.norm() == 91 and unrelated and hex_weight(a) != hex_weight(b),
    )
    return rep


# ---------------------------------------------------------------------------
# partitions


def suite_partition(samples: int | None = None, seed: int = DEFAULT_SEED) -> SuiteReport:
    rep = SuiteReport("partition")

    mod91 = decompose(Eisenstein(-6, 5))
    part7 = subgroup_primitive(mod91, 7, 13)
    rep.add(
        "91-point ring, 7 cosets of 13 with min d^2 = 7",
        len(part7.children) == 7
        and all(len(c.points) == 13 for c in part7.children)
        and all(c.min_d2 == 7 for c in part7.children),
    )
    part13 = subgroup_primitive(mod91, 13, 7)
    rep.add(
        "91-point ring, 13 cosets of 7 with min d^2 = 13",
        len(part13.children) == 13
        and all(len(c.points) == 7 for c in part13.children)
        and all(c.min_d2 == 13 for c in part13.children),
    )

    mod6 = decompose(Eisenstein(6, 0))
    part6 = subgroup_nonprimitive(mod6, 2, 3)
    rep.add(
        "36-point ring, 4 cosets with min Euclidean distance 2",
        len(part6.children) == 4
        and all(len(c.points) == 9 for c in part6.children)
        and all(c.min_d2 == 4 for c in part6.children),
    )
    part6b = recursive_partition(mod6, (3,))
    rep.add(
        "36-point ring, 9 cosets with min Euclidean distance 3",
        len(part6b.children) == 9 and all(c.min_d2 == 9 for c in part6b.children),
    )

    mod612 = decompose(Eisenstein(6, 12))
    part612 = subgroup_nonprimitive(mod612, 3, 2)
    rep.add(
        "108-point ring, 9 cosets with min Euclidean distance 3",
        len(part612.children) == 9
        and all(len(c.points) == 12 for c in part612.children)
        and all(c.min_d2 == 9 for c in part612.children),
    )

    mod273 = decompose(Eisenstein(-1, 16))
    chain = recursive_partition(mod273, (7, 13))
    level1 = chain.children
    level2 = level1[0].children
    first = level2[0]
    expected = {mu_reduce(Eisenstein(k, 0), mod273) for k in (0, 91, 182)}
    rep.add(
        "273-point chain: 7 then 13, level-2 d^2 = 91 on {0, 91, 182}",
        len(level1) == 7
        and all(c.min_d2 == 7 for c in level1)
        and len(level2) == 13
        and first.min_d2 == 91
        and set(first.points) == expected,
    )

    trees = [part7, part13, part6, part6b, part612, chain]
    sibling_ok = True
    monotone_ok = True
    sizes_ok = True
    units_ok = True
    subgroup_ok = True
    for tree in trees:
        for node in tree.walk():
            if node.children:
                dists = {(c.min_d2, c.min_dhex) for c in node.children}
                if len(dists) != 1:
                    sibling_ok = False
                if len({len(c.points) for c in node.children}) != 1:
                    sizes_ok = False
                if any(
                    c.min_d2 < node.min_d2 or c.min_dhex < node.min_dhex
                    for c in node.children
                ):
                    monotone_ok = False
                # children[0] continues the subgroup chain only below an
                # all-zero label; the other cosets are translates
                subgroup = node.children[0]
                if any(node.label) or not subgroup.label or subgroup.label[-1] != 0:
                    continue
                if len(subgroup.points) > 1 and subgroup.min_d2 > 1:
                    if any(p.is_unit() for p in subgroup.points):
                        units_ok = False
                    nonzero = [p.norm() for p in subgroup.points if not p.is_zero()]
                    if nonzero and min(nonzero) != subgroup.min_d2:
                        subgroup_ok = False
    rep.add("sibling cosets report identical (min_d2, min_dhex)", sibling_ok)
    rep.add("refinement never decreases the minima", monotone_ok)
    rep.add("cosets at a level have equal cardinality", sizes_ok)
    rep.add("distance-increasing subgroups contain no unit", units_ok)
    rep.add("subgroup min d^2 equals min nonzero representative norm", subgroup_ok)
    return rep


# ---------------------------------------------------------------------------
# Mannheim weight window oracle


def _reduce_grid_vectorized(eta: Gaussian) -> np.ndarray:
    """Reduced representatives of the full grid, as an (N, 2) int array."""
    t = _int_gcd(eta.a, eta.b)
    width = t * ((eta.a // t) ** 2 + (eta.b // t) ** 2)
    xs, ys = np.meshgrid(np.arange(width), np.arange(t))
    x = xs.ravel().astype(np.int64)
    y = ys.ravel().astype(np.int64)
    a, b = eta.a, eta.b
    den = eta.norm()
    wu = x * a + y * b
    wv = y * a - x * b
    qu = _np_round_half_down(wu, den)
    qv = _np_round_half_down(wv, den)
    return np.stack([x - (qu * a - qv * b), y - (qu * b + qv * a)], axis=1)


def _np_round_half_down(p: np.ndarray, q: int) -> np.ndarray:
    fl = p // q
    return fl + (2 * (p - fl * q) > q)


def _window_minima(reps: np.ndarray, eta: Gaussian, radius: int) -> np.ndarray:
    offs = []
    for u in range(-radius, radius + 1):
        for v in range(-radius, radius + 1):
            offs.append((u * eta.a - v * eta.b, u * eta.b + v * eta.a))
    off = np.asarray(offs, dtype=np.int64)
    cand = reps[:, None, :] - off[None, :, :]
    return np.abs(cand).sum(axis=2).min(axis=1)


def suite_mannheim_oracle(samples: int | None = None, seed: int = DEFAULT_SEED) -> SuiteReport:
    max_norm = 400 if samples is None else samples
    rng = random.Random(seed)
    rep = SuiteReport("mannheim-oracle")
    bound = isqrt(max_norm) + 1
    moduli = [
        Gaussian(a, b)
        for a in range(-bound, bound + 1)
        for b in range(-bound, bound + 1)
        if (a, b) != (0, 0) and a * a + b * b <= max_norm
    ]
    bad_window = ""
    bad_vector = ""
    bad_distinct = ""
    bad_reduce = ""
    checked = 0
    for eta in moduli:
        arr = _reduce_grid_vectorized(eta)
        checked += len(arr)
        if len({(int(p), int(q)) for p, q in arr}) != eta.norm():
            bad_distinct = bad_distinct or f"eta={eta}"
        # the library's 3x3-translate weight against the exhaustive window
        wide = _window_minima(arr, eta, 3)
        lib = [mannheim_weight(Gaussian(int(p), int(q)), eta) for p, q in arr]
        if not np.array_equal(np.asarray(lib, dtype=np.int64), wide):
            bad_window = bad_window or f"eta={eta}"
        if not np.array_equal(_window_minima(arr, eta, 1), wide):
            bad_vector = bad_vector or f"eta={eta}"
    rep.add(
        f"library 3x3 weight = [-3,3]^2 window on all {len(moduli)} moduli with "
        f"N <= {max_norm} ({checked} class representatives)",
        not bad_window,
        bad_window,
    )
    rep.add("vectorized 3x3 window agrees as well", not bad_vector, bad_vector)
    rep.add("reduced systems are pairwise distinct", not bad_distinct, bad_distinct)

    # vectorized grid reduction reproduces the library reduction exactly
    vec_lib_ok = True
    witness = ""
    for eta in rng.sample(moduli, 40):
        arr = _reduce_grid_vectorized(eta)
        lib = [g_mod_reduce(p, eta) for p in g_residue_system(eta)]
        if [(int(a), int(b)) for a, b in arr] != [(p.a, p.b) for p in lib]:
            vec_lib_ok = False
            witness = f"eta={eta}"
            break
    rep.add("vectorized reduction equals library reduction (40 moduli)", vec_lib_ok, witness)

    # the pure-integer reduction path behaves on random inputs
    for _ in range(300):
        eta = rng.choice(moduli)
        theta = Gaussian(rng.randint(-40, 40), rng.randint(-40, 40))
        delta = g_mod_reduce(theta, eta)
        den = eta.norm()
        congruent = (delta - theta) == Gaussian(0, 0) or (
            ((delta - theta) * eta.conjugate()).a % den == 0
            and ((delta - theta) * eta.conjugate()).b % den == 0
        )
        if not congruent or 2 * delta.norm() > den or delta.norm() > theta.norm():
            bad_reduce = bad_reduce or f"theta={theta} eta={eta}"
    rep.add("reduction is congruent, norm-contracting, inside the half-norm ball",
            not bad_reduce, bad_reduce)

    # hexagonal analogue of the window argument, sampled
    hex_ok = True
    witness = ""
    for eta_pair in ((6, 0), (4, 6), (-6, 5), (6, 12), (7, 3)):
        mod = decompose(Eisenstein(*eta_pair))
        pts = residue_system(mod).e_points
        for p in pts:
            wide = min(
                hex_weight(p + Eisenstein(u, v) * mod.working_eta)
                for u in range(-3, 4)
                for v in range(-3, 4)
            )
            if min_class_hex_weight(p, mod) != wide:
                hex_ok = False
                witness = f"point={p} eta={mod.eta}"
    rep.add("hexagonal class weight: 3x3 window = [-3,3]^2 window", hex_ok, witness)
    return rep


# ---------------------------------------------------------------------------
# energy table


def suite_table5(samples: int | None = None, seed: int = DEFAULT_SEED) -> SuiteReport:
    rep = SuiteReport("table5")
    rows = compare_table()
    tol = Decimal("0.005")
    bad = []
    for row, expected in zip(rows, reference.ENERGY_TABLE):
        exp_cells = tuple(Decimal(v) for v in expected[3:])
        if expected[2] != row.size:
            bad.append(f"size {row.size} != {expected[2]}")
        for got, want, col in zip(row.cells(), exp_cells,
                                  ("E_G", "E_E", "E2_G", "E2_E", "EM_G", "EHex_E")):
            if abs(got - want) > tol:
                bad.append(f"size {row.size} {col}: {got} != {want}")
    rep.add(
        f"all {len(rows)} rows x 6 columns match the reference within 0.005",
        not bad,
        "; ".join(bad[:4]),
    )

    order_ok = True
    cross_ok = True
    witness = ""
    for g_pair, e_pair in reference.BUILTIN_PAIRS:
        ec = build("eisenstein", e_pair)
        gc = build("gaussian", g_pair)
        er = energy_report(ec, with_min_distances=False)
        gr = energy_report(gc, with_min_distances=False)
        e_hex = Decimal(er.w_avg.numerator) / Decimal(er.w_avg.denominator)
        if not (er.e_avg <= e_hex + Decimal("1e-30") and er.w_avg <= er.e2_avg):
            order_ok = False
            witness = f"eta={ec.modulus}"
        if not (
            er.e_avg <= gr.e_avg + Decimal("1e-30")
            and er.e2_avg <= gr.e2_avg
            and er.w_avg <= gr.w_avg
        ):
            cross_ok = False
            witness = f"pair={g_pair}/{e_pair}"
    rep.add("E <= E_hex <= E^2 on every Eisenstein constellation", order_ok, witness)
    rep.add("Eisenstein side never exceeds the Gaussian side", cross_ok, witness)

    dmin_ok = True
    for e_pair in ((2, 0), (6, 0), (3, 4), (6, 12)):
        ec = build("eisenstein", e_pair)
        er = energy_report(ec)
        if er.d2_min != 1:
            dmin_ok = False
    rep.add("full constellations have min squared distance 1", dmin_ok)
    return rep


# ---------------------------------------------------------------------------
# golden residue tables


def suite_residue_tables(samples: int | None = None, seed: int = DEFAULT_SEED) -> SuiteReport:
    rep = SuiteReport("residue-tables")
    for pair, expected in reference.RESIDUE_TABLES.items():
        mod = decompose(Eisenstein(*pair))
        system = residue_system(mod)
        got = tuple((e.a, e.b) for e in system.e_points)
        bad = [
            f"grid {system.r_points[i]}: got {got[i]}, want {expected[i]}"
            for i in range(len(expected))
            if got[i] != expected[i]
        ]
        rep.add(
            f"table for eta={Eisenstein(*pair)} ({len(expected)} rows)",
            len(got) == len(expected) and not bad,
            "; ".join(bad[:3]),
        )
    return rep


# ---------------------------------------------------------------------------
# codes and field extensions


def suite_fields(samples: int | None = None, seed: int = DEFAULT_SEED) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("fields")
    two = Eisenstein(2, 0)
    rho = Eisenstein(0, 1)
    fld = ext_field_build(two, [rho, Eisenstein(1, 0), Eisenstein(1, 0)])
    elems = fld.elements()
    rep.add("order-4 base with quadratic extension has 16 elements",
            fld.order == 16 and len(set(elems)) == 16)

    alpha = (mu_reduce(Eisenstein(0, 0), fld.modulus), mu_reduce(Eisenstein(1, 0), fld.modulus))
    sq = fld.mul(alpha, alpha)
    expected = (mu_reduce(rho, fld.modulus), mu_reduce(Eisenstein(1, 0), fld.modulus))
    rep.add("alpha^2 = alpha + rho in the quadratic extension", sq == expected)

    group_order, generator = mult_group_order_check(fld)
    orders_divide = True
    for elem in elems:
        if elem == fld.zero:
            continue
        if fld.pow(elem, group_order) != fld.one:
            orders_divide = False
    rep.add("multiplicative group has order 15 with a generator",
            group_order == 15 and generator is not None and orders_divide)

    axioms_ok = True
    for _ in range(100):
        x, y, z = (rng.choice(elems) for _ in range(3))
        if fld.mul(x, fld.add(y, z)) != fld.add(fld.mul(x, y), fld.mul(x, z)):
            axioms_ok = False
    invert_ok = all(
        any(fld.mul(x, y) == fld.one for y in elems)
        for x in elems
        if x != fld.zero
    )
    rep.add("distributivity sampled and all nonzero elements invert",
            axioms_ok and invert_ok)

    base3 = prime_field(BETA)
    base2 = prime_field(two)
    rep.add(
        "prime fields: |F| - 1 = 2 over 1-rho and 3 over 2",
        mult_group_order_check(base3)[0] == 2 and mult_group_order_check(base2)[0] == 3,
    )

    try:
        ext_field_build(two, [Eisenstein(0, 0), Eisenstein(0, 0), Eisenstein(1, 0)])
        rep.add("X^2 is rejected as reducible", False)
    except ReduciblePolynomial:
        rep.add("X^2 is rejected as reducible", True)

    mod2 = decompose(two)
    rep_code = span(mod2, [(Eisenstein(1, 0), Eisenstein(1, 0))])
    rep.add(
        "repetition code over the 4-element ring: 4 words, group, hex distance 2",
        len(rep_code) == 4
        and is_group_code(rep_code.codewords, mod2)
        and code_min_distance(rep_code, "hex") == 2,
    )

    mod7 = decompose(Eisenstein(3, 1))
    pair_code = span(mod7, [
        (Eisenstein(1, 0), Eisenstein(0, 0)),
        (Eisenstein(0, 0), Eisenstein(1, 0)),
    ])
    rep.add(
        "independent generators over a size-7 field give |R|^k words",
        len(pair_code) == 49 and is_group_code(pair_code.codewords, mod7),
    )
    return rep


SUITES = {
    "relnormhex": suite_relnormhex,
    "roundtrip": suite_roundtrip,
    "primitivity": suite_primitivity,
    "partition": suite_partition,
    "mannheim-oracle": suite_mannheim_oracle,
    "table5": suite_table5,
    "residue-tables": suite_residue_tables,
    "fields": suite_fields,
}


def run_suite(name: str, samples: int | None = None, seed: int = DEFAULT_SEED) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return fn(samples=samples, seed=seed)
