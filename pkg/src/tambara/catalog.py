"""Generator sets for the trace-ideal theorems, and a verifier for them.

Each catalog entry returns the generators exactly as the corresponding
theorem states them.  :func:`verify_theorem` saturates those generators and
compares the result, level by level, with an independently described ideal
(a Dress kernel where a finite-field model exists, otherwise the level-wise
description proved alongside the theorem).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from . import gw
from .burnside import BurnsideElement, inflate
from .dress import ExtensionSpec, card_kernel_level, dress
from .ideals import TambaraIdeal, ideal_from_levels, saturate, trace_ideal_finite_field, witness
from .lattice import IntLattice
from .numtheory import divisor_tuple, factorize, is_prime, prime_factors


@dataclass(frozen=True)
class GeneratorSet:
    N: int
    gens: tuple[BurnsideElement, ...] = ()

    def __post_init__(self):
        for g in self.gens:
            if g.N != self.N:
                raise ValueError(f"generator {g} lives over C_{g.N}, not C_{self.N}")

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def to_json(self) -> dict:
        return {"N": self.N, "gens": [g.to_json() for g in self.gens]}

    @classmethod
    def from_json(cls, obj) -> "GeneratorSet":
        try:
            N = int(obj["N"])
            gens = tuple(BurnsideElement.from_json(g) for g in obj["gens"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed generator set: {exc}") from exc
        return cls(N, gens)


class CatalogError(ValueError):
    pass


def _t(N, M, k, c=1):
    return BurnsideElement.t(N, M, k, c)


def _two_gen(N, M):
    """t_4 - t_2 - 2 at level M."""
    return _t(N, M, 4) - _t(N, M, 2) - 2


def _nonzero(*gens):
    return tuple(g for g in gens if not g.is_zero())


def _need(params, *names):
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise CatalogError(f"missing parameter(s): {', '.join(missing)}")
    return [params[n] for n in names]


def _odd_part(N):
    odd = [p for p in prime_factors(N) if p != 2]
    return odd


def _odd_cyclic(N):
    if N % 2 == 0:
        raise CatalogError(f"odd-cyclic needs odd N, got {N}")
    level = 1
    for p in prime_factors(N):
        level *= p
    x = BurnsideElement.zero(N, level)
    for p in prime_factors(N):
        x = x + _t(N, level, p) - p
    return GeneratorSet(N, _nonzero(x))


def _c2(tau):
    if not gw.is_valid_tau(tau):
        raise CatalogError(f"tau must be 0 or a power of two, got {tau}")
    return GeneratorSet(2, _nonzero((_t(2, 2, 2) - 2) * tau))


def _c4_nonembeddable(pi, tau_E):
    for v in (pi, tau_E):
        if v < 0:
            raise CatalogError("pi and tau_E must be non-negative")
    return GeneratorSet(4, _nonzero(
        _t(4, 4, 2, 2) - 4,
        (_t(4, 4, 4) - 4) * pi,
        (_t(4, 2, 2) - 2) * tau_E,
    ))


def _two_power_exponent(n):
    if n < 2:
        raise CatalogError(f"C_(2^n) entries need n >= 2, got {n}")
    return 2**n


def _twopowers_1(n):
    N = _two_power_exponent(n)
    return GeneratorSet(N, (_two_gen(N, 4),))


def _twopowers_2(n):
    if n < 3:
        raise CatalogError(f"case (2) needs n >= 3, got {n}")
    N = 2**n
    return GeneratorSet(N, (_t(N, 8, 4) - _t(N, 8, 2) - 2,))


def _two_part(N, mu, two_part, params):
    """Generators of the C_(2^mu) trace ideal, placed at the same levels of C_N."""
    if mu == 0:
        return ()
    if two_part is None:
        two_part = "c2" if mu == 1 else "twopowers-1"
    if two_part == "c2":
        if mu != 1:
            raise CatalogError("the c2 two-part needs exactly one factor of 2")
        tau = params.get("tau", 2)
        return tuple(BurnsideElement(N, 2, g.coeffs) for g in _c2(tau).gens)
    if two_part == "c4-nonembeddable":
        if mu != 2:
            raise CatalogError("the c4 two-part needs exactly two factors of 2")
        src = _c4_nonembeddable(*_need(params, "pi", "tau_E"))
    elif two_part in ("twopowers-1", "c4-embeddable"):
        if mu < 2:
            raise CatalogError(f"{two_part} needs 4 | N")
        return (_two_gen(N, 4),)
    elif two_part == "twopowers-2":
        if mu < 3:
            raise CatalogError("twopowers-2 needs 8 | N")
        return (_t(N, 8, 4) - _t(N, 8, 2) - 2,)
    else:
        raise CatalogError(f"unknown two-part {two_part!r}")
    return tuple(BurnsideElement(N, g.M, g.coeffs) for g in src.gens)


def _general_cyclic(N, two_part=None, **params):
    mu = dict(factorize(N)).get(2, 0)
    gens = list(_two_part(N, mu, two_part, {k: v for k, v in params.items() if v is not None}))
    odd = _odd_part(N)
    if odd:
        level = 1
        for p in odd:
            level *= p
        x = BurnsideElement.zero(N, level)
        for p in odd:
            x = x + _t(N, level, p) - p
        gens.append(x)
    return GeneratorSet(N, _nonzero(*gens))


def finite_field_level(N):
    """The level N-hat carrying the finite-field generator."""
    mu = dict(factorize(N)).get(2, 0)
    level = 2 ** min(mu, 2)
    for p in _odd_part(N):
        level *= p
    return level


def _finite_fields(N):
    mu = dict(factorize(N)).get(2, 0)
    level = finite_field_level(N)
    if mu <= 1:
        x = (_t(N, level, 2) - 2) * (2 * mu) if mu else BurnsideElement.zero(N, level)
    else:
        x = _two_gen(N, level)
    for p in _odd_part(N):
        x = x + _t(N, level, p) - p
    return GeneratorSet(N, _nonzero(x))


def _zp_truncated(p, depth):
    if not is_prime(p):
        raise CatalogError(f"{p} is not prime")
    if depth < 1:
        raise CatalogError("depth must be >= 1")
    N = p**depth
    gens = []
    for i in range(1, depth + 1):
        M = p**i
        if p != 2:
            gens.append(_t(N, M, p) - p)
        elif M >= 4:
            gens.append(_two_gen(N, M))
        else:
            # C_2 has no t_4; the level-wise description at 2^1 is t_2 + t_2 - 4.
            gens.append(_t(N, M, 2, 2) - 4)
    return GeneratorSet(N, tuple(gens))


def zhat_primes(n, literal=False):
    """Odd primes in the Z-hat generator: p <= n (all odd primes dividing n!).

    ``literal=True`` uses p < n instead, which drops n itself when n is prime.
    """
    bound = n if literal else n + 1
    return [p for p in range(3, bound) if is_prime(p)]


def _zhat_truncated(n, literal=False):
    if n < 4:
        raise CatalogError(f"Z-hat truncations start at n = 4, got {n}")
    N = factorial(n)
    primes = zhat_primes(n, literal)
    level = 4
    for p in primes:
        level *= p
    x = _two_gen(N, level)
    for p in primes:
        x = x + _t(N, level, p) - p
    return GeneratorSet(N, (x,))


def absolute_level(N):
    mu = dict(factorize(N)).get(2, 0)
    level = 2 ** min(mu, 3)
    for p in _odd_part(N):
        level *= p
    return level


def _absolute(N):
    mu = dict(factorize(N)).get(2, 0)
    lam = min(3, mu)
    level = absolute_level(N)
    x = BurnsideElement.zero(N, level)
    for p in _odd_part(N):
        x = x + _t(N, level, p) - p
    if lam == 1:
        x = x + _t(N, level, 2, 2) - 4
    elif lam >= 2:
        x = x + _two_gen(N, level)
    return GeneratorSet(N, _nonzero(x))


_CATALOG: dict[str, Callable[[dict], GeneratorSet]] = {
    "odd-cyclic": lambda P: _odd_cyclic(*_need(P, "N")),
    "c2": lambda P: _c2(*_need(P, "tau")),
    "c4-embeddable": lambda P: _twopowers_1(2),
    "c4-nonembeddable": lambda P: _c4_nonembeddable(*_need(P, "pi", "tau_E")),
    "twopowers-1": lambda P: _twopowers_1(*_need(P, "n")),
    "twopowers-2": lambda P: _twopowers_2(*_need(P, "n")),
    "general-cyclic": lambda P: _general_cyclic(*_need(P, "N"), **{
        k: v for k, v in P.items() if k in ("two_part", "tau", "pi", "tau_E")}),
    "zp-truncated": lambda P: _zp_truncated(*_need(P, "p", "depth")),
    "zhat-truncated": lambda P: _zhat_truncated(*_need(P, "n"), literal=bool(P.get("literal"))),
    "finite-fields": lambda P: _finite_fields(*_need(P, "N")),
    "absolute": lambda P: _absolute(*_need(P, "N")),
}

THEOREMS = tuple(_CATALOG)


def generator_catalog(theorem: str, **params) -> GeneratorSet:
    """Generators of the named theorem; parameters it does not use (like ``q``) are ignored."""
    try:
        build = _CATALOG[theorem]
    except KeyError:
        raise CatalogError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}") from None
    return build(params)


# -- verification --------------------------------------------------------------

@dataclass
class LevelReport:
    M: int
    expected: IntLattice
    computed: IntLattice
    equal: bool
    witness: tuple[int, ...] | None

    def to_json(self) -> dict:
        return {
            "expected": self.expected.to_json(),
            "computed": self.computed.to_json(),
            "equal": self.equal,
            "witness": list(self.witness) if self.witness is not None else None,
        }


@dataclass
class Report:
    theorem: str
    params: dict
    N: int
    relation: str  # "equal" or "subset" (computed inside expected)
    levels: list[LevelReport]
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(lv.equal for lv in self.levels) and all(ok for _, ok in self.checks)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "N": self.N,
            "relation": self.relation,
            "ok": self.ok,
            "levels": {str(lv.M): lv.to_json() for lv in self.levels},
            "checks": [{"name": name, "ok": ok} for name, ok in self.checks],
        }


def compare(expected: TambaraIdeal, computed: TambaraIdeal, relation: str = "equal") -> list[LevelReport]:
    out = []
    for M in divisor_tuple(expected.N):
        e, c = expected.levels[M], computed.levels[M]
        if relation == "equal":
            ok = e == c
            wit = None if ok else witness(e, c)
        else:
            wit = next((v for v in c.basis if not e.contains(v)), None)
            ok = wit is None
        out.append(LevelReport(M, e, c, ok, wit))
    return out


def _span_ideal(N, describe: Callable[[int], list[BurnsideElement]]) -> TambaraIdeal:
    return ideal_from_levels(N, {M: describe(M) for M in divisor_tuple(N)})


def _odd_description(N):
    # (t_i - i : i | M)
    return _span_ideal(N, lambda M: [_t(N, M, i) - i for i in divisor_tuple(M) if i > 1])


def _two_power_description(N):
    # (t_{2^i} + t_2 - 2^i - 2 : 1 <= i, 2^i | M): the upper bound, attained in case (1)
    return _span_ideal(N, lambda M: [
        _t(N, M, i) + _t(N, M, 2) - i - 2 for i in divisor_tuple(M) if i > 1
    ])


def _twopowers_2_description(N):
    def level(M):
        if M <= 2:
            return []
        if M == 4:
            return [_t(N, 4, 2, 2) - 4]
        return [_t(N, M, i) + _t(N, M, 2) - i - 2 for i in divisor_tuple(M) if 1 < i < M]
    return _span_ideal(N, level)


def _c4_description(pi, tau_E):
    return ideal_from_levels(4, {
        2: [(_t(4, 2, 2) - 2) * tau_E],
        4: [_t(4, 4, 2, 2) - 4, (_t(4, 4, 4) - 4) * pi],
    })


def tau_for_c2(r) -> int:
    return gw.tau_rational(Fraction(r))


def _chain_checks(specs: list[ExtensionSpec], ideals: list[TambaraIdeal]) -> list[tuple[str, bool]]:
    checks = []
    for (s0, I0), (s1, I1) in zip(zip(specs, ideals), zip(specs[1:], ideals[1:])):
        f = s1.modulus // s0.modulus
        ok = True
        for M, lat in I0.levels.items():
            for v in lat.basis:
                x = inflate(BurnsideElement.from_vector(I0.N, M, v), f)
                if not I1.member(x.M, x):
                    ok = False
        checks.append((f"ascending C_{s0.modulus} -> C_{s1.modulus}", ok))
    return checks


def _dress_zero_checks(spec: ExtensionSpec, gens: GeneratorSet) -> list[tuple[str, bool]]:
    out = []
    for g in gens:
        img = dress(g, spec)
        out.append((f"dress({g}) at level {g.M} is zero", (img.dim, img.det) == (0, 0)))
    return out


def verify_theorem(theorem: str, **params) -> Report:
    """Saturate the catalog generators and compare with the theorem's ideal."""
    q = params.get("q", 3)
    if theorem in ("finite-fields", "general-cyclic", "absolute"):
        (N,) = _need(params, "N")
        gens = generator_catalog(theorem, **params)
        spec = ExtensionSpec.finite(q, N)
        expected = trace_ideal_finite_field(spec)
        relation = "subset" if theorem == "absolute" else "equal"
        computed = saturate(N, gens)
        rep = Report(theorem, params, N, relation, compare(expected, computed, relation))
        rep.checks.extend(_dress_zero_checks(spec, gens))
        return rep
    if theorem == "odd-ker-card":
        (N,) = _need(params, "N")
        gens = generator_catalog("odd-cyclic", N=N)
        spec = ExtensionSpec.finite(q, N)
        expected = TambaraIdeal(N, {M: card_kernel_level(M) for M in divisor_tuple(N)})
        computed = saturate(N, gens)
        rep = Report(theorem, params, N, "equal", compare(expected, computed))
        kernel = trace_ideal_finite_field(spec)
        rep.checks.append(("Dress kernel equals ker(card)", kernel == expected))
        return rep
    if theorem == "odd-cyclic":
        (N,) = _need(params, "N")
        computed = saturate(N, generator_catalog(theorem, N=N))
        return Report(theorem, params, N, "equal", compare(_odd_description(N), computed))
    if theorem in ("c2", "c2-rational"):
        if theorem == "c2-rational":
            (r,) = _need(params, "r")
            tau = tau_for_c2(r)
        else:
            (tau,) = _need(params, "tau")
        computed = saturate(2, generator_catalog("c2", tau=tau))
        expected = ideal_from_levels(2, {2: [(_t(2, 2, 2) - 2) * tau]})
        rep = Report(theorem, params, 2, "equal", compare(expected, computed))
        rep.checks.append((f"tau = {tau}", True))
        return rep
    if theorem in ("c4-embeddable", "twopowers-1"):
        n = 2 if theorem == "c4-embeddable" else _need(params, "n")[0]
        N = 2**n
        computed = saturate(N, generator_catalog(theorem, n=n))
        rep = Report(theorem, params, N, "equal", compare(_two_power_description(N), computed))
        kernel = trace_ideal_finite_field(ExtensionSpec.finite(q, N))
        rep.checks.append((f"equals the trace ideal of F_{q}^{N}/F_{q}", kernel == computed))
        return rep
    if theorem == "twopowers-2":
        (n,) = _need(params, "n")
        N = 2**n
        computed = saturate(N, generator_catalog(theorem, n=n))
        return Report(theorem, params, N, "equal", compare(_twopowers_2_description(N), computed))
    if theorem == "c4-nonembeddable":
        pi, tau_E = _need(params, "pi", "tau_E")
        computed = saturate(4, generator_catalog(theorem, pi=pi, tau_E=tau_E))
        return Report(theorem, params, 4, "equal", compare(_c4_description(pi, tau_E), computed))
    if theorem == "zp-truncated":
        p, depth = _need(params, "p", "depth")
        specs = [ExtensionSpec.zp(q, p, d) for d in range(1, depth + 1)]
        ideals = [saturate(s.modulus, generator_catalog(theorem, p=p, depth=d))
                  for d, s in enumerate(specs, 1)]
        kernels = [trace_ideal_finite_field(s) for s in specs]
        top = specs[-1]
        rep = Report(theorem, params, top.modulus, "equal", compare(kernels[-1], ideals[-1]))
        for s, I, K in zip(specs[:-1], ideals[:-1], kernels[:-1]):
            rep.checks.append((f"depth {s.depth} equals the Dress kernel", I == K))
        rep.checks.extend(_chain_checks(specs, ideals))
        if p == 2:
            N = top.modulus
            for M in divisor_tuple(N):
                if M >= 4:
                    rep.checks.append((f"t_4 - t_2 - 2 at level {M}", ideals[-1].member(M, _two_gen(N, M))))
        return rep
    if theorem == "zhat-truncated":
        (n,) = _need(params, "n")
        lo = params.get("start", 4)
        specs = [ExtensionSpec.zhat(q, d) for d in range(lo, n + 1)]
        literal = bool(params.get("literal", False))
        ideals = [saturate(s.modulus, generator_catalog(theorem, n=s.depth, literal=literal))
                  for s in specs]
        kernels = [trace_ideal_finite_field(s) for s in specs]
        rep = Report(theorem, params, specs[-1].modulus, "equal", compare(kernels[-1], ideals[-1]))
        for s, I, K in zip(specs[:-1], ideals[:-1], kernels[:-1]):
            rep.checks.append((f"n = {s.depth} equals the Dress kernel", I == K))
        rep.checks.extend(_chain_checks(specs, ideals))
        return rep
    raise CatalogError(f"no verifier for {theorem!r}")


VERIFIABLE = (
    "finite-fields", "general-cyclic", "absolute", "odd-ker-card", "odd-cyclic", "c2",
    "c2-rational", "c4-embeddable", "c4-nonembeddable", "twopowers-1", "twopowers-2",
    "zp-truncated", "zhat-truncated",
)


def twopowers_case3_condition(q: int, n: int) -> dict[int, bool]:
    """For F_{q^(2^n)}/F_q: whether tr(t_4 - t_2 - 2) from level 4 to 2^m maps to zero.

    This is the defining condition of the index in the third case of the
    2-power classification.  Over a finite field it holds at every m, since
    t_4 - t_2 - 2 already lies in the kernel at level 4.
    """
    N = 2**n
    spec = ExtensionSpec.finite(q, N)
    out = {}
    for m in range(3, n + 1):
        y = _two_gen(N, 4).transfer(2**m)
        img = dress(y, spec)
        out[m] = (img.dim, img.det) == (0, 0)
    return out
