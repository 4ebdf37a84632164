"""Finite truncations of the "spider" relation over GF(2).

Orbit ``k`` has nodes ``e[k, s]`` for ``-k <= s <= k``, with every ``e[k, 0]``
identified with one shared hub ``e0``, and arcs ``e[k, s] -> e[k, s + 1]`` for
``s < k``.  The terminal nodes ``e[k, k]`` carry no outgoing arc.  Orbits
above the truncation bound ``N`` are simply absent.

In infinite dimension this relation has ``gim = {0, e0}`` and the inclusions
``gim <= alpha(gim)`` fail.  On a finite truncation every path runs out after
at most ``2N`` steps, so ``alpha^l(A)`` and ``alpha^{-l}(A)`` shrink to ``{0}``:
there ``gim = {0}``, the inclusions hold, and the Leray form is the zero
object.  :func:`verify_appendix` reports that contrast.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from . import relation as rel
from . import subspace as sp
from .dynamics import EndoObject, NormalityError, gim, leray
from .relation import LinearRelation
from .subspace import DTYPE, Subspace

MAX_ORBITS = 8
P = 2


@dataclass(frozen=True, order=True)
class SpiderIndex:
    orbit: int
    position: int

    def __post_init__(self):
        if self.orbit < 1 or abs(self.position) > self.orbit:
            raise ValueError(f"no node e[{self.orbit}, {self.position}]")

    @property
    def is_hub(self) -> bool:
        return self.position == 0


@dataclass(frozen=True)
class TruncatedSpider:
    orbits: int
    obj: EndoObject
    coords: dict

    @property
    def dim(self) -> int:
        return self.obj.dim

    @property
    def alpha(self) -> LinearRelation:
        return self.obj.alpha

    def coord(self, orbit: int, position: int) -> int:
        return self.coords[SpiderIndex(orbit, position) if position else "hub"]

    def unit(self, orbit: int, position: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=DTYPE)
        v[self.coord(orbit, position)] = 1
        return v

    @property
    def hub(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=DTYPE)
        v[self.coords["hub"]] = 1
        return v


def build_spider(orbits: int) -> TruncatedSpider:
    """The truncation with orbits ``1..orbits``; carrier dimension ``N(N+1) + 1``."""
    if not 1 <= orbits <= MAX_ORBITS:
        raise sp.GuardError(f"orbit bound must lie in [1, {MAX_ORBITS}], got {orbits}")
    coords: dict = {"hub": 0}
    for k in range(1, orbits + 1):
        for s in range(-k, k + 1):
            if s:
                coords[SpiderIndex(k, s)] = len(coords)
    n = len(coords)

    def at(k, s):
        return coords[SpiderIndex(k, s)] if s else 0

    arcs = []
    for k in range(1, orbits + 1):
        for s in range(-k, k):
            row = np.zeros(2 * n, dtype=DTYPE)
            row[at(k, s)] = 1
            row[n + at(k, s + 1)] = 1
            arcs.append(row)
    alpha = rel.from_generators(P, n, n, np.array(arcs))
    return TruncatedSpider(orbits, EndoObject(alpha), coords)


def expected_power_kernel(spider: TruncatedSpider, k: int, backward: bool = False) -> Subspace:
    """Closed form of ``alpha^k(0)`` (or ``alpha^{-k}(0)`` when ``backward``).

    Spanned by ``e[s, i] + e[s', i]`` for ``i <= s < s' <= N`` and ``1 <= i <= k``,
    i.e. even-size sums taken level by level.
    """
    n_orb = spider.orbits
    if not 1 <= k <= n_orb:
        raise ValueError(f"power {k} outside [1, {n_orb}]")
    sign = -1 if backward else 1
    gens = []
    for i in range(1, k + 1):
        for s in range(i, n_orb + 1):
            for t in range(s + 1, n_orb + 1):
                gens.append(spider.unit(s, sign * i) + spider.unit(t, sign * i))
    return sp.span(gens, spider.dim, P)


def coset_law_holds(alpha_k: LinearRelation, x: np.ndarray, kernel_k: Subspace) -> bool:
    """``alpha^k(x) == y + alpha^k(0)`` for a particular ``y``, checked two ways.

    Every ``y + n`` with ``n`` in ``alpha^k(0)`` must be related to ``x``, and
    the image of ``span{x}`` must equal ``span({y} + alpha^k(0))``.
    """
    y = rel.apply(alpha_k, x)
    line = sp.span([x], alpha_k.dim_dom, P)
    if y is None:
        return rel.image(alpha_k, line) == kernel_k
    for n in kernel_k.elements():
        if not alpha_k.contains(x, (y + np.asarray(n, DTYPE)) % P):
            return False
    return rel.image(alpha_k, line) == sp.span([y], alpha_k.dim_cod, P) + kernel_k


def verify_appendix(orbits: int, max_power: int | None = None, samples: int = 8, seed: int = 0) -> dict:
    """Check the closed forms, the coset law, and normality on a truncation.

    Returns a JSON-ready report ``{"checks": [...], "passed": bool, ...}``.
    """
    spider = build_spider(orbits)
    max_power = orbits if max_power is None else max_power
    if not 1 <= max_power <= orbits:
        raise ValueError(f"max power {max_power} outside [1, {orbits}]")
    alpha = spider.alpha
    rng = random.Random(seed)
    checks = []

    def record(name, ok, **info):
        checks.append({"check": name, "passed": bool(ok), **info})

    forward = sp.zero(spider.dim, P)
    backward = sp.zero(spider.dim, P)
    inv = rel.inverse(alpha)
    for k in range(1, max_power + 1):
        forward = rel.image(alpha, forward)
        backward = rel.image(inv, backward)
        for direction, got in (("forward", forward), ("backward", backward)):
            want = expected_power_kernel(spider, k, backward=direction == "backward")
            record(f"{direction}_kernel_k{k}", got == want, computed_dim=got.dim, expected_dim=want.dim)

        ak = rel.power(alpha, k)
        points = [spider.hub, spider.unit(1, -1), spider.unit(orbits, -orbits)]
        points += [np.array([rng.randrange(P) for _ in range(spider.dim)], DTYPE) for _ in range(samples)]
        ok = all(coset_law_holds(ak, x, forward) for x in points)
        record(f"coset_law_k{k}", ok, samples=len(points))

    g = gim(spider.obj)
    hub_line = sp.span([spider.hub], spider.dim, P)
    # the infinite spider has gim = {0, e0}
    record("gim_contrast", g != hub_line, gim_dim=g.dim, infinite_gim_dim=hub_line.dim)
    record("gim_forward_inclusion", g <= rel.image(alpha, g))
    record("gim_backward_inclusion", g <= rel.image(inv, g))
    try:
        form = leray(spider.obj)
        record("leray_normal", True, leray_dim=form.dim)
    except NormalityError as exc:
        record("leray_normal", False, error=str(exc))

    return {
        "orbits": orbits,
        "max_power": max_power,
        "dim": spider.dim,
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }
