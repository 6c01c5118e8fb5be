"""Conjugator synthesis for finite-order elements.

Any two finite cyclic subgroups of the same order are conjugate, and the
conjugation can be realized constructively: normalize the generator so its
rotation number is 1/q, map the fundamental arc [0, g(0)] onto [0, 1/2] by a
canonical dyadic PL map, and extend equivariantly so that g is carried
exactly onto the standard pseudo-rotation of order q.
"""

from __future__ import annotations

from .dyadic import Dyadic, ZERO, ONE, HALF
from .dynamics import TorsionCertificate
from .element import (
    CircleElement,
    canonical_dpl_through,
    identity,
    pseudo_rotation,
    _from_lift_nodes,
)
from .errors import DomainError


def normalize_generator(cert: TorsionCertificate) -> CircleElement:
    """The power g^s generating the same subgroup with rotation number 1/q."""
    if cert.q == 1:
        return cert.g
    s = pow(cert.p, -1, cert.q)
    return cert.g**s


def _lift_power(g: CircleElement, j: int, v: Dyadic) -> Dyadic:
    for _ in range(j):
        v = g.lift(v)
    return v


def conjugator_to_pseudo_rotation(cert: TorsionCertificate) -> CircleElement:
    """An element h with h * g' * h^-1 equal to the order-q pseudo-rotation.

    Here g' is the normalized generator.  Its orbit points c_0 = 0 < c_1 <
    ... < c_{q-1} appear in increasing circle order, so the arcs [c_j, c_j+1]
    tile the circle and g' sends each onto the next.  We choose a dyadic PL
    map h0 from [0, c_1] onto [0, 1/2] that carries the orbit closure of the
    breakpoints of g' inside the first arc to the canonical targets
    (1 - 2^-i)/2, then transport it to the j-th arc by h = gamma^j o h0 o
    g'^-j.  The transported pieces agree at the arc endpoints, and the glued
    map intertwines g' with the pseudo-rotation by construction.
    """
    q = cert.q
    if q < 2:
        raise DomainError("conjugation to a pseudo-rotation needs order >= 2")
    gp = normalize_generator(cert)
    gp_pow = [identity()]
    for _ in range(q - 1):
        gp_pow.append(gp_pow[-1] * gp)
    c = [gp_pow[j](ZERO) for j in range(q)]

    marked = set(c)
    for bx, _ in gp.breakpoints:
        y = bx
        for _ in range(q):
            marked.add(y)
            y = gp(y)
    interior = sorted(x for x in marked if ZERO < x < c[1])
    targets = [Dyadic((1 << i) - 1, i + 1) for i in range(1, len(interior) + 1)]
    h0 = canonical_dpl_through([ZERO, *interior, c[1]], [ZERO, *targets, HALF])

    gamma = pseudo_rotation(q)
    gamma_pow = [identity()]
    gp_inv_pow = [identity()]
    gp_inv = gp.inverse()
    for _ in range(q - 1):
        gamma_pow.append(gamma_pow[-1] * gamma)
        gp_inv_pow.append(gp_inv_pow[-1] * gp_inv)

    nodes = []
    for j in range(q):
        lo = c[j]
        hi = c[j + 1] if j + 1 < q else ONE
        cand = {lo}
        for u, _ in h0.nodes:
            img = gp_pow[j](u)
            if lo <= img < hi:
                cand.add(img)
        for bx, _ in gp_inv_pow[j].breakpoints:
            if lo <= bx < hi:
                cand.add(bx)
        for w, _ in gamma_pow[j].breakpoints:
            if ZERO <= w <= HALF:
                x = gp_pow[j](h0.inv_at(w))
                if lo <= x < hi:
                    cand.add(x)
        for x in sorted(cand):
            v = gp_inv_pow[j](x)
            nodes.append((x, _lift_power(gamma, j, h0.at(v))))
    return _from_lift_nodes(nodes)


def subgroup_conjugator(cert1: TorsionCertificate, cert2: TorsionCertificate) -> CircleElement:
    """w with w * g1' * w^-1 = g2' exactly, for normalized generators g_i'."""
    if cert1.q != cert2.q:
        raise DomainError(f"subgroup orders differ: {cert1.q} vs {cert2.q}")
    if cert1.q == 1:
        return identity()
    h1 = conjugator_to_pseudo_rotation(cert1)
    h2 = conjugator_to_pseudo_rotation(cert2)
    return h2.inverse() * h1
