"""Buchberger's algorithm with cofactor tracking and unit-ideal certificates.

Every basis element carries an exact expression over the original
generators, so ideal membership answers come with replayable proofs that
re-expand using only ring arithmetic (never trusting the search).
Pair pruning follows Gebauer-Moeller, selection is the normal strategy.
"""

from __future__ import annotations

import heapq

from .poly import Poly, RingError


class GroebnerError(RuntimeError):
    pass


class GroebnerCapError(GroebnerError):
    """Raised when the S-polynomial reduction budget is exhausted."""


class NotUnitIdealError(GroebnerError):
    """contains_one on an ideal whose reduced basis is not {1}."""


DEFAULT_CAP = 10**6


class MembershipCertificate:
    """Cofactors expressing target = sum(cofactor_i * generator_i) exactly."""

    def __init__(self, generators, cofactors, target):
        if len(generators) != len(cofactors):
            raise ValueError("generator/cofactor length mismatch")
        self.generators = tuple(generators)
        self.cofactors = tuple(cofactors)
        self.target = target

    def expand(self):
        acc = self.target.ring.zero
        for c, g in zip(self.cofactors, self.generators):
            acc = acc + c * g
        return acc

    def verify(self):
        """Exact re-expansion in the free ring; independent of any search."""
        return self.expand() == self.target

    def check(self):
        if not self.verify():
            raise GroebnerError("membership certificate failed re-expansion")
        return self

    def to_json(self):
        return {
            "generators": [g.format() for g in self.generators],
            "cofactors": [c.format() for c in self.cofactors],
            "target": self.target.format(),
        }


class GroebnerBasis:
    """Reduced basis plus one cofactor row per element over the input generators."""

    def __init__(self, generators, basis, rows, reductions):
        self.generators = tuple(generators)
        self.basis = tuple(basis)
        self.rows = tuple(tuple(r) for r in rows)
        self.reductions = reductions

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def certificate_for(self, i):
        return MembershipCertificate(self.generators, self.rows[i], self.basis[i])

    def is_unit_ideal(self):
        return len(self.basis) == 1 and self.basis[0] == self.basis[0].ring.one

    def reduce(self, p):
        return p.normal_form(list(self.basis))


def _monomial_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _reduce_tracked(p, basis, lms, budget):
    """Full normal form of p against basis; returns (remainder, quotients, steps).

    quotients[i] satisfies p = sum(quotients[i] * basis[i]) + remainder.
    """
    ring = p.ring
    dom = ring.domain
    zero = dom.zero
    mul, add, neg = dom.mul, dom.add, dom.neg
    if ring.order == "degrevlex":
        def hkey(m):
            return (-sum(m), tuple(reversed(m)))
    else:
        def hkey(m):
            return tuple(-e for e in m)

    work = dict(p.terms)
    rem = {}
    quots = [None] * len(basis)
    heap = [(hkey(m), m) for m in work]
    heapq.heapify(heap)
    in_heap = set(work)
    steps = 0
    while heap:
        _, m = heapq.heappop(heap)
        in_heap.discard(m)
        c = work.get(m)
        if c is None:
            continue
        hit = -1
        for i, lm in enumerate(lms):
            if _monomial_divides(lm, m):
                hit = i
                break
        if hit < 0:
            rem[m] = c
            del work[m]
            continue
        steps += 1
        if steps > budget:
            raise GroebnerCapError("reduction step budget exhausted")
        g = basis[hit]
        shift = tuple(a - b for a, b in zip(m, lms[hit]))
        factor = mul(c, dom.inv(g.terms[lms[hit]]))
        q = quots[hit]
        if q is None:
            q = quots[hit] = {}
        q[shift] = add(q.get(shift, zero), factor)
        del work[m]
        for gm, gc in g.terms.items():
            t = _monomial_mul(gm, shift)
            if t == m:
                continue
            acc = add(work.get(t, zero), neg(mul(factor, gc)))
            if acc == zero:
                work.pop(t, None)
            else:
                work[t] = acc
                if t not in in_heap:
                    heapq.heappush(heap, (hkey(t), t))
                    in_heap.add(t)
    qpolys = [ring.zero if q is None else Poly(ring, q) for q in quots]
    return Poly(ring, rem), qpolys, steps


def _update_pairs(pairs, lms, new_index, order_key):
    """Gebauer-Moeller pair update when basis element new_index arrives."""
    lmf = lms[new_index]
    kept = set()
    for (i, j) in pairs:
        lcm_ij = _monomial_lcm(lms[i], lms[j])
        if (not _monomial_divides(lmf, lcm_ij)
                or _monomial_lcm(lms[i], lmf) == lcm_ij
                or _monomial_lcm(lms[j], lmf) == lcm_ij):
            kept.add((i, j))
    by_lcm = {}
    for i in range(new_index):
        by_lcm.setdefault(_monomial_lcm(lms[i], lmf), []).append(i)
    minimal = []
    for L in sorted(by_lcm, key=order_key):
        if all(not _monomial_divides(L0, L) for L0 in minimal):
            minimal.append(L)
    for L in minimal:
        if any(_monomial_lcm(lms[i], lmf) == _monomial_mul(lms[i], lmf) for i in by_lcm[L]):
            continue  # a coprime pair with this lcm reduces to zero anyway
        kept.add((min(by_lcm[L]), new_index))
    return kept


def buchberger(generators, cap=DEFAULT_CAP, stop_at_unit=False):
    """Reduced Groebner basis with exact cofactor rows over the input.

    cap bounds the number of single reduction steps plus S-pair
    reductions; exceeding it raises GroebnerCapError rather than
    silently truncating.  With stop_at_unit, the run short-circuits as
    soon as a nonzero constant enters the basis.
    """
    gens = list(generators)
    if not gens:
        return GroebnerBasis(gens, [], [], 0)
    ring = gens[0].ring
    for g in gens:
        if g.ring is not ring:
            raise RingError("generators live in different rings")
        if any(e < 0 for m in g.terms for e in m):
            raise RingError("Laurent generator; clear denominators first")
    dom = ring.domain
    order_key = ring.order_key

    def unit_row(i, scale):
        row = [ring.zero] * len(gens)
        row[i] = ring.const(scale)
        return row

    basis = []        # current polynomials (monic)
    rows = []         # cofactor rows over gens
    lms = []
    alive = []        # indices usable as reducers (append-only during the run)
    pairs = set()
    reductions = 0

    def push(p, row):
        nonlocal pairs
        lm, lc = p.leading()
        inv = dom.inv(lc)
        p = p.scale(inv)
        row = [r.scale(inv) for r in row]
        basis.append(p)
        rows.append(row)
        lms.append(lm)
        idx = len(basis) - 1
        pairs = _update_pairs(pairs, lms, idx, order_key)
        alive.append(idx)
        return idx

    unit_hit = None
    for i, g in enumerate(gens):
        if g.is_zero():
            continue
        live = [basis[k] for k in alive]
        live_lms = [lms[k] for k in alive]
        r, quots, steps = _reduce_tracked(g, live, live_lms, cap - reductions)
        reductions += steps
        row = unit_row(i, dom.one)
        for q, k in zip(quots, alive):
            if not q.is_zero():
                row = [a - q * b for a, b in zip(row, rows[k])]
        if r.is_zero():
            continue
        idx = push(r, row)
        if stop_at_unit and r.is_constant():
            unit_hit = idx
            break

    while pairs and unit_hit is None:
        i, j = min(pairs, key=lambda p: order_key(_monomial_lcm(lms[p[0]], lms[p[1]])))
        pairs.discard((i, j))
        reductions += 1
        if reductions > cap:
            raise GroebnerCapError(f"S-polynomial budget {cap} exhausted")
        lcm = _monomial_lcm(lms[i], lms[j])
        si = basis[i].mul_term(tuple(a - b for a, b in zip(lcm, lms[i])), dom.one)
        sj = basis[j].mul_term(tuple(a - b for a, b in zip(lcm, lms[j])), dom.one)
        s = si - sj
        if s.is_zero():
            continue
        live = [basis[k] for k in alive]
        live_lms = [lms[k] for k in alive]
        r, quots, steps = _reduce_tracked(s, live, live_lms, cap - reductions)
        reductions += steps
        if r.is_zero():
            continue
        mi = tuple(a - b for a, b in zip(lcm, lms[i]))
        mj = tuple(a - b for a, b in zip(lcm, lms[j]))
        row = [a.mul_term(mi, dom.one) - b.mul_term(mj, dom.one)
               for a, b in zip(rows[i], rows[j])]
        for q, k in zip(quots, alive):
            if not q.is_zero():
                row = [a - q * b for a, b in zip(row, rows[k])]
        idx = push(r, row)
        if stop_at_unit and r.is_constant():
            unit_hit = idx
            break

    if unit_hit is not None:
        c = basis[unit_hit].constant_coefficient()
        inv = dom.inv(c)
        row = [r.scale(inv) for r in rows[unit_hit]]
        return GroebnerBasis(gens, [ring.one], [row], reductions)

    # minimalize: keep only leading monomials not divisible by another
    keep = []
    for k in sorted(alive, key=lambda k: order_key(lms[k])):
        if all(not _monomial_divides(lms[k2], lms[k]) for k2 in keep):
            keep.append(k)

    # interreduce, updating rows through each elimination
    red_polys = [basis[k] for k in keep]
    red_rows = [list(rows[k]) for k in keep]
    changed = True
    while changed:
        changed = False
        for a in range(len(red_polys)):
            others = red_polys[:a] + red_polys[a + 1:]
            if not others:
                continue
            other_lms = [p.leading()[0] for p in others]
            r, quots, steps = _reduce_tracked(red_polys[a], others, other_lms, cap)
            if r == red_polys[a]:
                continue
            changed = True
            if r.is_zero():
                del red_polys[a], red_rows[a]
                break
            row = red_rows[a]
            other_rows = red_rows[:a] + red_rows[a + 1:]
            for q, orow in zip(quots, other_rows):
                if not q.is_zero():
                    row = [x - q * y for x, y in zip(row, orow)]
            lm, lc = r.leading()
            inv = dom.inv(lc)
            red_polys[a] = r.scale(inv)
            red_rows[a] = [x.scale(inv) for x in row]
            break

    ordered = sorted(range(len(red_polys)),
                     key=lambda a: order_key(red_polys[a].leading()[0]),
                     reverse=True)
    return GroebnerBasis(gens,
                         [red_polys[a] for a in ordered],
                         [red_rows[a] for a in ordered],
                         reductions)


def contains_one(generators, cap=DEFAULT_CAP):
    """Unit-ideal certificate: cofactors c_i with sum(c_i * g_i) = 1 exactly.

    Raises NotUnitIdealError when the reduced basis is not {1}.  The
    returned certificate is re-expanded before being handed back.
    """
    gens = list(generators)
    if not gens:
        raise NotUnitIdealError("not-unit-ideal: empty generator list")
    gb = buchberger(gens, cap=cap, stop_at_unit=True)
    if not gb.is_unit_ideal():
        raise NotUnitIdealError("not-unit-ideal")
    ring = gens[0].ring
    cert = MembershipCertificate(gens, gb.rows[0], ring.one)
    return cert.check()


def membership(target, generators, cap=DEFAULT_CAP):
    """Certificate that target lies in the ideal, or NotUnitIdealError-style failure."""
    gens = list(generators)
    gb = buchberger(gens, cap=cap)
    r, quots, _ = _reduce_tracked(target, list(gb.basis), [p.leading()[0] for p in gb.basis], cap)
    if not r.is_zero():
        raise GroebnerError("membership failure: nonzero normal form")
    ring = target.ring
    row = [ring.zero] * len(gens)
    for q, brow in zip(quots, gb.rows):
        if q.is_zero():
            continue
        row = [a + q * b for a, b in zip(row, brow)]
    return MembershipCertificate(gens, row, target).check()
