# Copyright 2026 The tdlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference values for the sampling and Chebotarev tests.

Reimplements the stream seeding, xoshiro256** and exact inversion sampling,
builds the characteristic polynomial with sympy's generic charpoly and
looks for Galois witnesses by factoring reductions with sympy.
"""
import math
from fractions import Fraction

import sympy as sp

M64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def splitmix(state):
    state = (state + GOLDEN) & M64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M64
    return state, z ^ (z >> 31)


def rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & M64


class Xoshiro:
    def __init__(self, seed):
        st = seed
        self.s = []
        for _ in range(4):
            st, z = splitmix(st)
            self.s.append(z)

    def next(self):
        s = self.s
        result = (rotl((s[1] * 5) & M64, 7) * 9) & M64
        t = (s[1] << 17) & M64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = rotl(s[3], 45)
        return result


def stream_seed(master, index):
    return splitmix(master ^ (((index + 1) * GOLDEN) & M64))[1]


def draw_values(table, count, master, index):
    rng = Xoshiro(stream_seed(master, index))
    out = []
    for _ in range(count):
        u = Fraction(rng.next() >> 11, 1 << 53)
        cum = Fraction(0)
        for value, weight in table:
            cum += weight
            if u < cum:
                out.append(value)
                break
    return out


def charpoly_tridiag(diag, off):
    n = len(diag)
    m = sp.zeros(n, n)
    for i in range(n):
        m[i, i] = diag[i]
    for i in range(n - 1):
        m[i, i + 1] = m[i + 1, i] = off[i]
    lam = sp.Symbol("x")
    return sp.Poly(m.charpoly(lam).as_expr(), lam)


def witnesses(poly, budget=10000):
    x = poly.gens[0]
    n = poly.degree()
    irr = jor = None
    q_found = None
    tried = 0
    common = set(range(n + 1))
    p = 2
    while tried < budget and (irr is None and common != {0, n} or jor is None):
        p = sp.nextprime(p)
        f = sp.Poly(poly.as_expr(), x, modulus=p)
        if sp.gcd(f, f.diff(x)).degree() > 0:
            continue
        tried += 1
        degs = sorted(g.degree() for g, e in f.factor_list()[1] for _ in range(e))
        sums = {0}
        for dg in degs:
            sums |= {t + dg for t in sums}
        common &= sums
        if irr is None and degs == [n]:
            irr = p
        if jor is None:
            for q in degs:
                if 2 * q > n and q <= n - 3 and sp.isprime(q) and degs.count(q) == 1 and all(d == q or d % q for d in degs):
                    jor, q_found = p, q
                    break
    return irr, jor, q_found, tried


def chebotarev_closed_forms(x):
    primes = list(sp.primerange(x + 1, 2 * x + 1))
    a1_lin = sum(math.log(p) for p in primes if p > 5) / x
    a1_sq = sum(2 * math.log(p) for p in primes if p > 5 and p % 4 == 1) / x
    a2_cyc = sum(12 * math.log(p) for p in primes if p > 5 and p % 5 == 1) / x
    return a1_lin, a1_sq, a2_cyc


if __name__ == "__main__":
    bern = [(0, Fraction(1, 2)), (1, Fraction(1, 2))]
    d = draw_values(bern, 30, 0, 0)
    print("seed 0 index 0 n=30 diag:", "".join(map(str, d)))
    print("seed 7 index 3 three-atom:", draw_values([(-1, Fraction(1, 6)), (0, Fraction(1, 3)), (2, Fraction(1, 2))], 12, 7, 3))
    for index in range(10):
        d = draw_values(bern, 30, 0, index)
        P = charpoly_tridiag(d, [1] * 29)
        factors = sp.factor_list(P.as_expr())[1]
        print("index", index, "factor degrees over Q:", sorted(sp.degree(f) for f, e in factors))
        if len(factors) == 1:
            break
    print("first irreducible index:", index, "diag:", "".join(map(str, d)))
    disc = sp.discriminant(P)
    print("disc > 0:", disc > 0, " square:", sp.integer_nthroot(disc, 2)[1])
    print("witnesses (irr, jordan, q, tried):", witnesses(P))
    print("A_1(x-3), A_1(x^2+1), A_2(cyclotomic 5) at 1e4:", chebotarev_closed_forms(10000))
    print("log 11 = %.17g" % math.log(11))
