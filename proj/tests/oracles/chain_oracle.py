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

"""Exact increment laws of the four chains on PSL2(p) and the alpha-decomposition test."""
import itertools
from fractions import Fraction
from psl2_oracle import canon, mul, inv, T

def law_word(mu, p, pattern):
    """pattern: sequence of +1/-1; returns law of g1^{e1} ... g6^{e6} with iid gi ~ mu."""
    e = canon((1, 0, 0, 1), p)
    law = {e: Fraction(1)}
    for s in pattern:
        new = {}
        for h, w in law.items():
            for g, q in mu.items():
                x = mul(h, g if s > 0 else inv(g, p), p)
                new[x] = new.get(x, 0) + w * q
        law = new
    return law

def check(p, table, lam=0):
    mu1 = {}
    for v, q in table.items():
        g = T(lam - v, p); mu1[g] = mu1.get(g, 0) + q
    top = sorted(table.items(), key=lambda t: (-t[1], t[0]))[:2]
    alpha = min(top[0][1], top[1][1])
    mu4base = {}
    for v, _ in top:
        g = T(lam - v, p); mu4base[g] = mu4base.get(g, 0) + Fraction(1, 2)
    pat = [-1, -1, -1, 1, 1, 1]
    mu3 = law_word(mu1, p, pat); mu4 = law_word(mu4base, p, pat)
    keys = set(mu3) | set(mu4)
    worst = min(mu3.get(g, 0) - alpha * mu4.get(g, 0) for g in keys)
    return alpha, worst >= 0, worst, len(mu4)

if __name__ == "__main__":
    print(check(5, {0: Fraction(1, 2), 1: Fraction(1, 2)}))
    print(check(5, {0: Fraction(2, 5), 1: Fraction(3, 5)}))
    print(check(7, {0: Fraction(2, 5), 1: Fraction(3, 5)}))
