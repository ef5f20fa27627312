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

"""Independent PSL2(p) oracles: BFS closure sizes, Cayley diameters, chain-1 decay."""
import itertools, sys
from fractions import Fraction

def canon(m, p):
    a, b, c, d = (x % p for x in m)
    for x in (a, b, c, d):
        if x:
            if x > (p - 1) // 2:
                return ((-a) % p, (-b) % p, (-c) % p, (-d) % p)
            return (a, b, c, d)
    raise ValueError

def mul(x, y, p):
    a, b, c, d = x; e, f, g, h = y
    return canon((a*e + b*g, a*f + b*h, c*e + d*g, c*f + d*h), p)

def inv(x, p):
    a, b, c, d = x
    return canon((d, -b, -c, a), p)

def T(l, p):
    return canon((l, -1, 1, 0), p)

def bfs(gens, p):
    e = canon((1, 0, 0, 1), p)
    dist = {e: 0}; frontier = [e]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                x = mul(g, h, p)
                if x not in dist:
                    dist[x] = dist[h] + 1; nxt.append(x)
        frontier = nxt
    return dist

def words(S, Sinv, p, left, right):
    out = set()
    for w1 in itertools.product(S if left > 0 else Sinv, repeat=abs(left)):
        for w2 in itertools.product(Sinv if right < 0 else S, repeat=abs(right)):
            x = canon((1, 0, 0, 1), p)
            for g in w1 + w2:
                x = mul(x, g, p)
            out.add(x)
    return out

if __name__ == "__main__":
    p = 5
    S = [T(0 - 0, p), T(0 - 1, p)]
    Si = [inv(s, p) for s in S]
    print("S2S-2 p=5 v=(0,1) l=0 closure", len(bfs(words(S, Si, p, 2, -2), p)))
    gens = [canon((1, 1, 0, 1), p), canon((1, -1, 0, 1), p), canon((1, 0, 1, 1), p), canon((1, 0, -1, 1), p)]
    d = bfs(gens, p)
    print("PSL2(5) unipotent diameter", max(d.values()), "size", len(d))
    for p in (7,):
        S = [T(3, p), T(3 - 1, p)]
        Si = [inv(s, p) for s in S]
        print("S2S-2 p=7 v=(0,1) l=3", len(bfs(words(S, Si, p, 2, -2), p)))
        print("SS-1 p=7", len(bfs(words(S, Si, p, 1, -1), p)))
    # chain 1 decay, Bernoulli{0,1}, lambda = 0, p in 5,7,11,13
    for p in (5, 7, 11, 13):
        G = list(bfs([T(0, p), T(-1, p)], p).keys())
        N = len(G); idx = {g: i for i, g in enumerate(G)}
        inc = [T(0, p), T(-1, p)]
        tab = [[idx[mul(g, h, p)] for h in G] for g in inc]
        dist = [0.0] * N; dist[idx[canon((1, 0, 0, 1), p)]] = 1.0
        n = 0
        while True:
            dk = sum(abs(x - 1.0 / N) for x in dist)
            if dk < 1e-3:
                print("p", p, "first n with d1<1e-3:", n); break
            new = [0.0] * N
            for t in tab:
                for h in range(N):
                    new[t[h]] += 0.5 * dist[h]
            dist = new; n += 1
