/*
   Copyright 2026 The tdlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "tdlab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tdlab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<u64> small_primes_upto(u64 limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

}  // namespace

bool is_prime_u64(u64 n) noexcept {
    if (n < 2) return false;
    static constexpr u64 kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 q : kSmall) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic below 3.3e24.
    for (u64 a : kSmall) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

u64 prev_prime(u64 n) noexcept {
    if (n <= 2) return 0;
    for (u64 c = n - 1; c >= 2; --c)
        if (is_prime_u64(c)) return c;
    return 0;
}

u64 next_prime(u64 n) noexcept {
    for (u64 c = n + 1;; ++c)
        if (is_prime_u64(c)) return c;
}

std::vector<u64> primes_between(u64 lo, u64 hi, u64 segment) {
    std::vector<u64> out;
    if (hi < 2 || hi < lo) return out;
    lo = std::max<u64>(lo, 2);
    const std::vector<u64> base = small_primes_upto(isqrt(hi));
    std::vector<char> sieve;
    for (u64 start = lo; start <= hi; start += segment) {
        const u64 end = std::min(hi, start + segment - 1);
        sieve.assign(end - start + 1, 1);
        for (u64 q : base) {
            if (q * q > end) break;
            u64 first = std::max(q * q, (start + q - 1) / q * q);
            for (u64 j = first; j <= end; j += q) sieve[j - start] = 0;
        }
        for (u64 i = start; i <= end; ++i)
            if (sieve[i - start]) out.push_back(i);
        if (end == hi) break;
    }
    return out;
}

PrimeRange sieve_range(u64 x, u64 segment) {
    if (x < 5) throw std::invalid_argument("sieve_range: x must be >= 5");
    return PrimeRange{x, primes_between(x + 1, 2 * x, segment)};
}

mpz_class falling_factorial(u64 r, unsigned k) {
    if (r < k) return 0;
    mpz_class out = 1;
    for (unsigned j = 0; j < k; ++j) out *= static_cast<unsigned long>(r - j);
    return out;
}

u64 falling_factorial_u64(u64 r, unsigned k) {
    if (r < k) return 0;
    u64 out = 1;
    for (unsigned j = 0; j < k; ++j) out *= r - j;
    return out;
}

mpz_class moment_constant(unsigned k) {
    mpz_class total = 0;
    for (unsigned l = 0; l <= k; ++l) {
        mpz_class binom, fact;
        mpz_bin_uiui(binom.get_mpz_t(), k, l);
        mpz_fac_ui(fact.get_mpz_t(), l);
        total += binom * binom * fact;
    }
    return total;
}

std::set<u64> mth_power_residues(u64 p, u64 m) {
    if (m < 2 || p < 3 || (p - 1) % m != 0) throw std::invalid_argument("mth_power_residues: need m >= 2 dividing p - 1");
    std::set<u64> out;
    for (u64 a = 0; a < p; ++a) out.insert(powmod(a, m, p));
    return out;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (u64 q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace tdlab
