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

#ifndef TDLAB_PRIMES_HPP
#define TDLAB_PRIMES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <vector>

namespace tdlab {

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n) noexcept;

// Largest prime strictly below n, or 0 if none.
std::uint64_t prev_prime(std::uint64_t n) noexcept;
// Smallest prime strictly above n.
std::uint64_t next_prime(std::uint64_t n) noexcept;

// All primes in (x, 2x].
struct PrimeRange {
    std::uint64_t x = 0;
    std::vector<std::uint64_t> primes;
};

// Segmented sieve; memory O(sqrt(x) + segment). Requires x >= 5.
PrimeRange sieve_range(std::uint64_t x, std::uint64_t segment = 1 << 16);

// Primes in [lo, hi], by the same segmented sieve.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment = 1 << 16);

// r (r-1) ... (r-k+1); 0 when r < k, 1 when k = 0.
mpz_class falling_factorial(std::uint64_t r, unsigned k);
std::uint64_t falling_factorial_u64(std::uint64_t r, unsigned k);

// sum_l C(k,l)^2 l!, the second moment of (r)_k under a uniform random permutation.
mpz_class moment_constant(unsigned k);

// { a^m mod p : a in F_p }; requires m | p - 1.
std::set<std::uint64_t> mth_power_residues(std::uint64_t p, std::uint64_t m);

// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace tdlab

#endif  // TDLAB_PRIMES_HPP
