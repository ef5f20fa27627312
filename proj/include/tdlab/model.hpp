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

#ifndef TDLAB_MODEL_HPP
#define TDLAB_MODEL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace tdlab {

struct Atom {
    std::int64_t value;
    mpq_class weight;
};

enum class ModelKind { iid_diag, dyson };

const char* to_string(ModelKind k) noexcept;

/**
 * Law of a random tridiagonal matrix. iid-diag: independent diagonal entries drawn
 * from `diag`, off-diagonal fixed to 1. dyson: diagonal fixed to `shift`, off-diagonal
 * entries drawn from `offdiag` (positive values).
 */
struct ModelConfig {
    ModelKind kind = ModelKind::iid_diag;
    std::vector<Atom> diag;
    std::vector<Atom> offdiag;
    std::int64_t shift = 0;
    unsigned n = 0;

    // Throws std::invalid_argument describing the offending field.
    void validate() const;

    // The two heaviest atoms of `table`, ties broken by smaller value.
    static std::pair<Atom, Atom> top_two(const std::vector<Atom>& table);

    // Bernoulli{0,1} diagonal, dimension n.
    static ModelConfig bernoulli(unsigned n);
};

}  // namespace tdlab

#endif  // TDLAB_MODEL_HPP
