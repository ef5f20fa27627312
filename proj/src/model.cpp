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

#include "tdlab/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tdlab {

namespace {

void check_table(const std::vector<Atom>& t, const std::string& field, bool positive_values) {
    if (t.size() < 2) throw std::invalid_argument(field + ": need at least two atoms");
    mpq_class total = 0;
    std::set<std::int64_t> seen;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::string path = field + "[" + std::to_string(i) + "]";
        if (t[i].weight <= 0) throw std::invalid_argument(path + ": weight must be positive");
        if (positive_values && t[i].value <= 0) throw std::invalid_argument(path + ": value must be a positive integer");
        if (!seen.insert(t[i].value).second) throw std::invalid_argument(path + ": duplicate value");
        total += t[i].weight;
    }
    if (total != 1) throw std::invalid_argument(field + ": weights sum to " + total.get_str() + ", not 1");
}

}  // namespace

const char* to_string(ModelKind k) noexcept { return k == ModelKind::iid_diag ? "iid-diag" : "dyson"; }

void ModelConfig::validate() const {
    if (n == 0) throw std::invalid_argument("n: must be positive");
    if (kind == ModelKind::iid_diag) {
        check_table(diag, "diag", false);
        if (!offdiag.empty()) throw std::invalid_argument("offdiag: not used by iid-diag");
    } else {
        check_table(offdiag, "offdiag", true);
        if (!diag.empty()) throw std::invalid_argument("diag: dyson fixes the diagonal to the shift a");
    }
}

std::pair<Atom, Atom> ModelConfig::top_two(const std::vector<Atom>& table) {
    if (table.size() < 2) throw std::invalid_argument("top_two: need at least two atoms");
    std::vector<Atom> t = table;
    std::stable_sort(t.begin(), t.end(), [](const Atom& x, const Atom& y) {
        if (x.weight != y.weight) return x.weight > y.weight;
        return x.value < y.value;
    });
    return {t[0], t[1]};
}

ModelConfig ModelConfig::bernoulli(unsigned n) {
    ModelConfig c;
    c.kind = ModelKind::iid_diag;
    c.diag = {{0, mpq_class(1, 2)}, {1, mpq_class(1, 2)}};
    c.n = n;
    return c;
}

}  // namespace tdlab
