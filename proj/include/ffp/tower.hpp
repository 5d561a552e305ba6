/*
   Copyright 2026 The ffperiod Authors

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

#ifndef FFP_TOWER_HPP
#define FFP_TOWER_HPP

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ffp/gf.hpp"
#include "ffp/poly.hpp"

namespace ffp::gf {

/// F_q inside F_{q^n}. Both fields are canonical make_field() instances;
/// the base is embedded by sending its generator x to the smallest root
/// (by element code) of the base modulus in the extension.
class Tower {
public:
    u64 q() const noexcept { return base_->order(); }
    unsigned n() const noexcept { return n_; }
    const FieldRef& base() const noexcept { return base_; }
    const FieldRef& ext() const noexcept { return ext_; }

    Elem lift(Elem base_code) const { return lift_.at(base_code); }
    std::optional<Elem> restrict_to_base(Elem ext_code) const;
    FieldElement lift(const FieldElement& c) const;
    /// Throws BadSubfield when the element is not in F_q.
    FieldElement restrict_to_base(const FieldElement& c) const;

    /// x^{q^k}
    Elem frobenius(Elem x, unsigned k) const;
    /// x in F_{q^d}, decided by x^{q^d} == x.
    bool in_subfield(Elem x, unsigned d) const { return frobenius(x, d) == x; }

    /// h over F_q evaluated at a point of F_{q^n}.
    Elem eval(const PolyFq& h, Elem x) const;

private:
    friend std::shared_ptr<const Tower> make_tower(u64 q, unsigned n);
    Tower(FieldRef base, FieldRef ext, unsigned n);

    FieldRef base_;
    FieldRef ext_;
    unsigned n_;
    std::vector<Elem> lift_;
    std::unordered_map<Elem, Elem> restrict_;
};

using TowerRef = std::shared_ptr<const Tower>;

/// Cached. Throws BadTower if q is not a prime power.
TowerRef make_tower(u64 q, unsigned n);
/// The tower F_q ⊂ ctx; throws BadTower unless ctx has order q^n.
TowerRef tower_for(const FieldRef& ctx, u64 q, unsigned n);

unsigned element_degree(const Tower& t, Elem xi);
/// prod_{k<n} (x - xi^{q^k}) with coefficients restricted to F_q.
PolyFq char_poly(const Tower& t, Elem xi);
/// sigma_w(xi) as a base-field code.
Elem sigma_eval(const Tower& t, unsigned w, Elem xi);

unsigned element_degree(const FieldElement& xi, u64 q, unsigned n);
PolyFq char_poly(const FieldElement& xi, u64 q, unsigned n);
FieldElement sigma_eval(unsigned w, const FieldElement& xi, u64 q, unsigned n);

}  // namespace ffp::gf

#endif  // FFP_TOWER_HPP
