#pragma once

// Invariant-factor presentation of (R / pi^N)^x with discrete logarithms.
//
// The group splits as mu_{Q} x U^1.  U^1 is handled through the polycyclic
// generators g_{ib} = 1 + pi^i X^b (1 <= i < N): every one-unit has a unique
// digit word, and the p-th power relations give a presentation whose Smith
// form yields independent cyclic factors.  Factor 0 is always the
// Teichmuller part, generated by omega.

#include <cstdint>
#include <vector>

#include "tamellc/intmat.hpp"
#include "tamellc/ring_model.hpp"

namespace tamellc {

class UnitGroup {
public:
    UnitGroup() = default;
    // M must outlive the presentation.
    UnitGroup(const Model& M, int64_t N);

    const Model& model() const { return *M_; }
    int64_t level() const { return N_; }
    const std::vector<int64_t>& orders() const { return orders_; }
    const std::vector<Vec>& gens() const { return gens_; }
    std::size_t rank() const { return orders_.size(); }
    int64_t exponent() const { return exponent_; }
    BigInt order() const;

    // Exponent vector of a unit, y_k mod orders_k.  Throws NotInSubgroup.
    std::vector<int64_t> coords(const Vec& u) const;
    Vec element(const std::vector<int64_t>& y) const;
    // 1 + pi^i X^b mod pi^N
    Vec one_unit_gen(int64_t i, int64_t b) const;

private:
    const Model* M_ = nullptr;
    int64_t N_ = 0;
    std::vector<int64_t> orders_;
    std::vector<Vec> gens_;
    int64_t exponent_ = 1;

    std::vector<Vec> cinv_pow_;                // c^{-s} in GR
    std::vector<std::vector<Vec>> elim_;       // elim_[i][idx] = prod_b g_{ib}^{-a_b}
    std::vector<std::vector<int64_t>> vred_;   // word index -> coordinate contributions
    std::vector<std::size_t> u1_cols_;         // SNF columns kept (order > 1)

    std::vector<int64_t> word(Vec u1) const;
};

// Order of the subgroup of prod Z/orders generated by the given rows.
BigInt subgroup_order(const std::vector<std::vector<int64_t>>& rows,
                      const std::vector<int64_t>& orders);
// Generators (as coordinate rows) of the kernel of the homomorphism
// prod Z/src -> prod Z/tgt sending the k-th basis vector to images[k].
std::vector<std::vector<int64_t>> hom_kernel(const std::vector<std::vector<int64_t>>& images,
                                             const std::vector<int64_t>& src,
                                             const std::vector<int64_t>& tgt);

}  // namespace tamellc
