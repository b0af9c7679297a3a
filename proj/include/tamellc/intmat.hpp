#pragma once

// Integer matrices over Z with Smith normal form and the lattice helpers used
// for finite abelian group presentations.

#include <optional>
#include <vector>

#include "tamellc/exactnum.hpp"

namespace tamellc {

class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, BigInt(0)) {}
    static IntMat identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    std::vector<BigInt> row(std::size_t i) const;

    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<BigInt> a_;
};

// U * A * V = diag(d) with U, V unimodular; v_inv = V^{-1}.
struct SmithForm {
    IntMat u, v, v_inv;
    std::vector<BigInt> d;  // length min(rows, cols), non-negative, d[i] | d[i+1] for nonzero
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMat& a);

// Some integer row vector x with x * w = v, if one exists.
std::optional<std::vector<BigInt>> solve_left(const IntMat& w, const std::vector<BigInt>& v);
// Basis (as rows) of {x : x * w = 0}.
IntMat left_kernel(const IntMat& w);

// Lexicographically least representative, with 0 <= b_i < moduli_i, of the
// coset b + (span(gens) + sum moduli_i Z e_i).
std::vector<BigInt> lexmin_in_coset(const std::vector<BigInt>& b,
                                    const std::vector<std::vector<BigInt>>& gens,
                                    const std::vector<BigInt>& moduli);

}  // namespace tamellc
