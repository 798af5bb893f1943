#pragma once

#include "zmu/scheme.hpp"

#include <optional>
#include <vector>

namespace zmu {

/// GF(p^nu) as GF(p)[t]/(f). An element with coefficients a_0..a_{nu-1}
/// (constant term first) is encoded as the integer sum a_i p^i, so the
/// canonical element order "zero-constant-term part, then constant term" is
/// simply 0, 1, ..., q-1. For prime fields this is 0..p-1.
class Field {
public:
    /// reduction_poly: monic, degree nu, coefficients c_0..c_nu with c_nu = 1.
    /// Defaults: the lexicographically smallest monic irreducible (coefficient
    /// tuples compared from the highest degree down) and the first element in
    /// canonical order that generates the multiplicative group.
    static Field build(int p, int nu,
                       std::optional<std::vector<int>> reduction_poly = std::nullopt,
                       std::optional<int> generator = std::nullopt);

    int p() const { return p_; }
    int nu() const { return nu_; }
    int q() const { return q_; }
    const std::vector<int>& reduction_poly() const { return poly_; }
    int generator() const { return generator_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * q_ + b]; }

    /// y^e for any integer e (reduced mod q-1).
    int generator_power(long long e) const;
    /// e with y^e = x; x must be nonzero.
    int dlog(int x) const;

    /// Zero-constant-term component of x (an element of the subgroup S).
    int pi_part(int x) const { return x - x % p_; }
    /// Constant term of x, an element of the prime subfield.
    int const_term(int x) const { return x % p_; }

private:
    Field() = default;

    int p_ = 0, nu_ = 0, q_ = 0;
    int generator_ = 0;
    std::vector<int> poly_;
    std::vector<int> mul_;   // q x q multiplication table
    std::vector<int> pow_;   // pow_[e] = y^e, e in [0, q-1)
    std::vector<int> dlog_;  // inverse of pow_ on nonzero elements
};

/// (q-1) x (q-1) table with entry (i,j) = y^(i-j); circulant in the exponent.
std::vector<std::vector<int>> quotient_table(const Field& field);

/// q x q table with entry (i,j) = x_i - x_j in canonical element order.
std::vector<std::vector<int>> difference_table(const Field& field);

/// The position of x != 0 in the quotient table's first row: x = y^-i -> i,
/// i.e. the circulant set of x's position matrix is {i}.
int position_residue(const Field& field, int x);

/// The Z_p-scheme of order p^(nu-1) whose blow-up is the position matrix of x
/// in the difference table: entry (i,j) = {-const_term(x) mod p} where
/// pi_i - pi_j = pi_part(x), blank elsewhere. The residue is negated for the
/// same reason position_residue negates the logarithm: a table with entry
/// r - c constant on the diagonal r - c = w is the circulant of {-w}.
Scheme position_scheme(const Field& field, int x);

} // namespace zmu
