#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gwp/graded_poly.hpp"

namespace gwp {

/// Laurent series in u with GradedPoly coefficients and explicit truncation.
///
/// Coefficients at exponents <= trunc() that are not stored are exactly
/// zero; exponents above trunc() are unknown.  trunc() == kExact marks a
/// series whose coefficients are all known (a Laurent polynomial).
class ULaurent {
public:
    static constexpr int kExact = std::numeric_limits<int>::max() / 4;

    ULaurent() = default;
    ULaurent(GradedPoly c) {  // NOLINT: implicit by design
        if (!c.is_zero()) {
            lowest_ = 0;
            coeffs_.push_back(std::move(c));
        }
    }
    ULaurent(long c) : ULaurent(GradedPoly(c)) {}  // NOLINT
    ULaurent(GaussRat c) : ULaurent(GradedPoly(std::move(c))) {}  // NOLINT

    /// c * u^k.
    static ULaurent term(GradedPoly c, int k, int trunc = kExact);
    /// (i*u)^k, exact.
    static ULaurent iu_pow(int k) { return term(GradedPoly(GaussRat::i_pow(k)), k); }
    /// Exactly-zero series known through the given order.
    static ULaurent zero_to(int trunc) {
        ULaurent z;
        z.trunc_ = trunc;
        return z;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_exact() const { return trunc_ == kExact; }
    int trunc() const { return trunc_; }
    /// Exponent of the first stored coefficient; only meaningful when nonzero.
    int lowest() const { return lowest_; }
    /// First exponent that could be nonzero (kExact for the exact zero series).
    int val_bound() const {
        if (!coeffs_.empty()) return lowest_;
        return trunc_ == kExact ? kExact : sat_add(trunc_, 1);
    }

    /// Coefficient of u^k; zero for known-zero slots.  Throws InputError when
    /// k is beyond the truncation.
    const GradedPoly& coeff(int k) const;
    bool known(int k) const { return k <= trunc_; }

    /// All stored (exponent, coefficient) pairs in increasing exponent order.
    std::vector<std::pair<int, const GradedPoly*>> support() const;

    ULaurent operator-() const;
    ULaurent& operator+=(const ULaurent& o);
    ULaurent& operator-=(const ULaurent& o) { return *this += -o; }
    ULaurent operator*(const ULaurent& o) const;
    ULaurent& operator*=(const ULaurent& o) { return *this = *this * o; }

    friend ULaurent operator+(ULaurent a, const ULaurent& b) { return a += b; }
    friend ULaurent operator-(ULaurent a, const ULaurent& b) { return a -= b; }

    friend bool operator==(const ULaurent& a, const ULaurent& b);
    friend bool operator!=(const ULaurent& a, const ULaurent& b) { return !(a == b); }

    ULaurent& scale(const GaussRat& c);
    ULaurent& shift(int k);  // multiply by u^k
    ULaurent pow(int n) const;

    /// Multiplicative inverse as a series, computed through u^order.
    /// Requires the leading coefficient to be a nonzero constant.
    ULaurent reciprocal(int order) const;
    ULaurent div(const ULaurent& o, int order) const { return *this * o.reciprocal(order); }

    /// Restrict the known window to <= order.
    ULaurent& truncate(int order);

    /// True when all known coefficients of a and b agree for exponents
    /// <= min(order, a.trunc(), b.trunc()).
    static bool agree(const ULaurent& a, const ULaurent& b, int order = kExact);
    /// Smallest exponent within the shared known window where a and b
    /// differ, if any.
    static std::optional<int> first_difference(const ULaurent& a, const ULaurent& b,
                                               int order = kExact);

    std::string str() const;

    static int sat_add(int a, int b) {
        if (a >= kExact || b >= kExact) return kExact;
        return a + b;
    }

private:
    void trim();

    int lowest_ = 0;
    std::vector<GradedPoly> coeffs_;
    int trunc_ = kExact;
};

}  // namespace gwp
