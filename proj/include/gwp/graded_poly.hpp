#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwp/gauss_rat.hpp"

namespace gwp {

/// Monomial c1^a * c2^b * c3^c. The grading weight of c_k is k.
struct CMonomial {
    std::array<int, 3> e{0, 0, 0};

    int weight() const { return e[0] + 2 * e[1] + 3 * e[2]; }
    bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

    CMonomial operator*(const CMonomial& o) const {
        return CMonomial{{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}};
    }
    auto operator<=>(const CMonomial&) const = default;

    std::string str() const;
};

enum class Homogeneity { inhomogeneous, any_degree, fixed_degree };

/// Result of a homogeneity query. The zero polynomial is homogeneous of
/// every degree (any_degree).
struct HomDegree {
    Homogeneity kind = Homogeneity::inhomogeneous;
    int degree = 0;

    bool is_homogeneous() const { return kind != Homogeneity::inhomogeneous; }
    bool matches(int d) const {
        return kind == Homogeneity::any_degree ||
               (kind == Homogeneity::fixed_degree && degree == d);
    }
};

/// Sparse polynomial in c1, c2, c3 over GaussRat. Zero coefficients are
/// never stored.
class GradedPoly {
public:
    GradedPoly() = default;
    GradedPoly(GaussRat c) {  // NOLINT: implicit by design
        if (!c.is_zero()) terms_.emplace(CMonomial{}, std::move(c));
    }
    GradedPoly(long c) : GradedPoly(GaussRat(c)) {}  // NOLINT

    static GradedPoly monomial(CMonomial m, GaussRat c = GaussRat(1)) {
        GradedPoly p;
        if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
        return p;
    }
    static GradedPoly c1() { return monomial(CMonomial{{1, 0, 0}}); }
    static GradedPoly c2() { return monomial(CMonomial{{0, 1, 0}}); }
    static GradedPoly c3() { return monomial(CMonomial{{0, 0, 1}}); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    /// Constant term.
    GaussRat constant() const;

    const std::map<CMonomial, GaussRat>& terms() const { return terms_; }

    void add_term(const CMonomial& m, const GaussRat& c);

    GradedPoly operator-() const;
    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }

    friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GradedPoly& a, const GradedPoly& b) { return !(a == b); }

    /// Graded degree when every monomial has the same weight; the zero
    /// polynomial reports any_degree.
    HomDegree homogeneous_degree() const;

    std::string str() const;

private:
    std::map<CMonomial, GaussRat> terms_;
};

/// Spec-level operation name; returns the graded degree classification.
inline HomDegree poly_homogeneous_degree(const GradedPoly& p) { return p.homogeneous_degree(); }

}  // namespace gwp
