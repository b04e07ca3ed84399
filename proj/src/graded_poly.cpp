#include "gwp/graded_poly.hpp"

namespace gwp {

std::string CMonomial::str() const {
    if (is_one()) return "1";
    std::string s;
    for (int k = 0; k < 3; ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += "c" + std::to_string(k + 1);
        if (e[k] != 1) s += "^" + std::to_string(e[k]);
    }
    return s;
}

GaussRat GradedPoly::constant() const {
    auto it = terms_.find(CMonomial{});
    return it == terms_.end() ? GaussRat(0) : it->second;
}

void GradedPoly::add_term(const CMonomial& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    GradedPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

HomDegree GradedPoly::homogeneous_degree() const {
    if (terms_.empty()) return {Homogeneity::any_degree, 0};
    int d = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_)
        if (m.weight() != d) return {Homogeneity::inhomogeneous, 0};
    return {Homogeneity::fixed_degree, d};
}

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (m.is_one()) {
            s += c.str();
        } else if (c.is_one()) {
            s += m.str();
        } else {
            std::string cs = c.str();
            bool simple = cs.find('+') == std::string::npos && cs.find('-', 1) == std::string::npos;
            s += (simple ? cs : "(" + cs + ")") + "*" + m.str();
        }
    }
    return s;
}

}  // namespace gwp
