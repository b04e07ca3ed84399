#include "gwp/ulaurent.hpp"

#include <algorithm>

#include "gwp/error.hpp"

namespace gwp {

namespace {
const GradedPoly kZeroPoly{};
}

ULaurent ULaurent::term(GradedPoly c, int k, int trunc) {
    ULaurent r;
    r.trunc_ = trunc;
    if (!c.is_zero() && k <= trunc) {
        r.lowest_ = k;
        r.coeffs_.push_back(std::move(c));
    }
    return r;
}

const GradedPoly& ULaurent::coeff(int k) const {
    if (k > trunc_) throw InputError("ULaurent: coefficient beyond truncation");
    if (k < lowest_ || coeffs_.empty() || k >= lowest_ + static_cast<int>(coeffs_.size()))
        return kZeroPoly;
    return coeffs_[static_cast<size_t>(k - lowest_)];
}

std::vector<std::pair<int, const GradedPoly*>> ULaurent::support() const {
    std::vector<std::pair<int, const GradedPoly*>> out;
    for (size_t j = 0; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero()) out.emplace_back(lowest_ + static_cast<int>(j), &coeffs_[j]);
    return out;
}

void ULaurent::trim() {
    size_t a = 0, b = coeffs_.size();
    while (a < b && coeffs_[a].is_zero()) ++a;
    while (b > a && coeffs_[b - 1].is_zero()) --b;
    if (a == b) {
        coeffs_.clear();
        lowest_ = 0;
        return;
    }
    if (a > 0 || b < coeffs_.size()) {
        coeffs_ = std::vector<GradedPoly>(coeffs_.begin() + static_cast<long>(a),
                                          coeffs_.begin() + static_cast<long>(b));
        lowest_ += static_cast<int>(a);
    }
}

ULaurent ULaurent::operator-() const {
    ULaurent r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

ULaurent& ULaurent::operator+=(const ULaurent& o) {
    int t = std::min(trunc_, o.trunc_);
    if (coeffs_.empty() && o.coeffs_.empty()) {
        trunc_ = t;
        return *this;
    }
    int lo = coeffs_.empty() ? o.lowest_ : (o.coeffs_.empty() ? lowest_ : std::min(lowest_, o.lowest_));
    int hi_self = coeffs_.empty() ? lo - 1 : lowest_ + static_cast<int>(coeffs_.size()) - 1;
    int hi_other = o.coeffs_.empty() ? lo - 1 : o.lowest_ + static_cast<int>(o.coeffs_.size()) - 1;
    int hi = std::min(std::max(hi_self, hi_other), t);
    std::vector<GradedPoly> out;
    if (hi >= lo) {
        out.resize(static_cast<size_t>(hi - lo + 1));
        for (int k = lo; k <= hi; ++k) {
            GradedPoly c;
            if (k >= lowest_ && k <= hi_self) c += coeffs_[static_cast<size_t>(k - lowest_)];
            if (k >= o.lowest_ && k <= hi_other) c += o.coeffs_[static_cast<size_t>(k - o.lowest_)];
            out[static_cast<size_t>(k - lo)] = std::move(c);
        }
    }
    coeffs_ = std::move(out);
    lowest_ = lo;
    trunc_ = t;
    trim();
    return *this;
}

ULaurent ULaurent::operator*(const ULaurent& o) const {
    ULaurent r;
    r.trunc_ = std::min(sat_add(trunc_, o.val_bound()), sat_add(o.trunc_, val_bound()));
    if (coeffs_.empty() || o.coeffs_.empty()) return r;
    int lo = lowest_ + o.lowest_;
    int hi_full = lo + static_cast<int>(coeffs_.size() + o.coeffs_.size()) - 2;
    int hi = std::min(hi_full, r.trunc_);
    if (hi < lo) return r;
    r.lowest_ = lo;
    r.coeffs_.resize(static_cast<size_t>(hi - lo + 1));
    for (size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a].is_zero()) continue;
        for (size_t b = 0; b < o.coeffs_.size(); ++b) {
            int k = lo + static_cast<int>(a + b);
            if (k > hi) break;
            if (o.coeffs_[b].is_zero()) continue;
            r.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
        }
    }
    r.trim();
    return r;
}

bool operator==(const ULaurent& a, const ULaurent& b) {
    if (a.trunc_ != b.trunc_) return false;
    if (a.coeffs_.empty() || b.coeffs_.empty()) return a.coeffs_.empty() == b.coeffs_.empty();
    return a.lowest_ == b.lowest_ && a.coeffs_ == b.coeffs_;
}

ULaurent& ULaurent::scale(const GaussRat& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        lowest_ = 0;
        return *this;
    }
    GradedPoly f(c);
    for (auto& p : coeffs_) p *= f;
    return *this;
}

ULaurent& ULaurent::shift(int k) {
    lowest_ += k;
    trunc_ = sat_add(trunc_, k);
    return *this;
}

ULaurent ULaurent::pow(int n) const {
    if (n < 0) throw InputError("ULaurent::pow: negative exponent");
    ULaurent acc(GradedPoly(1));
    ULaurent base = *this;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

ULaurent ULaurent::reciprocal(int order) const {
    if (coeffs_.empty()) throw InputError("ULaurent::reciprocal of zero series");
    const GradedPoly& lead = coeffs_.front();
    if (!lead.is_constant())
        throw InputError("ULaurent::reciprocal: leading coefficient must be constant");
    GaussRat a0 = lead.constant();
    int v = lowest_;
    // Relative precision available from the operand.
    int rel = is_exact() ? kExact : trunc_ - v;
    int out_trunc = std::min(order, sat_add(-v, rel));
    int n_terms = out_trunc - (-v) + 1;
    if (n_terms <= 0) return zero_to(out_trunc);
    std::vector<GaussRat> inv(static_cast<size_t>(n_terms));
    auto coeff_rel = [&](int j) -> GaussRat {
        if (j < 0 || j >= static_cast<int>(coeffs_.size())) return GaussRat(0);
        return coeffs_[static_cast<size_t>(j)].constant();
    };
    inv[0] = GaussRat(1) / a0;
    for (int n = 1; n < n_terms; ++n) {
        GaussRat s(0);
        for (int k = 1; k <= n; ++k) s += coeff_rel(k) * inv[static_cast<size_t>(n - k)];
        inv[static_cast<size_t>(n)] = -s / a0;
    }
    ULaurent r;
    r.trunc_ = out_trunc;
    r.lowest_ = -v;
    r.coeffs_.reserve(inv.size());
    for (auto& c : inv) r.coeffs_.emplace_back(std::move(c));
    r.trim();
    return r;
}

ULaurent& ULaurent::truncate(int order) {
    if (order >= trunc_) return *this;
    trunc_ = order;
    if (!coeffs_.empty()) {
        int hi = lowest_ + static_cast<int>(coeffs_.size()) - 1;
        if (hi > order) {
            if (order < lowest_) {
                coeffs_.clear();
                lowest_ = 0;
            } else {
                coeffs_.resize(static_cast<size_t>(order - lowest_ + 1));
            }
        }
        trim();
    }
    return *this;
}

bool ULaurent::agree(const ULaurent& a, const ULaurent& b, int order) {
    return !first_difference(a, b, order).has_value();
}

std::optional<int> ULaurent::first_difference(const ULaurent& a, const ULaurent& b, int order) {
    int t = std::min({order, a.trunc_, b.trunc_});
    int lo = std::min(a.val_bound(), b.val_bound());
    if (lo > t) return std::nullopt;
    for (int k = lo; k <= t; ++k)
        if (a.coeff(k) != b.coeff(k)) return k;
    return std::nullopt;
}

std::string ULaurent::str() const {
    std::string s;
    for (const auto& [k, p] : support()) {
        if (!s.empty()) s += " + ";
        std::string ps = p->str();
        bool simple = p->is_constant() && ps.find('+') == std::string::npos &&
                      ps.find('-', 1) == std::string::npos;
        s += (simple ? ps : "(" + ps + ")") + "*u^" + std::to_string(k);
    }
    if (!is_exact()) {
        if (!s.empty()) s += " + ";
        s += "O(u^" + std::to_string(trunc_ + 1) + ")";
    }
    if (s.empty()) s = "0";
    return s;
}

}  // namespace gwp
