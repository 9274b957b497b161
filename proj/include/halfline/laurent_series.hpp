#pragma once
#include <vector>

#include "series.hpp"

namespace halfline {

// Laurent series in t: finitely many negative t-exponents, truncated above.
// Normalized so the first stored coefficient is nonzero; a series that is
// zero to its stated order has empty support and valuation order+1.
class LaurentSeriesT {
public:
    LaurentSeriesT(int valuation, int order, std::vector<LaurentPoly> coeffs)
        : val_(valuation), order_(order), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != order_ - val_ + 1)
            fail("BadOrder", "coefficient count must match valuation..order");
        normalize();
    }
    static LaurentSeriesT from_series(const SeriesT& a) {
        std::vector<LaurentPoly> c;
        c.reserve(static_cast<std::size_t>(a.order()) + 1);
        for (int n = 0; n <= a.order(); ++n) c.push_back(a.coeff(n));
        return LaurentSeriesT(0, a.order(), std::move(c));
    }
    static LaurentSeriesT zero(int order) { return LaurentSeriesT(order + 1, order, {}); }

    bool is_zero() const { return c_.empty(); }
    int valuation() const { return val_; } // order+1 when zero to stated order
    int order() const { return order_; }

    LaurentPoly coeff(int n) const {
        if (n > order_) fail("BadOrder", "coefficient beyond stated order");
        if (n < val_) return LaurentPoly();
        return c_[static_cast<std::size_t>(n - val_)];
    }

    LaurentSeriesT operator-() const {
        auto c = c_;
        for (auto& p : c) p = -p;
        return LaurentSeriesT(val_, order_, std::move(c));
    }

    friend LaurentSeriesT operator+(const LaurentSeriesT& a, const LaurentSeriesT& b) {
        int order = std::min(a.order_, b.order_);
        int val = std::min(a.effective_val(), b.effective_val());
        if (val > order) return zero(order);
        std::vector<LaurentPoly> c;
        for (int n = val; n <= order; ++n) c.push_back(a.coeff(n) + b.coeff(n));
        return LaurentSeriesT(val, order, std::move(c));
    }
    friend LaurentSeriesT operator-(const LaurentSeriesT& a, const LaurentSeriesT& b) {
        return a + (-b);
    }
    friend LaurentSeriesT operator*(const LaurentSeriesT& a, const LaurentSeriesT& b) {
        // Known modulo t^(order+1) with order = min(a.order + b.val, b.order + a.val).
        int order = std::min(a.order_ + b.effective_val(), b.order_ + a.effective_val());
        int val = a.effective_val() + b.effective_val();
        if (a.is_zero() || b.is_zero() || val > order) return zero(order);
        std::vector<LaurentPoly> c(static_cast<std::size_t>(order - val) + 1);
        for (int i = 0; i < static_cast<int>(a.c_.size()); ++i) {
            if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; j < static_cast<int>(b.c_.size()); ++j) {
                int n = a.val_ + i + b.val_ + j;
                if (n > order) break;
                if (b.c_[static_cast<std::size_t>(j)].is_zero()) continue;
                c[static_cast<std::size_t>(n - val)] +=
                    a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
            }
        }
        return LaurentSeriesT(val, order, std::move(c));
    }

    friend bool operator==(const LaurentSeriesT& a, const LaurentSeriesT& b) {
        return a.val_ == b.val_ && a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentSeriesT& a, const LaurentSeriesT& b) { return !(a == b); }

    // Multiply by the exact monomial t^k.
    LaurentSeriesT shift_t(int k) const { return LaurentSeriesT(val_ + k, order_ + k, c_); }

    // 1/A. Writing A = t^v * u with u a unit power series, the result is
    // t^(-v) * u^(-1), known modulo t^(order - 2v + 1).
    LaurentSeriesT reciprocal() const {
        if (is_zero()) fail("NotInvertible", "reciprocal of zero series");
        SeriesT u(order_ - val_);
        for (int i = 0; i < static_cast<int>(c_.size()); ++i)
            u.set_coeff(i, c_[static_cast<std::size_t>(i)]);
        SeriesT inv = series_inverse(u);
        std::vector<LaurentPoly> c;
        for (int i = 0; i <= inv.order(); ++i) c.push_back(inv.coeff(i));
        return LaurentSeriesT(-val_, order_ - 2 * val_, std::move(c));
    }

    // Only valid when nothing is stored below t^0.
    SeriesT to_series() const {
        if (val_ < 0) fail("NegativeValuation", "series has terms below t^0");
        SeriesT r(order_);
        for (int n = val_; n <= order_; ++n) r.set_coeff(n, c_[static_cast<std::size_t>(n - val_)]);
        return r;
    }

    std::string str() const {
        std::string s;
        for (int n = val_; n <= order_; ++n) {
            const LaurentPoly& p = c_[static_cast<std::size_t>(n - val_)];
            if (p.is_zero()) continue;
            std::string cs = p.str();
            if (p.term_count() > 1) cs = "(" + cs + ")";
            std::string term;
            if (n == 0) term = cs;
            else {
                term = (cs == "1") ? "" : cs + "*";
                term += "t";
                if (n != 1) term += "^" + std::to_string(n);
            }
            if (!s.empty()) s += " + ";
            s += term;
        }
        if (s.empty()) s = "0";
        return s + " + O(t^" + std::to_string(order_ + 1) + ")";
    }

private:
    // Valuation with zero series treated as order+1 (so min/plus rules work).
    int effective_val() const { return c_.empty() ? order_ + 1 : val_; }

    void normalize() {
        std::size_t drop = 0;
        while (drop < c_.size() && c_[drop].is_zero()) ++drop;
        if (drop > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(drop));
            val_ += static_cast<int>(drop);
        }
        if (c_.empty()) val_ = order_ + 1;
    }

    int val_;
    int order_;
    std::vector<LaurentPoly> c_;
};

} // namespace halfline
