#pragma once

#include "qhw/rational.hpp"

#include <string>
#include <vector>

namespace qhw {

enum class Var { q, eps, beta, z };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::q: return "q";
        case Var::eps: return "eps";
        case Var::beta: return "beta";
        case Var::z: return "z";
    }
    return "?";
}

inline Var parse_var(std::string_view s) {
    if (s == "q") return Var::q;
    if (s == "eps") return Var::eps;
    if (s == "beta") return Var::beta;
    if (s == "z") return Var::z;
    throw DomainError("parse_var: unknown variable '" + std::string(s) + "'");
}

/// Truncated Laurent series in a single tagged variable. All coefficients of
/// degree < valid_order are exact; coefficients at or beyond valid_order are
/// never reported. The leading stored coefficient is nonzero unless the
/// series vanishes identically on its valid range.
class LaurentSeries {
public:
    static constexpr long kMinDegreeFloor = -4096;

    LaurentSeries(Var var, long min_degree, std::vector<Rational> coeffs, long valid_order)
        : var_(var), min_deg_(min_degree), valid_(valid_order), coeffs_(std::move(coeffs)) {
        normalize();
    }

    static LaurentSeries zero(Var var, long valid_order) {
        return LaurentSeries(var, valid_order, {}, valid_order);
    }

    static LaurentSeries monomial(Var var, const Rational& c, long degree, long valid_order) {
        return LaurentSeries(var, degree, {c}, valid_order);
    }

    static LaurentSeries constant(Var var, const Rational& c, long valid_order) {
        return monomial(var, c, 0, valid_order);
    }

    Var var() const { return var_; }
    long min_degree() const { return min_deg_; }
    long valid_order() const { return valid_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(long degree) const {
        if (degree >= valid_)
            throw DomainError("LaurentSeries::coeff: degree at or beyond valid order");
        const long idx = degree - min_deg_;
        if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(idx)];
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        check_var(a, b);
        const long valid = std::min(a.valid_, b.valid_);
        const long lo = std::min(a.is_zero() ? valid : a.min_deg_, b.is_zero() ? valid : b.min_deg_);
        std::vector<Rational> cs;
        for (long d = lo; d < valid; ++d) cs.push_back(a.raw_coeff(d) + b.raw_coeff(d));
        return LaurentSeries(a.var_, lo, std::move(cs), valid);
    }

    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + b.scaled(-1);
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        check_var(a, b);
        const long ma = a.is_zero() ? a.valid_ : a.min_deg_;
        const long mb = b.is_zero() ? b.valid_ : b.min_deg_;
        const long valid = std::min(a.valid_ + mb, b.valid_ + ma);
        if (a.is_zero() || b.is_zero()) return zero(a.var_, valid);
        const long lo = ma + mb;
        std::vector<Rational> cs(static_cast<std::size_t>(std::max<long>(0, valid - lo)), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                const long d = ma + static_cast<long>(i) + mb + static_cast<long>(j);
                if (d >= valid) break;
                cs[static_cast<std::size_t>(d - lo)] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return LaurentSeries(a.var_, lo, std::move(cs), valid);
    }

    LaurentSeries scaled(const Rational& c) const {
        if (c == 0) return zero(var_, valid_);
        std::vector<Rational> cs = coeffs_;
        for (auto& x : cs) x *= c;
        return LaurentSeries(var_, min_deg_, std::move(cs), valid_);
    }

    LaurentSeries shifted(long k) const {
        return LaurentSeries(var_, min_deg_ + k, coeffs_, valid_ + k);
    }

    LaurentSeries truncated(long new_valid) const {
        if (new_valid > valid_) throw DomainError("LaurentSeries::truncated: cannot extend validity");
        return LaurentSeries(var_, min_deg_, coeffs_, new_valid);
    }

    /// Multiplicative inverse. A series with leading term c x^m yields a
    /// series with leading term (1/c) x^{-m}, valid to valid_order - 2m.
    LaurentSeries inverse() const {
        if (is_zero()) throw DomainError("LaurentSeries::inverse: zero series");
        const long m = min_deg_;
        const long rel_len = valid_ - m;  // number of known relative coefficients
        const Rational& c0 = coeffs_[0];
        // a = c0 x^m (1 + u); invert 1 + u by the convolution recurrence.
        std::vector<Rational> u(static_cast<std::size_t>(rel_len), Rational(0));
        for (std::size_t i = 0; i < coeffs_.size() && i < u.size(); ++i) u[i] = coeffs_[i] / c0;
        std::vector<Rational> b(static_cast<std::size_t>(rel_len), Rational(0));
        b[0] = 1;
        for (long n = 1; n < rel_len; ++n) {
            Rational s = 0;
            for (long k = 1; k <= n; ++k) s += u[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
            b[static_cast<std::size_t>(n)] = -s;
        }
        for (auto& x : b) x /= c0;
        return LaurentSeries(var_, -m, std::move(b), valid_ - 2 * m);
    }

private:
    static void check_var(const LaurentSeries& a, const LaurentSeries& b) {
        if (a.var_ != b.var_)
            throw DomainError(std::string("LaurentSeries: variable mismatch (") + var_name(a.var_) +
                              " vs " + var_name(b.var_) + ")");
    }

    Rational raw_coeff(long degree) const {
        const long idx = degree - min_deg_;
        if (is_zero() || idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(idx)];
    }

    void normalize() {
        // drop stored coefficients at or beyond the valid order
        if (min_deg_ + static_cast<long>(coeffs_.size()) > valid_)
            coeffs_.resize(static_cast<std::size_t>(std::max<long>(0, valid_ - min_deg_)));
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
            min_deg_ += static_cast<long>(lead);
        }
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        if (coeffs_.empty()) min_deg_ = valid_;
        if (min_deg_ < kMinDegreeFloor)
            throw DomainError("LaurentSeries: principal part below degree floor");
    }

    Var var_;
    long min_deg_;
    long valid_;
    std::vector<Rational> coeffs_;  // coeffs_[i] is the coefficient of x^{min_deg_ + i}
};

/// Formal exponential of a series with zero constant term and no negative
/// degrees.
inline LaurentSeries exp_series(const LaurentSeries& a) {
    if (!a.is_zero() && a.min_degree() < 1)
        throw DomainError("exp_series: argument needs min degree >= 1");
    const long valid = a.valid_order();
    LaurentSeries result = LaurentSeries::constant(a.var(), 1, valid);
    if (a.is_zero()) return result;
    LaurentSeries term = LaurentSeries::constant(a.var(), 1, valid);
    for (long k = 1; k < valid; ++k) {
        term = (term * a).truncated(valid).scaled(Rational(1, k));
        if (term.is_zero()) break;
        result = result + term;
    }
    return result;
}

/// Laurent expansion of 1/(e^{s eps} - 1), exact through degree order - 1.
inline LaurentSeries bose_factor(long s, long order) {
    if (s <= 0) throw DomainError("bose_factor: s must be positive");
    // e^{s eps} - 1 built directly from Taylor coefficients s^k / k!
    const long build = order + 2;
    std::vector<Rational> cs;
    Integer sk = s;
    Integer kf = 1;
    for (long k = 1; k < build; ++k) {
        cs.emplace_back(Rational(sk, kf));
        sk *= s;
        kf *= k + 1;
    }
    const LaurentSeries expm1(Var::eps, 1, std::move(cs), build);
    return expm1.inverse();
}

/// q^a / (1 - q^a) = sum_{m >= 1} q^{m a}, truncated below `order`.
inline LaurentSeries geometric_q(long a, long order) {
    if (a <= 0) throw DomainError("geometric_q: a must be positive");
    std::vector<Rational> cs(static_cast<std::size_t>(std::max<long>(0, order - a)), Rational(0));
    for (long m = 1; m * a < order; ++m) cs[static_cast<std::size_t>(m * a - a)] = 1;
    return LaurentSeries(Var::q, a, std::move(cs), order);
}

/// Truncated evaluation: sum of stored coefficients times x^degree.
inline Rational evaluate(const LaurentSeries& s, const Rational& x) {
    Rational total = 0;
    if (s.is_zero()) return total;
    for (long d = s.min_degree(); d < s.valid_order(); ++d) {
        const Rational c = s.coeff(d);
        if (c != 0) total += c * pow_rational(x, d);
    }
    return total;
}

}  // namespace qhw
