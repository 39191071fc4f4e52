#pragma once

#include "qhw/partition.hpp"
#include "qhw/report.hpp"
#include "qhw/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace qhw {

enum class WeightKind { EPrime, E, H, Exp, Belyi, FiniteC };

/// Weight model: one of the three quantum generating functions, the
/// exponential (simple branching) model, the Belyi model G(z) = 1 + z, or a
/// finite parameter list c.
struct WeightModel {
    WeightKind kind = WeightKind::EPrime;
    std::vector<Rational> c;  // FiniteC parameters

    bool quantum() const {
        return kind == WeightKind::EPrime || kind == WeightKind::E || kind == WeightKind::H;
    }

    std::string tag() const {
        switch (kind) {
            case WeightKind::EPrime: return "eprime";
            case WeightKind::E: return "e";
            case WeightKind::H: return "h";
            case WeightKind::Exp: return "exp";
            case WeightKind::Belyi: return "belyi";
            case WeightKind::FiniteC: {
                std::string s = "finite:";
                for (std::size_t i = 0; i < c.size(); ++i) {
                    if (i > 0) s += ',';
                    s += rational_str(c[i]);
                }
                return s;
            }
        }
        return "?";
    }

    static WeightModel parse(std::string_view tag) {
        if (tag == "eprime") return {WeightKind::EPrime, {}};
        if (tag == "e") return {WeightKind::E, {}};
        if (tag == "h") return {WeightKind::H, {}};
        if (tag == "exp") return {WeightKind::Exp, {}};
        if (tag == "belyi") return {WeightKind::Belyi, {}};
        if (tag.rfind("finite:", 0) == 0) {
            WeightModel m{WeightKind::FiniteC, {}};
            std::stringstream ss{std::string(tag.substr(7))};
            std::string tok;
            while (std::getline(ss, tok, ',')) m.c.push_back(parse_rational(tok));
            if (m.c.empty()) throw DomainError("WeightModel: finite model needs parameters");
            return m;
        }
        throw DomainError("WeightModel: unknown model tag '" + std::string(tag) + "'");
    }
};

inline void check_q(const Rational& q) {
    if (!(q > 0 && q < 1)) throw DomainError("q must lie in (0,1)");
}

namespace detail {

inline Integer aut_of_composition(std::vector<int> x) {
    std::sort(x.begin(), x.end());
    Integer aut = 1;
    for (std::size_t i = 0; i < x.size();) {
        std::size_t j = i;
        while (j < x.size() && x[j] == x[i]) ++j;
        aut *= factorial(static_cast<long>(j - i));
        i = j;
    }
    return aut;
}

/// Enumerates all m! arrangements of x, invoking fn(arrangement).
template <typename Fn>
void for_each_permutation(const std::vector<int>& x, Fn&& fn) {
    std::vector<int> idx(x.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> arranged(x.size());
    do {
        for (std::size_t i = 0; i < x.size(); ++i)
            arranged[i] = x[static_cast<std::size_t>(idx[i])];
        fn(arranged);
    } while (std::next_permutation(idx.begin(), idx.end()));
}

}  // namespace detail

/// The symmetrized closed-form sums Phi_G(x_1,...,x_m) of the three quantum
/// models at a rational q. For E' this sums, over each
/// arrangement, the product over j of (q^{-S_j} - 1)^{-1} with S_j the
/// partial sums. E uses strict indices from 0 and H weak indices from 0,
/// both via the geometric tail-sum identity; the H value here is unsigned.
inline Rational phi_value(const WeightModel& model, const std::vector<int>& x, const Rational& q) {
    if (!model.quantum()) throw DomainError("phi_value: quantum models only");
    check_q(q);
    for (int v : x)
        if (v <= 0) throw DomainError("phi_value: entries must be positive");
    if (x.empty()) return 1;
    Rational total = 0;
    detail::for_each_permutation(x, [&](const std::vector<int>& a) {
        const std::size_t m = a.size();
        Rational term = 1;
        switch (model.kind) {
            case WeightKind::EPrime: {
                long s = 0;
                for (std::size_t j = 0; j < m; ++j) {
                    s += a[j];
                    term *= Rational(1) / (pow_rational(q, -s) - 1);
                }
                break;
            }
            case WeightKind::E: {
                long shift = 0, tail = 0;
                for (std::size_t j = 0; j < m; ++j) shift += static_cast<long>(j) * a[j];
                term = pow_rational(q, shift);
                for (std::size_t j = m; j-- > 0;) {
                    tail += a[j];
                    term /= 1 - pow_rational(q, tail);
                }
                break;
            }
            case WeightKind::H: {
                long tail = 0;
                for (std::size_t j = m; j-- > 0;) {
                    tail += a[j];
                    term /= 1 - pow_rational(q, tail);
                }
                break;
            }
            default: break;
        }
        total += term;
    });
    return total;
}

/// Weight function w_G on P_d: Phi / |aut| for the quantum models (with the
/// (-1)^{colength} sign for H), indicator weights for Exp and Belyi, and the
/// monomial symmetric function m_lambda(c) for a finite parameter list.
inline Rational weight_on_Pd(const WeightModel& model, const Partition& lam,
                             std::optional<Rational> q = {}) {
    switch (model.kind) {
        case WeightKind::EPrime:
        case WeightKind::E:
        case WeightKind::H: {
            if (!q) throw DomainError("weight_on_Pd: quantum model needs q");
            const PartitionStatistics st = stats(lam);
            Rational w = phi_value(model, lam.parts(), *q) / Rational(st.aut_order);
            if (model.kind == WeightKind::H && lam.colength() % 2 != 0) w = -w;
            return w;
        }
        case WeightKind::Exp:
            return (lam.length() == lam.weight()) ? 1 : 0;  // lam == (1^d)
        case WeightKind::Belyi:
            return (lam.length() == 1 || lam.empty()) ? 1 : 0;
        case WeightKind::FiniteC: {
            // m_lambda(c) = |aut|^{-1} * sum over injective index tuples
            const std::size_t k = static_cast<std::size_t>(lam.length());
            if (k > model.c.size()) return 0;
            Rational total = 0;
            std::vector<std::size_t> pick;
            std::vector<bool> used(model.c.size(), false);
            auto rec = [&](auto&& self, std::size_t depth, const Rational& prod) -> void {
                if (depth == k) { total += prod; return; }
                for (std::size_t i = 0; i < model.c.size(); ++i) {
                    if (used[i]) continue;
                    used[i] = true;
                    self(self, depth + 1, prod * pow_rational(model.c[i], lam.part(static_cast<int>(depth))));
                    used[i] = false;
                }
            };
            rec(rec, 0, Rational(1));
            return total / Rational(stats(lam).aut_order);
        }
    }
    throw DomainError("weight_on_Pd: unreachable");
}

namespace detail {

/// Per-arrangement q-series of the quantum weight term (without sign or aut).
inline LaurentSeries weight_term_q(WeightKind kind, const std::vector<int>& a, long order) {
    const std::size_t m = a.size();
    LaurentSeries term = LaurentSeries::constant(Var::q, 1, order + 1);
    switch (kind) {
        case WeightKind::EPrime: {
            long s = 0;
            for (std::size_t j = 0; j < m; ++j) {
                s += a[j];
                term = (term * geometric_q(s, order + 1)).truncated(order);
            }
            return term.truncated(order);
        }
        case WeightKind::E:
        case WeightKind::H: {
            long shift = 0;
            if (kind == WeightKind::E)
                for (std::size_t j = 0; j < m; ++j) shift += static_cast<long>(j) * a[j];
            long tail = 0;
            for (std::size_t j = m; j-- > 0;) {
                tail += a[j];
                // (1 - q^tail)^{-1}
                const LaurentSeries denom =
                    LaurentSeries::constant(Var::q, 1, order + 1) -
                    LaurentSeries::monomial(Var::q, 1, tail, order + 1);
                term = (term * denom.inverse()).truncated(order + 1);
            }
            return term.shifted(shift).truncated(order);
        }
        default:
            throw DomainError("weight_term_q: quantum models only");
    }
}

/// Per-arrangement eps-series at q = e^{-eps} (without sign or aut); exact
/// through degree order - 1.
inline LaurentSeries weight_term_eps(WeightKind kind, const std::vector<int>& a, long order) {
    const long m = static_cast<long>(a.size());
    const long build = order + m + 2;  // headroom: each factor costs one valid degree
    LaurentSeries term = LaurentSeries::constant(Var::eps, 1, build);
    switch (kind) {
        case WeightKind::EPrime: {
            long s = 0;
            for (long j = 0; j < m; ++j) {
                s += a[static_cast<std::size_t>(j)];
                term = term * bose_factor(s, build);
            }
            break;
        }
        case WeightKind::E:
        case WeightKind::H: {
            long shift = 0;
            if (kind == WeightKind::E)
                for (long j = 0; j < m; ++j) shift += j * a[static_cast<std::size_t>(j)];
            long tail = 0;
            for (long j = m; j-- > 0;) {
                tail += a[static_cast<std::size_t>(j)];
                // (1 - e^{-tail*eps})^{-1} = -1 / (e^{-tail*eps} - 1) = bose-type with s = -tail
                std::vector<Rational> cs;
                Integer tk = tail;
                Integer kf = 1;
                for (long k = 1; k < build; ++k) {
                    cs.emplace_back(Rational((k % 2 == 1) ? tk : -tk, kf));
                    tk *= tail;
                    kf *= k + 1;
                }
                const LaurentSeries one_minus_exp(Var::eps, 1, std::move(cs), build);
                term = term * one_minus_exp.inverse();
            }
            if (shift != 0) {
                // e^{-shift*eps}
                term = term * exp_series(LaurentSeries::monomial(Var::eps, -shift, 1, build));
            }
            break;
        }
        default:
            throw DomainError("weight_term_eps: quantum models only");
    }
    return term.truncated(std::min(order, term.valid_order()));
}

}  // namespace detail

/// Exact q-Taylor expansion of weight_on_Pd as a rational function of q,
/// valid below `order`. For E' the lowest degree is sum_j j*lambda_j.
inline LaurentSeries weight_q_series(const WeightModel& model, const Partition& lam, long order) {
    if (!model.quantum()) throw DomainError("weight_q_series: quantum models only");
    if (order <= 0) throw DomainError("weight_q_series: order must be positive");
    LaurentSeries total = LaurentSeries::zero(Var::q, order);
    detail::for_each_permutation(lam.parts(), [&](const std::vector<int>& a) {
        total = total + detail::weight_term_q(model.kind, a, order);
    });
    total = total.scaled(Rational(1, stats(lam).aut_order));
    if (model.kind == WeightKind::H && lam.colength() % 2 != 0) total = total.scaled(-1);
    return total;
}

/// Exact Laurent expansion in eps of weight_on_Pd at q = e^{-eps}; the
/// minimum degree is -l(lambda). Exact through degree order - 1.
inline LaurentSeries weight_eps_series(const WeightModel& model, const Partition& lam, long order) {
    if (!model.quantum()) throw DomainError("weight_eps_series: quantum models only");
    if (order <= -lam.length()) throw DomainError("weight_eps_series: order below principal part");
    LaurentSeries total = LaurentSeries::zero(Var::eps, order);
    detail::for_each_permutation(lam.parts(), [&](const std::vector<int>& a) {
        total = total + detail::weight_term_eps(model.kind, a, order);
    });
    total = total.scaled(Rational(1, stats(lam).aut_order));
    if (model.kind == WeightKind::H && lam.colength() % 2 != 0) total = total.scaled(-1);
    return total;
}

/// z^i coefficient of the model's generating function G(z); quantum models
/// use the closed q-Pochhammer forms.
inline Rational gen_function_coeff(const WeightModel& model, int i, const Rational& q) {
    if (!model.quantum()) throw DomainError("gen_function_coeff: quantum models only");
    if (i < 0) throw DomainError("gen_function_coeff: negative index");
    check_q(q);
    if (i == 0) return 1;
    Rational denom = 1;
    for (int j = 1; j <= i; ++j) denom *= 1 - pow_rational(q, j);
    switch (model.kind) {
        case WeightKind::EPrime: return pow_rational(q, static_cast<long>(i) * (i + 1) / 2) / denom;
        case WeightKind::E: return pow_rational(q, static_cast<long>(i) * (i - 1) / 2) / denom;
        case WeightKind::H: return Rational(1) / denom;
        default: break;
    }
    throw DomainError("gen_function_coeff: unreachable");
}

/// Truncated direct evaluation of the defining multisum (strict indices from
/// 1 for E', strict from 0 for E, weak from 0 for H; unsigned), including the
/// 1/|aut| prefactor, over all index tuples bounded by indexBound.
inline Rational multisum_oracle(const WeightModel& model, const std::vector<int>& x,
                                const Rational& q, int index_bound) {
    if (!model.quantum()) throw DomainError("multisum_oracle: quantum models only");
    check_q(q);
    const int k = static_cast<int>(x.size());
    if (index_bound < k) throw DomainError("multisum_oracle: indexBound below tuple length");
    if (x.empty()) return 1;
    const int lo = (model.kind == WeightKind::EPrime) ? 1 : 0;
    const bool weak = (model.kind == WeightKind::H);
    Rational total = 0;
    detail::for_each_permutation(x, [&](const std::vector<int>& a) {
        auto rec = [&](auto&& self, int depth, int min_index, const Rational& prod) -> void {
            if (depth == k) { total += prod; return; }
            for (int i = min_index; i <= index_bound; ++i) {
                self(self, depth + 1, weak ? i : i + 1,
                     prod * pow_rational(q, static_cast<long>(i) * a[static_cast<std::size_t>(depth)]));
            }
        };
        rec(rec, 0, lo, Rational(1));
    });
    return total / Rational(detail::aut_of_composition(x));
}

/// Quantum dilogarithm z-series: Li2(q, z) = (1-q) sum_k z^k / (k (1-q^k)).
inline LaurentSeries quantum_dilog(const Rational& q, long order) {
    check_q(q);
    std::vector<Rational> cs;
    for (long kk = 1; kk < order; ++kk)
        cs.push_back((1 - q) / (Rational(kk) * (1 - pow_rational(q, kk))));
    return LaurentSeries(Var::z, 1, std::move(cs), order);
}

/// Verifies (1+z) E'(q,z) = exp(-Li2(q,-z)/(1-q)) and
/// H(q,z) = exp(Li2(q,z)/(1-q)) coefficientwise through degree `order`.
inline VerificationReport dilog_check(const Rational& q, long order) {
    check_q(q);
    const long valid = order + 1;
    auto product_series = [&](WeightKind kind) {
        std::vector<Rational> cs;
        for (long i = 0; i < valid; ++i)
            cs.push_back(gen_function_coeff({kind, {}}, static_cast<int>(i), q));
        return LaurentSeries(Var::z, 0, std::move(cs), valid);
    };
    const LaurentSeries li2 = quantum_dilog(q, valid);
    // Li2(q, -z), degreewise sign flip
    std::vector<Rational> alt;
    for (long d = 1; d < valid; ++d) alt.push_back((d % 2 == 1 ? -1 : 1) * li2.coeff(d));
    const LaurentSeries li2_neg(Var::z, 1, std::move(alt), valid);

    const LaurentSeries one_plus_z = LaurentSeries::constant(Var::z, 1, valid) +
                                     LaurentSeries::monomial(Var::z, 1, 1, valid);
    const LaurentSeries lhs_eprime = one_plus_z * product_series(WeightKind::EPrime);
    const LaurentSeries rhs_eprime = exp_series(li2_neg.scaled(Rational(-1) / (1 - q)));
    const LaurentSeries lhs_h = product_series(WeightKind::H);
    const LaurentSeries rhs_h = exp_series(li2.scaled(Rational(1) / (1 - q)));

    VerificationReport rep;
    rep.claim.source_ref = "quantum dilogarithm identities";
    rep.claim.var = Var::z;
    rep.claim.validity = "q in (0,1); identities hold at every order";
    for (long d = 0; d <= order; ++d) {
        rep.add("eprime", d, rhs_eprime.coeff(d), lhs_eprime.coeff(d));
        rep.add("h", d, rhs_h.coeff(d), lhs_h.coeff(d));
    }
    rep.notes = "claimed = exponential side, computed = product side, at q = " + rational_str(q);
    return rep;
}

}  // namespace qhw
