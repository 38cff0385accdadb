#pragma once

// Exact Laurent polynomials in q with arbitrary-precision integer
// coefficients, q-integers, and reduction modulo the l-th cyclotomic
// polynomial (evaluation at a primitive l-th root of unity).

#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twaff/error.hpp"

namespace twaff {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

// Dense polynomial in nonnegative powers, coefficient i of x^i.
using DensePoly = std::vector<BigInt>;

inline void trim(DensePoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Division by a monic polynomial; returns {quotient, remainder}.
inline std::pair<DensePoly, DensePoly> divmod_monic(DensePoly num, const DensePoly& den) {
    if (den.empty() || den.back() != 1) throw Error(ErrorKind::InternalInconsistency, "divisor is not monic");
    trim(num);
    if (num.size() < den.size()) return {DensePoly{}, std::move(num)};
    const std::size_t dd = den.size() - 1;
    DensePoly quot(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        BigInt c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num.resize(dd);
    trim(num);
    trim(quot);
    return {std::move(quot), std::move(num)};
}

} // namespace detail

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { // NOLINT: implicit from integer constants is intended
        if (c != 0) coeffs_.push_back(BigInt(c));
    }
    explicit LaurentPoly(BigInt c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }

    static LaurentPoly monomial(std::int64_t exponent, BigInt coeff = 1) {
        LaurentPoly p;
        if (coeff != 0) {
            p.low_ = exponent;
            p.coeffs_.push_back(std::move(coeff));
        }
        return p;
    }

    static LaurentPoly from_terms(const std::map<std::int64_t, BigInt>& terms) {
        LaurentPoly p;
        for (const auto& [e, c] : terms) p += monomial(e, c);
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Valid only for nonzero polynomials.
    std::int64_t min_exponent() const noexcept { return low_; }
    std::int64_t max_exponent() const noexcept { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }

    BigInt coeff(std::int64_t e) const {
        if (is_zero() || e < low_ || e > max_exponent()) return 0;
        return coeffs_[static_cast<std::size_t>(e - low_)];
    }

    std::map<std::int64_t, BigInt> terms() const {
        std::map<std::int64_t, BigInt> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) out.emplace(low_ + static_cast<std::int64_t>(i), coeffs_[i]);
        return out;
    }

    // Coefficients of q^{min_exponent} .. q^{max_exponent}.
    const std::vector<BigInt>& dense() const noexcept { return coeffs_; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        const std::int64_t lo = std::min(low_, o.low_);
        const std::int64_t hi = std::max(max_exponent(), o.max_exponent());
        std::vector<BigInt> sum(static_cast<std::size_t>(hi - lo + 1));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[static_cast<std::size_t>(low_ - lo) + i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) sum[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
        low_ = lo;
        coeffs_ = std::move(sum);
        normalize();
        return *this;
    }

    LaurentPoly operator-() const {
        LaurentPoly p = *this;
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly p;
        if (a.is_zero() || b.is_zero()) return p;
        p.low_ = a.low_ + b.low_;
        p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        p.normalize();
        return p;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_);
    }

    // q -> q^{-1}
    LaurentPoly bar() const {
        LaurentPoly p;
        if (is_zero()) return p;
        p.low_ = -max_exponent();
        p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
        return p;
    }

    LaurentPoly shifted(std::int64_t by) const {
        LaurentPoly p = *this;
        if (!p.is_zero()) p.low_ += by;
        return p;
    }

    LaurentPoly pow(unsigned e) const {
        LaurentPoly result(1L), base = *this;
        while (e) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e) base *= base;
        }
        return result;
    }

private:
    void normalize() {
        std::size_t first = 0;
        while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
        if (first == coeffs_.size()) {
            coeffs_.clear();
            low_ = 0;
            return;
        }
        if (first > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
            low_ += static_cast<std::int64_t>(first);
        }
        detail::trim(coeffs_);
    }

    std::int64_t low_ = 0;
    std::vector<BigInt> coeffs_;
};

// Decreasing exponents, e.g. "q^4 + 1 + q^-4", "2q^3 - q", "0".
inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::int64_t e = p.max_exponent(); e >= p.min_exponent(); --e) {
        BigInt c = p.coeff(e);
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c;
        os << 'q';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

// Exact quotient f / g; throws if g does not divide f in Z[q, q^-1].
inline LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw Error(ErrorKind::Domain, "division by the zero polynomial");
    if (f.is_zero()) return f;
    detail::DensePoly num = f.dense();
    const detail::DensePoly& den = g.dense();
    if (num.size() < den.size()) throw Error(ErrorKind::Domain, "inexact Laurent division");
    const std::size_t dd = den.size() - 1;
    const BigInt& lead = den.back();
    detail::DensePoly quot(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        if (num[i] == 0) continue;
        if (num[i] % lead != 0) throw Error(ErrorKind::Domain, "inexact Laurent division");
        BigInt c = num[i] / lead;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (num[i] != 0) throw Error(ErrorKind::Domain, "inexact Laurent division");
    std::map<std::int64_t, BigInt> terms;
    for (std::size_t i = 0; i < quot.size(); ++i)
        if (quot[i] != 0) terms.emplace(f.min_exponent() - g.min_exponent() + static_cast<std::int64_t>(i), quot[i]);
    return LaurentPoly::from_terms(terms);
}

// [m]_{q^r} = sum_{s=0}^{m-1} q^{r(m-1-2s)}
inline LaurentPoly qint(int m, int r) {
    if (m < 0 || r < 1) throw Error(ErrorKind::Domain, "qint needs m >= 0 and r >= 1");
    LaurentPoly p;
    for (int s = 0; s < m; ++s) p += LaurentPoly::monomial(static_cast<std::int64_t>(r) * (m - 1 - 2 * s));
    return p;
}

inline LaurentPoly qfactorial(int m, int r) {
    if (m < 0) throw Error(ErrorKind::Domain, "qfactorial needs m >= 0");
    LaurentPoly p(1L);
    for (int s = 1; s <= m; ++s) p *= qint(s, r);
    return p;
}

inline LaurentPoly qbinom(int m, int mp, int r) {
    if (mp < 0 || mp > m) throw Error(ErrorKind::Domain, "qbinom needs 0 <= m' <= m");
    return exact_divide(qfactorial(m, r), qfactorial(mp, r) * qfactorial(m - mp, r));
}

namespace detail {

// Phi_l by dividing x^l - 1 by Phi_d for every proper divisor d of l.
inline DensePoly compute_cyclotomic(int l) {
    DensePoly p(static_cast<std::size_t>(l) + 1, BigInt(0));
    p[0] = -1;
    p[static_cast<std::size_t>(l)] = 1;
    for (int d = 1; d < l; ++d) {
        if (l % d != 0) continue;
        auto [q, rem] = divmod_monic(p, compute_cyclotomic(d));
        if (!rem.empty()) throw Error(ErrorKind::InternalInconsistency, "cyclotomic recursion left a remainder");
        p = std::move(q);
    }
    return p;
}

} // namespace detail

// Cached per l; concurrent first use is serialized by the mutex and map nodes
// are never moved afterwards.
inline const detail::DensePoly& cyclotomic(int l) {
    if (l < 1) throw Error(ErrorKind::Domain, "cyclotomic polynomial needs l >= 1");
    static std::mutex mutex;
    static std::map<int, detail::DensePoly> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(l);
    if (it == cache.end()) it = cache.emplace(l, detail::compute_cyclotomic(l)).first;
    return it->second;
}

inline int euler_phi(int l) { return static_cast<int>(cyclotomic(l).size()) - 1; }

// A value of Z[q]/(Phi_l), stored by its canonical residue of degree < phi(l).
class CycloElement {
public:
    CycloElement(int l, const LaurentPoly& f) : l_(l) {
        if (l < 1) throw Error(ErrorKind::Domain, "root of unity order must be positive");
        // q^l = 1 modulo Phi_l, so exponents fold into [0, l).
        detail::DensePoly folded(static_cast<std::size_t>(l), BigInt(0));
        if (!f.is_zero()) {
            for (std::size_t i = 0; i < f.dense().size(); ++i) {
                std::int64_t e = f.min_exponent() + static_cast<std::int64_t>(i);
                std::int64_t m = ((e % l) + l) % l;
                folded[static_cast<std::size_t>(m)] += f.dense()[i];
            }
        }
        residue_ = detail::divmod_monic(std::move(folded), cyclotomic(l)).second;
    }

    int order() const noexcept { return l_; }
    bool is_zero() const noexcept { return residue_.empty(); }

    LaurentPoly residue() const {
        std::map<std::int64_t, BigInt> t;
        for (std::size_t i = 0; i < residue_.size(); ++i)
            if (residue_[i] != 0) t.emplace(static_cast<std::int64_t>(i), residue_[i]);
        return LaurentPoly::from_terms(t);
    }

    friend CycloElement operator+(const CycloElement& a, const CycloElement& b) {
        check_same(a, b);
        return CycloElement(a.l_, a.residue() + b.residue());
    }
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b) {
        check_same(a, b);
        return CycloElement(a.l_, a.residue() * b.residue());
    }
    friend bool operator==(const CycloElement& a, const CycloElement& b) {
        return a.l_ == b.l_ && a.residue_ == b.residue_;
    }

private:
    static void check_same(const CycloElement& a, const CycloElement& b) {
        if (a.l_ != b.l_) throw Error(ErrorKind::Domain, "mixing residues for different roots of unity");
    }

    int l_;
    detail::DensePoly residue_;
};

inline CycloElement eval_at_eps(const LaurentPoly& f, int l) { return CycloElement(l, f); }

// Multiplicity of a primitive l-th root of unity as a root of f, i.e. the
// Phi_l-adic valuation of f with monomial units stripped.
inline int mult_eps(const LaurentPoly& f, int l) {
    if (f.is_zero()) throw Error(ErrorKind::UndefinedMultiplicity, "multiplicity of the zero polynomial");
    if (l < 2) throw Error(ErrorKind::Domain, "root of unity order must exceed 1");
    const auto& phi = cyclotomic(l);
    detail::DensePoly p = f.dense();
    int t = 0;
    while (p.size() >= phi.size()) {
        auto [quot, rem] = detail::divmod_monic(p, phi);
        if (!rem.empty()) break;
        p = std::move(quot);
        ++t;
    }
    return t;
}

} // namespace twaff
