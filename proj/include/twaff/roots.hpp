#pragma once

// Positive real roots up to a delta-degree cutoff, imaginary multiplicity
// slots I^r, and classification of root-lattice vectors.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "twaff/cartan.hpp"
#include "twaff/error.hpp"

namespace twaff {

// Element of the root lattice Q, coordinates indexed by I = {0, ..., n}.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(int size) : c_(static_cast<std::size_t>(size), 0) {}
    explicit LatticeVector(std::vector<std::int64_t> coords) : c_(std::move(coords)) {}
    LatticeVector(std::initializer_list<std::int64_t> coords) : c_(coords) {}

    static LatticeVector simple(int size, int i) {
        LatticeVector v(size);
        v[i] = 1;
        return v;
    }

    int size() const noexcept { return static_cast<int>(c_.size()); }
    std::int64_t& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& coords() const noexcept { return c_; }

    // Coefficient of alpha_0; this is the delta-degree because r_0 = 1.
    std::int64_t delta_degree() const { return c_.at(0); }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](auto x) { return x == 0; });
    }
    bool nonnegative() const {
        return std::all_of(c_.begin(), c_.end(), [](auto x) { return x >= 0; });
    }
    bool nonpositive() const {
        return std::all_of(c_.begin(), c_.end(), [](auto x) { return x <= 0; });
    }
    // Componentwise partial order.
    bool leq(const LatticeVector& o) const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] > o.c_[i]) return false;
        return true;
    }
    std::int64_t height() const { return std::accumulate(c_.begin(), c_.end(), std::int64_t{0}); }

    LatticeVector& operator+=(const LatticeVector& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    LatticeVector& operator-=(const LatticeVector& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator*(std::int64_t s, LatticeVector v) {
        for (auto& x : v.c_) x *= s;
        return v;
    }
    LatticeVector operator-() const { return -1 * *this; }

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

private:
    std::vector<std::int64_t> c_;
};

// "a0+2a1", "-a2", "0".
inline std::string format_root(const LatticeVector& v) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < v.size(); ++i) {
        std::int64_t c = v[i];
        if (c == 0) continue;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        if (c != 1 && c != -1) os << (c < 0 ? -c : c);
        os << 'a' << i;
    }
    return first ? "0" : os.str();
}

// Parses "c0,c1,...,cn".
inline LatticeVector parse_weight(const std::string& text, int expected_size) {
    std::vector<std::int64_t> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long long x = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            coords.push_back(x);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Domain, "cannot parse weight coordinate '" + item + "'");
        }
    }
    if (static_cast<int>(coords.size()) != expected_size)
        throw Error(ErrorKind::Domain, "weight needs " + std::to_string(expected_size) + " coordinates, got " +
                                           std::to_string(coords.size()));
    return LatticeVector(std::move(coords));
}

inline LatticeVector delta_vector(const TwistedType& t) {
    LatticeVector v(t.size());
    for (int i = 0; i < t.size(); ++i) v[i] = t.delta[static_cast<std::size_t>(i)];
    return v;
}

// Symmetrized form B(u, w) = sum_ij u_i d_i a_ij w_j.
inline std::int64_t bilinear(const TwistedType& t, const LatticeVector& u, const LatticeVector& w) {
    std::int64_t s = 0;
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j) s += u[i] * t.d[static_cast<std::size_t>(i)] * t.cartan(i, j) * w[j];
    return s;
}

// <v, alpha_i^vee> = sum_j a_ij v_j
inline std::int64_t coroot_pairing(const TwistedType& t, const LatticeVector& v, int i) {
    std::int64_t s = 0;
    for (int j = 0; j < t.size(); ++j) s += t.cartan(i, j) * v[j];
    return s;
}

inline LatticeVector reflect(const TwistedType& t, const LatticeVector& v, int i) {
    LatticeVector w = v;
    w[i] -= coroot_pairing(t, v, i);
    return w;
}

struct RealRoot {
    LatticeVector v;
    int d_alpha = 1;

    friend bool operator==(const RealRoot&, const RealRoot&) = default;
};

struct ImaginaryRoot {
    int r = 1;
    int slot = 1;

    friend bool operator==(const ImaginaryRoot&, const ImaginaryRoot&) = default;
};

using RootEntry = std::variant<RealRoot, ImaginaryRoot>;

// I^r: I_0 for A_2n^(2), otherwise {i in I_0 : d_i | r}.
inline std::vector<int> imaginary_slots(const TwistedType& t, int r) {
    if (r < 1) throw Error(ErrorKind::Domain, "imaginary slots need r >= 1");
    std::vector<int> slots;
    for (int i = 1; i <= t.n; ++i)
        if (t.family == Family::A2n_2 || r % t.d[static_cast<std::size_t>(i)] == 0) slots.push_back(i);
    return slots;
}

inline int imaginary_multiplicity(const TwistedType& t, int r) { return static_cast<int>(imaginary_slots(t, r).size()); }

struct RootLimits {
    // Upper bound on the number of stored real roots.
    std::size_t max_roots = 200000;
};

class RootCatalog {
public:
    RootCatalog(TwistedType type, int cutoff, std::vector<RealRoot> reals)
        : type_(std::move(type)), cutoff_(cutoff), reals_(std::move(reals)), index_() {
        for (const auto& r : reals_) index_.insert(r.v);
    }

    const TwistedType& type() const noexcept { return type_; }
    int cutoff() const noexcept { return cutoff_; }
    // Sorted by (delta-degree, coordinates).
    const std::vector<RealRoot>& reals() const noexcept { return reals_; }
    bool contains(const LatticeVector& v) const { return index_.contains(v); }
    int imaginary_multiplicity(int r) const { return twaff::imaginary_multiplicity(type_, r); }

    void require_covers(std::int64_t degree) const {
        if (degree > cutoff_)
            throw Error(ErrorKind::OutOfRange, "delta-degree " + std::to_string(degree) +
                                                   " exceeds catalog cutoff " + std::to_string(cutoff_));
    }

private:
    TwistedType type_;
    int cutoff_;
    std::vector<RealRoot> reals_;
    std::set<LatticeVector> index_;
};

// Every positive real root other than a simple root has a simple reflection
// lowering its height to another positive real root, so ascending chains from
// the simple roots reach all of them. Coordinates only grow along an ascending
// chain, hence restricting to delta-degree <= D loses nothing.
inline RootCatalog real_roots_upto(const TwistedType& t, int cutoff, const RootLimits& limits = {}) {
    if (cutoff < 0) throw Error(ErrorKind::Domain, "cutoff must be >= 0");
    const int sz = t.size();
    std::set<LatticeVector> seen;
    std::vector<RealRoot> frontier;
    std::vector<RealRoot> all;
    std::set<int> lengths(t.d.begin(), t.d.end());

    for (int i = 0; i < sz; ++i) {
        RealRoot a{LatticeVector::simple(sz, i), t.d[static_cast<std::size_t>(i)]};
        if (a.v.delta_degree() > cutoff) continue;
        seen.insert(a.v);
        frontier.push_back(a);
    }
    while (!frontier.empty()) {
        std::vector<RealRoot> next;
        for (const auto& root : frontier) {
            all.push_back(root);
            for (int i = 0; i < sz; ++i) {
                const std::int64_t c = coroot_pairing(t, root.v, i);
                if (c >= 0) continue;
                LatticeVector w = root.v;
                w[i] -= c;
                if (w.delta_degree() > cutoff || seen.contains(w)) continue;
                const std::int64_t norm = bilinear(t, w, w);
                if (norm % 2 != 0 || norm / 2 != root.d_alpha)
                    throw Error(ErrorKind::InternalInconsistency, "reflection changed the root length");
                seen.insert(w);
                next.push_back({w, root.d_alpha});
                if (seen.size() > limits.max_roots)
                    throw Error(ErrorKind::Resource, "real root enumeration exceeds " +
                                                         std::to_string(limits.max_roots) + " roots");
            }
        }
        frontier = std::move(next);
    }
    for (const auto& r : all)
        if (!lengths.contains(r.d_alpha)) throw Error(ErrorKind::InternalInconsistency, "root length not among d_i");
    std::sort(all.begin(), all.end(), [](const RealRoot& a, const RealRoot& b) {
        if (a.v.delta_degree() != b.v.delta_degree()) return a.v.delta_degree() < b.v.delta_degree();
        return a.v < b.v;
    });
    return RootCatalog(t, cutoff, std::move(all));
}

enum class RootClass { RealPositive, ImaginaryPositive, NotPositiveRoot };

struct Classification {
    RootClass kind = RootClass::NotPositiveRoot;
    int r = 0;  // set for ImaginaryPositive

    friend bool operator==(const Classification&, const Classification&) = default;
};

inline Classification classify(const LatticeVector& v, const RootCatalog& catalog) {
    const auto& t = catalog.type();
    if (v.size() != t.size()) throw Error(ErrorKind::Domain, "vector has the wrong number of coordinates");
    catalog.require_covers(v.delta_degree());
    if (!v.nonnegative() || v.is_zero()) return {};
    const std::int64_t r = v.delta_degree();
    if (r >= 1 && v == r * delta_vector(t)) return {RootClass::ImaginaryPositive, static_cast<int>(r)};
    if (catalog.contains(v)) return {RootClass::RealPositive, 0};
    return {};
}

// l / gcd(l, d_alpha)
inline int l_alpha(int d_alpha, int l) { return l / std::gcd(l, d_alpha); }
inline int l_alpha(const RealRoot& root, int l) { return l_alpha(root.d_alpha, l); }

// The order of the root of unity must be odd and exceed k.
inline void require_admissible(const TwistedType& t, int l) {
    if (l <= t.k || l % 2 == 0)
        throw Error(ErrorKind::Domain, "l must be an odd integer greater than k = " + std::to_string(t.k) +
                                           ", got " + std::to_string(l));
}

} // namespace twaff
