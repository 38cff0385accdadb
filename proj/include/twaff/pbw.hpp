#pragma once

// par(eta): the number of multisets of positive roots with multiplicity whose
// projections sum to eta. Counted with an unbounded-knapsack table over the
// lattice box [0, H]; enumerate_partitions lists them explicitly and serves as
// the brute-force check on small weights.

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "twaff/error.hpp"
#include "twaff/roots.hpp"

namespace twaff {

using Count = std::uint64_t;

struct PbwLimits {
    // Weights must satisfy eta <= cap_multiple * delta componentwise.
    int cap_multiple = 6;
    std::size_t max_table_cells = 50'000'000;
    std::size_t max_partitions = 2'000'000;
};

// One letter of the alphabet: a real root, or an imaginary slot (r delta, i).
struct Letter {
    LatticeVector weight;
    RootEntry entry;
};

using PartitionMultiset = std::vector<RootEntry>;

inline LatticeVector projection(const TwistedType& t, const RootEntry& e) {
    if (const auto* real = std::get_if<RealRoot>(&e)) return real->v;
    return static_cast<std::int64_t>(std::get<ImaginaryRoot>(e).r) * delta_vector(t);
}

namespace detail {

inline void require_weight(const RootCatalog& catalog, const LatticeVector& eta, const PbwLimits& limits) {
    const auto& t = catalog.type();
    if (eta.size() != t.size()) throw Error(ErrorKind::Domain, "weight has the wrong number of coordinates");
    if (!eta.nonnegative()) throw Error(ErrorKind::Domain, "weight " + format_root(eta) + " is not in Q_+");
    catalog.require_covers(eta.delta_degree());
    if (!eta.leq(static_cast<std::int64_t>(limits.cap_multiple) * delta_vector(t)))
        throw Error(ErrorKind::OutOfRange, "weight " + format_root(eta) + " exceeds the table cap " +
                                               std::to_string(limits.cap_multiple) + "*delta");
}

inline Count checked_add(Count a, Count b) {
    Count s = 0;
    if (__builtin_add_overflow(a, b, &s)) throw Error(ErrorKind::Resource, "partition count overflows 64 bits");
    return s;
}

inline Count checked_mul(Count a, Count b) {
    Count s = 0;
    if (__builtin_mul_overflow(a, b, &s)) throw Error(ErrorKind::Resource, "count product overflows 64 bits");
    return s;
}

} // namespace detail

// Real roots v <= eta, then slots (r delta, i) with r delta <= eta, i in I^r.
inline std::vector<Letter> pbw_alphabet(const RootCatalog& catalog, const LatticeVector& eta) {
    const auto& t = catalog.type();
    catalog.require_covers(eta.delta_degree());
    std::vector<Letter> letters;
    for (const auto& root : catalog.reals())
        if (root.v.leq(eta)) letters.push_back({root.v, root});
    const LatticeVector delta = delta_vector(t);
    for (int r = 1; (r * delta).leq(eta); ++r)
        for (int i : imaginary_slots(t, r)) letters.push_back({r * delta, ImaginaryRoot{r, i}});
    return letters;
}

// Number of multisets over the given letters (each usable any number of
// times) summing to mu, for every mu in the box [0, bound].
class PartitionTable {
public:
    PartitionTable(const std::vector<LatticeVector>& letters, LatticeVector bound, const PbwLimits& limits = {})
        : bound_(std::move(bound)) {
        if (!bound_.nonnegative()) throw Error(ErrorKind::Domain, "table bound must lie in Q_+");
        const int sz = bound_.size();
        stride_.assign(static_cast<std::size_t>(sz), 1);
        std::size_t cells = 1;
        for (int i = sz - 1; i >= 0; --i) {
            stride_[static_cast<std::size_t>(i)] = cells;
            cells *= static_cast<std::size_t>(bound_[i] + 1);
            if (cells > limits.max_table_cells)
                throw Error(ErrorKind::Resource, "partition table would exceed " +
                                                     std::to_string(limits.max_table_cells) + " cells");
        }
        table_.assign(cells, 0);
        table_[0] = 1;

        std::vector<std::int64_t> mu(static_cast<std::size_t>(sz));
        for (const auto& w : letters) {
            if (w.is_zero() || !w.nonnegative()) throw Error(ErrorKind::Domain, "letters must be nonzero in Q_+");
            if (!w.leq(bound_)) continue;
            std::size_t offset = 0;
            for (int i = 0; i < sz; ++i) offset += static_cast<std::size_t>(w[i]) * stride_[static_cast<std::size_t>(i)];
            std::fill(mu.begin(), mu.end(), 0);
            for (std::size_t idx = 0; idx < cells; ++idx) {
                bool fits = true;
                for (int i = 0; i < sz; ++i)
                    if (mu[static_cast<std::size_t>(i)] < w[i]) {
                        fits = false;
                        break;
                    }
                if (fits) table_[idx] = detail::checked_add(table_[idx], table_[idx - offset]);
                // odometer increment, last coordinate fastest
                for (int i = sz - 1; i >= 0; --i) {
                    if (++mu[static_cast<std::size_t>(i)] <= bound_[i]) break;
                    mu[static_cast<std::size_t>(i)] = 0;
                }
            }
        }
    }

    const LatticeVector& bound() const noexcept { return bound_; }

    // Zero outside Q_+; throws outside the box.
    Count operator()(const LatticeVector& mu) const {
        if (!mu.nonnegative()) return 0;
        if (!mu.leq(bound_)) throw Error(ErrorKind::OutOfRange, "weight " + format_root(mu) + " outside table");
        std::size_t idx = 0;
        for (int i = 0; i < mu.size(); ++i) idx += static_cast<std::size_t>(mu[i]) * stride_[static_cast<std::size_t>(i)];
        return table_[idx];
    }

private:
    LatticeVector bound_;
    std::vector<std::size_t> stride_;
    std::vector<Count> table_;
};

inline std::vector<LatticeVector> letter_weights(const std::vector<Letter>& letters) {
    std::vector<LatticeVector> w;
    w.reserve(letters.size());
    for (const auto& l : letters) w.push_back(l.weight);
    return w;
}

// Table of par(mu) for all 0 <= mu <= eta.
inline PartitionTable par_table(const RootCatalog& catalog, const LatticeVector& eta, const PbwLimits& limits = {}) {
    detail::require_weight(catalog, eta, limits);
    return PartitionTable(letter_weights(pbw_alphabet(catalog, eta)), eta, limits);
}

inline Count par(const RootCatalog& catalog, const LatticeVector& eta, const PbwLimits& limits = {}) {
    return par_table(catalog, eta, limits)(eta);
}

// Explicit list of the multisets, each in non-decreasing alphabet order.
inline std::vector<PartitionMultiset> enumerate_partitions(const RootCatalog& catalog, const LatticeVector& eta,
                                                           const PbwLimits& limits = {}) {
    detail::require_weight(catalog, eta, limits);
    const auto letters = pbw_alphabet(catalog, eta);
    std::vector<PartitionMultiset> out;
    PartitionMultiset current;
    std::function<void(std::size_t, const LatticeVector&)> extend = [&](std::size_t from, const LatticeVector& rest) {
        if (rest.is_zero()) {
            if (out.size() >= limits.max_partitions)
                throw Error(ErrorKind::Resource, "more than " + std::to_string(limits.max_partitions) + " partitions");
            out.push_back(current);
            return;
        }
        for (std::size_t i = from; i < letters.size(); ++i) {
            if (!letters[i].weight.leq(rest)) continue;
            current.push_back(letters[i].entry);
            extend(i, rest - letters[i].weight);
            current.pop_back();
        }
    };
    extend(0, eta);
    return out;
}

} // namespace twaff
