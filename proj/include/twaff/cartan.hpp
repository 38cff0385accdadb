#pragma once

// Dynkin diagrams of the five twisted affine families and the data derived
// from them: generalized Cartan matrix, symmetrizer d and null-root marks r.
//
// Vertex numbering follows the usual printed diagrams, with 0 the affine
// vertex:
//
//   A_2^(2)       1 <=4= 0                          (quadruple edge, arrow at 1)
//   A_2n^(2)      1 <= 2 - 3 - ... - n <= 0
//   A_2n-1^(2)    1 => 2 - 3 - ... - n-1 - n,  0 attached to n-1
//   D_n+1^(2)     1 <= 2 - 3 - ... - n => 0
//   E_6^(2)       0 - 1 - 2 <= 3 - 4
//   D_4^(3)       0 - 1 <=3= 2
//
// Matrix extraction: a_ii = 2; a_ij = -(number of edges) when the arrow of
// the (i,j) edge points at i or there is no edge; a_ij = -1 otherwise.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <regex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twaff/error.hpp"

namespace twaff {

enum class Family { A2n_2, A2nm1_2, Dnp1_2, E6_2, D4_3 };

struct Edge {
    int a = 0;
    int b = 0;
    int multiplicity = 1;
    // Vertex the arrow points at; nullopt for simple edges.
    std::optional<int> arrow_at;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct DynkinDiagram {
    int vertices = 0;
    std::vector<Edge> edges;

    friend bool operator==(const DynkinDiagram&, const DynkinDiagram&) = default;
};

class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int size) : size_(size), a_(static_cast<std::size_t>(size) * size, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<int>> rows) : IntMatrix(static_cast<int>(rows.size())) {
        int i = 0;
        for (const auto& row : rows) {
            int j = 0;
            for (int x : row) (*this)(i, j++) = x;
            ++i;
        }
    }

    int size() const noexcept { return size_; }
    int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * size_ + j]; }
    int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * size_ + j]; }

    std::vector<int> row(int i) const {
        return {a_.begin() + static_cast<std::ptrdiff_t>(i) * size_,
                a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * size_};
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int size_ = 0;
    std::vector<int> a_;
};

using CartanMatrix = IntMatrix;
using Symmetrizer = std::vector<int>;
using DeltaMarks = std::vector<int>;

struct TwistedType {
    Family family = Family::A2n_2;
    int n = 1;        // |I_0|
    int n_tilde = 2;  // the subscript of X_{n~}^{(k)}
    int k = 2;
    DynkinDiagram diagram;
    CartanMatrix cartan;
    Symmetrizer d;
    DeltaMarks delta;

    int size() const noexcept { return n + 1; }
    // #I^r at k | r is n; otherwise (n~ - n)/(k - 1).
    int short_slot_count() const noexcept { return (n_tilde - n) / (k - 1); }
};

inline int minimal_rank(Family f) {
    switch (f) {
    case Family::A2n_2: return 1;
    case Family::A2nm1_2: return 3;
    case Family::Dnp1_2: return 2;
    case Family::E6_2: return 4;
    case Family::D4_3: return 2;
    }
    return 1;
}

inline std::string family_label(Family f) {
    switch (f) {
    case Family::A2n_2: return "A_2n^(2)";
    case Family::A2nm1_2: return "A_2n-1^(2)";
    case Family::Dnp1_2: return "D_n+1^(2)";
    case Family::E6_2: return "E_6^(2)";
    case Family::D4_3: return "D_4^(3)";
    }
    return "?";
}

inline int tilde_rank(Family f, int n) {
    switch (f) {
    case Family::A2n_2: return 2 * n;
    case Family::A2nm1_2: return 2 * n - 1;
    case Family::Dnp1_2: return n + 1;
    case Family::E6_2: return 6;
    case Family::D4_3: return 4;
    }
    return 0;
}

// Short specifier such as "A4_2" or "D4_3".
inline std::string type_name(const TwistedType& t) {
    const char letter = (t.family == Family::A2n_2 || t.family == Family::A2nm1_2) ? 'A'
                        : t.family == Family::E6_2                                ? 'E'
                                                                                  : 'D';
    return std::string(1, letter) + std::to_string(t.n_tilde) + "_" + std::to_string(t.k);
}

namespace detail {

inline bool is_connected(const DynkinDiagram& g) {
    if (g.vertices == 0) return false;
    std::vector<std::vector<int>> adj(g.vertices);
    for (const auto& e : g.edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<bool> seen(g.vertices, false);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = true;
    int count = 1;
    while (!todo.empty()) {
        int v = todo.front();
        todo.pop();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                todo.push(w);
            }
        }
    }
    return count == g.vertices;
}

inline void validate(const DynkinDiagram& g) {
    if (g.vertices < 2) throw Error(ErrorKind::InvalidDiagram, "an affine diagram needs at least two vertices");
    std::vector<std::vector<bool>> used(g.vertices, std::vector<bool>(g.vertices, false));
    for (const auto& e : g.edges) {
        if (e.a < 0 || e.b < 0 || e.a >= g.vertices || e.b >= g.vertices || e.a == e.b)
            throw Error(ErrorKind::InvalidDiagram, "edge endpoint out of range");
        if (used[e.a][e.b]) throw Error(ErrorKind::InvalidDiagram, "duplicate edge");
        used[e.a][e.b] = used[e.b][e.a] = true;
        if (e.multiplicity < 1 || e.multiplicity > 4)
            throw Error(ErrorKind::InvalidDiagram, "edge multiplicity must be 1..4");
        if (e.multiplicity == 1 && e.arrow_at)
            throw Error(ErrorKind::InvalidDiagram, "simple edge with an arrow");
        if (e.multiplicity > 1 && (!e.arrow_at || (*e.arrow_at != e.a && *e.arrow_at != e.b)))
            throw Error(ErrorKind::InvalidDiagram, "multiple edge needs an arrow at one of its ends");
    }
    if (!is_connected(g)) throw Error(ErrorKind::InvalidDiagram, "diagram is not connected");
}

inline DynkinDiagram printed_diagram(Family f, int n) {
    DynkinDiagram g;
    g.vertices = n + 1;
    auto simple = [&](int a, int b) { g.edges.push_back({a, b, 1, std::nullopt}); };
    auto multi = [&](int a, int b, int m, int at) { g.edges.push_back({a, b, m, at}); };
    switch (f) {
    case Family::A2n_2:
        if (n == 1) {
            multi(0, 1, 4, 1);
        } else {
            multi(1, 2, 2, 1);
            for (int i = 2; i < n; ++i) simple(i, i + 1);
            multi(n, 0, 2, n);
        }
        break;
    case Family::A2nm1_2:
        multi(1, 2, 2, 2);
        for (int i = 2; i < n; ++i) simple(i, i + 1);
        simple(0, n - 1);
        break;
    case Family::Dnp1_2:
        multi(1, 2, 2, 1);
        for (int i = 2; i < n; ++i) simple(i, i + 1);
        multi(n, 0, 2, 0);
        break;
    case Family::E6_2:
        simple(0, 1);
        simple(1, 2);
        multi(2, 3, 2, 2);
        simple(3, 4);
        break;
    case Family::D4_3:
        simple(0, 1);
        multi(1, 2, 3, 1);
        break;
    }
    return g;
}

} // namespace detail

inline CartanMatrix cartan_matrix(const DynkinDiagram& g) {
    detail::validate(g);
    CartanMatrix a(g.vertices);
    for (int i = 0; i < g.vertices; ++i) a(i, i) = 2;
    for (const auto& e : g.edges) {
        if (e.multiplicity == 1) {
            a(e.a, e.b) = a(e.b, e.a) = -1;
        } else {
            int at = *e.arrow_at;
            int other = at == e.a ? e.b : e.a;
            a(at, other) = -e.multiplicity;
            a(other, at) = -1;
        }
    }
    return a;
}

// Inverse of the extraction rule.
inline DynkinDiagram diagram_from_matrix(const CartanMatrix& a) {
    DynkinDiagram g;
    g.vertices = a.size();
    for (int i = 0; i < a.size(); ++i) {
        for (int j = i + 1; j < a.size(); ++j) {
            if (a(i, j) == 0 && a(j, i) == 0) continue;
            if (a(i, j) == 0 || a(j, i) == 0 || (a(i, j) != -1 && a(j, i) != -1))
                throw Error(ErrorKind::InvalidDiagram, "matrix entries do not come from a Dynkin diagram");
            if (a(i, j) == -1 && a(j, i) == -1) {
                g.edges.push_back({i, j, 1, std::nullopt});
            } else if (a(i, j) < -1) {
                g.edges.push_back({i, j, -a(i, j), i});
            } else {
                g.edges.push_back({i, j, -a(j, i), j});
            }
        }
    }
    return g;
}

// Rank over the rationals (fraction-free elimination).
inline int matrix_rank(const IntMatrix& m) {
    using boost::multiprecision::cpp_int;
    const int sz = m.size();
    std::vector<std::vector<cpp_int>> w(sz, std::vector<cpp_int>(sz));
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) w[i][j] = m(i, j);
    int rank = 0;
    cpp_int prev = 1;
    for (int col = 0; col < sz && rank < sz; ++col) {
        int pivot = -1;
        for (int i = rank; i < sz; ++i)
            if (w[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(w[pivot], w[rank]);
        for (int i = rank + 1; i < sz; ++i) {
            for (int j = col + 1; j < sz; ++j) w[i][j] = (w[rank][col] * w[i][j] - w[i][col] * w[rank][j]) / prev;
            w[i][col] = 0;
        }
        prev = w[rank][col];
        ++rank;
    }
    return rank;
}

// Spanning-tree propagation of d_j / d_i = a_ij / a_ji from vertex 0, then
// scaling to the smallest integral vector.
inline Symmetrizer symmetrizers(const CartanMatrix& a) {
    const int sz = a.size();
    if (sz == 0) throw Error(ErrorKind::NotSymmetrizable, "empty matrix");
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j)
            if (i != j && ((a(i, j) == 0) != (a(j, i) == 0)))
                throw Error(ErrorKind::NotSymmetrizable, "zero pattern is not symmetric");

    std::vector<std::int64_t> num(sz, 0), den(sz, 0);
    num[0] = den[0] = 1;
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        int i = todo.front();
        todo.pop();
        for (int j = 0; j < sz; ++j) {
            if (j == i || a(i, j) == 0 || den[j] != 0) continue;
            // d_j = d_i * a_ij / a_ji
            std::int64_t p = num[i] * a(i, j);
            std::int64_t q = den[i] * a(j, i);
            if (q < 0) {
                p = -p;
                q = -q;
            }
            std::int64_t g = std::gcd(p, q);
            num[j] = p / g;
            den[j] = q / g;
            todo.push(j);
        }
    }
    if (std::any_of(den.begin(), den.end(), [](auto x) { return x == 0; }))
        throw Error(ErrorKind::NotSymmetrizable, "matrix is decomposable");

    std::int64_t l = 1;
    for (auto x : den) l = std::lcm(l, x);
    std::vector<std::int64_t> v(sz);
    std::int64_t g = 0;
    for (int i = 0; i < sz; ++i) {
        v[i] = num[i] * (l / den[i]);
        g = std::gcd(g, v[i]);
    }
    Symmetrizer d(sz);
    for (int i = 0; i < sz; ++i) d[i] = static_cast<int>(v[i] / g);
    if (*std::min_element(d.begin(), d.end()) != 1)
        throw Error(ErrorKind::NotSymmetrizable, "no integral symmetrizer with minimum 1");
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j)
            if (d[i] * a(i, j) != d[j] * a(j, i))
                throw Error(ErrorKind::NotSymmetrizable, "d_i a_ij != d_j a_ji along a cycle");
    return d;
}

// Kernel vector of an affine matrix normalized by r_0 = 1.
inline DeltaMarks delta_marks(const CartanMatrix& a) {
    using boost::multiprecision::cpp_rational;
    const int sz = a.size();
    if (matrix_rank(a) != sz - 1) throw Error(ErrorKind::InvalidAffineMatrix, "matrix does not have corank 1");

    // Reduced row echelon form over Q.
    std::vector<std::vector<cpp_rational>> w(sz, std::vector<cpp_rational>(sz));
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) w[i][j] = a(i, j);
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < sz && row < sz; ++col) {
        int p = -1;
        for (int i = row; i < sz; ++i)
            if (w[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(w[p], w[row]);
        cpp_rational inv = 1 / w[row][col];
        for (auto& x : w[row]) x *= inv;
        for (int i = 0; i < sz; ++i) {
            if (i == row || w[i][col] == 0) continue;
            cpp_rational f = w[i][col];
            for (int j = 0; j < sz; ++j) w[i][j] -= f * w[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    int free_col = 0;
    while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;

    std::vector<cpp_rational> kernel(sz, 0);
    kernel[free_col] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) kernel[pivot_col[i]] = -w[i][free_col];
    if (kernel[0] == 0) throw Error(ErrorKind::InvalidAffineMatrix, "null root has zero 0-coordinate");
    cpp_rational scale = kernel[0];

    DeltaMarks r(sz);
    for (int i = 0; i < sz; ++i) {
        cpp_rational x = kernel[i] / scale;
        if (denominator(x) != 1 || x <= 0)
            throw Error(ErrorKind::InvalidAffineMatrix, "normalized kernel is not a positive integral vector");
        r[i] = static_cast<int>(numerator(x));
    }
    return r;
}

inline TwistedType build_type(Family family, int n) {
    if (family == Family::E6_2 && n != 4)
        throw Error(ErrorKind::RankOutOfRange, "E_6^(2) has fixed rank n = 4");
    if (family == Family::D4_3 && n != 2)
        throw Error(ErrorKind::RankOutOfRange, "D_4^(3) has fixed rank n = 2");
    if (n < minimal_rank(family))
        throw Error(ErrorKind::RankOutOfRange, family_label(family) + " requires n >= " +
                                                   std::to_string(minimal_rank(family)) + ", got " +
                                                   std::to_string(n));
    TwistedType t;
    t.family = family;
    t.n = n;
    t.n_tilde = tilde_rank(family, n);
    t.k = family == Family::D4_3 ? 3 : 2;
    t.diagram = detail::printed_diagram(family, n);
    t.cartan = cartan_matrix(t.diagram);
    t.d = symmetrizers(t.cartan);
    t.delta = delta_marks(t.cartan);
    return t;
}

// Parses "<X><n~>_<k>", e.g. "A2_2", "A5_2", "D3_2", "E6_2", "D4_3".
inline TwistedType parse_type(const std::string& spec) {
    static const std::regex pattern(R"(^([ADE])([0-9]{1,3})_([23])$)");
    std::smatch m;
    if (!std::regex_match(spec, m, pattern))
        throw Error(ErrorKind::TypeSpec, "cannot parse type specifier '" + spec + "' (expected e.g. A4_2, D4_3)");
    const char letter = m[1].str()[0];
    const int nt = std::stoi(m[2].str());
    const int k = std::stoi(m[3].str());
    if (k == 3) {
        if (letter == 'D' && nt == 4) return build_type(Family::D4_3, 2);
        throw Error(ErrorKind::TypeSpec, "the only twisted type with k = 3 is D4_3");
    }
    switch (letter) {
    case 'A':
        if (nt % 2 == 0) return build_type(Family::A2n_2, nt / 2);
        return build_type(Family::A2nm1_2, (nt + 1) / 2);
    case 'D':
        return build_type(Family::Dnp1_2, nt - 1);
    default:
        if (nt == 6) return build_type(Family::E6_2, 4);
        throw Error(ErrorKind::TypeSpec, "the only twisted E type is E6_2");
    }
}

} // namespace twaff
