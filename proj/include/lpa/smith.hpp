#ifndef LPA_SMITH_HPP
#define LPA_SMITH_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

using Int = boost::multiprecision::cpp_int;

// Dense exact-integer matrix. Arbitrary precision on purpose: elimination
// intermediates can outgrow any fixed width even on tiny inputs.
class IntMatrix {
public:
    IntMatrix() : r_(0), c_(0) {}
    IntMatrix(int rows, int cols) : r_(rows), c_(cols),
        a_(static_cast<std::size_t>(rows) * cols, 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    Int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Int& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix operator*(const IntMatrix& o) const {
        if (c_ != o.r_) throw DimensionMismatchError();
        IntMatrix out(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const Int& v = (*this)(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.c_; ++j) out(i, j) += v * o(k, j);
            }
        return out;
    }

    std::vector<Int> operator*(const std::vector<Int>& v) const {
        if (static_cast<int>(v.size()) != c_) throw DimensionMismatchError();
        std::vector<Int> out(static_cast<std::size_t>(r_), 0);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
        return out;
    }

private:
    int r_, c_;
    std::vector<Int> a_;
};

// Laplace expansion; fine for the <= 5x5 matrices this library sees.
inline Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatchError();
    const int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int det = 0;
    for (int k = 0; k < n; ++k) {
        if (m(0, k) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                minor(i - 1, jj++) = m(i, j);
            }
        }
        Int term = m(0, k) * determinant(minor);
        det += (k % 2 == 0) ? term : -term;
    }
    return det;
}

// p * original = diag(d) * inverse(q), i.e. p * M * q = diag(d), with p, q
// unimodular and d a non-negative divisibility chain d1 | d2 | ...
struct SmithDecomposition {
    std::vector<Int> d;
    IntMatrix p, q;
};

// Classic elimination. Pivot rule pinned for reproducibility: the non-zero
// entry of minimum absolute value in the remaining block, ties broken by
// (row, col). The unit coordinates downstream depend on this choice.
inline SmithDecomposition smith_normal_form(IntMatrix m) {
    const int r = m.rows(), c = m.cols();
    SmithDecomposition s;
    s.p = IntMatrix::identity(r);
    s.q = IntMatrix::identity(c);

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < c; ++j) std::swap(m(a, j), m(b, j));
        for (int j = 0; j < r; ++j) std::swap(s.p(a, j), s.p(b, j));
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < r; ++i) std::swap(m(i, a), m(i, b));
        for (int i = 0; i < c; ++i) std::swap(s.q(i, a), s.q(i, b));
    };
    auto add_row = [&](int dst, int src, const Int& f) {  // row dst += f * row src
        for (int j = 0; j < c; ++j) m(dst, j) += f * m(src, j);
        for (int j = 0; j < r; ++j) s.p(dst, j) += f * s.p(src, j);
    };
    auto add_col = [&](int dst, int src, const Int& f) {
        for (int i = 0; i < r; ++i) m(i, dst) += f * m(i, src);
        for (int i = 0; i < c; ++i) s.q(i, dst) += f * s.q(i, src);
    };
    auto negate_row = [&](int a) {
        for (int j = 0; j < c; ++j) m(a, j) = -m(a, j);
        for (int j = 0; j < r; ++j) s.p(a, j) = -s.p(a, j);
    };

    const int k = std::min(r, c);
    for (int t = 0; t < k; ++t) {
        for (;;) {
            int pi = -1, pj = -1;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    if (m(i, j) == 0) continue;
                    if (pi < 0 || abs(m(i, j)) < abs(m(pi, pj))) { pi = i; pj = j; }
                }
            if (pi < 0) break;  // block is zero; done with this t and all later
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (m(i, t) == 0) continue;
                Int f = m(i, t) / m(t, t);
                add_row(i, t, -f);
                if (m(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                if (m(t, j) == 0) continue;
                Int f = m(t, j) / m(t, t);
                add_col(j, t, -f);
                if (m(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // remainders remain; pick a smaller pivot
            // Divisibility bump: fold a non-divisible row into row t and redo.
            bool bumped = false;
            for (int i = t + 1; i < r && !bumped; ++i)
                for (int j = t + 1; j < c && !bumped; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        add_row(t, i, 1);
                        bumped = true;
                    }
            if (!bumped) break;
        }
        if (m(t, t) < 0) negate_row(t);
    }
    for (int t = 0; t < k; ++t) s.d.push_back(m(t, t));
    return s;
}

// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;  // ascending divisibility chain, entries >= 2

    bool operator==(const AbelianGroup&) const = default;
    auto operator<=>(const AbelianGroup&) const = default;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Int order() const {  // finite groups only
        Int o = 1;
        for (const Int& t : torsion) o *= t;
        return o;
    }
};

inline AbelianGroup cokernel(const IntMatrix& m) {
    auto s = smith_normal_form(m);
    AbelianGroup g;
    int nonzero = 0;
    for (const Int& d : s.d) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) g.torsion.push_back(d);
    }
    g.free_rank = m.rows() - nonzero;
    return g;
}

// The class of a vector in coker(m), written in the pinned Smith basis.
struct PointedElement {
    // One coordinate per retained invariant-factor slot: residue in [0, d)
    // for torsion slots, plain integer for free slots (d = 0); slots with
    // d = 1 are dropped. Slot moduli kept alongside (0 marks a free slot).
    std::vector<Int> coords;
    std::vector<Int> moduli;
    AbelianGroup group;     // coker(m)
    AbelianGroup quotient;  // coker([m | v]), the automorphism-robust part

    bool operator==(const PointedElement&) const = default;
};

inline PointedElement pointed_cokernel(const IntMatrix& m, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != m.rows()) throw DimensionMismatchError();
    auto s = smith_normal_form(m);
    std::vector<Int> w = s.p * v;
    PointedElement e;
    e.group = cokernel(m);
    for (int i = 0; i < m.rows(); ++i) {
        Int d = i < static_cast<int>(s.d.size()) ? s.d[static_cast<std::size_t>(i)] : Int(0);
        if (d == 1) continue;
        Int x = w[static_cast<std::size_t>(i)];
        if (d > 0) {
            x %= d;
            if (x < 0) x += d;
        }
        e.coords.push_back(x);
        e.moduli.push_back(d);
    }
    // p is unique only up to unimodular factors; pin the free-slot signs so
    // the first non-zero free coordinate is positive.
    bool flip = false;
    for (std::size_t i = 0; i < e.coords.size(); ++i)
        if (e.moduli[i] == 0 && e.coords[i] != 0) { flip = e.coords[i] < 0; break; }
    if (flip)
        for (std::size_t i = 0; i < e.coords.size(); ++i)
            if (e.moduli[i] == 0) e.coords[i] = -e.coords[i];
    IntMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = v[static_cast<std::size_t>(i)];
    }
    e.quotient = cokernel(aug);
    return e;
}

namespace detail {

// All elements of a finite group as coordinate tuples.
inline void enumerate_elements(const std::vector<Int>& moduli, std::size_t k,
                               std::vector<Int>& cur, std::vector<std::vector<Int>>& out) {
    if (k == moduli.size()) { out.push_back(cur); return; }
    for (Int x = 0; x < moduli[k]; ++x) {
        cur.push_back(x);
        enumerate_elements(moduli, k + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// Lexicographic minimum of the coordinate tuple over all automorphisms of
// the finite group Z_{t1} x ... x Z_{tk}. Brute force over endomorphisms;
// the groups here have order at most a few dozen.
inline std::vector<Int> aut_orbit_min(const std::vector<Int>& torsion,
                                      const std::vector<Int>& coords) {
    const std::size_t k = torsion.size();
    if (k != coords.size()) throw DimensionMismatchError();
    if (k == 0) return {};
    Int order = 1;
    for (const Int& t : torsion) order *= t;
    if (order > 4096) throw SizeLimitError("automorphism enumeration limited to small groups");

    // Candidate images of generator j: elements killed by torsion[j].
    std::vector<std::vector<std::vector<Int>>> gen_images(k);
    std::vector<std::vector<Int>> elems;
    std::vector<Int> cur;
    detail::enumerate_elements(torsion, 0, cur, elems);
    for (std::size_t j = 0; j < k; ++j)
        for (const auto& x : elems) {
            bool ok = true;
            for (std::size_t i = 0; i < k; ++i)
                if (torsion[j] * x[i] % torsion[i] != 0) { ok = false; break; }
            if (ok) gen_images[j].push_back(x);
        }

    std::vector<Int> best = coords;
    std::vector<std::size_t> pick(k, 0);
    for (;;) {
        // Apply the endomorphism sending e_j to gen_images[j][pick[j]].
        std::vector<Int> img(k, 0);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < k; ++i)
                img[i] = (img[i] + coords[j] * gen_images[j][pick[j]][i]) % torsion[i];
        // Bijectivity: image of all elements has full cardinality.
        std::set<std::vector<Int>> image_set;
        for (const auto& x : elems) {
            std::vector<Int> y(k, 0);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = 0; i < k; ++i)
                    y[i] = (y[i] + x[j] * gen_images[j][pick[j]][i]) % torsion[i];
            image_set.insert(y);
        }
        if (static_cast<Int>(image_set.size()) == order && img < best) best = img;
        std::size_t j = 0;
        while (j < k && ++pick[j] == gen_images[j].size()) pick[j++] = 0;
        if (j == k) break;
    }
    return best;
}

}  // namespace lpa

#endif
