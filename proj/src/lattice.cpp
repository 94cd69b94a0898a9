#include "qtcob/lattice.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <stdexcept>

namespace qtcob {

namespace {

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// Extended gcd: returns g and fills x, y with x*a + y*b = g, g >= 0.
Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_x = 1, cur_x = 0;
    Int old_y = 0, cur_y = 1;
    while (r != 0) {
        Int q = old_r / r;  // truncated division is fine here
        Int t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * cur_x; old_x = cur_x; cur_x = t;
        t = old_y - q * cur_y; old_y = cur_y; cur_y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

// Floor division (HNF reduction needs floor, not truncation).
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Row Hermite form of the given generator rows: unimodular row operations
// only, so the row lattice is preserved. Returns the number of nonzero rows;
// those occupy the top of the matrix, pivots positive, entries above each
// pivot reduced into [0, pivot).
int hermite_rows(IntMat& a) {
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (a(i, c) != 0) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != r) a.row(pivot).swap(a.row(r));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            Int x, y;
            const Int g = xgcd(a(r, c), a(i, c), x, y);
            const Int ar = a(r, c) / g, ai = a(i, c) / g;
            for (Eigen::Index j = c; j < cols; ++j) {
                const Int top = a(r, j), low = a(i, j);
                a(r, j) = x * top + y * low;
                a(i, j) = ar * low - ai * top;
            }
        }
        if (a(r, c) < 0) a.row(r) = -a.row(r);
        for (Eigen::Index i = 0; i < r; ++i) {
            const Int q = floor_div(a(i, c), a(r, c));
            if (q != 0) a.row(i) -= q * a.row(r);
        }
        ++r;
    }
    return static_cast<int>(r);
}

IntMat rows_from_columns(const IntMat& m) { return m.transpose(); }

}  // namespace

Int det(const IntMat& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("det: matrix is not square");
    const Eigen::Index n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index pivot = -1;
            for (Eigen::Index i = k + 1; i < n; ++i) {
                if (a(i, k) != 0) { pivot = i; break; }
            }
            if (pivot < 0) return 0;
            a.row(k).swap(a.row(pivot));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

int rank(const IntMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    IntMat a = rows_from_columns(m);
    return hermite_rows(a);
}

int rank(const std::vector<IntVec>& vectors) {
    if (vectors.empty()) return 0;
    return rank(columns(vectors));
}

bool is_independent(const std::vector<IntVec>& vectors) {
    return rank(vectors) == static_cast<int>(vectors.size());
}

bool is_primitive(const IntVec& v) {
    Int g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
    return g == 1;
}

IntMat adjugate(const IntMat& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("adjugate: matrix is not square");
    const Eigen::Index n = m.rows();
    if (n == 0) return IntMat(0, 0);
    if (n == 1) {
        IntMat a(1, 1);
        a(0, 0) = 1;
        return a;
    }
    IntMat adj(n, n);
    IntMat minor(n - 1, n - 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            Eigen::Index mr = 0;
            for (Eigen::Index r = 0; r < n; ++r) {
                if (r == i) continue;
                Eigen::Index mc = 0;
                for (Eigen::Index c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mr, mc) = m(r, c);
                    ++mc;
                }
                ++mr;
            }
            const Int cof = det(minor);
            adj(j, i) = ((i + j) % 2 == 0) ? cof : Int(-cof);
        }
    }
    return adj;
}

IntMat inverse_transpose_unimodular(const IntMat& m) {
    const Int d = det(m);
    if (d != 1 && d != -1)
        throw std::invalid_argument("inverse_transpose_unimodular: |det| != 1");
    IntMat inv_t = adjugate(m).transpose();
    if (d < 0) inv_t = -inv_t;
    return inv_t;
}

std::optional<IntMat> solve_left_integer(const IntMat& a, const IntMat& b) {
    if (a.rows() != a.cols() || b.cols() != a.rows() || b.rows() != a.rows())
        throw std::invalid_argument("solve_left_integer: shape mismatch");
    const Int d = det(a);
    if (d == 0) throw std::invalid_argument("solve_left_integer: singular matrix");
    IntMat num = b * adjugate(a);  // u = b * a^-1 = b * adj(a) / det(a)
    IntMat u(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < num.rows(); ++i) {
        for (Eigen::Index j = 0; j < num.cols(); ++j) {
            if (num(i, j) % d != 0) return std::nullopt;
            u(i, j) = num(i, j) / d;
        }
    }
    return u;
}

Sublattice::Sublattice(std::vector<IntVec> generators, Eigen::Index ambient_rank)
    : ambient_rank_(ambient_rank) {
    for (const IntVec& g : generators) {
        if (g.size() != ambient_rank)
            throw std::invalid_argument("Sublattice: generator length != ambient rank");
    }
    if (generators.empty()) {
        basis_ = IntMat(0, ambient_rank);
        return;
    }
    IntMat a(static_cast<Eigen::Index>(generators.size()), ambient_rank);
    for (std::size_t i = 0; i < generators.size(); ++i)
        a.row(static_cast<Eigen::Index>(i)) = generators[i].transpose();
    const int r = hermite_rows(a);
    basis_ = a.topRows(r);
}

bool in_sublattice(const IntVec& v, const Sublattice& l) {
    if (v.size() != l.ambient_rank())
        throw std::invalid_argument("in_sublattice: ambient rank mismatch");
    IntVec rem = v;
    const IntMat& h = l.basis();
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        Eigen::Index c = 0;
        while (c < h.cols() && h(i, c) == 0) ++c;
        if (rem(c) % h(i, c) != 0) return false;
        const Int q = rem(c) / h(i, c);
        if (q != 0) rem -= q * h.row(i).transpose();
    }
    return vec_is_zero(rem);
}

bool in_rational_span(const IntVec& v, const Sublattice& l) {
    if (v.size() != l.ambient_rank())
        throw std::invalid_argument("in_rational_span: ambient rank mismatch");
    const IntMat& h = l.basis();
    std::vector<Rat> rem(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) rem[i] = Rat(v(i));
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        Eigen::Index c = 0;
        while (c < h.cols() && h(i, c) == 0) ++c;
        const Rat q = rem[c] / Rat(h(i, c));
        if (q != 0) {
            for (Eigen::Index j = c; j < h.cols(); ++j) rem[j] -= q * Rat(h(i, j));
        }
    }
    for (const Rat& x : rem)
        if (x != 0) return false;
    return true;
}

IntVec find_avoiding_vector(const std::vector<Sublattice>& spans, Eigen::Index n) {
    if (n < 1) throw std::invalid_argument("find_avoiding_vector: rank must be >= 1");
    for (const Sublattice& l : spans) {
        if (l.ambient_rank() != n)
            throw std::invalid_argument("find_avoiding_vector: ambient rank mismatch");
        if (l.rank() >= n)
            throw std::invalid_argument(
                "find_avoiding_vector: a span has full rank, no avoiding vector exists");
    }
    // Finitely many proper subspaces cannot cover a shell of every radius, so
    // small radii always suffice in practice; the cap guards against misuse.
    for (long long radius = 1; radius <= 4096; ++radius) {
        std::vector<long long> entry(static_cast<std::size_t>(n), -radius);
        while (true) {
            long long max_abs = 0;
            for (long long e : entry) max_abs = std::max(max_abs, e < 0 ? -e : e);
            if (max_abs == radius) {
                IntVec v(n);
                for (Eigen::Index i = 0; i < n; ++i) v(i) = entry[static_cast<std::size_t>(i)];
                if (is_primitive(v)) {
                    bool avoided = true;
                    for (const Sublattice& l : spans) {
                        if (in_rational_span(v, l)) { avoided = false; break; }
                    }
                    if (avoided) return v;
                }
            }
            // lexicographic odometer over [-radius, radius]^n
            Eigen::Index pos = n - 1;
            while (pos >= 0 && entry[static_cast<std::size_t>(pos)] == radius) {
                entry[static_cast<std::size_t>(pos)] = -radius;
                --pos;
            }
            if (pos < 0) break;
            ++entry[static_cast<std::size_t>(pos)];
        }
    }
    throw std::runtime_error("find_avoiding_vector: search cap exceeded");
}

}  // namespace qtcob
