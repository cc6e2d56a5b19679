#include "d21a/matrix.hpp"

#include <stdexcept>

namespace d21a {

ScalarMatrix operator*(const ScalarMatrix& x, const ScalarMatrix& y)
{
    if (x.cols != y.rows) throw std::invalid_argument("matrix product: shape mismatch");
    ScalarMatrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int k = 0; k < x.cols; ++k) {
            const Scalar& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Scalar& ykj = y.at(k, j);
                if (ykj.is_zero()) continue;
                out.at(i, j) = out.at(i, j) + xik * ykj;
            }
        }
    }
    return out;
}

int rank_rational(std::vector<std::vector<Rat>> m)
{
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    for (auto& row : m)
        for (Rat& v : row) v.canonicalize();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][col] != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[rank][col];
            m[r][col] = 0;
            for (int j = col + 1; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

namespace {

// Clear denominators: each row is scaled by the (monic) lcm of its entries'
// denominators, leaving a polynomial matrix with the same rank.
std::vector<std::vector<Poly>> cleared_rows(const ScalarMatrix& m)
{
    std::vector<std::vector<Poly>> out(static_cast<std::size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) {
        Poly lcm = Poly(Rat(1));
        for (int j = 0; j < m.cols; ++j) {
            const Poly& d = m.at(i, j).den();
            Poly g = Poly::gcd(lcm, d);
            lcm = Poly::div_exact(lcm * d, g);
        }
        out[i].reserve(static_cast<std::size_t>(m.cols));
        for (int j = 0; j < m.cols; ++j) {
            const Scalar& s = m.at(i, j);
            out[i].push_back(s.num() * Poly::div_exact(lcm, s.den()));
        }
    }
    return out;
}

int rank_poly_bareiss(std::vector<std::vector<Poly>> m)
{
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    Poly prev(Rat(1));
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (!m[r][col].is_zero()) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int j = col + 1; j < cols; ++j) {
                m[r][j] = Poly::div_exact(m[r][j] * m[rank][col] - m[r][col] * m[rank][j], prev);
            }
            m[r][col] = Poly();
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace

int rank_fraction_free(const ScalarMatrix& m)
{
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::vector<Poly>> p = cleared_rows(m);

    // Evaluation at a sample point bounds the rank from below; if that bound
    // already equals min(rows, cols) no symbolic elimination is needed.
    const Rat sample(2);
    std::vector<std::vector<Rat>> ev(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        ev[i].reserve(p[i].size());
        for (const Poly& q : p[i]) ev[i].push_back(q.eval(sample));
    }
    int lower = rank_rational(std::move(ev));
    int full = m.rows < m.cols ? m.rows : m.cols;
    if (lower == full) return full;

    return rank_poly_bareiss(std::move(p));
}

} // namespace d21a
