#include "shb/fp_matrix.hpp"

#include "shb/errors.hpp"

#include <utility>

namespace shb {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p) : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
    if (!is_prime(p)) throw ValidationError("field characteristic must be prime");
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    a_[r * cols_ + c] = static_cast<std::uint32_t>(m);
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_) throw ValidationError("matrix shape mismatch in product");
    FpMatrix out(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t x = (*this)(i, k);
            if (!x) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.a_[i * o.cols_ + j] = static_cast<std::uint32_t>((out.a_[i * o.cols_ + j] + x * o(k, j)) % p_);
        }
    return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<std::uint32_t>>& m, std::size_t cols, std::uint32_t p) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        std::uint64_t inv = fp_inverse(m[row][c], p);
        for (auto& x : m[row]) x = static_cast<std::uint32_t>(x * inv % p);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            std::uint64_t f = m[r][c];
            for (std::size_t j = 0; j < m[r].size(); ++j)
                m[r][j] = static_cast<std::uint32_t>((m[r][j] + (p - f) * m[row][j]) % p);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t FpMatrix::rank() const {
    std::vector<std::vector<std::uint32_t>> m(rows_);
    for (std::size_t i = 0; i < rows_; ++i) m[i].assign(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    return rref(m, cols_, p_).size();
}

std::vector<std::vector<std::uint32_t>> FpMatrix::kernel() const {
    std::vector<std::vector<std::uint32_t>> m(rows_);
    for (std::size_t i = 0; i < rows_; ++i) m[i].assign(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    auto pivots = rref(m, cols_, p_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(cols_, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = static_cast<std::uint32_t>((p_ - m[r][free]) % p_);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<std::uint32_t>> FpMatrix::solve(const std::vector<std::uint32_t>& b) const {
    if (b.size() != rows_) throw ValidationError("right-hand side length mismatch");
    std::vector<std::vector<std::uint32_t>> m(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        m[i].assign(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
        m[i].push_back(b[i] % p_);
    }
    auto pivots = rref(m, cols_ + 1, p_);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<std::uint32_t> x(cols_, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols_];
    return x;
}

} // namespace shb
