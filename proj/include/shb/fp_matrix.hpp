#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace shb {

// Dense matrix over the prime field F_p.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static FpMatrix identity(std::size_t n, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t prime() const { return p_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v);

    FpMatrix operator*(const FpMatrix& o) const;
    bool operator==(const FpMatrix& o) const = default;

    std::size_t rank() const;
    // Basis of the right null space, one vector per entry.
    std::vector<std::vector<std::uint32_t>> kernel() const;
    // Solves A x = b; empty optional when inconsistent.
    std::optional<std::vector<std::uint32_t>> solve(const std::vector<std::uint32_t>& b) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> a_;
};

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint32_t p);

} // namespace shb
