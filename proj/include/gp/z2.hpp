#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gp {

/// Vector over Z/2. operator< is lexicographic with 0 before 1, read left
/// to right; this single order is used everywhere rows are sorted or orbit
/// representatives are chosen.
class Z2Vec {
  public:
    Z2Vec() = default;
    explicit Z2Vec(std::vector<std::uint8_t> bits);
    static Z2Vec zero(int n);

    int dim() const { return static_cast<int>(bits_.size()); }
    /// k is 1-based; result is 0 or 1.
    int bit(int k) const;
    bool is_zero() const;
    /// True when the sum of the entries is 1 mod 2.
    bool odd() const;

    Z2Vec operator+(const Z2Vec &o) const;
    auto operator<=>(const Z2Vec &) const = default;

    /// "0 1 1 0"
    std::string render() const;

  private:
    std::vector<std::uint8_t> bits_;
};

/// Matrix over Z/2: at least one row, all rows of equal dimension.
class Z2Mat {
  public:
    explicit Z2Mat(std::vector<Z2Vec> rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return rows_.front().dim(); }
    /// i is 1-based.
    const Z2Vec &row(int i) const;
    const std::vector<Z2Vec> &row_list() const { return rows_; }

    bool square() const { return rows() == cols(); }
    bool symmetric_zero_diagonal() const;

    auto operator<=>(const Z2Mat &) const = default;

    /// One row per line, bits separated by single spaces, no trailing newline.
    std::string render() const;

  private:
    std::vector<Z2Vec> rows_;
};

/// Matrices of a tuple are separated by a line containing "--".
std::string render_matrix_tuple(const std::vector<Z2Mat> &mats);

Z2Vec parse_z2_row(const std::string &line);
Z2Mat parse_matrix(const std::string &text);
std::vector<Z2Mat> parse_matrix_tuple(const std::string &text);

} // namespace gp
