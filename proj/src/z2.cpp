#include "gp/z2.hpp"

#include <sstream>

#include "gp/errors.hpp"

namespace gp {

Z2Vec::Z2Vec(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1)
            throw DimensionError("Z2Vec entries must be 0 or 1");
    }
}

Z2Vec Z2Vec::zero(int n) {
    if (n < 0)
        throw DimensionError("negative dimension");
    return Z2Vec(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
}

int Z2Vec::bit(int k) const {
    if (k < 1 || k > dim())
        throw DimensionError("bit index out of range");
    return bits_[static_cast<std::size_t>(k - 1)];
}

bool Z2Vec::is_zero() const {
    for (auto b : bits_)
        if (b)
            return false;
    return true;
}

bool Z2Vec::odd() const {
    int s = 0;
    for (auto b : bits_)
        s ^= b;
    return s == 1;
}

Z2Vec Z2Vec::operator+(const Z2Vec &o) const {
    if (dim() != o.dim())
        throw DimensionError("dimension mismatch: " + std::to_string(dim()) +
                             " vs " + std::to_string(o.dim()));
    std::vector<std::uint8_t> out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
        out[i] = bits_[i] ^ o.bits_[i];
    return Z2Vec(std::move(out));
}

std::string Z2Vec::render() const {
    std::string s;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (i)
            s += ' ';
        s += static_cast<char>('0' + bits_[i]);
    }
    return s;
}

Z2Mat::Z2Mat(std::vector<Z2Vec> rows) : rows_(std::move(rows)) {
    if (rows_.empty())
        throw DimensionError("matrix needs at least one row");
    for (const auto &r : rows_) {
        if (r.dim() != rows_.front().dim())
            throw DimensionError("matrix rows of unequal dimension");
    }
}

const Z2Vec &Z2Mat::row(int i) const {
    if (i < 1 || i > rows())
        throw DimensionError("row index out of range");
    return rows_[static_cast<std::size_t>(i - 1)];
}

bool Z2Mat::symmetric_zero_diagonal() const {
    if (!square())
        return false;
    for (int i = 1; i <= rows(); ++i) {
        if (row(i).bit(i) != 0)
            return false;
        for (int j = i + 1; j <= rows(); ++j)
            if (row(i).bit(j) != row(j).bit(i))
                return false;
    }
    return true;
}

std::string Z2Mat::render() const {
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i)
            s += '\n';
        s += rows_[i].render();
    }
    return s;
}

std::string render_matrix_tuple(const std::vector<Z2Mat> &mats) {
    std::string s;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (i)
            s += "\n--\n";
        s += mats[i].render();
    }
    return s;
}

Z2Vec parse_z2_row(const std::string &line) {
    std::vector<std::uint8_t> bits;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok == "0")
            bits.push_back(0);
        else if (tok == "1")
            bits.push_back(1);
        else
            throw SyntaxError("bad matrix entry '" + tok + "'");
    }
    if (bits.empty())
        throw SyntaxError("empty matrix row");
    return Z2Vec(std::move(bits));
}

namespace {

std::vector<std::string> split_lines(const std::string &text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    if (!cur.empty())
        lines.push_back(cur);
    return lines;
}

bool blank(const std::string &s) {
    return s.find_first_not_of(" \t") == std::string::npos;
}

} // namespace

Z2Mat parse_matrix(const std::string &text) {
    std::vector<Z2Vec> rows;
    for (const auto &line : split_lines(text)) {
        if (blank(line))
            continue;
        rows.push_back(parse_z2_row(line));
    }
    if (rows.empty())
        throw SyntaxError("empty matrix");
    return Z2Mat(std::move(rows));
}

std::vector<Z2Mat> parse_matrix_tuple(const std::string &text) {
    std::vector<Z2Mat> mats;
    std::vector<Z2Vec> rows;
    auto flush = [&] {
        if (rows.empty())
            throw SyntaxError("empty matrix in tuple");
        mats.push_back(Z2Mat(rows));
        rows.clear();
    };
    for (const auto &line : split_lines(text)) {
        if (blank(line))
            continue;
        if (line == "--") {
            flush();
        } else {
            rows.push_back(parse_z2_row(line));
        }
    }
    flush();
    return mats;
}

} // namespace gp
