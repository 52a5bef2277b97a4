#include "gp/realize.hpp"

#include <algorithm>
#include <sstream>

namespace gp {

namespace {

struct Builder {
    explicit Builder(int n) : comps(static_cast<std::size_t>(n)) {}
    std::vector<Word> comps;
    int next_letter = 0;

    std::string fresh() { return canonical_letter(next_letter++); }
    void append(int comp, const std::string &letter) {
        comps[static_cast<std::size_t>(comp - 1)].push_back(letter);
    }
};

/// Appends a linking subword for v to component k: one fresh letter per
/// nonzero bit j != k, appended both inside the block and to component j.
void append_linking_subword(Builder &b, const Z2Vec &v, int k) {
    for (int j = 1; j <= v.dim(); ++j) {
        if (j == k || v.bit(j) == 0)
            continue;
        std::string letter = b.fresh();
        b.append(k, letter);
        b.append(j, letter);
    }
}

/// Realizes one B set in component k: k-even vectors become X u X blocks,
/// k-odd vectors are paired in ascending order into Y u1 Z Y u2 Z blocks.
void append_b_blocks(Builder &b, const std::set<Z2Vec> &B, int k) {
    std::vector<Z2Vec> even, odd;
    for (const Z2Vec &v : B)
        (v.bit(k) == 0 ? even : odd).push_back(v);
    for (const Z2Vec &v : even) {
        std::string x = b.fresh();
        b.append(k, x);
        append_linking_subword(b, v, k);
        b.append(k, x);
    }
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
        std::string y = b.fresh();
        std::string z = b.fresh();
        b.append(k, y);
        append_linking_subword(b, odd[i], k);
        b.append(k, z);
        b.append(k, y);
        append_linking_subword(b, odd[i + 1], k);
        b.append(k, z);
    }
}

TargetCheck check_b(const std::set<Z2Vec> &B, int k, int n) {
    int k_odd = 0;
    for (const Z2Vec &v : B) {
        if (v.dim() != n)
            return TargetCheck::reject(
                k, "vector dimension " + std::to_string(v.dim()) +
                       " does not match component count " +
                       std::to_string(n));
        if (v.is_zero())
            return TargetCheck::reject(k, "contains the zero vector");
        k_odd += v.bit(k);
    }
    if (k_odd % 2 != 0)
        return TargetCheck::reject(
            k, "odd number of " + std::to_string(k) + "-odd vectors");
    return TargetCheck::accept();
}

void require_admissible(const TargetCheck &check) {
    if (!check.admissible)
        throw InadmissibleError(check.component, check.reason);
}

void require_linking_shape(const Z2Mat &L) {
    if (!L.symmetric_zero_diagonal())
        throw BadMatrixError("linking matrix must be square and symmetric "
                             "with zero diagonal");
}

/// Appends one fresh two-component letter to components i and j wherever
/// the current linking matrix disagrees with L.
void correct_linking(Builder &b, const Z2Mat &L) {
    Z2Mat current = linking_matrix(GaussPhrase(b.comps));
    for (int i = 1; i <= L.rows(); ++i) {
        for (int j = i + 1; j <= L.rows(); ++j) {
            if (current.row(i).bit(j) != L.row(i).bit(j)) {
                std::string letter = b.fresh();
                b.append(i, letter);
                b.append(j, letter);
            }
        }
    }
}

} // namespace

TargetCheck check_so_target(const SoTarget &t) {
    if (t.n() < 1)
        return TargetCheck::reject(0, "target needs at least one component");
    for (int k = 1; k <= t.n(); ++k) {
        TargetCheck c = check_b(t.sets[static_cast<std::size_t>(k - 1)], k,
                                t.n());
        if (!c.admissible)
            return c;
    }
    return TargetCheck::accept();
}

TargetCheck check_s_target(const STarget &t) {
    if (!t.L.symmetric_zero_diagonal())
        return TargetCheck::reject(0, "linking matrix must be square and "
                                      "symmetric with zero diagonal");
    if (static_cast<int>(t.orbit_sets.size()) != t.n())
        return TargetCheck::reject(0, "orbit tuple length does not match "
                                      "the linking matrix");
    for (int k = 1; k <= t.n(); ++k) {
        const Z2Vec l = t.L.row(k);
        int k_odd = 0;
        for (const Orbit &o : t.orbit_sets[static_cast<std::size_t>(k - 1)]) {
            if (o.defining() != l)
                return TargetCheck::reject(k, "orbit not defined over row " +
                                                  std::to_string(k));
            if (o.is_zero_orbit())
                return TargetCheck::reject(k, "contains the zero orbit");
            // well defined: the k-th bit of l is 0
            k_odd += o.representative().bit(k);
        }
        if (k_odd % 2 != 0)
            return TargetCheck::reject(
                k, "odd number of " + std::to_string(k) + "-odd orbits");
    }
    return TargetCheck::accept();
}

GaussPhrase realize_linking_matrix(const Z2Mat &L) {
    require_linking_shape(L);
    Builder b(L.rows());
    for (int i = 1; i <= L.rows(); ++i) {
        for (int j = i + 1; j <= L.rows(); ++j) {
            if (L.row(i).bit(j) == 1) {
                std::string letter = b.fresh();
                b.append(i, letter);
                b.append(j, letter);
            }
        }
    }
    return canonical_form(GaussPhrase(std::move(b.comps)));
}

GaussPhrase realize_b_single(const std::set<Z2Vec> &B, int k, int n) {
    if (k < 1 || k > n)
        throw BadIndexError("component index out of range");
    require_admissible(check_b(B, k, n));
    Builder b(n);
    append_b_blocks(b, B, k);
    return canonical_form(GaussPhrase(std::move(b.comps)));
}

GaussPhrase realize_so(const SoTarget &t) {
    require_admissible(check_so_target(t));
    Builder b(t.n());
    for (int k = 1; k <= t.n(); ++k)
        append_b_blocks(b, t.sets[static_cast<std::size_t>(k - 1)], k);
    return canonical_form(GaussPhrase(std::move(b.comps)));
}

GaussPhrase realize_so_with_linking(const SoTarget &t, const Z2Mat &L) {
    require_linking_shape(L);
    if (L.rows() != t.n())
        throw DimensionError("linking matrix size does not match the "
                             "target");
    require_admissible(check_so_target(t));
    Builder b(t.n());
    for (int k = 1; k <= t.n(); ++k)
        append_b_blocks(b, t.sets[static_cast<std::size_t>(k - 1)], k);
    correct_linking(b, L);
    return canonical_form(GaussPhrase(std::move(b.comps)));
}

GaussPhrase realize_s(const STarget &t) {
    TargetCheck c = check_s_target(t);
    if (!c.admissible && c.component == 0)
        throw BadMatrixError(c.reason);
    require_admissible(c);
    SoTarget so;
    so.sets.resize(static_cast<std::size_t>(t.n()));
    for (int k = 1; k <= t.n(); ++k)
        for (const Orbit &o : t.orbit_sets[static_cast<std::size_t>(k - 1)])
            so.sets[static_cast<std::size_t>(k - 1)].insert(
                o.representative());
    return realize_so_with_linking(so, t.L);
}

SoTarget parse_so_target(const std::string &text) {
    std::istringstream in(text);
    std::string first;
    if (!std::getline(in, first))
        throw SyntaxError("empty S_o target file");
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(first, &used);
        if (used != first.size())
            throw std::invalid_argument("");
    } catch (const std::exception &) {
        throw SyntaxError("S_o target file must start with the component "
                          "count");
    }
    std::string rest((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    auto mats = parse_matrix_tuple(rest);
    if (static_cast<int>(mats.size()) != n)
        throw SyntaxError("expected " + std::to_string(n) +
                          " matrices in the S_o target file, found " +
                          std::to_string(mats.size()));
    SoValue v = decode_so(mats);
    return SoTarget{std::move(v.sets)};
}

STarget parse_s_target(const std::string &text) {
    auto mats = parse_matrix_tuple(text);
    if (mats.empty() || !mats.front().square())
        throw SyntaxError("S target file must start with a square linking "
                          "matrix");
    Z2Mat L = mats.front();
    const int n = L.rows();
    if (static_cast<int>(mats.size()) != n + 1)
        throw SyntaxError("expected " + std::to_string(n) +
                          " component matrices after the linking matrix");
    std::vector<Z2Mat> body(mats.begin() + 1, mats.end());
    SValue v = decode_s(body);
    STarget t{std::move(L), {}};
    for (int k = 1; k <= n; ++k) {
        auto &[l, orbits] = v.entries[static_cast<std::size_t>(k - 1)];
        if (l != t.L.row(k))
            throw SyntaxError("first row of matrix " + std::to_string(k) +
                              " does not match row " + std::to_string(k) +
                              " of the linking matrix");
        t.orbit_sets.push_back(std::move(orbits));
    }
    return t;
}

std::string render_so_target(const SoTarget &t) {
    SoValue v{t.sets};
    return std::to_string(t.n()) + "\n" + render_matrix_tuple(encode_so(v)) +
           "\n";
}

std::string render_s_target(const STarget &t) {
    SValue v;
    for (int k = 1; k <= t.n(); ++k)
        v.entries.emplace_back(t.L.row(k),
                               t.orbit_sets[static_cast<std::size_t>(k - 1)]);
    return t.L.render() + "\n--\n" + render_matrix_tuple(encode_s(v)) + "\n";
}

} // namespace gp
