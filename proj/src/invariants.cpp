#include "gp/invariants.hpp"

#include <map>

namespace gp {

namespace {

void check_component_index(const GaussPhrase &p, int k) {
    if (k < 1 || k > p.component_count())
        throw BadIndexError("component index " + std::to_string(k) +
                            " out of range 1.." +
                            std::to_string(p.component_count()));
}

/// Single-component letters of component k, in order of first occurrence.
std::vector<std::string> single_letters(const GaussPhrase &p, int k) {
    std::vector<std::string> out;
    const Word &w = p.component(k);
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto [a, b] = p.occurrences(w[i]);
        if (a.comp == k && b.comp == k &&
            a.offset == static_cast<int>(i) + 1)
            out.push_back(w[i]);
    }
    return out;
}

} // namespace

Z2Vec component_length_vector(const GaussPhrase &p) {
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(p.component_count()));
    for (int k = 1; k <= p.component_count(); ++k)
        bits.push_back(static_cast<std::uint8_t>(p.component_length(k) % 2));
    return Z2Vec(std::move(bits));
}

Z2Mat linking_matrix(const GaussPhrase &p) {
    const int n = p.component_count();
    std::vector<std::vector<std::uint8_t>> m(
        static_cast<std::size_t>(n),
        std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
    for (const auto &letter : p.alphabet()) {
        LetterKind kind = letter_kind(p, letter);
        if (!kind.single()) {
            m[static_cast<std::size_t>(kind.first - 1)]
             [static_cast<std::size_t>(kind.second - 1)] ^= 1;
            m[static_cast<std::size_t>(kind.second - 1)]
             [static_cast<std::size_t>(kind.first - 1)] ^= 1;
        }
    }
    std::vector<Z2Vec> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (auto &row : m)
        rows.push_back(Z2Vec(std::move(row)));
    return Z2Mat(std::move(rows));
}

Z2Vec linking_vector_subword(const GaussPhrase &p, Span span) {
    if (span.comp < 1 || span.comp > p.component_count())
        throw BadSpanError("span component out of range");
    const int len = p.component_length(span.comp);
    if (span.begin < 1 || span.begin > span.end || span.end > len + 1)
        throw BadSpanError("span offsets out of range");
    const Word &w = p.component(span.comp);
    std::map<std::string, int> inside;
    for (int o = span.begin; o < span.end; ++o)
        inside[w[static_cast<std::size_t>(o - 1)]] += 1;
    std::vector<std::uint8_t> bits(
        static_cast<std::size_t>(p.component_count()), 0);
    for (const auto &[letter, count] : inside) {
        if (count != 1)
            continue;
        auto [a, b] = p.occurrences(letter);
        // The occurrence outside the span determines the component counted.
        bool a_inside = a.comp == span.comp && a.offset >= span.begin &&
                        a.offset < span.end;
        Pos other = a_inside ? b : a;
        bits[static_cast<std::size_t>(other.comp - 1)] ^= 1;
    }
    return Z2Vec(std::move(bits));
}

Z2Vec linking_vector_letter(const GaussPhrase &p, const std::string &letter) {
    auto [a, b] = p.occurrences(letter);
    if (a.comp != b.comp)
        throw NotSingleComponentError(letter);
    return linking_vector_subword(p, Span{a.comp, a.offset + 1, b.offset});
}

std::set<std::string> odd_parity_letters(const GaussPhrase &word) {
    if (word.component_count() != 1)
        throw BadIndexError("odd_parity_letters expects a one-component "
                            "Gauss word");
    std::set<std::string> out;
    for (const auto &letter : word.alphabet()) {
        auto [a, b] = word.occurrences(letter);
        if ((b.offset - a.offset - 1) % 2 == 1)
            out.insert(letter);
    }
    return out;
}

Z2Vec t_invariant(const GaussPhrase &p) {
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(p.component_count()));
    for (int k = 1; k <= p.component_count(); ++k) {
        int odd = 0;
        for (const auto &letter : single_letters(p, k)) {
            auto [a, b] = p.occurrences(letter);
            odd ^= (b.offset - a.offset - 1) & 1;
        }
        bits.push_back(static_cast<std::uint8_t>(odd));
    }
    return Z2Vec(std::move(bits));
}

std::set<Z2Vec> b_set(const GaussPhrase &p, int k) {
    check_component_index(p, k);
    std::map<Z2Vec, int> counts;
    for (const auto &letter : single_letters(p, k))
        counts[linking_vector_letter(p, letter)] += 1;
    std::set<Z2Vec> out;
    for (const auto &[v, count] : counts)
        if (!v.is_zero() && count % 2 == 1)
            out.insert(v);
    return out;
}

SoValue so_invariant(const GaussPhrase &p) {
    SoValue v;
    for (int k = 1; k <= p.component_count(); ++k)
        v.sets.push_back(b_set(p, k));
    return v;
}

std::vector<Z2Mat> encode_so(const SoValue &v) {
    std::vector<Z2Mat> mats;
    mats.reserve(static_cast<std::size_t>(v.n()));
    for (const auto &set : v.sets) {
        if (set.empty()) {
            mats.push_back(Z2Mat({Z2Vec::zero(v.n())}));
        } else {
            std::vector<Z2Vec> rows(set.begin(), set.end());
            mats.push_back(Z2Mat(std::move(rows)));
        }
    }
    return mats;
}

SoValue decode_so(const std::vector<Z2Mat> &mats) {
    const int n = static_cast<int>(mats.size());
    SoValue v;
    for (const auto &m : mats) {
        if (m.cols() != n)
            throw DimensionError("S_o matrix width does not match tuple "
                                 "length");
        std::set<Z2Vec> set;
        if (m.rows() == 1 && m.row(1).is_zero()) {
            v.sets.push_back(std::move(set));
            continue;
        }
        for (int i = 1; i <= m.rows(); ++i) {
            const Z2Vec &row = m.row(i);
            if (row.is_zero())
                throw DimensionError("zero row in a nonempty S_o matrix");
            if (i > 1 && !(m.row(i - 1) < row))
                throw DimensionError("S_o matrix rows not strictly "
                                     "ascending");
            set.insert(row);
        }
        v.sets.push_back(std::move(set));
    }
    return v;
}

Orbit Orbit::of(const Z2Vec &u, const Z2Vec &v) {
    if (u.dim() != v.dim())
        throw DimensionError("orbit defining vector and member have "
                             "different dimensions");
    Orbit o;
    o.u_ = u;
    o.rep_ = std::min(v, u + v);
    return o;
}

std::pair<Z2Vec, Z2Vec> Orbit::members() const {
    return {rep_, u_ + rep_};
}

bool Orbit::contains(const Z2Vec &v) const {
    return v == rep_ || v == u_ + rep_;
}

Orbit orbit_of(const Z2Vec &u, const Z2Vec &v) { return Orbit::of(u, v); }

std::set<Orbit> o_set(const GaussPhrase &p, int k) {
    check_component_index(p, k);
    const Z2Vec u = linking_matrix(p).row(k);
    std::map<Orbit, int> counts;
    for (const auto &letter : single_letters(p, k))
        counts[Orbit::of(u, linking_vector_letter(p, letter))] += 1;
    std::set<Orbit> out;
    for (const auto &[orbit, count] : counts)
        if (!orbit.is_zero_orbit() && count % 2 == 1)
            out.insert(orbit);
    return out;
}

SValue s_invariant(const GaussPhrase &p) {
    SValue v;
    const Z2Mat L = linking_matrix(p);
    for (int k = 1; k <= p.component_count(); ++k)
        v.entries.emplace_back(L.row(k), o_set(p, k));
    return v;
}

std::vector<Z2Mat> encode_s(const SValue &v) {
    std::vector<Z2Mat> mats;
    mats.reserve(static_cast<std::size_t>(v.n()));
    for (const auto &[l, orbits] : v.entries) {
        std::vector<Z2Vec> rows{l};
        for (const Orbit &o : orbits)
            rows.push_back(o.representative());
        mats.push_back(Z2Mat(std::move(rows)));
    }
    return mats;
}

SValue decode_s(const std::vector<Z2Mat> &mats) {
    const int n = static_cast<int>(mats.size());
    SValue v;
    for (int k = 1; k <= n; ++k) {
        const Z2Mat &m = mats[static_cast<std::size_t>(k - 1)];
        if (m.cols() != n)
            throw DimensionError("S matrix width does not match tuple "
                                 "length");
        Z2Vec l = m.row(1);
        if (l.bit(k) != 0)
            throw DimensionError("linking vector has a nonzero k-th bit");
        std::set<Orbit> orbits;
        for (int i = 2; i <= m.rows(); ++i) {
            const Z2Vec &rep = m.row(i);
            Orbit o = Orbit::of(l, rep);
            if (o.is_zero_orbit())
                throw DimensionError("zero orbit in an S matrix");
            if (o.representative() != rep)
                throw DimensionError("S matrix row is not the smallest "
                                     "orbit member");
            if (i > 2 && !(m.row(i - 1) < rep))
                throw DimensionError("S matrix rows not strictly ascending");
            orbits.insert(o);
        }
        v.entries.emplace_back(std::move(l), std::move(orbits));
    }
    return v;
}

std::set<Orbit> o_from_b(const std::set<Z2Vec> &B, const Z2Vec &l) {
    std::map<Orbit, int> counts;
    for (const Z2Vec &v : B) {
        if (v.dim() != l.dim())
            throw DimensionError("B vector dimension does not match l");
        if (v.is_zero())
            throw DimensionError("B must not contain the zero vector");
        Orbit o = Orbit::of(l, v);
        if (!o.is_zero_orbit())
            counts[o] += 1;
    }
    std::set<Orbit> out;
    for (const auto &[orbit, count] : counts)
        if (count % 2 == 1)
            out.insert(orbit);
    return out;
}

Z2Vec t_from_so(const SoValue &v) {
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(v.n()));
    for (const auto &set : v.sets) {
        int odd = 0;
        for (const Z2Vec &vec : set)
            odd ^= vec.odd() ? 1 : 0;
        bits.push_back(static_cast<std::uint8_t>(odd));
    }
    return Z2Vec(std::move(bits));
}

} // namespace gp
