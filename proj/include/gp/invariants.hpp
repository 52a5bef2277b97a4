#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gp/phrase.hpp"
#include "gp/z2.hpp"

namespace gp {

/// Range of offsets [begin, end) inside one component, 1-based;
/// begin == end denotes the empty span.
struct Span {
    int comp = 0;
    int begin = 0;
    int end = 0;
};

/// Orbit of a vector under v -> u + v, identified by the defining vector u
/// together with the smallest member. Two orbits compare equal only when
/// both match.
class Orbit {
  public:
    static Orbit of(const Z2Vec &u, const Z2Vec &v);

    const Z2Vec &defining() const { return u_; }
    const Z2Vec &representative() const { return rep_; }
    /// {rep, rep + u}; both entries equal when u is zero.
    std::pair<Z2Vec, Z2Vec> members() const;
    bool contains(const Z2Vec &v) const;
    /// True when the orbit contains the zero vector.
    bool is_zero_orbit() const { return rep_.is_zero(); }

    auto operator<=>(const Orbit &) const = default;

  private:
    Z2Vec u_;
    Z2Vec rep_;
};

/// Value of the open-homotopy invariant: the tuple (B_1, ..., B_n) of sets
/// of nonzero linking vectors.
struct SoValue {
    std::vector<std::set<Z2Vec>> sets;
    int n() const { return static_cast<int>(sets.size()); }
    bool operator==(const SoValue &) const = default;
};

/// Value of the homotopy invariant: per component the pair of its linking
/// vector and the orbit set O_k (never containing the zero orbit).
struct SValue {
    std::vector<std::pair<Z2Vec, std::set<Orbit>>> entries;
    int n() const { return static_cast<int>(entries.size()); }
    bool operator==(const SValue &) const = default;
};

/// Entry i = length of component i mod 2.
Z2Vec component_length_vector(const GaussPhrase &p);

/// Symmetric, zero diagonal; entry (i,j) = number of two-component letters
/// shared by components i and j, mod 2.
Z2Mat linking_matrix(const GaussPhrase &p);

/// Entry i = number of letters occurring exactly once in the span whose
/// other occurrence lies in component i, mod 2.
Z2Vec linking_vector_subword(const GaussPhrase &p, Span span);

/// Linking vector of the subword strictly between the two occurrences of a
/// single-component letter.
Z2Vec linking_vector_letter(const GaussPhrase &p, const std::string &letter);

/// Letters with an odd number of positions between their two occurrences.
/// Requires a one-component phrase. The result always has even size.
std::set<std::string> odd_parity_letters(const GaussPhrase &word);

/// Entry k = number of odd-parity single-component letters in component k,
/// mod 2. Parity of a letter counts all positions between its occurrences.
Z2Vec t_invariant(const GaussPhrase &p);

/// Nonzero vectors that are the linking vector of an odd number of
/// single-component letters of component k.
std::set<Z2Vec> b_set(const GaussPhrase &p, int k);

SoValue so_invariant(const GaussPhrase &p);

/// One matrix per component: rows are the set elements in ascending order;
/// an empty set encodes as the 1 x n zero matrix.
std::vector<Z2Mat> encode_so(const SoValue &v);
SoValue decode_so(const std::vector<Z2Mat> &mats);

Orbit orbit_of(const Z2Vec &u, const Z2Vec &v);

/// Orbits (under addition of row k of the linking matrix) hit by an odd
/// number of single-component letters of component k, excluding the orbit
/// of the zero vector.
std::set<Orbit> o_set(const GaussPhrase &p, int k);

SValue s_invariant(const GaussPhrase &p);

/// One matrix per component: first row is the component's linking vector,
/// remaining rows are the orbit representatives in ascending order.
std::vector<Z2Mat> encode_s(const SValue &v);
SValue decode_s(const std::vector<Z2Mat> &mats);

/// Derives O_k from B_k and the linking vector l: when l is zero, the
/// orbits of all members of B; otherwise every non-zero orbit with exactly
/// one of its two members in B.
std::set<Orbit> o_from_b(const std::set<Z2Vec> &B, const Z2Vec &l);

/// Entry k = number of odd vectors in B_k, mod 2.
Z2Vec t_from_so(const SoValue &v);

} // namespace gp
