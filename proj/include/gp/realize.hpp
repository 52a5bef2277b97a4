#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "gp/invariants.hpp"
#include "gp/phrase.hpp"
#include "gp/z2.hpp"

namespace gp {

/// Candidate value for the S_o invariant: one set of nonzero vectors per
/// component. Admissible iff every entry k has an even number of k-odd
/// vectors (vectors whose k-th bit is 1).
struct SoTarget {
    std::vector<std::set<Z2Vec>> sets;
    int n() const { return static_cast<int>(sets.size()); }
};

/// Candidate value for the S invariant: a linking matrix plus, per
/// component, a set of orbits over row k of L, excluding the zero orbit.
struct STarget {
    Z2Mat L;
    std::vector<std::set<Orbit>> orbit_sets;
    int n() const { return L.rows(); }
};

struct TargetCheck {
    bool admissible = false;
    int component = 0; // first offending component when rejected, 0 if shape
    std::string reason;

    static TargetCheck accept() { return {true, 0, ""}; }
    static TargetCheck reject(int component, std::string reason) {
        return {false, component, std::move(reason)};
    }
};

TargetCheck check_so_target(const SoTarget &t);
TargetCheck check_s_target(const STarget &t);

/// Phrase with linking matrix L, one two-component letter per (i<j) with
/// L_ij = 1 and no single-component letters. Throws BadMatrixError.
GaussPhrase realize_linking_matrix(const Z2Mat &L);

/// Phrase whose B_k equals B and whose other components contain no
/// single-component letters. Throws InadmissibleError.
GaussPhrase realize_b_single(const std::set<Z2Vec> &B, int k, int n);

/// Phrase p with b_set(p, k) = t.sets[k] for every k.
GaussPhrase realize_so(const SoTarget &t);

/// Phrase realizing t whose linking matrix additionally equals L.
GaussPhrase realize_so_with_linking(const SoTarget &t, const Z2Mat &L);

/// Phrase p with s_invariant(p) = t, built via orbit representatives.
GaussPhrase realize_s(const STarget &t);

/// Target file formats. An S_o target file holds n on the first line, then
/// one matrix per component in the shared matrix text rendering, separated
/// by "--" lines (a zero row denotes the empty set). An S target file holds
/// L first, then the per-component matrices of the S encoding.
SoTarget parse_so_target(const std::string &text);
STarget parse_s_target(const std::string &text);
std::string render_so_target(const SoTarget &t);
std::string render_s_target(const STarget &t);

} // namespace gp
