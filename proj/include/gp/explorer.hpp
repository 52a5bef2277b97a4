#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gp/invariants.hpp"
#include "gp/moves.hpp"
#include "gp/phrase.hpp"

namespace gp {

struct SearchBounds {
    int max_letters = 0;
    int max_depth = 8;
    long max_states = 1000000;

    /// max_letters = larger alphabet + 2, max_depth 8, max_states 10^6.
    static SearchBounds defaults_for(const GaussPhrase &p,
                                     const GaussPhrase &q);
    static SearchBounds defaults_for(const GaussPhrase &p);
};

enum class Relation { OpenHomotopy, Homotopy };

MoveSet move_set_for(Relation rel);

/// Invariants usable as non-equivalence certificates.
enum class Invariant { ComponentCount, LengthVector, LinkingMatrix, T, So, S };

std::string invariant_name(Invariant inv);

/// Breadth-first closure of canonical forms under the move set, within the
/// bounds. states_truncated is set when max_states stopped the search from
/// recording further states.
struct ReachResult {
    std::set<GaussPhrase> states;
    bool states_truncated = false;
};

ReachResult reachable(const GaussPhrase &p, MoveSet ms, SearchBounds b);

struct SearchVerdict {
    enum class Kind { Equivalent, NotEquivalentCertified, Unknown };
    Kind kind = Kind::Unknown;
    std::vector<MoveSite> trace;            // Equivalent
    Invariant witness = Invariant::S;       // NotEquivalentCertified
    std::string detail;                     // human-readable summary
};

/// Invariant screen first (any mismatch certifies non-equivalence), then
/// bidirectional bounded search. Equivalent traces replay through
/// replay_trace to a phrase isomorphic to q.
SearchVerdict decide_equivalence(const GaussPhrase &p, const GaussPhrase &q,
                                 Relation rel, SearchBounds b);

/// Mismatching invariant for the relation, if any (the search screen).
std::optional<SearchVerdict> invariant_screen(const GaussPhrase &p,
                                              const GaussPhrase &q,
                                              Relation rel);

/// Applies the trace starting from canonical_form(p), canonicalizing after
/// each move; returns the final state.
GaussPhrase replay_trace(const GaussPhrase &p,
                         const std::vector<MoveSite> &trace);

/// Exactly one representative per isomorphism class with the given alphabet
/// size and component count, in deterministic order (canonical letter
/// sequences lexicographically, split points lexicographically).
std::vector<GaussPhrase> enumerate_phrases(int letters, int components);

/// Uniform over the output of enumerate_phrases(letters, components).
GaussPhrase random_canonical_phrase(std::mt19937_64 &rng, int letters,
                                    int components);

/// Uniform integer in [0, bound) by rejection; bound > 0.
std::uint64_t rand_below(std::mt19937_64 &rng, std::uint64_t bound);

struct FuzzCaps {
    int max_letters = 8;
    int max_components = 4;
};

struct FuzzReport {
    long trials = 0;
    long open_moves = 0;
    long shift_moves = 0;
    long so_shift_changes = 0;
    std::map<std::string, long> violations;

    long total_violations() const;
    std::string render() const;
};

/// Random phrases, random applicable homotopy moves; checks per-move
/// invariance of each invariant for its valid move set and counts the
/// shift moves that change S_o. Violations are report content.
FuzzReport fuzz_invariance(std::uint64_t seed, long trials, FuzzCaps caps);

struct CensusClass {
    long id = 0;
    long count = 0;
    GaussPhrase representative;
    std::string digest;
};

/// Groups all phrases with alphabet size <= max_letters and exactly
/// `components` components by (length vector, linking matrix, T, S_o
/// encoding, S encoding).
std::vector<CensusClass> tabulate(int max_letters, int components);

/// Tab-separated lines: class_id, count, representative, invariant digest.
std::string render_census(const std::vector<CensusClass> &classes);

} // namespace gp
