#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gp/phrase.hpp"

namespace gp {

enum class MoveKind : std::uint8_t {
    H1Remove,   // xAAy -> xy
    H1Insert,   // xy -> xAAy, A fresh
    H2Remove,   // xAByBAz -> xyz, each block inside one component
    H2Insert,   // xyz -> xAByBAz, A and B fresh
    H3Forward,  // wABxACyBCz -> wBAxCAyCBz
    H3Backward, // wBAxCAyCBz -> wABxACyBCz
    Shift,      // component Ay -> yA
    Permute,    // reorder components
};

/// A fully resolved, applicable instance of one move. Payload by kind:
///   H1Remove   a = position of the first A of the adjacent pair
///   H1Insert   a = insertion point (offset in 1..len+1), letters = {A}
///   H2Remove   a, b = positions of the AB and BA blocks (reading order)
///   H2Insert   a, b = insertion points, letters = {A, B}; AB goes to a,
///              BA to b; offsets refer to the unmodified phrase
///   H3*        a, b, c = block positions in reading order, letters = {A,B,C}
///   Shift      a.comp = component index
///   Permute    perm = images of components 1..n (result i = input perm[i-1])
struct MoveSite {
    MoveKind kind = MoveKind::H1Remove;
    Pos a{};
    Pos b{};
    Pos c{};
    std::vector<std::string> letters;
    std::vector<int> perm;

    /// One-line rendering used in search traces, e.g. "H1-@c1:2",
    /// "shift@c3", "H3+@(c1:1,c1:3,c2:2)[A,B,C]".
    std::string render() const;

    auto operator<=>(const MoveSite &) const = default;
};

struct MoveSet {
    bool h1 = false;
    bool h2 = false;
    bool h3 = false;
    bool shift = false;
    bool permute = false;

    static MoveSet open_homotopy() { return {true, true, true, false, false}; }
    static MoveSet homotopy() { return {true, true, true, true, false}; }
    static MoveSet unordered() { return {true, true, true, true, true}; }
};

/// All applicable sites on p, sorted by (kind, locus). Insert-direction
/// sites appear only while the alphabet size after insertion stays within
/// letter_budget; fresh letters are the first unused canonical ids.
std::vector<MoveSite> enumerate_sites(const GaussPhrase &p, MoveSet ms,
                                      int letter_budget);

/// Applies s to p; throws InvalidSiteError when s does not match p.
GaussPhrase apply_move(const GaussPhrase &p, const MoveSite &s);

/// Moves the first letter of component k to its end. Identity on empty
/// components.
GaussPhrase shift(const GaussPhrase &p, int k);

/// Component i of the result is component perm[i-1] of p.
GaussPhrase permute_components(const GaussPhrase &p,
                               const std::vector<int> &perm);

} // namespace gp
