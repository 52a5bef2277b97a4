#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gp/errors.hpp"

namespace gp {

/// Position of a letter occurrence: component index and offset within the
/// component, both 1-based.
struct Pos {
    int comp = 0;
    int offset = 0;
    auto operator<=>(const Pos &) const = default;
};

/// A word is a finite sequence of letter ids. Valid ids match
/// [A-Za-z][A-Za-z0-9_]*.
using Word = std::vector<std::string>;

/// An ordered tuple of words whose concatenation is a Gauss word: every
/// letter of the alphabet occurs exactly twice across all components.
/// Immutable after construction; construction validates.
class GaussPhrase {
  public:
    /// Throws SyntaxError for a bad letter id, NotGaussError when some
    /// letter does not occur exactly twice, BadIndexError for an empty
    /// component list.
    explicit GaussPhrase(std::vector<Word> components);

    /// n components, all empty.
    static GaussPhrase empty_phrase(int n);

    int component_count() const { return static_cast<int>(comps_.size()); }
    /// k is 1-based.
    const Word &component(int k) const;
    const std::vector<Word> &components() const { return comps_; }
    int component_length(int k) const;

    int letter_count() const { return static_cast<int>(alphabet_.size()); }
    /// Sorted list of letter ids.
    const std::vector<std::string> &alphabet() const { return alphabet_; }
    bool contains(const std::string &letter) const;
    /// The two occurrences in reading order of the concatenation.
    std::pair<Pos, Pos> occurrences(const std::string &letter) const;
    const std::string &letter_at(Pos pos) const;

    bool operator==(const GaussPhrase &o) const { return comps_ == o.comps_; }
    bool operator<(const GaussPhrase &o) const { return comps_ < o.comps_; }

  private:
    std::vector<Word> comps_;
    std::vector<std::string> alphabet_;
    std::map<std::string, std::pair<Pos, Pos>> occ_;
};

enum class PhraseFormat { Compact, List };

/// Compact grammar: phrase := comp ('|' comp)*; comp := '-' | letter*;
/// letter := [A-Za-z]. List grammar: comp := '-' | token ('.' token)*;
/// token := [A-Za-z][A-Za-z0-9_]*. No whitespace anywhere.
GaussPhrase parse_phrase(std::string_view text, PhraseFormat format);

/// Auto-detecting parse: text containing '.', a digit or '_' is read in
/// list format, anything else in compact format.
GaussPhrase parse_phrase(std::string_view text);

/// Compact format requires every letter id to be a single character
/// (CompactFormatError otherwise). Empty components render as '-'.
std::string format_phrase(const GaussPhrase &p, PhraseFormat format);

/// Compact when every id is a single character, list otherwise.
std::string to_string(const GaussPhrase &p);

/// Which component(s) a letter's two occurrences lie in. For a
/// single-component letter first == second; otherwise first < second.
struct LetterKind {
    int first = 0;
    int second = 0;
    bool single() const { return first == second; }
    auto operator<=>(const LetterKind &) const = default;
};

LetterKind letter_kind(const GaussPhrase &p, const std::string &letter);

/// The fixed relabeling alphabet: A..Z, A1..Z1, A2..Z2, ...
std::string canonical_letter(int index);

bool is_valid_letter_id(std::string_view id);

/// Relabels letters by first occurrence in the concatenation using the
/// canonical alphabet. Idempotent; the result is isomorphic to p.
GaussPhrase canonical_form(const GaussPhrase &p);

/// True iff some bijection of alphabets maps p onto q letterwise,
/// i.e. canonical_form(p) == canonical_form(q).
bool is_isomorphic(const GaussPhrase &p, const GaussPhrase &q);

} // namespace gp
