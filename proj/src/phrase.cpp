#include "gp/phrase.hpp"

#include <algorithm>
#include <cctype>

namespace gp {

GaussPhrase::GaussPhrase(std::vector<Word> components)
    : comps_(std::move(components)) {
    if (comps_.empty())
        throw BadIndexError("a Gauss phrase needs at least one component");
    std::map<std::string, int> counts;
    std::vector<std::string> first_seen;
    for (int k = 1; k <= component_count(); ++k) {
        const Word &w = comps_[static_cast<std::size_t>(k - 1)];
        for (int o = 1; o <= static_cast<int>(w.size()); ++o) {
            const std::string &id = w[static_cast<std::size_t>(o - 1)];
            if (!is_valid_letter_id(id))
                throw SyntaxError("invalid letter id '" + id + "'");
            auto [it, fresh] = counts.try_emplace(id, 0);
            if (fresh)
                first_seen.push_back(id);
            it->second += 1;
            auto &occ = occ_[id];
            if (it->second == 1)
                occ.first = Pos{k, o};
            else if (it->second == 2)
                occ.second = Pos{k, o};
        }
    }
    for (const auto &id : first_seen) {
        if (counts[id] != 2)
            throw NotGaussError(id, counts[id]);
    }
    alphabet_.reserve(counts.size());
    for (const auto &[id, c] : counts)
        alphabet_.push_back(id);
}

GaussPhrase GaussPhrase::empty_phrase(int n) {
    if (n < 1)
        throw BadIndexError("component count must be at least 1");
    return GaussPhrase(std::vector<Word>(static_cast<std::size_t>(n)));
}

const Word &GaussPhrase::component(int k) const {
    if (k < 1 || k > component_count())
        throw BadIndexError("component index " + std::to_string(k) +
                            " out of range 1.." +
                            std::to_string(component_count()));
    return comps_[static_cast<std::size_t>(k - 1)];
}

int GaussPhrase::component_length(int k) const {
    return static_cast<int>(component(k).size());
}

bool GaussPhrase::contains(const std::string &letter) const {
    return occ_.count(letter) != 0;
}

std::pair<Pos, Pos> GaussPhrase::occurrences(const std::string &letter) const {
    auto it = occ_.find(letter);
    if (it == occ_.end())
        throw UnknownLetterError(letter);
    return it->second;
}

const std::string &GaussPhrase::letter_at(Pos pos) const {
    const Word &w = component(pos.comp);
    if (pos.offset < 1 || pos.offset > static_cast<int>(w.size()))
        throw BadIndexError("offset out of range");
    return w[static_cast<std::size_t>(pos.offset - 1)];
}

bool is_valid_letter_id(std::string_view id) {
    if (id.empty() || !std::isalpha(static_cast<unsigned char>(id[0])))
        return false;
    for (char ch : id.substr(1)) {
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
            return false;
    }
    return true;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

Word parse_component(std::string_view seg, PhraseFormat format) {
    Word word;
    if (seg == "-" || seg.empty())
        return word;
    if (format == PhraseFormat::Compact) {
        for (char ch : seg) {
            if (!std::isalpha(static_cast<unsigned char>(ch)))
                throw SyntaxError(std::string("unexpected character '") + ch +
                                  "' in compact phrase");
            word.emplace_back(1, ch);
        }
    } else {
        for (auto tok : split(seg, '.')) {
            if (!is_valid_letter_id(tok))
                throw SyntaxError("invalid letter token '" + std::string(tok) +
                                  "'");
            word.emplace_back(tok);
        }
    }
    return word;
}

} // namespace

GaussPhrase parse_phrase(std::string_view text, PhraseFormat format) {
    std::vector<Word> comps;
    for (auto seg : split(text, '|'))
        comps.push_back(parse_component(seg, format));
    return GaussPhrase(std::move(comps));
}

GaussPhrase parse_phrase(std::string_view text) {
    bool list = text.find_first_of(".0123456789_") != std::string_view::npos;
    return parse_phrase(text, list ? PhraseFormat::List
                                   : PhraseFormat::Compact);
}

std::string format_phrase(const GaussPhrase &p, PhraseFormat format) {
    std::string out;
    for (int k = 1; k <= p.component_count(); ++k) {
        if (k > 1)
            out += '|';
        const Word &w = p.component(k);
        if (w.empty()) {
            out += '-';
            continue;
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (format == PhraseFormat::Compact) {
                if (w[i].size() != 1)
                    throw CompactFormatError("letter id '" + w[i] +
                                             "' is not a single character");
                out += w[i];
            } else {
                if (i)
                    out += '.';
                out += w[i];
            }
        }
    }
    return out;
}

std::string to_string(const GaussPhrase &p) {
    for (const auto &id : p.alphabet())
        if (id.size() != 1)
            return format_phrase(p, PhraseFormat::List);
    return format_phrase(p, PhraseFormat::Compact);
}

LetterKind letter_kind(const GaussPhrase &p, const std::string &letter) {
    auto [a, b] = p.occurrences(letter); // reading order, so a.comp <= b.comp
    return LetterKind{a.comp, b.comp};
}

std::string canonical_letter(int index) {
    std::string s(1, static_cast<char>('A' + index % 26));
    if (index >= 26)
        s += std::to_string(index / 26);
    return s;
}

GaussPhrase canonical_form(const GaussPhrase &p) {
    std::map<std::string, std::string> rename;
    int next = 0;
    for (const Word &w : p.components())
        for (const std::string &id : w)
            if (rename.try_emplace(id, "").second)
                rename[id] = canonical_letter(next++);
    std::vector<Word> comps;
    comps.reserve(p.components().size());
    for (const Word &w : p.components()) {
        Word nw;
        nw.reserve(w.size());
        for (const std::string &id : w)
            nw.push_back(rename[id]);
        comps.push_back(std::move(nw));
    }
    return GaussPhrase(std::move(comps));
}

bool is_isomorphic(const GaussPhrase &p, const GaussPhrase &q) {
    return canonical_form(p) == canonical_form(q);
}

} // namespace gp
