#include "gp/moves.hpp"

#include <algorithm>
#include <numeric>

namespace gp {

namespace {

std::string pos_str(Pos p) {
    return "c" + std::to_string(p.comp) + ":" + std::to_string(p.offset);
}

std::string letters_str(const std::vector<std::string> &letters) {
    std::string s = "[";
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i)
            s += ',';
        s += letters[i];
    }
    return s + "]";
}

// Contiguous length-2 subword inside one component.
struct Block {
    Pos pos;
    std::string x, y;
};

std::vector<Block> collect_blocks(const GaussPhrase &p) {
    std::vector<Block> blocks;
    for (int k = 1; k <= p.component_count(); ++k) {
        const Word &w = p.component(k);
        for (int o = 1; o + 1 <= static_cast<int>(w.size()); ++o)
            blocks.push_back(Block{Pos{k, o},
                                   w[static_cast<std::size_t>(o - 1)],
                                   w[static_cast<std::size_t>(o)]});
    }
    return blocks;
}

bool disjoint(const Block &a, const Block &b) {
    if (a.pos.comp != b.pos.comp)
        return true;
    return a.pos.offset + 1 < b.pos.offset || b.pos.offset + 1 < a.pos.offset;
}

std::vector<Pos> insertion_points(const GaussPhrase &p) {
    std::vector<Pos> points;
    for (int k = 1; k <= p.component_count(); ++k)
        for (int o = 1; o <= p.component_length(k) + 1; ++o)
            points.push_back(Pos{k, o});
    return points;
}

std::vector<std::string> fresh_letters(const GaussPhrase &p, int count) {
    std::vector<std::string> out;
    for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
        std::string id = canonical_letter(i);
        if (!p.contains(id))
            out.push_back(std::move(id));
    }
    return out;
}

bool in_word_range(const GaussPhrase &p, Pos pos, int span) {
    if (pos.comp < 1 || pos.comp > p.component_count())
        return false;
    return pos.offset >= 1 &&
           pos.offset + span - 1 <= p.component_length(pos.comp);
}

bool is_insertion_point(const GaussPhrase &p, Pos pos) {
    if (pos.comp < 1 || pos.comp > p.component_count())
        return false;
    return pos.offset >= 1 && pos.offset <= p.component_length(pos.comp) + 1;
}

void require(bool cond, const char *what) {
    if (!cond)
        throw InvalidSiteError(what);
}

Word erase_offsets(const Word &w, std::vector<int> offsets) {
    std::sort(offsets.begin(), offsets.end());
    Word out;
    out.reserve(w.size() - offsets.size());
    std::size_t next = 0;
    for (int o = 1; o <= static_cast<int>(w.size()); ++o) {
        if (next < offsets.size() && offsets[next] == o) {
            ++next;
            continue;
        }
        out.push_back(w[static_cast<std::size_t>(o - 1)]);
    }
    return out;
}

} // namespace

std::string MoveSite::render() const {
    switch (kind) {
    case MoveKind::H1Remove:
        return "H1-@" + pos_str(a);
    case MoveKind::H1Insert:
        return "H1+@" + pos_str(a) + letters_str(letters);
    case MoveKind::H2Remove:
        return "H2-@(" + pos_str(a) + "," + pos_str(b) + ")";
    case MoveKind::H2Insert:
        return "H2+@(" + pos_str(a) + "," + pos_str(b) + ")" +
               letters_str(letters);
    case MoveKind::H3Forward:
        return "H3+@(" + pos_str(a) + "," + pos_str(b) + "," + pos_str(c) +
               ")" + letters_str(letters);
    case MoveKind::H3Backward:
        return "H3-@(" + pos_str(a) + "," + pos_str(b) + "," + pos_str(c) +
               ")" + letters_str(letters);
    case MoveKind::Shift:
        return "shift@c" + std::to_string(a.comp);
    case MoveKind::Permute: {
        std::string s = "permute@(";
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(perm[i]);
        }
        return s + ")";
    }
    }
    return "?";
}

std::vector<MoveSite> enumerate_sites(const GaussPhrase &p, MoveSet ms,
                                      int letter_budget) {
    std::vector<MoveSite> out;
    const auto blocks = collect_blocks(p);
    const int letters = p.letter_count();

    if (ms.h1) {
        for (const Block &b : blocks) {
            if (b.x == b.y)
                out.push_back(MoveSite{MoveKind::H1Remove, b.pos, {}, {}, {},
                                       {}});
        }
        if (letters + 1 <= letter_budget) {
            auto fresh = fresh_letters(p, 1);
            for (Pos pt : insertion_points(p))
                out.push_back(MoveSite{MoveKind::H1Insert, pt, {}, {}, fresh,
                                       {}});
        }
    }

    if (ms.h2) {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                const Block &b1 = blocks[i];
                const Block &b2 = blocks[j];
                if (b1.x != b1.y && b1.x == b2.y && b1.y == b2.x &&
                    disjoint(b1, b2))
                    out.push_back(MoveSite{MoveKind::H2Remove, b1.pos, b2.pos,
                                           {}, {}, {}});
            }
        }
        if (letters + 2 <= letter_budget) {
            auto fresh = fresh_letters(p, 2);
            auto points = insertion_points(p);
            for (Pos p1 : points)
                for (Pos p2 : points)
                    out.push_back(MoveSite{MoveKind::H2Insert, p1, p2, {},
                                           fresh, {}});
        }
    }

    if (ms.h3) {
        // Forward schema wABxACyBCz, backward schema wBAxCAyCBz; blocks in
        // concatenated reading order, each inside one component.
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                if (!disjoint(blocks[i], blocks[j]))
                    continue;
                for (std::size_t k = j + 1; k < blocks.size(); ++k) {
                    if (!disjoint(blocks[i], blocks[k]) ||
                        !disjoint(blocks[j], blocks[k]))
                        continue;
                    const Block &b1 = blocks[i];
                    const Block &b2 = blocks[j];
                    const Block &b3 = blocks[k];
                    if (b1.x == b1.y || b2.x == b2.y || b3.x == b3.y)
                        continue;
                    if (b1.x == b2.x && b1.y == b3.x && b2.y == b3.y)
                        out.push_back(MoveSite{MoveKind::H3Forward, b1.pos,
                                               b2.pos, b3.pos,
                                               {b1.x, b1.y, b2.y},
                                               {}});
                    if (b1.y == b2.y && b1.x == b3.y && b2.x == b3.x)
                        out.push_back(MoveSite{MoveKind::H3Backward, b1.pos,
                                               b2.pos, b3.pos,
                                               {b1.y, b1.x, b2.x},
                                               {}});
                }
            }
        }
    }

    if (ms.shift) {
        for (int k = 1; k <= p.component_count(); ++k)
            out.push_back(MoveSite{MoveKind::Shift, Pos{k, 0}, {}, {}, {},
                                   {}});
    }

    if (ms.permute) {
        std::vector<int> perm(static_cast<std::size_t>(p.component_count()));
        std::iota(perm.begin(), perm.end(), 1);
        while (std::next_permutation(perm.begin(), perm.end()))
            out.push_back(MoveSite{MoveKind::Permute, {}, {}, {}, {}, perm});
    }

    std::sort(out.begin(), out.end());
    return out;
}

GaussPhrase apply_move(const GaussPhrase &p, const MoveSite &s) {
    auto comps = p.components();
    switch (s.kind) {
    case MoveKind::H1Remove: {
        require(in_word_range(p, s.a, 2), "H1 pair out of range");
        const Word &w = p.component(s.a.comp);
        require(w[static_cast<std::size_t>(s.a.offset - 1)] ==
                    w[static_cast<std::size_t>(s.a.offset)],
                "H1 site is not an adjacent equal pair");
        comps[static_cast<std::size_t>(s.a.comp - 1)] =
            erase_offsets(w, {s.a.offset, s.a.offset + 1});
        return GaussPhrase(std::move(comps));
    }
    case MoveKind::H1Insert: {
        require(is_insertion_point(p, s.a), "H1 insertion point out of range");
        require(s.letters.size() == 1, "H1 insert needs one letter");
        require(!p.contains(s.letters[0]), "H1 insert letter already in use");
        Word &w = comps[static_cast<std::size_t>(s.a.comp - 1)];
        w.insert(w.begin() + (s.a.offset - 1), 2, s.letters[0]);
        return GaussPhrase(std::move(comps));
    }
    case MoveKind::H2Remove: {
        require(in_word_range(p, s.a, 2) && in_word_range(p, s.b, 2),
                "H2 block out of range");
        require(s.a < s.b, "H2 blocks not in reading order");
        require(s.a.comp != s.b.comp || s.a.offset + 1 < s.b.offset,
                "H2 blocks overlap");
        const std::string &x = p.letter_at(s.a);
        const std::string &y = p.letter_at(Pos{s.a.comp, s.a.offset + 1});
        require(x != y, "H2 block letters must differ");
        require(p.letter_at(s.b) == y &&
                    p.letter_at(Pos{s.b.comp, s.b.offset + 1}) == x,
                "H2 second block does not mirror the first");
        if (s.a.comp == s.b.comp) {
            comps[static_cast<std::size_t>(s.a.comp - 1)] = erase_offsets(
                p.component(s.a.comp),
                {s.a.offset, s.a.offset + 1, s.b.offset, s.b.offset + 1});
        } else {
            comps[static_cast<std::size_t>(s.a.comp - 1)] = erase_offsets(
                p.component(s.a.comp), {s.a.offset, s.a.offset + 1});
            comps[static_cast<std::size_t>(s.b.comp - 1)] = erase_offsets(
                p.component(s.b.comp), {s.b.offset, s.b.offset + 1});
        }
        return GaussPhrase(std::move(comps));
    }
    case MoveKind::H2Insert: {
        require(is_insertion_point(p, s.a) && is_insertion_point(p, s.b),
                "H2 insertion point out of range");
        require(s.letters.size() == 2 && s.letters[0] != s.letters[1],
                "H2 insert needs two distinct letters");
        require(!p.contains(s.letters[0]) && !p.contains(s.letters[1]),
                "H2 insert letters already in use");
        const std::string &A = s.letters[0];
        const std::string &B = s.letters[1];
        // Offsets refer to the unmodified phrase; when both points name the
        // same gap, the AB block precedes the BA block.
        for (int k = 1; k <= p.component_count(); ++k) {
            bool hasA = s.a.comp == k;
            bool hasB = s.b.comp == k;
            if (!hasA && !hasB)
                continue;
            const Word &w = p.component(k);
            Word nw;
            nw.reserve(w.size() + 4);
            for (int gap = 1; gap <= static_cast<int>(w.size()) + 1; ++gap) {
                if (hasA && s.a.offset == gap) {
                    nw.push_back(A);
                    nw.push_back(B);
                }
                if (hasB && s.b.offset == gap) {
                    nw.push_back(B);
                    nw.push_back(A);
                }
                if (gap <= static_cast<int>(w.size()))
                    nw.push_back(w[static_cast<std::size_t>(gap - 1)]);
            }
            comps[static_cast<std::size_t>(k - 1)] = std::move(nw);
        }
        return GaussPhrase(std::move(comps));
    }
    case MoveKind::H3Forward:
    case MoveKind::H3Backward: {
        require(in_word_range(p, s.a, 2) && in_word_range(p, s.b, 2) &&
                    in_word_range(p, s.c, 2),
                "H3 block out of range");
        require(s.a < s.b && s.b < s.c, "H3 blocks not in reading order");
        auto second = [](Pos pos) { return Pos{pos.comp, pos.offset + 1}; };
        require((s.a.comp != s.b.comp || s.a.offset + 1 < s.b.offset) &&
                    (s.b.comp != s.c.comp || s.b.offset + 1 < s.c.offset) &&
                    (s.a.comp != s.c.comp || s.a.offset + 1 < s.c.offset),
                "H3 blocks overlap");
        require(s.letters.size() == 3, "H3 needs a letter triple");
        const std::string &A = s.letters[0];
        const std::string &B = s.letters[1];
        const std::string &C = s.letters[2];
        require(A != B && A != C && B != C, "H3 letters must be distinct");
        if (s.kind == MoveKind::H3Forward) {
            require(p.letter_at(s.a) == A && p.letter_at(second(s.a)) == B &&
                        p.letter_at(s.b) == A &&
                        p.letter_at(second(s.b)) == C &&
                        p.letter_at(s.c) == B && p.letter_at(second(s.c)) == C,
                    "H3 forward pattern mismatch");
        } else {
            require(p.letter_at(s.a) == B && p.letter_at(second(s.a)) == A &&
                        p.letter_at(s.b) == C &&
                        p.letter_at(second(s.b)) == A &&
                        p.letter_at(s.c) == C && p.letter_at(second(s.c)) == B,
                    "H3 backward pattern mismatch");
        }
        for (Pos pos : {s.a, s.b, s.c}) {
            Word &w = comps[static_cast<std::size_t>(pos.comp - 1)];
            std::swap(w[static_cast<std::size_t>(pos.offset - 1)],
                      w[static_cast<std::size_t>(pos.offset)]);
        }
        return GaussPhrase(std::move(comps));
    }
    case MoveKind::Shift:
        require(s.a.comp >= 1 && s.a.comp <= p.component_count(),
                "shift component out of range");
        return shift(p, s.a.comp);
    case MoveKind::Permute:
        try {
            return permute_components(p, s.perm);
        } catch (const BadPermutationError &e) {
            throw InvalidSiteError(e.what());
        }
    }
    throw InvalidSiteError("unknown move kind");
}

GaussPhrase shift(const GaussPhrase &p, int k) {
    if (k < 1 || k > p.component_count())
        throw BadIndexError("component index " + std::to_string(k) +
                            " out of range");
    auto comps = p.components();
    Word &w = comps[static_cast<std::size_t>(k - 1)];
    if (w.size() >= 2)
        std::rotate(w.begin(), w.begin() + 1, w.end());
    return GaussPhrase(std::move(comps));
}

GaussPhrase permute_components(const GaussPhrase &p,
                               const std::vector<int> &perm) {
    const int n = p.component_count();
    if (static_cast<int>(perm.size()) != n)
        throw BadPermutationError("permutation size does not match component "
                                  "count");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw BadPermutationError("not a permutation of 1..n");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    std::vector<Word> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        comps.push_back(p.component(perm[static_cast<std::size_t>(i - 1)]));
    return GaussPhrase(std::move(comps));
}

} // namespace gp
