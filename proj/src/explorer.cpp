#include "gp/explorer.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace gp {

SearchBounds SearchBounds::defaults_for(const GaussPhrase &p,
                                        const GaussPhrase &q) {
    SearchBounds b;
    b.max_letters = std::max(p.letter_count(), q.letter_count()) + 2;
    return b;
}

SearchBounds SearchBounds::defaults_for(const GaussPhrase &p) {
    SearchBounds b;
    b.max_letters = p.letter_count() + 2;
    return b;
}

MoveSet move_set_for(Relation rel) {
    return rel == Relation::OpenHomotopy ? MoveSet::open_homotopy()
                                         : MoveSet::homotopy();
}

std::string invariant_name(Invariant inv) {
    switch (inv) {
    case Invariant::ComponentCount:
        return "component count";
    case Invariant::LengthVector:
        return "component length vector";
    case Invariant::LinkingMatrix:
        return "linking matrix";
    case Invariant::T:
        return "T";
    case Invariant::So:
        return "S_o";
    case Invariant::S:
        return "S";
    }
    return "?";
}

ReachResult reachable(const GaussPhrase &p, MoveSet ms, SearchBounds b) {
    if (p.letter_count() > b.max_letters)
        throw Error("initial phrase exceeds the letter bound");
    ReachResult result;
    GaussPhrase start = canonical_form(p);
    result.states.insert(start);
    std::deque<GaussPhrase> frontier{start};
    for (int depth = 0; depth < b.max_depth && !frontier.empty(); ++depth) {
        std::deque<GaussPhrase> next;
        for (const GaussPhrase &state : frontier) {
            for (const MoveSite &site :
                 enumerate_sites(state, ms, b.max_letters)) {
                GaussPhrase v = canonical_form(apply_move(state, site));
                if (result.states.count(v))
                    continue;
                if (static_cast<long>(result.states.size()) >= b.max_states) {
                    result.states_truncated = true;
                    return result;
                }
                result.states.insert(v);
                next.push_back(std::move(v));
            }
        }
        frontier = std::move(next);
    }
    return result;
}

std::optional<SearchVerdict> invariant_screen(const GaussPhrase &p,
                                              const GaussPhrase &q,
                                              Relation rel) {
    auto certify = [](Invariant which, std::string detail) {
        SearchVerdict v;
        v.kind = SearchVerdict::Kind::NotEquivalentCertified;
        v.witness = which;
        v.detail = std::move(detail);
        return v;
    };
    if (p.component_count() != q.component_count())
        return certify(Invariant::ComponentCount,
                       "component count differs: " +
                           std::to_string(p.component_count()) + " vs " +
                           std::to_string(q.component_count()));
    Z2Vec lp = component_length_vector(p);
    Z2Vec lq = component_length_vector(q);
    if (lp != lq)
        return certify(Invariant::LengthVector,
                       "component length vector differs: (" + lp.render() +
                           ") vs (" + lq.render() + ")");
    if (linking_matrix(p) != linking_matrix(q))
        return certify(Invariant::LinkingMatrix, "linking matrix differs");
    if (rel == Relation::OpenHomotopy) {
        Z2Vec tp = t_invariant(p);
        Z2Vec tq = t_invariant(q);
        if (tp != tq)
            return certify(Invariant::T, "T differs: (" + tp.render() +
                                             ") vs (" + tq.render() + ")");
        if (so_invariant(p) != so_invariant(q))
            return certify(Invariant::So, "S_o differs");
    }
    if (s_invariant(p) != s_invariant(q))
        return certify(Invariant::S, "S differs");
    return std::nullopt;
}

namespace {

struct Edge {
    GaussPhrase parent;
    MoveSite site;
};

using Visited = std::map<GaussPhrase, std::optional<Edge>>;

std::vector<std::pair<GaussPhrase, MoveSite>> path_to_root(
    const Visited &visited, GaussPhrase state) {
    // Pairs (source state, site applied at source), ordered root -> state.
    std::vector<std::pair<GaussPhrase, MoveSite>> path;
    auto it = visited.find(state);
    while (it->second.has_value()) {
        path.emplace_back(it->second->parent, it->second->site);
        it = visited.find(it->second->parent);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

/// Move sequence from `to` back to `from`, inverting the single edge
/// from -> to realized by `site`. Shift edges invert as len-1 shifts; every
/// other kind has a single inverse site, found by local enumeration.
std::vector<MoveSite> invert_edge(const GaussPhrase &from,
                                  const GaussPhrase &to, const MoveSite &site,
                                  MoveSet ms, int letter_budget) {
    if (site.kind == MoveKind::Shift) {
        int len = to.component_length(site.a.comp);
        return std::vector<MoveSite>(static_cast<std::size_t>(len - 1), site);
    }
    for (const MoveSite &s : enumerate_sites(to, ms, letter_budget)) {
        if (canonical_form(apply_move(to, s)) == from)
            return {s};
    }
    throw Error("internal: no inverse site found for " + site.render());
}

} // namespace

GaussPhrase replay_trace(const GaussPhrase &p,
                         const std::vector<MoveSite> &trace) {
    GaussPhrase state = canonical_form(p);
    for (const MoveSite &site : trace)
        state = canonical_form(apply_move(state, site));
    return state;
}

SearchVerdict decide_equivalence(const GaussPhrase &p, const GaussPhrase &q,
                                 Relation rel, SearchBounds b) {
    if (auto certificate = invariant_screen(p, q, rel))
        return *certificate;

    const MoveSet ms = move_set_for(rel);
    GaussPhrase cp = canonical_form(p);
    GaussPhrase cq = canonical_form(q);

    SearchVerdict verdict;
    if (cp == cq) {
        verdict.kind = SearchVerdict::Kind::Equivalent;
        verdict.detail = "isomorphic";
        return verdict;
    }

    Visited visited_p{{cp, std::nullopt}};
    Visited visited_q{{cq, std::nullopt}};
    std::deque<GaussPhrase> frontier_p{cp};
    std::deque<GaussPhrase> frontier_q{cq};
    int depth_p = 0;
    int depth_q = 0;
    long states = 2;
    std::optional<GaussPhrase> meet;

    while (!meet && depth_p + depth_q < b.max_depth &&
           !(frontier_p.empty() && frontier_q.empty())) {
        bool expand_p;
        if (frontier_p.empty())
            expand_p = false;
        else if (frontier_q.empty())
            expand_p = true;
        else if (depth_p != depth_q)
            expand_p = depth_p < depth_q;
        else
            expand_p = frontier_p.size() <= frontier_q.size();

        auto &frontier = expand_p ? frontier_p : frontier_q;
        auto &visited = expand_p ? visited_p : visited_q;
        auto &other = expand_p ? visited_q : visited_p;
        (expand_p ? depth_p : depth_q) += 1;

        std::deque<GaussPhrase> next;
        for (const GaussPhrase &state : frontier) {
            for (const MoveSite &site :
                 enumerate_sites(state, ms, b.max_letters)) {
                GaussPhrase v = canonical_form(apply_move(state, site));
                if (visited.count(v))
                    continue;
                if (states >= b.max_states)
                    break;
                visited.emplace(v, Edge{state, site});
                ++states;
                if (other.count(v)) {
                    meet = v;
                    break;
                }
                next.push_back(std::move(v));
            }
            if (meet || states >= b.max_states)
                break;
        }
        if (states >= b.max_states && !meet)
            break;
        frontier = std::move(next);
    }

    if (!meet) {
        verdict.kind = SearchVerdict::Kind::Unknown;
        verdict.detail = "bounds exhausted";
        return verdict;
    }

    std::vector<MoveSite> trace;
    for (auto &[state, site] : path_to_root(visited_p, *meet)) {
        (void)state;
        trace.push_back(site);
    }
    auto path_q = path_to_root(visited_q, *meet);
    for (auto it = path_q.rbegin(); it != path_q.rend(); ++it) {
        GaussPhrase child = canonical_form(apply_move(it->first, it->second));
        auto inverse =
            invert_edge(it->first, child, it->second, ms, b.max_letters);
        trace.insert(trace.end(), inverse.begin(), inverse.end());
    }

    if (!is_isomorphic(replay_trace(cp, trace), cq))
        throw Error("internal: trace replay mismatch");

    verdict.kind = SearchVerdict::Kind::Equivalent;
    verdict.trace = std::move(trace);
    verdict.detail = std::to_string(verdict.trace.size()) + " moves";
    return verdict;
}

namespace {

void enumerate_sequences(int letters, int pos, std::vector<int> &seq,
                         std::vector<int> &count, int next_new,
                         const std::function<void(const std::vector<int> &)>
                             &emit) {
    if (pos == static_cast<int>(seq.size())) {
        emit(seq);
        return;
    }
    int limit = std::min(next_new, letters - 1);
    for (int id = 0; id <= limit; ++id) {
        bool opens = id == next_new;
        if (!opens && count[static_cast<std::size_t>(id)] != 1)
            continue;
        count[static_cast<std::size_t>(id)] += 1;
        seq[static_cast<std::size_t>(pos)] = id;
        enumerate_sequences(letters, pos + 1, seq, count,
                            next_new + (opens ? 1 : 0), emit);
        count[static_cast<std::size_t>(id)] -= 1;
    }
}

void enumerate_compositions(int total, int parts, std::vector<int> &acc,
                            const std::function<void(const std::vector<int> &)>
                                &emit) {
    if (parts == 1) {
        acc.push_back(total);
        emit(acc);
        acc.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        acc.push_back(first);
        enumerate_compositions(total - first, parts - 1, acc, emit);
        acc.pop_back();
    }
}

GaussPhrase phrase_from_sequence(const std::vector<int> &seq,
                                 const std::vector<int> &composition) {
    std::vector<Word> comps;
    comps.reserve(composition.size());
    std::size_t at = 0;
    for (int len : composition) {
        Word w;
        w.reserve(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i)
            w.push_back(canonical_letter(seq[at++]));
        comps.push_back(std::move(w));
    }
    return GaussPhrase(std::move(comps));
}

} // namespace

std::vector<GaussPhrase> enumerate_phrases(int letters, int components) {
    if (letters < 0)
        throw BadIndexError("letter count must be non-negative");
    if (components < 1)
        throw BadIndexError("component count must be at least 1");
    std::vector<GaussPhrase> out;
    std::vector<int> seq(static_cast<std::size_t>(2 * letters));
    std::vector<int> count(static_cast<std::size_t>(letters), 0);
    std::vector<int> acc;
    enumerate_sequences(
        letters, 0, seq, count, 0, [&](const std::vector<int> &s) {
            enumerate_compositions(
                2 * letters, components, acc,
                [&](const std::vector<int> &composition) {
                    out.push_back(phrase_from_sequence(s, composition));
                });
        });
    return out;
}

std::uint64_t rand_below(std::mt19937_64 &rng, std::uint64_t bound) {
    if (bound == 0)
        throw Error("rand_below: zero bound");
    std::uint64_t threshold = -bound % bound; // 2^64 mod bound
    while (true) {
        std::uint64_t r = rng();
        if (r >= threshold)
            return r % bound;
    }
}

GaussPhrase random_canonical_phrase(std::mt19937_64 &rng, int letters,
                                    int components) {
    // A uniformly random labeled Gauss sequence canonicalizes to a uniform
    // canonical sequence (every isomorphism class has exactly letters!
    // labelings), and splits are uniform over compositions; together this
    // is uniform over enumerate_phrases(letters, components).
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(2 * letters));
    for (int id = 0; id < letters; ++id) {
        seq.push_back(id);
        seq.push_back(id);
    }
    for (std::size_t i = seq.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rand_below(rng, i));
        std::swap(seq[i - 1], seq[j]);
    }
    // relabel by first occurrence
    std::map<int, int> rename;
    for (int &id : seq) {
        auto [it, fresh] = rename.try_emplace(id, 0);
        if (fresh)
            it->second = static_cast<int>(rename.size()) - 1;
        id = it->second;
    }
    // uniform composition of 2*letters into `components` parts via a
    // uniform (components-1)-subset of {1..2*letters+components-1}
    std::vector<int> composition;
    if (components == 1) {
        composition.push_back(2 * letters);
    } else {
        int slots = 2 * letters + components - 1;
        std::vector<int> all(static_cast<std::size_t>(slots));
        std::iota(all.begin(), all.end(), 1);
        for (std::size_t i = all.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(rand_below(rng, i));
            std::swap(all[i - 1], all[j]);
        }
        std::vector<int> bars(all.begin(),
                              all.begin() + (components - 1));
        std::sort(bars.begin(), bars.end());
        int prev = 0;
        for (int bar : bars) {
            composition.push_back(bar - prev - 1);
            prev = bar;
        }
        composition.push_back(slots - prev);
    }
    return phrase_from_sequence(seq, composition);
}

long FuzzReport::total_violations() const {
    long total = 0;
    for (const auto &[name, count] : violations)
        total += count;
    return total;
}

std::string FuzzReport::render() const {
    std::ostringstream out;
    out << "trials: " << trials << "\n";
    out << "open-moves: " << open_moves << "\n";
    out << "shift-moves: " << shift_moves << "\n";
    out << "violations: " << total_violations() << "\n";
    for (const auto &[name, count] : violations)
        out << "violation " << name << ": " << count << "\n";
    out << "so-shift-changes: " << so_shift_changes << "\n";
    return out.str();
}

FuzzReport fuzz_invariance(std::uint64_t seed, long trials, FuzzCaps caps) {
    std::mt19937_64 rng(seed);
    FuzzReport report;
    const MoveSet ms = MoveSet::homotopy();
    for (long t = 0; t < trials; ++t) {
        int letters = static_cast<int>(
            rand_below(rng, static_cast<std::uint64_t>(caps.max_letters) + 1));
        int components = 1 + static_cast<int>(rand_below(
                                 rng,
                                 static_cast<std::uint64_t>(
                                     caps.max_components)));
        GaussPhrase p = random_canonical_phrase(rng, letters, components);
        auto sites = enumerate_sites(p, ms, caps.max_letters + 2);
        const MoveSite &site =
            sites[static_cast<std::size_t>(rand_below(rng, sites.size()))];
        GaussPhrase q = apply_move(p, site);
        ++report.trials;

        auto record = [&](const char *name, bool same) {
            if (!same)
                report.violations[name] += 1;
        };
        record("component length vector",
               component_length_vector(p) == component_length_vector(q));
        record("linking matrix", linking_matrix(p) == linking_matrix(q));
        record("S", s_invariant(p) == s_invariant(q));
        if (site.kind == MoveKind::Shift) {
            ++report.shift_moves;
            if (so_invariant(p) != so_invariant(q))
                ++report.so_shift_changes;
        } else {
            ++report.open_moves;
            record("T", t_invariant(p) == t_invariant(q));
            record("S_o", so_invariant(p) == so_invariant(q));
        }
    }
    return report;
}

namespace {

std::uint64_t fnv1a64(const std::string &data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char digits[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

struct InvariantKey {
    Z2Vec lengths;
    Z2Mat linking;
    Z2Vec t;
    std::vector<Z2Mat> so;
    std::vector<Z2Mat> s;
    auto operator<=>(const InvariantKey &) const = default;

    std::string render() const {
        return "lengths:" + lengths.render() + "\nlinking:\n" +
               linking.render() + "\nT:" + t.render() + "\nSo:\n" +
               render_matrix_tuple(so) + "\nS:\n" + render_matrix_tuple(s) +
               "\n";
    }
};

InvariantKey invariant_key(const GaussPhrase &p) {
    return InvariantKey{component_length_vector(p), linking_matrix(p),
                        t_invariant(p), encode_so(so_invariant(p)),
                        encode_s(s_invariant(p))};
}

} // namespace

std::vector<CensusClass> tabulate(int max_letters, int components) {
    std::vector<CensusClass> classes;
    std::map<InvariantKey, std::size_t> index;
    for (int letters = 0; letters <= max_letters; ++letters) {
        for (const GaussPhrase &p : enumerate_phrases(letters, components)) {
            InvariantKey key = invariant_key(p);
            auto [it, fresh] = index.try_emplace(key, classes.size());
            if (fresh) {
                classes.push_back(CensusClass{
                    static_cast<long>(classes.size()) + 1, 0, p,
                    hex64(fnv1a64(key.render()))});
            }
            classes[it->second].count += 1;
        }
    }
    return classes;
}

std::string render_census(const std::vector<CensusClass> &classes) {
    std::string out;
    for (const CensusClass &c : classes) {
        out += std::to_string(c.id);
        out += '\t';
        out += std::to_string(c.count);
        out += '\t';
        out += to_string(c.representative);
        out += '\t';
        out += c.digest;
        out += '\n';
    }
    return out;
}

} // namespace gp
