// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gp/cli.hpp"
#include "gp/explorer.hpp"
#include "gp/invariants.hpp"
#include "gp/moves.hpp"
#include "gp/phrase.hpp"
#include "gp/realize.hpp"
#include "test_util.hpp"

using namespace gp;
using gptest::mat;
using gptest::vec;

namespace {

struct Checker {
    long failures = 0;
    std::string detail;

    void expect(bool ok, const std::string &what) {
        if (!ok) {
            ++failures;
            if (detail.empty())
                detail = what;
        }
    }
};

double run_cli_seconds(const std::vector<std::string> &args,
                       std::string &out) {
    std::ostringstream o, e;
    auto start = std::chrono::steady_clock::now();
    int code = cli::run(args, o, e);
    auto stop = std::chrono::steady_clock::now();
    out = o.str();
    if (code != 0)
        out = "";
    return std::chrono::duration<double>(stop - start).count();
}

bool contains(const std::string &haystack, const std::string &needle) {
    return haystack.find(needle) != std::string::npos;
}

void criterion_1(Checker &c) {
    std::string out;
    double secs = run_cli_seconds({"inv", "ABAC|DBEDFEG|CFG"}, out);
    c.expect(contains(out, "A: 0 1 0\n"), "l(A) mismatch");
    c.expect(contains(out, "D: 1 1 0\n"), "l(D) mismatch");
    c.expect(contains(out, "E: 0 1 1\n"), "l(E) mismatch");
    c.expect(secs < 1.0, "inv runtime >= 1 s");

    secs = run_cli_seconds({"inv", "ACBADBEF|CE|DF"}, out);
    c.expect(contains(out, "T: 0 0 0\n"), "T mismatch");
    c.expect(contains(out, "So:\n1 0 1\n1 1 0\n--\n0 0 0\n--\n0 0 0\n"),
             "S_o matrices mismatch");
    c.expect(secs < 1.0, "inv runtime >= 1 s");

    secs = run_cli_seconds({"inv", "ADBAEBCFCG|JLDHIHJK|EI|FGKL"}, out);
    c.expect(contains(out, "S:\n0 1 1 0\n0 0 0 1\n--\n1 0 1 0\n0 0 0 1\n"
                           "0 0 1 0\n--\n1 1 0 0\n--\n0 0 0 0\n"),
             "S matrices mismatch");
    c.expect(secs < 1.0, "inv runtime >= 1 s");
}

void criterion_2(Checker &c) {
    c.expect(linking_matrix(parse_phrase("AB|AC|BC")) ==
                 mat({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}),
             "linking matrix of AB|AC|BC");
    c.expect(linking_matrix(parse_phrase("-|-|-")) ==
                 mat({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
             "linking matrix of -|-|-");
    Z2Mat L = mat({{0, 0, 1, 1}, {0, 0, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 0}});
    GaussPhrase realized = realize_linking_matrix(L);
    c.expect(is_isomorphic(realized,
                           parse_phrase("A13.A14|A23|A13.A23.A34|A14.A34")),
             "realized phrase not isomorphic to the expected one");
    c.expect(linking_matrix(realized) == L, "realized linking matrix");
}

void criterion_3(Checker &c) {
    auto start = std::chrono::steady_clock::now();
    GaussPhrase p = parse_phrase("ABA|B");
    GaussPhrase q = parse_phrase("A|A");

    SearchVerdict closed = decide_equivalence(p, q, Relation::Homotopy,
                                              SearchBounds{2, 3, 1000000});
    c.expect(closed.kind == SearchVerdict::Kind::Equivalent,
             "homotopy verdict not Equivalent");
    c.expect(closed.trace.size() == 2, "trace is not two moves");
    c.expect(is_isomorphic(replay_trace(p, closed.trace), q),
             "trace does not replay to q");

    SearchVerdict open = decide_equivalence(p, q, Relation::OpenHomotopy,
                                            SearchBounds{2, 3, 1000000});
    c.expect(open.kind == SearchVerdict::Kind::NotEquivalentCertified &&
                 open.witness == Invariant::T,
             "open verdict not certified by T");

    GaussPhrase sp = parse_phrase("ABAC|B|C");
    GaussPhrase sq = parse_phrase("BACA|B|C");
    SearchVerdict shifted = decide_equivalence(
        sp, sq, Relation::OpenHomotopy, SearchBounds{5, 4, 1000000});
    c.expect(shifted.kind == SearchVerdict::Kind::NotEquivalentCertified &&
                 shifted.witness == Invariant::So,
             "shift pair not certified by S_o");
    c.expect(s_invariant(sp) == s_invariant(sq),
             "shift pair S values should be equal");

    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    c.expect(secs < 1.0, "equivalence decisions took >= 1 s");
}

void criterion_4(Checker &c) {
    auto start = std::chrono::steady_clock::now();
    FuzzReport report = fuzz_invariance(1, 10000, FuzzCaps{8, 4});
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    c.expect(report.trials == 10000, "trial count");
    c.expect(report.total_violations() == 0,
             "invariance violations: " + report.render());
    c.expect(report.so_shift_changes >= 1, "no S_o change under shift seen");
    c.expect(secs < 60.0, "fuzz runtime >= 60 s");
}

void criterion_5(Checker &c) {
    auto start = std::chrono::steady_clock::now();
    long checked = 0;
    for (int letters = 0; letters <= 5; ++letters) {
        for (const GaussPhrase &w : enumerate_phrases(letters, 1)) {
            if (odd_parity_letters(w).size() % 2 != 0) {
                c.expect(false, "odd parity count odd for " + to_string(w));
                return;
            }
            ++checked;
        }
    }
    c.expect(checked == 1 + 1 + 3 + 15 + 105 + 945,
             "unexpected number of Gauss words");
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    c.expect(secs < 60.0, "parity sweep runtime >= 60 s");
}

void criterion_6(Checker &c) {
    for (int comps = 1; comps <= 3; ++comps) {
        for (const GaussPhrase &p : gptest::corpus_upto(4, comps)) {
            for (int k = 1; k <= p.component_count(); ++k) {
                int odd_vectors = 0;
                for (const Z2Vec &v : b_set(p, k))
                    odd_vectors += v.bit(k);
                if (odd_vectors % 2 != 0) {
                    c.expect(false, "odd k-odd vector count in " +
                                        to_string(p));
                    return;
                }
                int odd_orbits = 0;
                for (const Orbit &o : o_set(p, k))
                    odd_orbits += o.representative().bit(k);
                if (odd_orbits % 2 != 0) {
                    c.expect(false,
                             "odd k-odd orbit count in " + to_string(p));
                    return;
                }
            }
        }
    }
}

void criterion_7(Checker &c) {
    auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 3; ++n) {
        for (const SoTarget &t : gptest::all_admissible_so_targets(n, 2)) {
            if (so_invariant(realize_so(t)).sets != t.sets) {
                c.expect(false, "S_o round-trip failed (exhaustive)");
                return;
            }
        }
    }

    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rand_below(rng, 4));
        SoTarget t = gptest::random_so_target(rng, n);
        Z2Mat L = gptest::random_linking(rng, n);
        GaussPhrase p = realize_so_with_linking(t, L);
        if (so_invariant(p).sets != t.sets || linking_matrix(p) != L) {
            c.expect(false, "joint round-trip failed");
            return;
        }
    }

    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rand_below(rng, 4));
        STarget t = gptest::random_s_target(rng, n);
        SValue got = s_invariant(realize_s(t));
        bool ok = got.n() == n;
        for (int k = 1; ok && k <= n; ++k)
            ok = got.entries[static_cast<std::size_t>(k - 1)].first ==
                     t.L.row(k) &&
                 got.entries[static_cast<std::size_t>(k - 1)].second ==
                     t.orbit_sets[static_cast<std::size_t>(k - 1)];
        if (!ok) {
            c.expect(false, "S round-trip failed");
            return;
        }
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    c.expect(secs < 120.0, "realization round-trips took >= 120 s");
}

void criterion_8(Checker &c) {
    for (int comps = 1; comps <= 3; ++comps) {
        for (const GaussPhrase &p : gptest::corpus_upto(4, comps)) {
            SoValue so = so_invariant(p);
            if (t_from_so(so) != t_invariant(p)) {
                c.expect(false, "T derivation mismatch for " + to_string(p));
                return;
            }
            Z2Mat L = linking_matrix(p);
            std::vector<std::uint8_t> sums;
            for (int i = 1; i <= L.rows(); ++i) {
                int s = 0;
                for (int j = 1; j <= L.cols(); ++j)
                    s ^= L.row(i).bit(j);
                sums.push_back(static_cast<std::uint8_t>(s));
            }
            if (component_length_vector(p) != Z2Vec(sums)) {
                c.expect(false, "row-sum derivation mismatch for " +
                                    to_string(p));
                return;
            }
            for (int k = 1; k <= p.component_count(); ++k) {
                if (o_from_b(so.sets[static_cast<std::size_t>(k - 1)],
                             L.row(k)) != o_set(p, k)) {
                    c.expect(false, "O_k derivation mismatch for " +
                                        to_string(p));
                    return;
                }
            }
        }
    }
}

void check_encodings(Checker &c, const GaussPhrase &p) {
    SoValue so = so_invariant(p);
    auto so_mats = encode_so(so);
    if (decode_so(so_mats) != so) {
        c.expect(false, "S_o encoding round-trip for " + to_string(p));
        return;
    }
    for (std::size_t k = 0; k < so_mats.size(); ++k) {
        const Z2Mat &m = so_mats[k];
        if (so.sets[k].empty()) {
            c.expect(m.rows() == 1 && m.row(1).is_zero(),
                     "empty set must encode as the zero row");
        } else {
            for (int i = 2; i <= m.rows(); ++i)
                c.expect(m.row(i - 1) < m.row(i),
                         "S_o rows not strictly ascending");
        }
    }
    SValue s = s_invariant(p);
    auto s_mats = encode_s(s);
    if (decode_s(s_mats) != s) {
        c.expect(false, "S encoding round-trip for " + to_string(p));
        return;
    }
    for (const Z2Mat &m : s_mats)
        for (int i = 3; i <= m.rows(); ++i)
            c.expect(m.row(i - 1) < m.row(i), "S rows not strictly ascending");
}

void criterion_9(Checker &c) {
    for (int comps = 1; comps <= 3 && c.failures == 0; ++comps)
        for (const GaussPhrase &p : gptest::corpus_upto(4, comps)) {
            check_encodings(c, p);
            if (c.failures)
                return;
        }
    for (const std::string &text : gptest::example_phrases()) {
        check_encodings(c, parse_phrase(text));
        if (c.failures)
            return;
    }
    for (int n = 1; n <= 3; ++n)
        for (const SoTarget &t : gptest::all_admissible_so_targets(n, 2)) {
            check_encodings(c, realize_so(t));
            if (c.failures)
                return;
        }
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rand_below(rng, 4));
        check_encodings(c, realize_s(gptest::random_s_target(rng, n)));
        if (c.failures)
            return;
    }
}

void criterion_10(Checker &c) {
    std::vector<GaussPhrase> corpus;
    for (int comps = 1; comps <= 2; ++comps) {
        auto batch = gptest::corpus_upto(2, comps);
        corpus.insert(corpus.end(), batch.begin(), batch.end());
    }
    for (Relation rel : {Relation::OpenHomotopy, Relation::Homotopy}) {
        for (const GaussPhrase &p : corpus) {
            ReachResult r = reachable(p, move_set_for(rel),
                                      SearchBounds{4, 4, 500000});
            for (const GaussPhrase &q : corpus) {
                if (!r.states.count(canonical_form(q)))
                    continue;
                if (invariant_screen(p, q, rel).has_value()) {
                    c.expect(false, "certificate contradicts reachability: " +
                                        to_string(p) + " ~ " + to_string(q));
                    return;
                }
            }
        }
    }
}

} // namespace

int main() {
    struct Criterion {
        int number;
        std::string name;
        std::function<void(Checker &)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "golden invariant examples, exact", criterion_1},
        {2, "linking matrices and their realization, exact", criterion_2},
        {3, "homotopy vs open homotopy separation", criterion_3},
        {4, "invariance fuzz, 10^4 seeded moves", criterion_4},
        {5, "odd-parity lemma, exhaustive <= 5 letters", criterion_5},
        {6, "parity necessity, exhaustive <= 4 letters", criterion_6},
        {7, "realization round-trips", criterion_7},
        {8, "cross-derivation identities, exhaustive <= 4 letters",
         criterion_8},
        {9, "encoding canonicity", criterion_9},
        {10, "search oracle consistency", criterion_10},
    };

    int failed = 0;
    for (const Criterion &criterion : criteria) {
        Checker c;
        auto start = std::chrono::steady_clock::now();
        criterion.run(c);
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        std::ostringstream line;
        line << "criterion " << criterion.number << ": " << criterion.name
             << " ... " << (c.failures == 0 ? "PASS" : "FAIL") << " ("
             << std::fixed;
        line.precision(2);
        line << secs << "s)";
        std::cout << line.str() << "\n";
        if (c.failures != 0) {
            std::cout << "    " << c.detail << "\n";
            ++failed;
        }
    }
    return failed == 0 ? 0 : 1;
}
