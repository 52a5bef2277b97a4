#include "gp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gp/explorer.hpp"
#include "gp/invariants.hpp"
#include "gp/moves.hpp"
#include "gp/phrase.hpp"
#include "gp/realize.hpp"

namespace gp::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> single_letters_in_order(const GaussPhrase &p) {
    std::vector<std::string> out;
    for (int k = 1; k <= p.component_count(); ++k) {
        for (const std::string &letter : p.component(k)) {
            auto [a, b] = p.occurrences(letter);
            if (a.comp == k && b.comp == k &&
                std::find(out.begin(), out.end(), letter) == out.end())
                out.push_back(letter);
        }
    }
    return out;
}

ordered_json vec_json(const Z2Vec &v) {
    ordered_json arr = ordered_json::array();
    for (int i = 1; i <= v.dim(); ++i)
        arr.push_back(v.bit(i));
    return arr;
}

ordered_json mat_json(const Z2Mat &m) {
    ordered_json arr = ordered_json::array();
    for (int i = 1; i <= m.rows(); ++i)
        arr.push_back(vec_json(m.row(i)));
    return arr;
}

ordered_json tuple_json(const std::vector<Z2Mat> &mats) {
    ordered_json arr = ordered_json::array();
    for (const Z2Mat &m : mats)
        arr.push_back(mat_json(m));
    return arr;
}

void print_inv_text(const GaussPhrase &p, std::ostream &out) {
    out << "phrase: " << to_string(p) << "\n";
    out << "n: " << p.component_count() << "\n";
    out << "lengths: " << component_length_vector(p).render() << "\n";
    out << "linking:\n" << linking_matrix(p).render() << "\n";
    out << "linking-vectors:\n";
    for (const std::string &letter : single_letters_in_order(p))
        out << letter << ": " << linking_vector_letter(p, letter).render()
            << "\n";
    out << "T: " << t_invariant(p).render() << "\n";
    out << "So:\n" << render_matrix_tuple(encode_so(so_invariant(p))) << "\n";
    out << "S:\n" << render_matrix_tuple(encode_s(s_invariant(p))) << "\n";
}

void print_inv_json(const GaussPhrase &p, std::ostream &out) {
    ordered_json j;
    j["phrase"] = to_string(p);
    j["n"] = p.component_count();
    j["lengths"] = vec_json(component_length_vector(p));
    j["linking_matrix"] = mat_json(linking_matrix(p));
    ordered_json vectors = ordered_json::object();
    for (const std::string &letter : single_letters_in_order(p))
        vectors[letter] = vec_json(linking_vector_letter(p, letter));
    j["linking_vectors"] = std::move(vectors);
    j["T"] = vec_json(t_invariant(p));
    j["So"] = tuple_json(encode_so(so_invariant(p)));
    j["S"] = tuple_json(encode_s(s_invariant(p)));
    out << j.dump(2) << "\n";
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CLI::ValidationError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int report_verdict(const SearchVerdict &verdict, bool trace_only,
                   std::ostream &out) {
    switch (verdict.kind) {
    case SearchVerdict::Kind::Equivalent:
        if (trace_only && verdict.trace.empty())
            out << "isomorphic\n";
        else if (!trace_only)
            out << "equivalent: " << verdict.detail << "\n";
        for (const MoveSite &site : verdict.trace)
            out << site.render() << "\n";
        return 0;
    case SearchVerdict::Kind::NotEquivalentCertified:
        out << "not equivalent: " << verdict.detail << "\n";
        return 1;
    case SearchVerdict::Kind::Unknown:
        out << "unknown: " << verdict.detail << "\n";
        return 1;
    }
    return 1;
}

} // namespace

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Gauss phrase homotopy toolkit"};
    app.name("gp");
    app.require_subcommand(1);

    std::string phrase_text;
    bool json_output = false;
    auto *validate_cmd =
        app.add_subcommand("validate", "Check that a phrase is a Gauss "
                                       "phrase");
    validate_cmd->add_option("phrase", phrase_text, "phrase text")
        ->required();

    auto *inv_cmd =
        app.add_subcommand("inv", "Print the invariants of a phrase");
    inv_cmd->add_option("phrase", phrase_text, "phrase text")->required();
    inv_cmd->add_flag("--json", json_output, "structured output");

    std::string left_text, right_text, relation_name;
    int max_letters = -1;
    int max_depth = 8;
    long max_states = 1000000;
    auto add_compare_options = [&](CLI::App *cmd) {
        cmd->add_option("p", left_text, "first phrase")->required();
        cmd->add_option("q", right_text, "second phrase")->required();
        cmd->add_option("--relation", relation_name, "open or homotopy")
            ->required()
            ->check(CLI::IsMember({"open", "homotopy"}));
        cmd->add_option("--max-letters", max_letters,
                        "letter budget (default: larger alphabet + 2)");
        cmd->add_option("--max-depth", max_depth, "total move budget");
        cmd->add_option("--max-states", max_states, "visited state budget");
    };
    auto *compare_cmd = app.add_subcommand(
        "compare", "Decide equivalence of two phrases");
    add_compare_options(compare_cmd);
    auto *search_cmd = app.add_subcommand(
        "search", "Search for a move sequence between two phrases");
    add_compare_options(search_cmd);

    std::string linking_file, so_file, s_file;
    auto *realize_cmd = app.add_subcommand(
        "realize", "Construct a phrase attaining an invariant target");
    realize_cmd->add_option("--linking", linking_file,
                            "linking matrix file");
    realize_cmd->add_option("--so-target", so_file, "S_o target file");
    realize_cmd->add_option("--s-target", s_file, "S target file");

    int tab_letters = 0;
    int tab_components = 1;
    auto *tabulate_cmd = app.add_subcommand(
        "tabulate", "Census of phrases grouped by invariant values");
    tabulate_cmd->add_option("--letters", tab_letters, "max alphabet size")
        ->required();
    tabulate_cmd->add_option("--components", tab_components,
                             "component count")
        ->required();

    std::uint64_t fuzz_seed = 1;
    long fuzz_trials = 10000;
    FuzzCaps caps;
    auto *fuzz_cmd = app.add_subcommand(
        "fuzz", "Random-move invariance check");
    fuzz_cmd->add_option("--seed", fuzz_seed, "random seed");
    fuzz_cmd->add_option("--trials", fuzz_trials, "number of moves");
    fuzz_cmd->add_option("--max-letters", caps.max_letters,
                         "phrase size cap");
    fuzz_cmd->add_option("--max-components", caps.max_components,
                         "component cap");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*validate_cmd) {
            GaussPhrase p = parse_phrase(phrase_text);
            out << "valid\n";
            out << "n: " << p.component_count() << "\n";
            out << "letters: " << p.letter_count() << "\n";
            out << "canonical: " << to_string(canonical_form(p)) << "\n";
            return 0;
        }
        if (*inv_cmd) {
            GaussPhrase p = parse_phrase(phrase_text);
            if (json_output)
                print_inv_json(p, out);
            else
                print_inv_text(p, out);
            return 0;
        }
        if (*compare_cmd || *search_cmd) {
            GaussPhrase p = parse_phrase(left_text);
            GaussPhrase q = parse_phrase(right_text);
            Relation rel = relation_name == "open" ? Relation::OpenHomotopy
                                                   : Relation::Homotopy;
            SearchBounds bounds = SearchBounds::defaults_for(p, q);
            if (max_letters >= 0)
                bounds.max_letters = max_letters;
            bounds.max_depth = max_depth;
            bounds.max_states = max_states;
            SearchVerdict verdict = decide_equivalence(p, q, rel, bounds);
            return report_verdict(verdict, search_cmd->parsed(), out);
        }
        if (*realize_cmd) {
            if (!so_file.empty() && !s_file.empty())
                throw CLI::ValidationError(
                    "--so-target and --s-target are mutually exclusive");
            if (!so_file.empty()) {
                SoTarget t = parse_so_target(read_file(so_file));
                GaussPhrase p =
                    linking_file.empty()
                        ? realize_so(t)
                        : realize_so_with_linking(
                              t, parse_matrix(read_file(linking_file)));
                out << to_string(p) << "\n";
            } else if (!s_file.empty()) {
                if (!linking_file.empty())
                    throw CLI::ValidationError(
                        "--s-target already carries a linking matrix");
                GaussPhrase p = realize_s(parse_s_target(read_file(s_file)));
                out << to_string(p) << "\n";
            } else if (!linking_file.empty()) {
                GaussPhrase p =
                    realize_linking_matrix(parse_matrix(read_file(
                        linking_file)));
                out << to_string(p) << "\n";
            } else {
                throw CLI::ValidationError(
                    "one of --linking, --so-target or --s-target is "
                    "required");
            }
            return 0;
        }
        if (*tabulate_cmd) {
            out << render_census(tabulate(tab_letters, tab_components));
            return 0;
        }
        if (*fuzz_cmd) {
            FuzzReport report = fuzz_invariance(fuzz_seed, fuzz_trials, caps);
            out << report.render();
            return report.total_violations() == 0 ? 0 : 1;
        }
    } catch (const CLI::ValidationError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InadmissibleError &e) {
        err << "inadmissible: " << e.what() << "\n";
        return 1;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace gp::cli
