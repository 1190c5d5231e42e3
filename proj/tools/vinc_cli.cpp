// Command-line front end: pattern avoidance queries, enumeration, the
// constructive generator, the occurrence witness, and recurrence checks.
//
// Exit codes: 0 success/verified, 1 verification mismatch, 2 usage or
// operational error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vinc/construct.hpp"
#include "vinc/enumerate.hpp"
#include "vinc/match.hpp"
#include "vinc/sequence.hpp"
#include "vinc/witness.hpp"

using json = nlohmann::json;
using namespace vinc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

struct Options {
    std::string set_spec = "B";
    std::string perm_text;
    std::string pattern_text;
    std::string format = "text";
    std::string file;
    std::string offset_mode = "paper";
    int n = 0;
    int max_n = 8;
    int terms = 20;
    int jobs = 1;
    int cutoff = kDefaultCutoff;
};

bool json_mode(const Options& opt) { return opt.format == "json"; }

// "A", "B", or explicit comma-separated pattern strings.
PatternSet resolve_set(const std::string& spec) {
    if (spec == "A" || spec == "B") return builtin_set(spec);
    PatternSet set;
    set.name = spec;
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) set.patterns.push_back(parse_pattern(tok));
    if (set.patterns.empty()) throw std::invalid_argument("empty pattern set");
    return set;
}

int effective_cutoff(const Options& opt) {
    if (const char* env = std::getenv("VINC_CUTOFF")) return std::atoi(env);
    return opt.cutoff;
}

json occurrence_json(const Occurrence& occ) { return json(occ.positions); }

int cmd_avoids(const Options& opt) {
    const auto host = parse_permutation(opt.perm_text);
    const auto set = resolve_set(opt.set_spec);
    const bool ok = avoids_all(host, set);
    if (json_mode(opt))
        std::cout << json{{"perm", render_permutation(host)},
                          {"set", set.name},
                          {"avoids", ok}}
                  << "\n";
    else
        std::cout << (ok ? "avoids" : "contains") << "\n";
    return kExitOk;
}

int cmd_occurrences(const Options& opt) {
    const auto host = parse_permutation(opt.perm_text);
    const auto pattern = parse_pattern(opt.pattern_text);
    const auto occs = find_occurrences(host, pattern);
    if (json_mode(opt)) {
        json arr = json::array();
        for (const auto& occ : occs) arr.push_back(occurrence_json(occ));
        std::cout << json{{"perm", render_permutation(host)},
                          {"pattern", render_pattern(pattern)},
                          {"occurrences", arr}}
                  << "\n";
    } else {
        for (const auto& occ : occs) {
            for (std::size_t i = 0; i < occ.positions.size(); ++i)
                std::cout << (i ? "," : "") << occ.positions[i];
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_count(const Options& opt) {
    const auto set = resolve_set(opt.set_spec);
    const auto count = count_avoiders(opt.n, set, effective_cutoff(opt), opt.jobs);
    if (json_mode(opt))
        std::cout << json{{"set", set.name}, {"n", opt.n}, {"count", count}} << "\n";
    else
        std::cout << count << "\n";
    return kExitOk;
}

void emit_level(const AvoiderLevel& level, const Options& opt) {
    if (json_mode(opt)) {
        for (const auto& p : level.members)
            std::cout << json{{"n", level.n},
                              {"set", level.set_name},
                              {"perm", p.values()}}
                      << "\n";
    } else {
        for (const auto& p : level.members)
            std::cout << render_permutation(p) << "\n";
    }
}

int cmd_enumerate(const Options& opt) {
    const auto set = resolve_set(opt.set_spec);
    emit_level(enumerate_avoiders(opt.n, set, effective_cutoff(opt), opt.jobs), opt);
    return kExitOk;
}

int cmd_generate(const Options& opt) {
    if (opt.set_spec != "B")
        throw std::invalid_argument("the constructive generator is specific to set B");
    if (opt.n < 1) throw std::invalid_argument("--n must be >= 1");
    AvoiderLevel level;
    level.n = 1;
    level.set_name = "B";
    level.members = {parse_permutation("1")};
    for (int n = 2; n <= opt.n; ++n) level = generate_level(level);
    emit_level(level, opt);
    return kExitOk;
}

int cmd_witness(const Options& opt) {
    const auto host = parse_permutation(opt.perm_text);
    const auto occ = first_b_occurrence(host);
    if (!occ) {
        if (json_mode(opt))
            std::cout << json{{"perm", render_permutation(host)}, {"avoids_b", true}}
                      << "\n";
        else
            std::cout << "avoids B\n";
        return kExitOk;
    }
    const auto result = transform_occurrence(host, *occ);
    // Name the A pattern the witness matches.
    std::string matched;
    for (const auto& pat : builtin_set_a().patterns) {
        auto occs = find_occurrences(host, pat);
        if (std::find(occs.begin(), occs.end(), result.occurrence) != occs.end()) {
            matched = render_pattern(pat);
            break;
        }
    }
    if (json_mode(opt)) {
        std::cout << json{{"perm", render_permutation(host)},
                          {"avoids_b", false},
                          {"b_occurrence", occurrence_json(*occ)},
                          {"e", result.e},
                          {"a_occurrence", occurrence_json(result.occurrence)},
                          {"a_pattern", matched}}
                  << "\n";
    } else {
        std::cout << "B-occurrence at positions";
        for (int p : occ->positions) std::cout << ' ' << p;
        std::cout << "\ne = " << result.e << "\nA-occurrence at positions";
        for (int p : result.occurrence.positions) std::cout << ' ' << p;
        std::cout << " (pattern " << matched << ")\n";
    }
    return kExitOk;
}

OffsetMode parse_offset_mode(const std::string& text) {
    if (text == "paper") return OffsetMode::paper;
    if (text == "oeis") return OffsetMode::oeis;
    throw std::invalid_argument("offset mode must be 'paper' or 'oeis'");
}

int cmd_sequence(const Options& opt) {
    const auto table = recurrence_terms(opt.terms, parse_offset_mode(opt.offset_mode));
    if (json_mode(opt)) {
        json terms = json::array();
        for (const auto& t : table.terms) terms.push_back(t.str());
        std::cout << json{{"offset", table.offset}, {"terms", terms}} << "\n";
    } else {
        for (long long i = table.first_index(); i <= table.last_index(); ++i)
            std::cout << i << ' ' << table.at_index(i) << "\n";
    }
    return kExitOk;
}

int cmd_bfile_check(const Options& opt) {
    std::ifstream in(opt.file);
    if (!in) throw std::invalid_argument("cannot open b-file '" + opt.file + "'");
    const auto reference = parse_bfile(in);
    const auto computed =
        recurrence_terms(opt.terms, reference.offset == 0 ? OffsetMode::oeis
                                                          : OffsetMode::paper);
    const auto report = compare_tables(computed, reference);
    if (json_mode(opt)) {
        std::cout << json{{"file", opt.file},
                          {"overlap_first", report.overlap_first},
                          {"overlap_last", report.overlap_last},
                          {"mismatched_indices", report.mismatched_indices},
                          {"match", report.all_match()}}
                  << "\n";
    } else {
        std::cout << "indices " << report.overlap_first << ".." << report.overlap_last
                  << (report.all_match() ? ": all match" : ": MISMATCH") << "\n";
        if (auto first = report.first_mismatch())
            std::cout << "first mismatch at index " << *first << "\n";
    }
    return report.all_match() ? kExitOk : kExitMismatch;
}

int cmd_verify(const Options& opt) {
    const int max_n = opt.max_n;
    const int cutoff = effective_cutoff(opt);
    if (max_n < 1 || max_n > cutoff)
        throw std::invalid_argument("--max-n must lie in 1..cutoff");
    const auto seq = recurrence_terms(max_n, OffsetMode::paper);

    bool all_ok = true;
    json rows = json::array();
    if (!json_mode(opt))
        std::cout << "  n  |Av_n(A)|  |Av_n(B)|  generated        a_n  double  pass\n";

    AvoiderLevel generated;
    generated.n = 1;
    generated.set_name = "B";
    generated.members = {parse_permutation("1")};
    std::vector<std::uint64_t> b_counts(static_cast<std::size_t>(max_n) + 1, 0);

    for (int n = 1; n <= max_n; ++n) {
        const auto level_a = enumerate_avoiders(n, builtin_set_a(), cutoff, opt.jobs);
        const auto level_b = enumerate_avoiders(n, builtin_set_b(), cutoff, opt.jobs);
        if (n > 1) generated = generate_level(generated);
        b_counts[static_cast<std::size_t>(n)] = level_b.members.size();

        const auto expected = seq.at_index(n);
        bool ok = level_a.members == level_b.members &&
                  generated.members == level_b.members &&
                  BigInt(level_b.members.size()) == expected;

        std::uint64_t dc_size = 0;
        if (n >= 3) {
            dc_size = double_counted(level_b).size();
            ok = ok && dc_size == 2 * b_counts[static_cast<std::size_t>(n) - 2] &&
                 4 * b_counts[static_cast<std::size_t>(n) - 1] - dc_size ==
                     b_counts[static_cast<std::size_t>(n)];
        }
        all_ok = all_ok && ok;
        if (json_mode(opt)) {
            rows.push_back({{"n", n},
                            {"count_a", level_a.members.size()},
                            {"count_b", level_b.members.size()},
                            {"generated", generated.members.size()},
                            {"a_n", expected.str()},
                            {"double_counted", dc_size},
                            {"pass", ok}});
        } else {
            std::cout << std::setw(3) << n << std::setw(11)
                      << level_a.members.size() << std::setw(11)
                      << level_b.members.size() << std::setw(11)
                      << generated.members.size() << std::setw(11) << expected
                      << std::setw(8) << dc_size << (ok ? "  pass" : "  FAIL")
                      << "\n";
        }
    }
    if (json_mode(opt))
        std::cout << json{{"max_n", max_n}, {"rows", rows}, {"verified", all_ok}}
                  << "\n";
    else
        std::cout << (all_ok ? "verified" : "VERIFICATION FAILED") << "\n";
    return all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vincular pattern avoidance toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* avoids = app.add_subcommand("avoids", "test one permutation against a set");
    avoids->add_option("--perm", opt.perm_text)->required();
    avoids->add_option("--set", opt.set_spec);
    add_format(avoids);

    auto* occurrences =
        app.add_subcommand("occurrences", "list all occurrences of a pattern");
    occurrences->add_option("--perm", opt.perm_text)->required();
    occurrences->add_option("--pattern", opt.pattern_text)->required();
    add_format(occurrences);

    auto* count = app.add_subcommand("count", "count length-n avoiders");
    count->add_option("--n", opt.n)->required();
    count->add_option("--set", opt.set_spec);
    count->add_option("--jobs", opt.jobs);
    count->add_option("--cutoff", opt.cutoff);
    add_format(count);

    auto* enumerate = app.add_subcommand("enumerate", "list length-n avoiders");
    enumerate->add_option("--n", opt.n)->required();
    enumerate->add_option("--set", opt.set_spec);
    enumerate->add_option("--jobs", opt.jobs);
    enumerate->add_option("--cutoff", opt.cutoff);
    add_format(enumerate);

    auto* generate =
        app.add_subcommand("generate", "build Av_n(B) with the four insertion maps");
    generate->add_option("--n", opt.n)->required();
    generate->add_option("--set", opt.set_spec);
    add_format(generate);

    auto* witness =
        app.add_subcommand("witness", "turn the first B-occurrence into an A-occurrence");
    witness->add_option("--perm", opt.perm_text)->required();
    add_format(witness);

    auto* sequence = app.add_subcommand("sequence", "print recurrence terms");
    sequence->add_option("--terms", opt.terms);
    sequence->add_option("--offset", opt.offset_mode)
        ->check(CLI::IsMember({"paper", "oeis"}));
    add_format(sequence);

    auto* bfile = app.add_subcommand("bfile-check", "compare the recurrence to a b-file");
    bfile->add_option("--file", opt.file)->required();
    bfile->add_option("--terms", opt.terms);
    add_format(bfile);

    auto* verify = app.add_subcommand("verify", "full audit up to max-n");
    verify->add_option("--max-n", opt.max_n);
    verify->add_option("--jobs", opt.jobs);
    verify->add_option("--cutoff", opt.cutoff);
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitError;
    }

    try {
        if (avoids->parsed()) return cmd_avoids(opt);
        if (occurrences->parsed()) return cmd_occurrences(opt);
        if (count->parsed()) return cmd_count(opt);
        if (enumerate->parsed()) return cmd_enumerate(opt);
        if (generate->parsed()) return cmd_generate(opt);
        if (witness->parsed()) return cmd_witness(opt);
        if (sequence->parsed()) return cmd_sequence(opt);
        if (bfile->parsed()) return cmd_bfile_check(opt);
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
