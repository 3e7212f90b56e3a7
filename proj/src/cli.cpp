// Command-line surface: classify, count, genfunc, encode, decode, avoided
// and sweep subcommands over the library. JSON on stdout (aligned text with
// --pretty), errors on stderr; exit 0 success, 1 domain error, 2 usage error.

#include "insenc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "insenc/automaton.hpp"
#include "insenc/catalog.hpp"
#include "insenc/classify.hpp"
#include "insenc/contain.hpp"
#include "insenc/generate.hpp"
#include "insenc/genfunc.hpp"
#include "insenc/horizontal.hpp"
#include "insenc/vertical.hpp"
#include "insenc/word.hpp"

namespace insenc {

namespace {

using nlohmann::json;

std::string verdict_text(Verdict v) {
    switch (v) {
        case Verdict::Regular: return "Regular";
        case Verdict::Irregular: return "Irregular";
        case Verdict::Undecided: return "Undecided";
    }
    throw InvalidInput("unknown verdict");
}

bool is_horizontal(const std::string& encoding) {
    return encoding == "h" || encoding == "horizontal";
}

std::string encoding_name(const std::string& encoding) {
    return is_horizontal(encoding) ? "horizontal" : "vertical";
}

std::vector<std::string> bigint_strings(const std::vector<BigInt>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const BigInt& x : xs) out.push_back(x.str());
    return out;
}

// The families the classification report found unwitnessed, for error text.
std::string missing_families(const ClassificationReport& rep) {
    std::string missing;
    for (const auto& [family, word] : rep.witnesses)
        if (!word) {
            if (!missing.empty()) missing += ", ";
            missing += family;
        }
    return missing;
}

// Domain failure of a DFA build, written to err; returns exit code 1.
int report_build_failure(const BuildOutcome& outcome, std::ostream& err) {
    if (outcome.status == BuildStatus::NotSlotBounded) {
        err << "error: class is not slot-bounded for this encoding; verdict "
            << verdict_text(outcome.report.verdict);
        const std::string missing = missing_families(outcome.report);
        if (!missing.empty()) err << " (unwitnessed: " << missing << ")";
        err << "\n";
    } else {
        err << "error: state cap exceeded while building the automaton\n";
    }
    return 1;
}

void emit_report(const ClassificationReport& rep, const Basis& basis,
                 bool pretty, std::ostream& out) {
    if (pretty) {
        out << "basis:    " << basis.to_string() << "\n"
            << "encoding: " << rep.encoding << "\n"
            << "mode:     " << rep.mode << "\n"
            << "verdict:  " << verdict_text(rep.verdict) << "\n"
            << "witnesses:\n";
        for (const auto& [family, word] : rep.witnesses)
            out << "  " << family << ": "
                << (word ? format_word(*word) : "(none)") << "\n";
        return;
    }
    json j;
    j["basis"] = basis.to_string();
    j["encoding"] = rep.encoding;
    j["mode"] = rep.mode;
    j["search_bound"] = rep.search_bound;
    j["verdict"] = verdict_text(rep.verdict);
    json w = json::object();
    for (const auto& [family, word] : rep.witnesses)
        w[family] = word ? json(format_word(*word)) : json(nullptr);
    j["witnesses"] = w;
    out << j.dump(2) << "\n";
}

struct SizeRange {
    int lo = 1;
    int hi = 1;
};

// "1..5" or a single size "3".
SizeRange parse_size_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, dots)),
                std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw InvalidInput("malformed size range: " + text);
    }
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"pattern-avoiding RGF insertion encodings"};
    app.require_subcommand(1);

    std::string basis_text, encoding = "h", mode_text = "rgf";
    std::string decode_mode_text = "cayley";
    std::string gamma_text, word_text, method = "brute";
    std::string sizes_text = "1..5", store_path;
    int m_max = 4, max_size = 8, jobs = 1, counts_order = 7, sweep_m_max = 0;
    int pattern_size = 3;
    bool pretty = false, lenient = false;

    const auto encoding_values =
        CLI::IsMember({"h", "v", "horizontal", "vertical"});
    const auto rgf_modes = CLI::IsMember({"rgf", "matching"});
    const auto all_modes = CLI::IsMember({"cayley", "rgf", "matching"});

    CLI::App* classify = app.add_subcommand(
        "classify", "classify the regularity of a class's encoding");
    classify->add_option("--basis", basis_text, "avoided patterns")
        ->required();
    classify->add_option("--encoding", encoding, "h or v")
        ->required()
        ->check(encoding_values);
    classify->add_option("--mode", mode_text, "rgf or matching")
        ->check(rgf_modes);
    classify->add_option("--mmax", m_max,
                         "alternation search bound (vertical)");
    classify->add_flag("--pretty", pretty, "aligned text output");

    CLI::App* count =
        app.add_subcommand("count", "count class members by size");
    count->add_option("--basis", basis_text, "avoided patterns")->required();
    count->add_option("--max-size", max_size, "largest size to count")
        ->required();
    count->add_option("--method", method, "brute or automaton")
        ->check(CLI::IsMember({"brute", "automaton"}));
    count->add_option("--encoding", encoding, "h or v (automaton method)")
        ->check(encoding_values);
    count->add_option("--mode", mode_text, "rgf or matching")
        ->check(rgf_modes);
    count->add_flag("--pretty", pretty, "aligned text output");

    CLI::App* genfunc = app.add_subcommand(
        "genfunc", "exact rational generating function of a regular class");
    genfunc->add_option("--basis", basis_text, "avoided patterns")
        ->required();
    genfunc->add_option("--encoding", encoding, "h or v")
        ->required()
        ->check(encoding_values);
    genfunc->add_option("--mode", mode_text, "rgf or matching")
        ->check(rgf_modes);
    genfunc->add_flag("--pretty", pretty, "aligned text output");

    CLI::App* encode =
        app.add_subcommand("encode", "insertion-encode a Cayley permutation");
    encode->add_option("--encoding", encoding, "h or v")
        ->required()
        ->check(encoding_values);
    encode->add_option("word", word_text, "the word to encode")->required();
    encode->add_flag("--pretty", pretty, "aligned text output");

    CLI::App* decode =
        app.add_subcommand("decode", "replay an insertion-letter word");
    decode->add_option("--encoding", encoding, "h or v")
        ->required()
        ->check(encoding_values);
    decode->add_option("--mode", decode_mode_text, "cayley, rgf or matching")
        ->check(all_modes);
    decode->add_option("letters", word_text, "the letter word to decode")
        ->required();
    decode->add_flag("--pretty", pretty, "aligned text output");

    CLI::App* avoided = app.add_subcommand(
        "avoided", "is a Cayley permutation avoided by the whole class?");
    avoided->add_option("--gamma", gamma_text, "the Cayley permutation")
        ->required();
    avoided->add_option("--basis", basis_text, "avoided patterns")
        ->required();
    avoided->add_flag("--pretty", pretty, "aligned text output");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "classify every basis of size-3 patterns; emit the table");
    sweep->add_option("--pattern-size", pattern_size,
                      "pattern size (only 3 supported)")
        ->check(CLI::Range(3, 3));
    sweep->add_option("--basis-sizes", sizes_text, "range, e.g. 1..5");
    sweep->add_option("--store", store_path,
                      "JSONL store path (default $INSENC_STORE)");
    sweep->add_option("--jobs", jobs, "parallel workers");
    sweep->add_option("--mmax", sweep_m_max,
                      "alternation search bound (0 = gridding check only)");
    sweep->add_option("--counts-order", counts_order,
                      "record counts up to this size");
    sweep->add_flag("--lenient", lenient, "skip corrupt store lines");
    sweep->add_flag("--pretty", pretty, "aligned text table (default CSV)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const Mode mode = parse_mode(mode_text);
        if (app.got_subcommand(classify)) {
            const Basis basis = Basis::parse(basis_text);
            if (!is_horizontal(encoding) && mode == Mode::Matching)
                throw InvalidInput(
                    "the vertical encoding has no matching mode");
            const ClassificationReport rep = is_horizontal(encoding)
                                                 ? classify_h(basis, mode)
                                                 : classify_v(basis, m_max);
            emit_report(rep, basis, pretty, out);
            return 0;
        }
        if (app.got_subcommand(count)) {
            const Basis basis = Basis::parse(basis_text);
            if (max_size < 1) throw InvalidInput("max-size must be positive");
            std::vector<BigInt> counts;
            json j;
            if (method == "brute") {
                for (int n = 1; n <= max_size; ++n)
                    counts.emplace_back(
                        mode == Mode::Matching
                            ? matching_rgfs_avoiding(n, basis).size()
                            : rgfs_avoiding(n, basis).size());
            } else {
                const BuildOutcome outcome = build_dfa(
                    basis, is_horizontal(encoding) ? 'h' : 'v', mode);
                if (outcome.status != BuildStatus::Built)
                    return report_build_failure(outcome, err);
                counts = count_series(*outcome.dfa, max_size);
                j["encoding"] = encoding_name(encoding);
            }
            if (pretty) {
                for (int n = 1; n <= max_size; ++n)
                    out << n << "\t" << counts[n - 1].str() << "\n";
                return 0;
            }
            j["basis"] = basis.to_string();
            j["counts"] = bigint_strings(counts);
            j["max_size"] = max_size;
            j["method"] = method;
            j["mode"] = to_string(mode);
            out << j.dump(2) << "\n";
            return 0;
        }
        if (app.got_subcommand(genfunc)) {
            const Basis basis = Basis::parse(basis_text);
            const BuildOutcome outcome =
                build_dfa(basis, is_horizontal(encoding) ? 'h' : 'v', mode);
            if (outcome.status != BuildStatus::Built)
                return report_build_failure(outcome, err);
            const RationalGF gf = gf_from_dfa(*outcome.dfa);
            const std::vector<BigInt> coeffs = series(gf, 12);
            if (pretty) {
                out << "G(x) = " << insenc::pretty(gf) << "\n"
                    << "series:";
                for (const BigInt& c : coeffs) out << " " << c.str();
                out << "\n";
                return 0;
            }
            json j;
            j["basis"] = basis.to_string();
            j["den"] = bigint_strings(gf.den.coeffs());
            j["encoding"] = encoding_name(encoding);
            j["gf"] = insenc::pretty(gf);
            j["mode"] = to_string(mode);
            j["num"] = bigint_strings(gf.num.coeffs());
            j["series"] = bigint_strings(coeffs);
            out << j.dump(2) << "\n";
            return 0;
        }
        if (app.got_subcommand(encode)) {
            const Word w = parse_word(word_text);
            const std::string letters = is_horizontal(encoding)
                                            ? format_letters(encode_h(w))
                                            : format_letters(encode_v(w));
            if (pretty) {
                out << letters << "\n";
                return 0;
            }
            json j;
            j["encoding"] = encoding_name(encoding);
            j["letters"] = letters;
            j["word"] = format_word(w);
            out << j.dump(2) << "\n";
            return 0;
        }
        if (app.got_subcommand(decode)) {
            const Mode decode_mode = parse_mode(decode_mode_text);
            Word w;
            if (is_horizontal(encoding))
                w = decode_h(parse_h_letters(word_text), decode_mode);
            else
                w = decode_v(parse_v_letters(word_text), decode_mode);
            if (pretty) {
                out << format_word(w) << "\n";
                return 0;
            }
            json j;
            j["encoding"] = encoding_name(encoding);
            j["mode"] = to_string(decode_mode);
            j["word"] = format_word(w);
            out << j.dump(2) << "\n";
            return 0;
        }
        if (app.got_subcommand(avoided)) {
            const Word gamma = parse_word(gamma_text);
            const Basis basis = Basis::parse(basis_text);
            const bool result = avoided_by_class(gamma, basis);
            std::optional<Word> refuter;
            if (!result)
                for (const Word& w : witness_family(gamma))
                    if (avoids_basis(w, basis)) {
                        refuter = w;
                        break;
                    }
            if (pretty) {
                out << (result ? "avoided by the whole class"
                               : "contained by the class member " +
                                     format_word(*refuter))
                    << "\n";
                return 0;
            }
            json j;
            j["avoided"] = result;
            j["basis"] = basis.to_string();
            j["gamma"] = format_word(gamma);
            j["refuter"] = refuter ? json(format_word(*refuter)) : json();
            out << j.dump(2) << "\n";
            return 0;
        }
        if (app.got_subcommand(sweep)) {
            if (store_path.empty()) {
                const char* env = std::getenv("INSENC_STORE");
                if (env != nullptr) store_path = env;
            }
            if (store_path.empty())
                throw InvalidInput(
                    "no store path: pass --store or set INSENC_STORE");
            const SizeRange sizes = parse_size_range(sizes_text);
            SweepOptions opt;
            opt.pattern_size = pattern_size;
            opt.min_basis = sizes.lo;
            opt.max_basis = sizes.hi;
            opt.m_max = sweep_m_max;
            opt.jobs = jobs;
            opt.counts_order = counts_order;
            opt.store_path = store_path;
            opt.lenient = lenient;
            CatalogStore store(store_path, lenient);
            const SweepResult res = sweep_table(opt, store);
            out << (pretty ? sweep_pretty(res.rows) : sweep_csv(res.rows));
            return 0;
        }
        throw InvalidInput("no subcommand");  // unreachable with require_subcommand
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace insenc
