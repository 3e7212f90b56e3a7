// JSONL catalog of classification records, and the sweep that classifies
// every basis of size-3 patterns in both encodings via precomputed
// pattern-containment masks.

#include "insenc/catalog.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>
#include <utility>

#include "json.hpp"

#include "insenc/classify.hpp"
#include "insenc/generate.hpp"
#include "insenc/geometry.hpp"

namespace insenc {

namespace {

using nlohmann::json;

std::string utc_timestamp() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[24];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

json bigints_to_json(const std::vector<BigInt>& xs) {
    json arr = json::array();
    for (const BigInt& x : xs) arr.push_back(x.str());
    return arr;
}

std::vector<BigInt> bigints_from_json(const json& arr) {
    std::vector<BigInt> out;
    out.reserve(arr.size());
    for (const auto& v : arr) out.emplace_back(v.get<std::string>());
    return out;
}

}  // namespace

std::string tool_version() { return "insenc 1.0.0"; }

std::string record_to_json(const CatalogRecord& r) {
    json j;
    j["basis"] = r.basis;
    j["counts"] = bigints_to_json(r.counts);
    j["counts_order"] = r.counts_order;
    j["encoding"] = r.encoding;
    if (r.gf_den) j["gf_den"] = bigints_to_json(*r.gf_den);
    if (r.gf_num) j["gf_num"] = bigints_to_json(*r.gf_num);
    j["mode"] = r.mode;
    if (r.slot_bound) j["slot_bound"] = *r.slot_bound;
    j["timestamp"] = r.timestamp;
    j["tool_version"] = r.tool_version;
    j["verdict"] = r.verdict;
    return j.dump();
}

CatalogRecord record_from_json(const std::string& line) {
    try {
        const json j = json::parse(line);
        if (!j.is_object())
            throw std::runtime_error("record is not a JSON object");
        CatalogRecord r;
        r.basis = j.at("basis").get<std::string>();
        r.encoding = j.at("encoding").get<std::string>();
        r.mode = j.at("mode").get<std::string>();
        r.verdict = j.at("verdict").get<std::string>();
        if (j.contains("slot_bound"))
            r.slot_bound = j.at("slot_bound").get<int>();
        if (j.contains("gf_num")) r.gf_num = bigints_from_json(j.at("gf_num"));
        if (j.contains("gf_den")) r.gf_den = bigints_from_json(j.at("gf_den"));
        r.counts = bigints_from_json(j.at("counts"));
        r.counts_order = j.at("counts_order").get<int>();
        r.tool_version = j.at("tool_version").get<std::string>();
        r.timestamp = j.at("timestamp").get<std::string>();
        return r;
    } catch (const std::exception& e) {
        throw CorruptStore(std::string("bad catalog record: ") + e.what());
    }
}

CatalogStore::CatalogStore(std::string path, bool lenient)
    : path_(std::move(path)), lenient_(lenient) {
    load();
}

void CatalogStore::load() {
    std::ifstream in(path_);
    if (!in) return;  // a missing store starts out empty
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            CatalogRecord r = record_from_json(line);
            records_[r.key()] = std::move(r);
        } catch (const CorruptStore& e) {
            std::ostringstream msg;
            msg << path_ << " line " << line_no << ": " << e.what();
            if (!lenient_) throw CorruptStore(msg.str());
            warnings_.push_back(msg.str());
        }
    }
}

bool CatalogStore::has(const std::string& key) const {
    return records_.count(key) != 0;
}

std::optional<CatalogRecord> CatalogStore::get(const std::string& key) const {
    const auto it = records_.find(key);
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void CatalogStore::put(const CatalogRecord& r) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw CorruptStore("cannot open catalog store " + path_);
    out << record_to_json(r) << '\n';
    out.flush();
    if (!out) throw CorruptStore("cannot append to catalog store " + path_);
    records_[r.key()] = r;
}

namespace {

// Everything the sweep needs about one pattern or one class member is a
// 13-bit containment mask over the size-3 Cayley patterns, so verdicts and
// counts reduce to mask intersections.
struct SweepTables {
    std::vector<Word> patterns;  // the 13 size-3 Cayley words, lex order
    std::uint16_t h_inc_inc = 0;
    std::uint16_t h_inc_dec = 0;
    std::array<std::uint16_t, 6> exact{};     // six exactly decided families
    std::array<std::uint16_t, 3> searched{};  // gridding shortcut per family
    // alt_masks[s][m-1]: witness-family masks of the m-th alternation of
    // searched family s; the alternation is avoided by the class iff every
    // witness mask intersects the basis mask.
    std::array<std::vector<std::vector<std::uint16_t>>, 3> alt_masks;
    std::vector<std::vector<std::uint16_t>> members;  // [n-1]: RGFs of size n
};

std::uint16_t pattern_mask(const Word& w, const std::vector<Word>& patterns) {
    std::uint16_t mask = 0;
    for (std::size_t j = 0; j < patterns.size(); ++j)
        if (contains(w, patterns[j])) mask |= std::uint16_t(1) << j;
    return mask;
}

SweepTables build_tables(const SweepOptions& opt) {
    SweepTables t;
    t.patterns = all_cayley(3);
    const FamilyTag h_ii{'H', CellKind::Inc, CellKind::Inc};
    const FamilyTag h_id{'H', CellKind::Inc, CellKind::Dec};
    const FamilyTag exact_tags[6] = {
        {'G', CellKind::Inc, CellKind::Inc}, {'G', CellKind::Dec, CellKind::Inc},
        {'G', CellKind::Inc, CellKind::Const},
        {'G', CellKind::Dec, CellKind::Const},
        {'V', CellKind::Const, CellKind::Inc},
        {'V', CellKind::Const, CellKind::Const}};
    const FamilyTag searched_tags[3] = {{'G', CellKind::Inc, CellKind::Dec},
                                        {'G', CellKind::Dec, CellKind::Dec},
                                        {'V', CellKind::Const, CellKind::Dec}};
    for (std::size_t j = 0; j < t.patterns.size(); ++j) {
        const std::uint16_t bit = std::uint16_t(1) << j;
        if (in_class(t.patterns[j], h_ii)) t.h_inc_inc |= bit;
        if (in_class(t.patterns[j], h_id)) t.h_inc_dec |= bit;
        for (int e = 0; e < 6; ++e)
            if (in_class(t.patterns[j], exact_tags[e])) t.exact[e] |= bit;
        for (int s = 0; s < 3; ++s)
            if (in_class(t.patterns[j], searched_tags[s])) t.searched[s] |= bit;
    }
    for (int s = 0; s < 3; ++s) {
        t.alt_masks[s].resize(std::max(0, opt.m_max));
        for (int m = 1; m <= opt.m_max; ++m) {
            const Word alt = searched_tags[s].shape == 'G'
                                 ? g_alternation(searched_tags[s], m)
                                 : vertical_alternation(searched_tags[s], m);
            for (const Word& w : witness_family(alt))
                t.alt_masks[s][m - 1].push_back(pattern_mask(w, t.patterns));
        }
    }
    t.members.resize(opt.counts_order);
    const Basis everything;  // empty basis: every RGF is a member
    for (int n = 1; n <= opt.counts_order; ++n)
        for (const Word& w : rgfs_avoiding(n, everything))
            t.members[n - 1].push_back(pattern_mask(w, t.patterns));
    return t;
}

std::string h_verdict(std::uint16_t basis_mask, const SweepTables& t) {
    const bool regular =
        (basis_mask & t.h_inc_inc) != 0 && (basis_mask & t.h_inc_dec) != 0;
    return regular ? "Regular" : "Irregular";
}

std::string v_verdict(std::uint16_t basis_mask, const SweepTables& t,
                      int m_max) {
    bool irregular = false;
    for (const std::uint16_t mask : t.exact)
        irregular = irregular || (basis_mask & mask) == 0;
    bool undecided = false;
    for (int s = 0; s < 3; ++s) {
        bool witnessed = (basis_mask & t.searched[s]) != 0;
        if (!witnessed && !irregular) {
            for (int m = 1; m <= m_max && !witnessed; ++m) {
                bool avoided = true;
                for (const std::uint16_t wm : t.alt_masks[s][m - 1])
                    if ((wm & basis_mask) == 0) {
                        avoided = false;
                        break;
                    }
                witnessed = avoided;
            }
            undecided = undecided || !witnessed;
        }
    }
    return irregular ? "Irregular" : undecided ? "Undecided" : "Regular";
}

std::vector<BigInt> class_counts(std::uint16_t basis_mask,
                                 const SweepTables& t) {
    std::vector<BigInt> counts;
    counts.reserve(t.members.size());
    for (const auto& level : t.members) {
        long c = 0;
        for (const std::uint16_t m : level)
            if ((m & basis_mask) == 0) ++c;
        counts.emplace_back(c);
    }
    return counts;
}

// Advance c to the next k-combination of {0, .., n-1} in lex order.
bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

struct SweepJob {
    std::string basis_text;
    std::uint16_t mask = 0;
    int size = 0;
    bool fresh_h = false;
    bool fresh_v = false;
};

struct SweepOut {
    std::string verdict_h;
    std::string verdict_v;
    std::vector<BigInt> counts;  // only filled when some record is fresh
};

}  // namespace

SweepResult sweep_table(const SweepOptions& opt, CatalogStore& store) {
    if (opt.pattern_size != 3)
        throw InvalidInput("sweep_table supports pattern size 3 only");
    if (opt.counts_order < 1)
        throw InvalidInput("counts_order must be positive");
    SweepResult result;
    const int lo = std::max(1, opt.min_basis);
    const int hi = std::min(opt.max_basis, 13);
    if (lo > hi) return result;

    const SweepTables tables = build_tables(opt);
    const int npat = static_cast<int>(tables.patterns.size());

    std::vector<SweepJob> jobs;
    for (int size = lo; size <= hi; ++size) {
        std::vector<int> combo(size);
        for (int i = 0; i < size; ++i) combo[i] = i;
        do {
            SweepJob job;
            job.size = size;
            std::string text;
            for (int i = 0; i < size; ++i) {
                if (i) text += ';';
                text += format_word(tables.patterns[combo[i]]);
                job.mask |= std::uint16_t(1) << combo[i];
            }
            job.basis_text = std::move(text);
            job.fresh_h = !store.has(job.basis_text + "|horizontal|rgf");
            job.fresh_v = !store.has(job.basis_text + "|vertical|rgf");
            jobs.push_back(std::move(job));
        } while (next_combination(combo, npat));
    }

    std::vector<SweepOut> out(jobs.size());
    const auto run_stride = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < jobs.size(); i += step) {
            out[i].verdict_h = h_verdict(jobs[i].mask, tables);
            out[i].verdict_v = v_verdict(jobs[i].mask, tables, opt.m_max);
            if (jobs[i].fresh_h || jobs[i].fresh_v)
                out[i].counts = class_counts(jobs[i].mask, tables);
        }
    };
    const int workers = std::max(1, opt.jobs);
    if (workers == 1) {
        run_stride(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(run_stride, static_cast<std::size_t>(w),
                              static_cast<std::size_t>(workers));
        for (std::thread& th : pool) th.join();
    }

    // Records are written sequentially in enumeration order (horizontal
    // before vertical), so two cold sweeps produce identically ordered files.
    std::map<int, SweepRow> rows;
    const std::string stamp = utc_timestamp();
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const SweepJob& job = jobs[i];
        std::string verdicts[2];
        for (int enc = 0; enc < 2; ++enc) {
            const bool horizontal = enc == 0;
            const char* encoding = horizontal ? "horizontal" : "vertical";
            const bool fresh = horizontal ? job.fresh_h : job.fresh_v;
            if (fresh) {
                CatalogRecord r;
                r.basis = job.basis_text;
                r.encoding = encoding;
                r.mode = "rgf";
                r.verdict = horizontal ? out[i].verdict_h : out[i].verdict_v;
                r.counts = out[i].counts;
                r.counts_order = opt.counts_order;
                r.tool_version = tool_version();
                r.timestamp = stamp;
                store.put(r);
                ++result.classified;
                verdicts[enc] = r.verdict;
            } else {
                const std::string key =
                    job.basis_text + "|" + encoding + "|rgf";
                verdicts[enc] = store.get(key)->verdict;
            }
        }
        SweepRow& row = rows[job.size];
        row.basis_size = job.size;
        ++row.total;
        const bool h_regular = verdicts[0] == "Regular";
        const bool v_regular = verdicts[1] == "Regular";
        row.horizontal_regular += h_regular;
        row.vertical_regular += v_regular;
        row.either_regular += h_regular || v_regular;
        row.undecided += !h_regular && !v_regular && verdicts[1] == "Undecided";
    }
    result.rows.reserve(rows.size());
    for (const auto& [size, row] : rows) result.rows.push_back(row);
    return result;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "basis_size,total,vertical_regular,horizontal_regular,"
           "either_regular,undecided\n";
    for (const SweepRow& r : rows)
        out << r.basis_size << ',' << r.total << ',' << r.vertical_regular
            << ',' << r.horizontal_regular << ',' << r.either_regular << ','
            << r.undecided << '\n';
    return out.str();
}

std::string sweep_pretty(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(12) << "basis size" << std::right
        << std::setw(8) << "total" << std::setw(10) << "vertical"
        << std::setw(12) << "horizontal" << std::setw(8) << "either"
        << std::setw(11) << "undecided" << '\n';
    for (const SweepRow& r : rows)
        out << std::left << std::setw(12) << r.basis_size << std::right
            << std::setw(8) << r.total << std::setw(10) << r.vertical_regular
            << std::setw(12) << r.horizontal_regular << std::setw(8)
            << r.either_regular << std::setw(11) << r.undecided << '\n';
    return out.str();
}

}  // namespace insenc
