#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "insenc/automaton.hpp"
#include "insenc/contain.hpp"
#include "insenc/word.hpp"

namespace insenc {

// One classification result, keyed by (basis, encoding, mode).
// Big integers are serialized as decimal strings.
struct CatalogRecord {
    std::string basis;     // canonical basis text
    std::string encoding;  // "horizontal" or "vertical"
    std::string mode;      // "rgf" or "matching"
    std::string verdict;   // "Regular", "Irregular" or "Undecided"
    std::optional<int> slot_bound;                 // largest probed slot count
    std::optional<std::vector<BigInt>> gf_num;     // generating function, when known
    std::optional<std::vector<BigInt>> gf_den;
    std::vector<BigInt> counts;  // class sizes 1..counts_order
    int counts_order = 0;
    std::string tool_version;
    std::string timestamp;  // ISO 8601 UTC

    std::string key() const { return basis + "|" + encoding + "|" + mode; }
};

std::string record_to_json(const CatalogRecord& r);
CatalogRecord record_from_json(const std::string& line);

// Append-only JSONL store. Reads resolve duplicate keys last-write-wins.
// A corrupt line raises CorruptStore with its line number, unless lenient —
// then it is skipped and reported in warnings().
class CatalogStore {
  public:
    explicit CatalogStore(std::string path, bool lenient = false);

    bool has(const std::string& key) const;
    std::optional<CatalogRecord> get(const std::string& key) const;
    void put(const CatalogRecord& r);  // appends to the file immediately
    const std::map<std::string, CatalogRecord>& records() const { return records_; }
    const std::vector<std::string>& warnings() const { return warnings_; }
    const std::string& path() const { return path_; }

  private:
    void load();
    std::string path_;
    bool lenient_ = false;
    std::map<std::string, CatalogRecord> records_;
    std::vector<std::string> warnings_;
};

struct SweepOptions {
    int pattern_size = 3;   // only 3 is supported
    int min_basis = 1;
    int max_basis = 5;
    // Alternation-search bound for the three decreasing-top vertical
    // families. 0 (the default) witnesses them by the basis-pattern gridding
    // shortcut alone — the semantics of the published table the sweep
    // reproduces; raising it lets the avoided-alternation search prove
    // further classes Regular.
    int m_max = 0;
    int jobs = 1;
    int counts_order = 7;
    std::string store_path;
    bool lenient = false;
};

struct SweepRow {
    int basis_size = 0;
    long total = 0;
    long vertical_regular = 0;
    long horizontal_regular = 0;
    long either_regular = 0;
    long undecided = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    long classified = 0;  // classifications performed this run (0 when warm)
};

// Classify every basis of the given sizes over the size-3 Cayley patterns in
// both encodings (rgf mode), recording one catalog record per (basis,
// encoding). Resumable: bases already in the store are not reclassified.
SweepResult sweep_table(const SweepOptions& opt, CatalogStore& store);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_pretty(const std::vector<SweepRow>& rows);

std::string tool_version();

}  // namespace insenc
