#ifndef EMCOVER_CACHE_HPP
#define EMCOVER_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "emcover/io.hpp"

namespace emcover {

inline constexpr const char* kSolverVersion = "emcover-1.0";
inline constexpr const char* kCacheEnvVar = "EMCOVER_CACHE";

struct CacheRecord {
    std::string problem;  // "D" | "f" | "digraph" | "oriented"
    json params;          // object, keys sorted by json's map ordering
    int optimum = 0;
    json certificate;     // hypergraph or digraph object
    std::string solver_version = kSolverVersion;
};

json to_json(const CacheRecord& rec);

/// Parses one line and re-verifies its certificate. Throws
/// std::invalid_argument describing the defect.
CacheRecord parse_cache_line(const std::string& line);

/// Line-delimited JSON store of proven optima. Lines that fail to parse or
/// whose certificate does not verify are skipped on load and counted.
class ResultsCache {
  public:
    explicit ResultsCache(std::filesystem::path path);

    /// $EMCOVER_CACHE, else ./emcover_cache.jsonl
    static std::filesystem::path default_path();

    const std::filesystem::path& path() const { return path_; }
    const std::vector<CacheRecord>& records() const { return records_; }
    std::size_t rejected() const { return rejected_; }
    const std::vector<std::string>& rejections() const { return rejections_; }

    std::optional<CacheRecord> find(const std::string& problem, const json& params) const;

    /// Appends to the file; a record with the same key is not duplicated.
    void store(const CacheRecord& rec);

    /// Rewrites the file keeping one valid record per key. Returns lines dropped.
    std::size_t gc();

  private:
    void load();

    std::filesystem::path path_;
    std::vector<CacheRecord> records_;
    std::size_t rejected_ = 0;
    std::size_t lines_ = 0;
    std::vector<std::string> rejections_;
};

}  // namespace emcover

#endif  // EMCOVER_CACHE_HPP
