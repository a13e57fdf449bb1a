#include "emcover/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <stdexcept>

#include "emcover/coverage.hpp"

namespace emcover {

namespace {

int param(const json& params, const char* key) {
    if (!params.contains(key) || !params.at(key).is_number_integer()) {
        throw std::invalid_argument(std::string("params lack integer \"") + key + "\"");
    }
    return params.at(key).get<int>();
}

void verify(const CacheRecord& rec) {
    const json& p = rec.params;
    if (rec.problem == "D") {
        const Hypergraph h = hypergraph_from_json(rec.certificate);
        if (h.n() != param(p, "n") || h.r() != param(p, "r")) throw std::invalid_argument("certificate n/r mismatch");
        if (static_cast<int>(h.size()) != rec.optimum) throw std::invalid_argument("certificate size != optimum");
        if (!shadow_complete(h)) throw std::invalid_argument("certificate shadow is incomplete");
    } else if (rec.problem == "f") {
        const Hypergraph h = hypergraph_from_json(rec.certificate);
        if (h.n() != param(p, "n") || h.r() != param(p, "r")) throw std::invalid_argument("certificate n/r mismatch");
        if (static_cast<int>(h.size()) != rec.optimum) throw std::invalid_argument("certificate size != optimum");
        if (!audit(h, param(p, "k"), param(p, "s")).covered) throw std::invalid_argument("certificate fails the audit");
    } else if (rec.problem == "digraph") {
        const Digraph d = digraph_from_json(rec.certificate);
        if (d.n() != param(p, "n")) throw std::invalid_argument("certificate n mismatch");
        if (static_cast<int>(d.size()) != rec.optimum) throw std::invalid_argument("certificate size != optimum");
        if (!has_property_Sk(d, param(p, "k")).holds) throw std::invalid_argument("certificate lacks S_k");
    } else if (rec.problem == "oriented") {
        const Digraph d = digraph_from_json(rec.certificate);
        if (d.n() != rec.optimum) throw std::invalid_argument("certificate vertex count != optimum");
        if (!d.is_orientation()) throw std::invalid_argument("certificate is not oriented");
        if (!has_property_Sk(d, param(p, "k")).holds) throw std::invalid_argument("certificate lacks S_k");
    } else {
        throw std::invalid_argument("unknown problem \"" + rec.problem + "\"");
    }
}

std::string key_of(const std::string& problem, const json& params) { return problem + params.dump(); }

}  // namespace

json to_json(const CacheRecord& rec) {
    return json{{"problem", rec.problem},
                {"params", rec.params},
                {"optimum", rec.optimum},
                {"certificate", rec.certificate},
                {"solver_version", rec.solver_version}};
}

CacheRecord parse_cache_line(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("record is not an object");
    CacheRecord rec;
    try {
        rec.problem = j.at("problem").get<std::string>();
        rec.params = j.at("params");
        rec.optimum = j.at("optimum").get<int>();
        rec.certificate = j.at("certificate");
        rec.solver_version = j.at("solver_version").get<std::string>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad record: ") + e.what());
    }
    if (!rec.params.is_object()) throw std::invalid_argument("params is not an object");
    verify(rec);
    return rec;
}

ResultsCache::ResultsCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

std::filesystem::path ResultsCache::default_path() {
    if (const char* env = std::getenv(kCacheEnvVar); env != nullptr && *env != '\0') return env;
    return "emcover_cache.jsonl";
}

void ResultsCache::load() {
    records_.clear();
    rejected_ = 0;
    lines_ = 0;
    rejections_.clear();
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        ++lines_;
        try {
            records_.push_back(parse_cache_line(line));
        } catch (const std::exception& e) {
            ++rejected_;
            rejections_.push_back("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
}

std::optional<CacheRecord> ResultsCache::find(const std::string& problem, const json& params) const {
    const std::string key = key_of(problem, params);
    for (const auto& rec : records_)
        if (key_of(rec.problem, rec.params) == key) return rec;
    return std::nullopt;
}

void ResultsCache::store(const CacheRecord& rec) {
    if (find(rec.problem, rec.params)) return;
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot write cache file " + path_.string());
    out << to_json(rec).dump() << '\n';
    records_.push_back(rec);
    ++lines_;
}

std::size_t ResultsCache::gc() {
    std::map<std::string, CacheRecord> unique;
    for (const auto& rec : records_) unique.emplace(key_of(rec.problem, rec.params), rec);
    const std::size_t before = lines_;
    const auto tmp = path_.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        for (const auto& [key, rec] : unique) out << to_json(rec).dump() << '\n';
    }
    std::filesystem::rename(tmp, path_);
    load();
    return before - lines_;
}

}  // namespace emcover
