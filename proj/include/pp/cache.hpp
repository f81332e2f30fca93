#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pp/factor.hpp"

namespace pp {

/// Append-only on-disk factorization cache, one JSON object per line:
///   {"version":1,"key":"0x4f","factors":[["0x7",1],["0x19",1]]}
/// Entries are validated on load (version, factor irreducibility, and
/// the product re-multiplying to the key); anything that fails is
/// skipped with a warning so a corrupt file can slow us down but never
/// change a result. Safe for concurrent readers/writers.
class FactorCache {
public:
    static constexpr int kVersion = 1;

    explicit FactorCache(std::string path);

    std::optional<Factorization> get(const Poly& p) const;
    void put(const Poly& p, const Factorization& f);

    size_t size() const;
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    void load();

    std::string path_;
    mutable std::mutex mu_;
    std::unordered_map<std::string, Factorization> entries_;
    std::vector<std::string> warnings_;
};

/// Read-through helper; cache may be null.
Factorization factorize_cached(const Poly& p, uint64_t seed, FactorCache* cache);

}  // namespace pp
