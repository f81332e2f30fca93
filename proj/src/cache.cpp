#include "pp/cache.hpp"

#include <fstream>

#include <json.hpp>

#include "pp/text.hpp"

namespace pp {

FactorCache::FactorCache(std::string path) : path_(std::move(path)) { load(); }

void FactorCache::load() {
    std::ifstream in(path_);
    if (!in) return;  // a fresh cache file is created on the first put
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto bad = [&](const std::string& why) {
            warnings_.push_back(path_ + ":" + std::to_string(lineno) + ": " + why + " (entry ignored)");
        };
        nlohmann::json row = nlohmann::json::parse(line, nullptr, false);
        if (row.is_discarded() || !row.is_object()) {
            bad("malformed JSON");
            continue;
        }
        if (row.value("version", -1) != kVersion) {
            bad("version mismatch");
            continue;
        }
        try {
            Poly key = parse_poly(row.at("key").get<std::string>());
            std::vector<FactorEntry> entries;
            for (const auto& item : row.at("factors")) {
                Poly prime = parse_poly(item.at(0).get<std::string>());
                uint32_t mult = item.at(1).get<uint32_t>();
                if (!is_irreducible(prime)) throw error(errc::domain, "factor not irreducible");
                entries.push_back({std::move(prime), mult});
            }
            Factorization f = Factorization::from_entries(std::move(entries));
            if (f.product() != key) throw error(errc::domain, "product does not match key");
            entries_.emplace(to_hex(key), std::move(f));
        } catch (const std::exception& e) {
            bad(e.what());
        }
    }
}

std::optional<Factorization> FactorCache::get(const Poly& p) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(to_hex(p));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void FactorCache::put(const Poly& p, const Factorization& f) {
    std::string key = to_hex(p);
    std::lock_guard lock(mu_);
    if (entries_.count(key)) return;
    nlohmann::ordered_json row;
    row["version"] = kVersion;
    row["key"] = key;
    auto factors = nlohmann::json::array();
    for (const auto& e : f.entries()) factors.push_back({to_hex(e.prime), e.multiplicity});
    row["factors"] = std::move(factors);
    std::ofstream out(path_, std::ios::app);
    if (!out) raise(errc::io, "cannot open cache file for append: " + path_);
    out << row.dump() << '\n';
    entries_.emplace(std::move(key), f);
}

size_t FactorCache::size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
}

Factorization factorize_cached(const Poly& p, uint64_t seed, FactorCache* cache) {
    if (cache) {
        if (auto hit = cache->get(p)) return *hit;
    }
    Factorization f = factorize(p, seed);
    if (cache) cache->put(p, f);
    return f;
}

}  // namespace pp
