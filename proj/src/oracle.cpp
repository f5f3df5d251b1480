#include "edgereg/oracle.hpp"

#include <ostream>

#include "edgereg/graph_io.hpp"
#include "edgereg/serialize.hpp"

namespace edgereg {

InvariantCache::InvariantCache(Field field, BettiOptions options) : field_(field), options_(options) {}

InvariantCache::~InvariantCache() = default;

std::string InvariantCache::edge_key(const Graph& g) const { return to_graph6(g) + "|" + to_string(field_); }

std::string InvariantCache::ideal_key(const SquarefreeIdeal& ideal) const {
  std::string key = "ideal:" + std::to_string(ideal.n_vars()) + ":";
  if (ideal.is_unit()) return key + "unit|" + to_string(field_);
  for (VertexSet g : ideal.generators()) key += hex64(g.bits()) + ",";
  return key + "|" + to_string(field_);
}

std::size_t InvariantCache::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

std::optional<InvariantRecord> InvariantCache::find(const std::string& key) {
  std::shared_lock lock(mutex_);
  if (auto it = records_.find(key); it != records_.end()) {
    ++hits_;
    return it->second;
  }
  return std::nullopt;
}

InvariantRecord InvariantCache::edge_ideal_invariants(const Graph& g) {
  const std::string key = edge_key(g);
  if (auto rec = find(key)) return *rec;
  return lookup_or_compute(key, edge_ideal(g));
}

InvariantRecord InvariantCache::ideal_invariants(const SquarefreeIdeal& ideal) {
  const std::string key = ideal_key(ideal);
  if (auto rec = find(key)) return *rec;
  return lookup_or_compute(key, ideal);
}

InvariantRecord InvariantCache::remember(const Graph& g, const BettiTable& table) {
  const std::string key = edge_key(g);
  if (auto rec = find(key)) return *rec;
  ++misses_;
  return store(key, invariants_from_table(edge_ideal(g), table), hex64(betti_digest(table)));
}

InvariantRecord InvariantCache::lookup_or_compute(const std::string& key, const SquarefreeIdeal& ideal) {
  ++misses_;
  if (ideal.is_zero()) return store(key, invariants(ideal, field_, options_), hex64(0));
  const BettiTable table = betti_table(ideal, field_, options_);
  return store(key, invariants_from_table(ideal, table), hex64(betti_digest(table)));
}

// A concurrent computation of the same key may have won; its record is
// kept and returned so every caller sees one value.
InvariantRecord InvariantCache::store(const std::string& key, InvariantRecord rec, const std::string& digest) {
  bool inserted = false;
  {
    std::unique_lock lock(mutex_);
    auto [it, fresh] = records_.emplace(key, std::move(rec));
    inserted = fresh;
    rec = it->second;
  }
  if (inserted) {
    std::lock_guard lock(file_mutex_);
    if (file_) {
      *file_ << json{{"key", key}, {"invariants", rec}, {"betti_digest", digest}}.dump() << '\n';
      file_->flush();
    }
  }
  return rec;
}

std::size_t InvariantCache::attach_file(const std::filesystem::path& path, std::ostream& warnings) {
  std::size_t loaded = 0;
  {
    std::ifstream in(path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        const json j = json::parse(line);
        const std::string key = j.at("key").get<std::string>();
        InvariantRecord rec = j.at("invariants").get<InvariantRecord>();
        std::unique_lock lock(mutex_);
        if (records_.emplace(key, std::move(rec)).second) ++loaded;
      } catch (const std::exception& err) {
        warnings << "warning: " << path.string() << ":" << lineno << ": skipping unreadable cache line (" << err.what()
                 << ")\n";
      }
    }
  }
  std::lock_guard lock(file_mutex_);
  file_.emplace(path, std::ios::app);
  if (!*file_) throw std::runtime_error("cannot open cache file " + path.string() + " for appending");
  return loaded;
}

}  // namespace edgereg
