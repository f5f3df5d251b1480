#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "edgereg/betti.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/ideal.hpp"

namespace edgereg {

// Memoized invariant records. Edge ideals are keyed by the literal graph6
// string of the labeled graph plus the field tag, so relabeled copies of a
// graph are separate entries. Other ideals are keyed by their generator
// text. Safe for concurrent lookups and inserts.
//
// With a backing file, every fresh record is appended as one JSON line
// {"key", "invariants", "betti_digest"}.
class InvariantCache {
 public:
  explicit InvariantCache(Field field, BettiOptions options = {});
  ~InvariantCache();

  InvariantCache(const InvariantCache&) = delete;
  InvariantCache& operator=(const InvariantCache&) = delete;

  Field field() const { return field_; }
  const BettiOptions& options() const { return options_; }
  int max_vars() const { return options_.max_vars; }

  InvariantRecord edge_ideal_invariants(const Graph& g);
  InvariantRecord ideal_invariants(const SquarefreeIdeal& ideal);
  // Records the invariants of an already computed table for I(g) (no-op on
  // a hit) and returns the cached record.
  InvariantRecord remember(const Graph& g, const BettiTable& table);
  int reg(const Graph& g) { return edge_ideal_invariants(g).reg_ideal; }
  int pd(const Graph& g) { return edge_ideal_invariants(g).pd_quotient; }

  // Reads an existing cache file (unreadable lines are skipped with a
  // warning on `warnings`) and appends new records to it from now on.
  // Returns the number of records loaded.
  std::size_t attach_file(const std::filesystem::path& path, std::ostream& warnings);

  std::size_t hits() const { return hits_.load(); }
  std::size_t misses() const { return misses_.load(); }
  std::size_t size() const;

  std::string edge_key(const Graph& g) const;
  std::string ideal_key(const SquarefreeIdeal& ideal) const;

 private:
  InvariantRecord lookup_or_compute(const std::string& key, const SquarefreeIdeal& ideal);
  std::optional<InvariantRecord> find(const std::string& key);
  InvariantRecord store(const std::string& key, InvariantRecord rec, const std::string& digest);

  Field field_;
  BettiOptions options_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, InvariantRecord> records_;
  std::mutex file_mutex_;
  std::optional<std::ofstream> file_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

}  // namespace edgereg
