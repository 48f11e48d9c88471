#include "pathdepth/betti.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "pathdepth/simplicial.hpp"

namespace pathdepth {

void BettiTable::set(std::size_t i, VertexSet subset, std::uint64_t value) {
  if (value == 0) {
    entries_.erase(BettiKey{i, subset});
  } else {
    entries_[BettiKey{i, subset}] = value;
  }
}

std::uint64_t BettiTable::at(std::size_t i, VertexSet subset) const {
  const auto it = entries_.find(BettiKey{i, subset});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<std::uint64_t> BettiTable::totals() const {
  std::vector<std::uint64_t> out(projective_dimension() + 1, 0);
  for (const auto& [key, value] : entries_) out[key.i] += value;
  return out;
}

std::size_t BettiTable::projective_dimension() const {
  std::size_t pd = 0;
  for (const auto& [key, value] : entries_) pd = std::max(pd, key.i);
  return pd;
}

nlohmann::json betti_to_json(const BettiTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : table.entries()) {
    std::vector<std::size_t> subset;
    for (auto v : elements(key.subset)) subset.push_back(v + 1);
    entries.push_back({{"i", key.i}, {"W", subset}, {"beta", value}});
  }
  return {{"field", table.field().name()}, {"entries", std::move(entries)}};
}

namespace {

void require_squarefree(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw Error("Hochster's formula needs a squarefree ideal; polarize first");
  if (ideal.num_vars() > kMaxVertices) throw Error("Hochster's formula supports at most 64 variables");
}

void collect_faces(VertexSet face, std::size_t next, std::size_t n, const std::vector<VertexSet>& nonfaces,
                   std::vector<VertexSet>& out) {
  out.push_back(face);
  for (std::size_t v = next; v < n; ++v) {
    const VertexSet candidate = face | (VertexSet{1} << v);
    if (std::any_of(nonfaces.begin(), nonfaces.end(), [&](VertexSet g) { return is_subset(g, candidate); })) {
      continue;
    }
    collect_faces(candidate, v + 1, n, nonfaces, out);
  }
}

// Shared state for one ideal: its faces and generator supports.
class HochsterSweep {
 public:
  HochsterSweep(const MonomialIdeal& ideal, FieldSpec field) : n_(ideal.num_vars()), field_(field) {
    for (const auto& g : ideal.generators()) supports_.push_back(g.support());
    collect_faces(0, 0, n_, supports_, faces_);
  }

  // Δ_W is a cone unless W is a union of generator supports.
  bool may_have_homology(VertexSet subset) const {
    VertexSet covered = 0;
    for (auto g : supports_) {
      if (is_subset(g, subset)) covered |= g;
    }
    return covered == subset;
  }

  std::map<std::size_t, std::uint64_t> betti(VertexSet subset) const {
    std::map<std::size_t, std::uint64_t> out;
    if (!may_have_homology(subset)) return out;
    std::vector<VertexSet> restricted;
    for (auto f : faces_) {
      if (is_subset(f, subset)) restricted.push_back(f);
    }
    const int size = cardinality(subset);
    for (const auto& [d, h] : reduced_homology_of_faces(restricted, field_)) {
      out[static_cast<std::size_t>(size - d - 1)] = h;
    }
    return out;
  }

 private:
  std::size_t n_;
  FieldSpec field_;
  std::vector<VertexSet> supports_;
  std::vector<VertexSet> faces_;
};

}  // namespace

BettiTable hochster_betti(const MonomialIdeal& ideal, FieldSpec field, const HochsterOptions& options) {
  require_squarefree(ideal);
  const std::size_t n = ideal.num_vars();
  const std::uint64_t total = n >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  if (n >= 63 || total > options.limits.max_subsets) {
    throw LimitExceeded("Hochster sweep over " + std::to_string(n) + " variables needs 2^" +
                        std::to_string(n) + " subsets, above the cap of " +
                        std::to_string(options.limits.max_subsets) +
                        " (raise PATHDEPTH_MAX_SUBSETS or query single subsets)");
  }

  BettiTable table(field, n);
  const HochsterSweep sweep(ideal, field);
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 64)));

  constexpr std::uint64_t kChunk = 256;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> done{0};
  std::mutex merge;
  std::exception_ptr failure;

  auto worker = [&] {
    std::vector<std::tuple<std::size_t, VertexSet, std::uint64_t>> local;
    try {
      while (true) {
        const auto begin = next.fetch_add(kChunk);
        if (begin >= total) break;
        const auto end = std::min(total, begin + kChunk);
        for (auto w = begin; w < end; ++w) {
          for (const auto& [i, value] : sweep.betti(w)) local.emplace_back(i, w, value);
        }
        const auto finished = done.fetch_add(end - begin) + (end - begin);
        if (options.progress) options.progress(finished, total);
      }
    } catch (...) {
      std::lock_guard lock(merge);
      if (!failure) failure = std::current_exception();
    }
    std::lock_guard lock(merge);
    for (const auto& [i, w, value] : local) table.set(i, w, value);
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

std::map<std::size_t, std::uint64_t> betti_at_subset(const MonomialIdeal& ideal, VertexSet subset,
                                                     FieldSpec field) {
  require_squarefree(ideal);
  if (!is_subset(subset, full_set(ideal.num_vars()))) throw Error("subset has a vertex outside the ring");
  return HochsterSweep(ideal, field).betti(subset);
}

std::size_t projective_dimension(const MonomialIdeal& ideal, FieldSpec field, const HochsterOptions& options) {
  return hochster_betti(ideal, field, options).projective_dimension();
}

std::size_t depth_squarefree(const MonomialIdeal& ideal, FieldSpec field, const HochsterOptions& options) {
  return ideal.num_vars() - projective_dimension(ideal, field, options);
}

std::size_t depth_general(const MonomialIdeal& ideal, FieldSpec field, const HochsterOptions& options) {
  if (ideal.is_squarefree()) return depth_squarefree(ideal, field, options);
  try {
    const auto polarized = polarize(ideal, options.limits);
    return ideal.num_vars() - projective_dimension(polarized.ideal, field, options);
  } catch (const LimitExceeded& e) {
    throw LimitExceeded(std::string(e.what()) +
                        "; test whether the maximal ideal is associated (socle test) instead");
  }
}

}  // namespace pathdepth
