#include "vcne/eval/link_dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "vcne/error.hpp"
#include "vcne/hash.hpp"

namespace vcne::eval {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) noexcept {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Below this vertex count negatives come from an explicit non-edge enumeration.
constexpr std::size_t kEnumerationLimit = 1000;

}  // namespace

LinkDataset make_link_dataset(const Graph& g, double holdout_fraction, std::uint64_t seed) {
  if (!(holdout_fraction > 0.0 && holdout_fraction < 1.0))
    throw ValidationError("holdout fraction must lie in (0, 1)");

  // Undirected pairs in first-seen order, with the weight of the first occurrence.
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::unordered_map<std::uint64_t, double> weight;
  for (const Edge& e : g.edges()) {
    if (weight.try_emplace(pair_key(e.src, e.dst), e.weight).second)
      pairs.emplace_back(std::min(e.src, e.dst), std::max(e.src, e.dst));
  }
  const std::size_t num_edges = pairs.size();
  const auto per_split = static_cast<std::size_t>(std::llround(holdout_fraction * static_cast<double>(num_edges)));
  if (per_split == 0) {
    const auto minimum = static_cast<std::size_t>(std::ceil(0.5 / holdout_fraction));
    throw ValidationError("holdout fraction " + std::to_string(holdout_fraction) + " of " +
                          std::to_string(num_edges) + " edges yields no positive pairs; need at least " +
                          std::to_string(minimum) + " undirected edges");
  }
  const std::size_t need = 3 * per_split;

  std::mt19937_64 rng(stream_seed(seed, 0x5EED11ull));
  std::shuffle(pairs.begin(), pairs.end(), rng);

  std::vector<std::size_t> remaining(g.num_vertices(), 0);
  for (const auto& [a, b] : pairs) {
    ++remaining[a];
    ++remaining[b];
  }
  std::vector<std::pair<VertexId, VertexId>> held;
  std::unordered_set<std::uint64_t> removed;
  for (const auto& [a, b] : pairs) {
    if (held.size() == need) break;
    if (remaining[a] <= 1 || remaining[b] <= 1) continue;
    --remaining[a];
    --remaining[b];
    held.emplace_back(a, b);
    removed.insert(pair_key(a, b));
  }
  if (held.size() < need)
    throw ValidationError("graph too small: only " + std::to_string(held.size()) + " of " + std::to_string(need) +
                          " held-out edges can be removed without isolating a vertex");

  // Negatives: uniform non-edges of the original graph, distinct across splits.
  std::vector<std::pair<VertexId, VertexId>> negatives;
  const std::size_t n = g.num_vertices();
  std::mt19937_64 neg_rng(stream_seed(seed, 0x5EED22ull));
  if (n < kEnumerationLimit) {
    std::vector<std::pair<VertexId, VertexId>> candidates;
    for (VertexId a = 0; a < n; ++a) {
      auto nb = g.neighbors(a);
      for (VertexId b = a + 1; b < n; ++b)
        if (!std::binary_search(nb.begin(), nb.end(), b)) candidates.emplace_back(a, b);
    }
    if (candidates.size() < need)
      throw ValidationError("graph too dense: " + std::to_string(candidates.size()) + " non-edges for " +
                            std::to_string(need) + " negative pairs");
    std::shuffle(candidates.begin(), candidates.end(), neg_rng);
    negatives.assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(need));
  } else {
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    std::unordered_set<std::uint64_t> chosen;
    const std::size_t max_attempts = 1000 * need + 10000;
    for (std::size_t attempt = 0; negatives.size() < need && attempt < max_attempts; ++attempt) {
      VertexId a = pick(neg_rng), b = pick(neg_rng);
      if (a == b || g.adjacent(a, b)) continue;
      if (!chosen.insert(pair_key(a, b)).second) continue;
      negatives.emplace_back(std::min(a, b), std::max(a, b));
    }
    if (negatives.size() < need) throw ValidationError("could not sample enough non-edges; graph too dense");
  }

  LinkDataset ds;
  std::vector<LabeledPair>* splits[3] = {&ds.train, &ds.validation, &ds.test};
  for (std::size_t s = 0; s < 3; ++s) {
    auto& split = *splits[s];
    split.reserve(2 * per_split);
    for (std::size_t k = s * per_split; k < (s + 1) * per_split; ++k)
      split.push_back({held[k].first, held[k].second, 1});
    for (std::size_t k = s * per_split; k < (s + 1) * per_split; ++k)
      split.push_back({negatives[k].first, negatives[k].second, 0});
  }

  std::vector<Edge> core;
  core.reserve(2 * (num_edges - need));
  for (const Edge& e : g.edges()) {
    if (removed.count(pair_key(e.src, e.dst))) continue;
    core.push_back(e);
  }
  // Symmetrise in case g stored only one direction of some pair.
  std::unordered_set<std::uint64_t> directed;
  for (const Edge& e : core) directed.insert((static_cast<std::uint64_t>(e.src) << 32) | e.dst);
  const std::size_t kept = core.size();
  for (std::size_t k = 0; k < kept; ++k) {
    const Edge e = core[k];
    if (!directed.count((static_cast<std::uint64_t>(e.dst) << 32) | e.src)) {
      core.push_back({e.dst, e.src, e.weight});
      directed.insert((static_cast<std::uint64_t>(e.dst) << 32) | e.src);
    }
  }
  ds.core_graph = Graph(n, std::move(core), g.num_partitions(), g.strategy());
  return ds;
}

std::vector<int> labels_of(std::span<const LabeledPair> pairs) {
  std::vector<int> labels;
  labels.reserve(pairs.size());
  for (const auto& p : pairs) labels.push_back(p.label);
  return labels;
}

void write_pairs(const std::filesystem::path& path, std::span<const LabeledPair> pairs, const RemapTable& remap) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const auto& p : pairs) out << remap.external(p.u) << ' ' << remap.external(p.v) << ' ' << p.label << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<LabeledPair> read_pairs(const std::filesystem::path& path, const RemapTable& remap) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open split file " + path.string());
  std::vector<LabeledPair> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first.front() == '#') continue;
    std::istringstream all(line);
    ExternalId a = 0, b = 0;
    int label = 0;
    std::string extra;
    if (!(all >> a >> b >> label) || (all >> extra) || (label != 0 && label != 1))
      throw ParseError(path.string(), lineno, "expected `src dst label` with label 0 or 1");
    auto da = remap.find(a), db = remap.find(b);
    if (!da || !db)
      throw ValidationError(path.string() + ":" + std::to_string(lineno) + ": vertex " +
                            std::to_string(!da ? a : b) + " has no embedding / is not in the graph");
    pairs.push_back({*da, *db, label});
  }
  return pairs;
}

}  // namespace vcne::eval
