#include "vcne/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "vcne/error.hpp"
#include "vcne/hash.hpp"

namespace vcne {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) noexcept {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::uint64_t unordered_key(VertexId a, VertexId b) noexcept {
  return a < b ? pair_key(a, b) : pair_key(b, a);
}

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n\v\f";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view tok, T& value) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if constexpr (std::is_floating_point_v<T>) {
    if (!tok.empty() && tok.front() == '+') ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

}  // namespace

std::string_view to_string(PartitionStrategy s) {
  return s == PartitionStrategy::hash_src ? "hash-src" : "hash-edge";
}

PartitionStrategy parse_partition_strategy(std::string_view name) {
  if (name == "hash-src") return PartitionStrategy::hash_src;
  if (name == "hash-edge") return PartitionStrategy::hash_edge;
  throw ValidationError("unknown partition strategy '" + std::string(name) + "'");
}

std::size_t partition_of(const Edge& e, std::size_t partitions, PartitionStrategy strategy) noexcept {
  if (partitions <= 1) return 0;
  const std::uint64_t h =
      strategy == PartitionStrategy::hash_src ? mix64(e.src) : mix64(pair_key(e.src, e.dst));
  return static_cast<std::size_t>(h % partitions);
}

// ---------------------------------------------------------------------------
// Graph

struct Graph::Derived {
  std::once_flag once;
  std::vector<std::uint32_t> degrees;
  std::vector<std::size_t> offsets;
  std::vector<VertexId> neighbors;
};

Graph::Graph() : block_offsets_{0, 0}, derived_(std::make_shared<Derived>()) {}

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges, std::size_t partitions,
             PartitionStrategy strategy)
    : num_vertices_(num_vertices), strategy_(strategy), derived_(std::make_shared<Derived>()) {
  if (partitions == 0) throw ValidationError("partition count must be >= 1");
  if (num_vertices > std::numeric_limits<VertexId>::max())
    throw ValidationError("vertex count exceeds 32-bit id range");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    if (e.src >= num_vertices || e.dst >= num_vertices)
      throw ValidationError("edge " + std::to_string(k) + " (" + std::to_string(e.src) + "->" +
                            std::to_string(e.dst) + ") has endpoint >= " + std::to_string(num_vertices));
    if (e.src == e.dst)
      throw ValidationError("edge " + std::to_string(k) + " is a self-loop on vertex " + std::to_string(e.src));
    if (e.weight == 0.0 || !std::isfinite(e.weight))
      throw ValidationError("edge " + std::to_string(k) + " (" + std::to_string(e.src) + "->" +
                            std::to_string(e.dst) + ") has invalid weight");
  }

  block_offsets_.assign(partitions + 1, 0);
  if (partitions == 1) {
    edges_ = std::move(edges);
    block_offsets_[1] = edges_.size();
    return;
  }
  // Stable counting sort by block keeps input order inside each block.
  std::vector<std::uint32_t> block_of(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    block_of[k] = static_cast<std::uint32_t>(partition_of(edges[k], partitions, strategy));
    ++block_offsets_[block_of[k] + 1];
  }
  std::partial_sum(block_offsets_.begin(), block_offsets_.end(), block_offsets_.begin());
  edges_.resize(edges.size());
  std::vector<std::size_t> cursor(block_offsets_.begin(), block_offsets_.end() - 1);
  for (std::size_t k = 0; k < edges.size(); ++k) edges_[cursor[block_of[k]]++] = edges[k];
}

std::span<const Edge> Graph::block(std::size_t p) const {
  if (p >= num_partitions()) throw ValidationError("partition index out of range");
  return std::span<const Edge>(edges_).subspan(block_offsets_[p], block_offsets_[p + 1] - block_offsets_[p]);
}

const Graph::Derived& Graph::derived() const {
  std::call_once(derived_->once, [this] {
    Derived& d = *derived_;
    std::vector<std::size_t> counts(num_vertices_ + 1, 0);
    for (const Edge& e : edges_) {
      ++counts[e.src + 1];
      ++counts[e.dst + 1];
    }
    std::partial_sum(counts.begin(), counts.end(), counts.begin());
    std::vector<VertexId> flat(counts.back());
    std::vector<std::size_t> cursor(counts.begin(), counts.end() - 1);
    for (const Edge& e : edges_) {
      flat[cursor[e.src]++] = e.dst;
      flat[cursor[e.dst]++] = e.src;
    }
    d.degrees.assign(num_vertices_, 0);
    d.offsets.assign(num_vertices_ + 1, 0);
    std::size_t out = 0;
    for (std::size_t v = 0; v < num_vertices_; ++v) {
      auto first = flat.begin() + static_cast<std::ptrdiff_t>(counts[v]);
      auto last = flat.begin() + static_cast<std::ptrdiff_t>(counts[v + 1]);
      std::sort(first, last);
      auto uend = std::unique(first, last);
      d.offsets[v] = out;
      for (auto it = first; it != uend; ++it) flat[out++] = *it;
      d.degrees[v] = static_cast<std::uint32_t>(out - d.offsets[v]);
    }
    d.offsets[num_vertices_] = out;
    flat.resize(out);
    flat.shrink_to_fit();
    d.neighbors = std::move(flat);
  });
  return *derived_;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= num_vertices_)
    throw ValidationError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(num_vertices_) + ")");
}

std::size_t Graph::degree(VertexId v) const {
  check_vertex(v);
  return derived().degrees[v];
}

std::span<const std::uint32_t> Graph::degrees() const { return derived().degrees; }

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  const Derived& d = derived();
  return std::span<const VertexId>(d.neighbors).subspan(d.offsets[v], d.offsets[v + 1] - d.offsets[v]);
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  auto n = neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

std::size_t Graph::num_undirected_edges() const {
  const Derived& d = derived();
  return d.neighbors.size() / 2;
}

Graph partition_edges(const Graph& g, std::size_t partitions, PartitionStrategy strategy) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  return Graph(g.num_vertices(), std::move(edges), partitions, strategy);
}

Graph graph_union(const Graph& g, const Graph& h) {
  if (g.num_vertices() != h.num_vertices())
    throw ValidationError("union of graphs with " + std::to_string(g.num_vertices()) + " and " +
                          std::to_string(h.num_vertices()) + " vertices");
  std::vector<Edge> edges;
  edges.reserve(g.num_edges() + h.num_edges());
  edges.insert(edges.end(), g.edges().begin(), g.edges().end());
  edges.insert(edges.end(), h.edges().begin(), h.edges().end());
  return Graph(g.num_vertices(), std::move(edges), g.num_partitions(), g.strategy());
}

// ---------------------------------------------------------------------------
// RemapTable

RemapTable RemapTable::identity(std::size_t n) {
  RemapTable t;
  t.to_external_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.intern(i);
  return t;
}

VertexId RemapTable::intern(ExternalId id) {
  auto [it, inserted] = to_dense_.try_emplace(id, static_cast<VertexId>(to_external_.size()));
  if (inserted) to_external_.push_back(id);
  return it->second;
}

std::optional<VertexId> RemapTable::find(ExternalId id) const {
  auto it = to_dense_.find(id);
  if (it == to_dense_.end()) return std::nullopt;
  return it->second;
}

void RemapTable::write(std::ostream& out) const {
  for (std::size_t v = 0; v < to_external_.size(); ++v) out << to_external_[v] << ' ' << v << '\n';
}

void RemapTable::write(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write(out);
  if (!out) throw IoError("write failed: " + path.string());
}

RemapTable RemapTable::read(std::istream& in, const std::string& source) {
  std::vector<std::pair<VertexId, ExternalId>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto toks = split_ws(t);
    ExternalId ext = 0;
    VertexId dense = 0;
    if (toks.size() != 2 || !parse_number(toks[0], ext) || !parse_number(toks[1], dense))
      throw ParseError(source, lineno, "expected `external_id dense_id`");
    rows.emplace_back(dense, ext);
  }
  std::sort(rows.begin(), rows.end());
  RemapTable t;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].first != k) throw ValidationError(source + ": dense ids are not contiguous from 0");
    if (t.find(rows[k].second)) throw ValidationError(source + ": duplicate external id " + std::to_string(rows[k].second));
    t.intern(rows[k].second);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Edge-list IO

LoadedGraph parse_edge_list(std::istream& in, bool undirected, const std::string& source) {
  struct Entry {
    VertexId a, b;
    double w;
  };
  LoadedGraph result;
  std::vector<Entry> entries;
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto toks = split_ws(t);
    if (toks.size() != 2 && toks.size() != 3)
      throw ParseError(source, lineno, "expected `src dst [weight]`, got " + std::to_string(toks.size()) + " fields");
    ExternalId src = 0, dst = 0;
    double w = 1.0;
    if (!parse_number(toks[0], src) || !parse_number(toks[1], dst))
      throw ParseError(source, lineno, "vertex ids must be non-negative integers");
    if (toks.size() == 3 && (!parse_number(toks[2], w) || !std::isfinite(w)))
      throw ParseError(source, lineno, "weight is not a finite number");
    if (w == 0.0) throw ValidationError(source + ":" + std::to_string(lineno) + ": zero edge weight");
    if (src == dst) {
      ++result.skipped_self_loops;
      continue;
    }
    VertexId a = result.remap.intern(src);
    VertexId b = result.remap.intern(dst);
    std::uint64_t key = undirected ? unordered_key(a, b) : pair_key(a, b);
    auto [it, inserted] = index.try_emplace(key, entries.size());
    if (inserted) {
      entries.push_back({a, b, w});
    } else {
      entries[it->second].w = w;
      ++result.duplicate_edges;
    }
  }
  std::vector<Edge> edges;
  edges.reserve(entries.size() * (undirected ? 2 : 1));
  for (const Entry& e : entries) {
    edges.push_back({e.a, e.b, e.w});
    if (undirected) edges.push_back({e.b, e.a, e.w});
  }
  result.graph = Graph(result.remap.size(), std::move(edges));
  return result;
}

LoadedGraph load_edge_list(const std::filesystem::path& path, bool undirected) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list " + path.string());
  return parse_edge_list(in, undirected, path.string());
}

void write_edge_list(const std::filesystem::path& path, const Graph& g, const RemapTable& remap, bool undirected) {
  if (remap.size() != g.num_vertices())
    throw ValidationError("remap table has " + std::to_string(remap.size()) + " ids for " +
                          std::to_string(g.num_vertices()) + " vertices");
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  std::unordered_set<std::uint64_t> seen;
  char buf[64];
  for (const Edge& e : g.edges()) {
    if (undirected && !seen.insert(unordered_key(e.src, e.dst)).second) continue;
    out << remap.external(e.src) << ' ' << remap.external(e.dst);
    if (e.weight != 1.0) {
      std::snprintf(buf, sizeof buf, " %.17g", e.weight);
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace vcne
