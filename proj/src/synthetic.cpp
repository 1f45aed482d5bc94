#include "vcne/synthetic.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "vcne/error.hpp"
#include "vcne/hash.hpp"

namespace vcne {

namespace {

// Visits each index in [0, count) independently with probability p.
template <class F>
void bernoulli_indices(std::uint64_t count, double p, std::mt19937_64& rng, F&& visit) {
  if (p <= 0.0 || count == 0) return;
  if (p >= 1.0) {
    for (std::uint64_t k = 0; k < count; ++k) visit(k);
    return;
  }
  std::geometric_distribution<std::uint64_t> skip(p);
  for (std::uint64_t k = skip(rng); k < count; k += 1 + skip(rng)) visit(k);
}

}  // namespace

SbmGraph generate_sbm(const SbmSpec& spec) {
  if (spec.block_sizes.empty()) throw ValidationError("SBM needs at least one block");
  for (double p : {spec.p_in, spec.p_out})
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("SBM probabilities must lie in [0, 1]");
  std::vector<std::size_t> start(spec.block_sizes.size() + 1, 0);
  std::partial_sum(spec.block_sizes.begin(), spec.block_sizes.end(), start.begin() + 1);
  const std::size_t n = start.back();

  SbmGraph out;
  out.block_of.resize(n);
  for (std::size_t b = 0; b < spec.block_sizes.size(); ++b)
    std::fill(out.block_of.begin() + static_cast<std::ptrdiff_t>(start[b]),
              out.block_of.begin() + static_cast<std::ptrdiff_t>(start[b + 1]), static_cast<std::uint32_t>(b));

  std::mt19937_64 rng(stream_seed(spec.seed, 0x5B11ull));
  std::vector<Edge> edges;
  auto add = [&](std::size_t a, std::size_t b) {
    edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b), 1.0});
    edges.push_back({static_cast<VertexId>(b), static_cast<VertexId>(a), 1.0});
  };
  for (std::size_t a = 0; a < spec.block_sizes.size(); ++a) {
    const std::uint64_t s = spec.block_sizes[a];
    // Row-major walk over the strict upper triangle of the block.
    std::uint64_t row = 1, row_start = 0;
    bernoulli_indices(s * (s - 1) / 2 * (s > 1), spec.p_in, rng, [&](std::uint64_t k) {
      while (k >= row_start + row) {
        row_start += row;
        ++row;
      }
      add(start[a] + row, start[a] + (k - row_start));
    });
    for (std::size_t b = a + 1; b < spec.block_sizes.size(); ++b) {
      const std::uint64_t t = spec.block_sizes[b];
      bernoulli_indices(s * t, spec.p_out, rng, [&](std::uint64_t k) { add(start[a] + k / t, start[b] + k % t); });
    }
  }
  out.graph = Graph(n, std::move(edges));
  return out;
}

eval::LabelMatrix block_labels(const std::vector<std::uint32_t>& block_of, std::size_t blocks) {
  eval::LabelMatrix y(block_of.size(), blocks);
  for (std::size_t v = 0; v < block_of.size(); ++v) y.row(v)[block_of[v]] = 1;
  return y;
}

eval::Matrix noise_features(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  eval::Matrix x(rows, cols);
  std::mt19937_64 rng(stream_seed(seed, 0xF0155Eull));
  std::normal_distribution<double> dist(0.0, 1.0);
  for (double& v : x.data) v = dist(rng);
  return x;
}

eval::VertexSplits random_vertex_splits(std::size_t n, double train_fraction, double validation_fraction,
                                        std::uint64_t seed) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::mt19937_64 rng(stream_seed(seed, 0x5711ull));
  std::shuffle(order.begin(), order.end(), rng);
  const auto n_train = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(n)));
  const auto n_val = static_cast<std::size_t>(std::llround(validation_fraction * static_cast<double>(n)));
  if (n_train + n_val > n) throw ValidationError("split fractions exceed 1");
  eval::VertexSplits s;
  s.train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
  s.validation.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train),
                      order.begin() + static_cast<std::ptrdiff_t>(n_train + n_val));
  s.test.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train + n_val), order.end());
  for (auto* v : {&s.train, &s.validation, &s.test}) std::sort(v->begin(), v->end());
  return s;
}

}  // namespace vcne
