#include "vcne/trainer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "vcne/hash.hpp"

namespace vcne {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double clamp_arg(double x) noexcept { return std::clamp(x, -kSigmoidClamp, kSigmoidClamp); }

double log_sigmoid(double x) noexcept { return -std::log1p(std::exp(-clamp_arg(x))); }

struct StepTimes {
  double step_ms = 0.0;
  double norm_ms = 0.0;
};

// The ascent update and the unit-norm projection run as two timed passes;
// together they compute vertex_update for every vertex that received a message.
EmbeddingTable run_step(BspEngine& engine, const Graph& augmented, const EmbeddingTable& e, double eta,
                        TrainMode mode, bool normalize, std::span<const double> inv_in_weight,
                        StepTimes* times) {
  const std::size_t n = e.rows();
  std::vector<std::uint8_t> touched(n, 0);
  auto apply = [&](VertexId v, std::span<const double> u, std::span<const double> m, std::span<double> out) {
    for (std::size_t k = 0; k < u.size(); ++k) out[k] = u[k] + eta * m[k];
    touched[v] = 1;
  };
  auto t0 = Clock::now();
  EmbeddingTable next;
  if (mode == TrainMode::vcne) {
    auto send = [&](const Edge& edge, std::span<const double> src, std::span<const double>, std::span<double> out) {
      double w = edge.weight;
      if (edge.weight > 0.0 && !inv_in_weight.empty()) w *= inv_in_weight[edge.dst];
      edge_gradient(w, src, out);
    };
    next = engine.superstep(augmented, e, send, apply);
  } else {
    auto send = [&](const Edge& edge, std::span<const double> src, std::span<const double> dst,
                    std::span<double> out) {
      double w = edge.weight;
      if (edge.weight > 0.0 && !inv_in_weight.empty()) w *= inv_in_weight[edge.dst];
      line1_gradient(w, dst, src, out);
    };
    next = engine.superstep(augmented, e, send, apply);
  }
  auto t1 = Clock::now();
  if (normalize) {
    const auto ni = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) num_threads(engine.threads())
    for (std::int64_t iv = 0; iv < ni; ++iv) {
      const auto v = static_cast<std::size_t>(iv);
      if (!touched[v]) continue;
      auto row = next.row(v);
      const double len = norm(row);
      if (len < kDegenerateNorm) {
        auto old = e.row(v);
        std::copy(old.begin(), old.end(), row.begin());
      } else {
        for (double& x : row) x /= len;
      }
    }
  }
  if (times) {
    times->step_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    times->norm_ms = ms_since(t1);
  }
  return next;
}

}  // namespace

std::string_view to_string(TrainMode m) { return m == TrainMode::vcne ? "vcne" : "line1"; }

TrainMode parse_train_mode(std::string_view name) {
  if (name == "vcne") return TrainMode::vcne;
  if (name == "line1") return TrainMode::line1;
  throw ValidationError("unknown training mode '" + std::string(name) + "'");
}

SamplerConfig TrainConfig::sampler() const {
  SamplerConfig s;
  s.negative_ratio = negative_ratio;
  s.seed = seed;
  s.exclude_true_neighbors = exclude_true_neighbors;
  s.max_rejections = max_rejections;
  s.degree_biased = degree_biased;
  s.threads = threads;
  return s;
}

void TrainConfig::validate() const {
  if (dim < 1) throw ValidationError("embedding dimension must be >= 1");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) throw ValidationError("learning rate must be > 0");
  if (!(negative_ratio > 0.0) || !std::isfinite(negative_ratio)) throw ValidationError("negative ratio must be > 0");
  if (partitions < 1) throw ValidationError("partition count must be >= 1");
}

void TrainReport::write_tsv(std::ostream& out) const {
  char buf[256];
  for (const auto& r : iterations) {
    std::snprintf(buf, sizeof buf, "%zu\t%.10g\t%.3f\t%.3f\t%.3f\t%.3f\n", r.iteration, r.objective, r.t_sample_ms,
                  r.t_union_ms, r.t_step_ms, r.t_norm_ms);
    out << buf;
  }
}

EmbeddingTable init_embeddings(std::size_t num_vertices, const TrainConfig& cfg) {
  if (num_vertices < 1) throw ValidationError("cannot initialise embeddings for an empty graph");
  if (cfg.dim < 1) throw ValidationError("embedding dimension must be >= 1");
  EmbeddingTable table(num_vertices, cfg.dim);
  const double half = 0.5 / static_cast<double>(cfg.dim);
  for (std::size_t i = 0; i < num_vertices; ++i) {
    std::mt19937_64 rng(stream_seed(cfg.seed, 0x1A17ull, i));
    std::uniform_real_distribution<double> dist(-half, half);
    auto row = table.row(i);
    for (double& x : row) x = dist(rng);
    double len = norm(row);
    if (len < kDegenerateNorm) {
      std::fill(row.begin(), row.end(), 0.0);
      row[0] = 1.0;
    } else {
      for (double& x : row) x /= len;
    }
  }
  return table;
}

void edge_gradient(double w, std::span<const double> u_source, std::span<double> out) noexcept {
  for (std::size_t k = 0; k < u_source.size(); ++k) out[k] = w * u_source[k];
}

std::vector<double> edge_gradient(double w, std::span<const double> u_source) {
  std::vector<double> out(u_source.size());
  edge_gradient(w, u_source, out);
  return out;
}

double sigmoid(double x) noexcept { return 1.0 / (1.0 + std::exp(-clamp_arg(x))); }

void line1_gradient(double w, std::span<const double> u_target, std::span<const double> u_source,
                    std::span<double> out) noexcept {
  const double s = w > 0.0 ? 1.0 : -1.0;
  const double coef = w * sigmoid(-s * dot(u_target, u_source));
  for (std::size_t k = 0; k < u_source.size(); ++k) out[k] = coef * u_source[k];
}

void vertex_update(std::span<const double> u, std::span<const double> m, double eta, std::span<double> out) noexcept {
  for (std::size_t k = 0; k < u.size(); ++k) out[k] = u[k] + eta * m[k];
  const double len = norm(out);
  if (len < kDegenerateNorm) {
    std::copy(u.begin(), u.end(), out.begin());
    return;
  }
  for (double& x : out) x /= len;
}

std::vector<double> vertex_update(std::span<const double> u, std::span<const double> m, double eta) {
  std::vector<double> out(u.size());
  vertex_update(u, m, eta, out);
  return out;
}

double objective(BspEngine& engine, const Graph& augmented, const EmbeddingTable& e, TrainMode mode) {
  MergedMessages merged;
  if (mode == TrainMode::vcne) {
    merged = engine.gather(augmented, e, 1,
                           [](const Edge& edge, std::span<const double> src, std::span<const double> dst,
                              std::span<double> out) { out[0] = edge.weight * dot(dst, src); });
  } else {
    merged = engine.gather(augmented, e, 1,
                           [](const Edge& edge, std::span<const double> src, std::span<const double> dst,
                              std::span<double> out) {
                             const double s = edge.weight > 0.0 ? 1.0 : -1.0;
                             out[0] = std::abs(edge.weight) * log_sigmoid(s * dot(dst, src));
                           });
  }
  double total = 0.0;
  for (double x : merged.values) total += x;
  return total;
}

double objective(const Graph& augmented, const EmbeddingTable& e, TrainMode mode) {
  BspEngine engine;
  return objective(engine, augmented, e, mode);
}

EmbeddingTable gradient_step(BspEngine& engine, const Graph& augmented, const EmbeddingTable& e, double eta,
                             TrainMode mode, bool normalize, std::span<const double> inv_in_weight) {
  return run_step(engine, augmented, e, eta, mode, normalize, inv_in_weight, nullptr);
}

std::vector<double> inverse_in_weights(const Graph& g) {
  std::vector<double> w(g.num_vertices(), 0.0);
  for (const Edge& e : g.edges())
    if (e.weight > 0.0) w[e.dst] += e.weight;
  for (double& x : w) x = x > 0.0 ? 1.0 / x : 0.0;
  return w;
}

TrainResult train(const Graph& g, const TrainConfig& cfg, const IterationObserver& observer) {
  cfg.validate();
  if (g.num_vertices() == 0) throw ValidationError("cannot train on an empty graph");
  const Graph base = (g.num_partitions() == cfg.partitions && g.strategy() == cfg.strategy)
                         ? g
                         : partition_edges(g, cfg.partitions, cfg.strategy);
  const std::vector<double> inv_w = cfg.weight_normalized ? inverse_in_weights(base) : std::vector<double>{};
  const SamplerConfig sampler = cfg.sampler();

  BspEngine engine({cfg.threads});
  TrainResult result{init_embeddings(g.num_vertices(), cfg), {}};
  result.report.iterations.reserve(cfg.iterations);

  for (std::size_t it = 0; it < cfg.iterations; ++it) {
    IterationRecord rec;
    rec.iteration = it;
    auto t0 = Clock::now();
    Graph negatives = sample_negative_graph(base, sampler, it);
    rec.t_sample_ms = ms_since(t0);

    auto t1 = Clock::now();
    Graph augmented = graph_union(base, negatives);
    rec.t_union_ms = ms_since(t1);

    StepTimes times;
    EmbeddingTable next;
    try {
      next = run_step(engine, augmented, result.embeddings, cfg.learning_rate, cfg.mode, true, inv_w, &times);
    } catch (const SuperstepError& err) {
      throw TrainError(it, err.what());
    }
    rec.t_step_ms = times.step_ms;
    rec.t_norm_ms = times.norm_ms;
    if (!all_finite(next.data())) throw TrainError(it, "embedding table contains non-finite values");

    if (cfg.track_objective) rec.objective = objective(engine, augmented, next, cfg.mode);
    rec.t_total_ms = ms_since(t0);
    result.embeddings = std::move(next);
    result.report.iterations.push_back(rec);
    if (observer) observer(it, result.embeddings);
  }
  return result;
}

}  // namespace vcne
