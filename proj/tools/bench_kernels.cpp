// Times one gradient superstep of the OpenMP engine against the serial
// reference kernels on a synthetic block-model graph.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>

#include "vcne/engine.hpp"
#include "vcne/reference.hpp"
#include "vcne/sampler.hpp"
#include "vcne/synthetic.hpp"
#include "vcne/trainer.hpp"

namespace {

template <class F>
double mean_ms(std::size_t reps, F&& f) {
  f();  // warm-up
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t r = 0; r < reps; ++r) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / static_cast<double>(reps);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"engine vs serial reference superstep timing"};
  std::size_t blocks = 4, block_size = 2500, dim = 64, reps = 5, partitions = 0;
  double p_in = 0.004, p_out = 0.0004;
  std::vector<int> threads{1};
  app.add_option("--blocks", blocks)->capture_default_str();
  app.add_option("--block-size", block_size)->capture_default_str();
  app.add_option("--p-in", p_in)->capture_default_str();
  app.add_option("--p-out", p_out)->capture_default_str();
  app.add_option("--dim", dim)->capture_default_str();
  app.add_option("--reps", reps)->capture_default_str();
  app.add_option("--partitions", partitions, "0: one per thread")->capture_default_str();
  app.add_option("--threads", threads, "thread counts to time")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  vcne::SbmSpec spec;
  spec.block_sizes.assign(blocks, block_size);
  spec.p_in = p_in;
  spec.p_out = p_out;
  const vcne::Graph g = vcne::generate_sbm(spec).graph;
  vcne::TrainConfig cfg;
  cfg.dim = dim;
  const vcne::Graph neg = vcne::sample_negative_graph(g, cfg.sampler(), 0);
  const vcne::EmbeddingTable e = vcne::init_embeddings(g.num_vertices(), cfg);

  std::printf("graph: %zu vertices, %zu directed edges, %zu negatives, dim %zu\n", g.num_vertices(), g.num_edges(),
              neg.num_edges(), dim);
  const vcne::Graph aug1 = vcne::graph_union(g, neg);
  const double serial = mean_ms(reps, [&] { (void)vcne::reference::step(aug1, e, cfg.learning_rate); });
  std::printf("impl\tthreads\tpartitions\tms_per_step\tspeedup\n");
  std::printf("reference\t1\t-\t%.3f\t1.00\n", serial);
  for (int t : threads) {
    const std::size_t p = partitions ? partitions : static_cast<std::size_t>(std::max(1, t));
    const vcne::Graph aug = vcne::partition_edges(aug1, p, vcne::PartitionStrategy::hash_edge);
    vcne::BspEngine engine(vcne::EngineOptions{t});
    const double ms = mean_ms(reps, [&] { (void)vcne::gradient_step(engine, aug, e, cfg.learning_rate); });
    std::printf("engine\t%d\t%zu\t%.3f\t%.2f\n", t, p, ms, serial / ms);
  }
  return 0;
}
