#include "vcne/reference.hpp"

namespace vcne::reference {

namespace {

void accumulate(const Graph& graph, const EmbeddingTable& e, TrainMode mode, const std::vector<double>& inv_w,
                Gradient& g) {
  std::vector<double> msg(e.dim());
  for (const Edge& edge : graph.edges()) {
    double w = edge.weight;
    if (w > 0.0 && !inv_w.empty()) w *= inv_w[edge.dst];
    if (mode == TrainMode::vcne)
      edge_gradient(w, e.row(edge.src), msg);
    else
      line1_gradient(w, e.row(edge.dst), e.row(edge.src), msg);
    auto acc = g.sum.row(edge.dst);
    for (std::size_t k = 0; k < msg.size(); ++k) acc[k] += msg[k];
    ++g.received[edge.dst];
  }
}

EmbeddingTable apply(const Gradient& g, const EmbeddingTable& e, double eta) {
  EmbeddingTable next = e;
  for (std::size_t v = 0; v < e.rows(); ++v)
    if (g.received[v] > 0) vertex_update(e.row(v), g.sum.row(v), eta, next.row(v));
  return next;
}

}  // namespace

Gradient gradient(const Graph& augmented, const EmbeddingTable& e, TrainMode mode) {
  Gradient g{EmbeddingTable(e.rows(), e.dim()), std::vector<std::size_t>(e.rows(), 0)};
  accumulate(augmented, e, mode, {}, g);
  return g;
}

double objective(const Graph& augmented, const EmbeddingTable& e) {
  double total = 0.0;
  for (const Edge& edge : augmented.edges()) total += edge.weight * dot(e.row(edge.dst), e.row(edge.src));
  return total;
}

EmbeddingTable step(const Graph& augmented, const EmbeddingTable& e, double eta, TrainMode mode) {
  return apply(gradient(augmented, e, mode), e, eta);
}

EmbeddingTable train(const Graph& g, const TrainConfig& cfg, const IterationObserver& observer) {
  cfg.validate();
  const std::vector<double> inv_w = cfg.weight_normalized ? inverse_in_weights(g) : std::vector<double>{};
  EmbeddingTable table = init_embeddings(g.num_vertices(), cfg);
  for (std::size_t it = 0; it < cfg.iterations; ++it) {
    Graph negatives = sample_negative_graph(g, cfg.sampler(), it);
    Gradient grad{EmbeddingTable(table.rows(), table.dim()), std::vector<std::size_t>(table.rows(), 0)};
    accumulate(g, table, cfg.mode, inv_w, grad);
    accumulate(negatives, table, cfg.mode, inv_w, grad);
    table = apply(grad, table, cfg.learning_rate);
    if (observer) observer(it, table);
  }
  return table;
}

}  // namespace vcne::reference
