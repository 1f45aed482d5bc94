#include "vcne/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "vcne/embedding_io.hpp"
#include "vcne/error.hpp"
#include "vcne/eval/jaccard.hpp"
#include "vcne/eval/link_dataset.hpp"
#include "vcne/eval/link_eval.hpp"
#include "vcne/eval/vertex_classification.hpp"
#include "vcne/graph.hpp"
#include "vcne/synthetic.hpp"
#include "vcne/trainer.hpp"

namespace fs = std::filesystem;

namespace vcne::cli {

namespace {

// Everything any subcommand can be configured with.
struct RunConfig {
  // graph / training
  std::string edges;
  bool directed = false;
  std::size_t dim = 100;
  double lr = 0.01;
  std::size_t iters = 100;
  double neg_ratio = 1.0;
  std::size_t partitions = 1;
  int threads = 0;
  std::uint64_t seed = 1;
  std::string mode = "vcne";
  std::string strategy = "hash-edge";
  bool exclude_neighbors = true;
  std::size_t max_rejections = 100;
  bool degree_biased = false;
  bool weight_normalize = false;
  std::string out = "embeddings.txt";
  std::string format = "text";
  std::string report;
  std::string remap_out;
  // link split
  double holdout = 0.01;
  std::string out_dir = "splits";
  // evaluation
  std::string embeddings;
  std::string splits_dir;
  std::string classifier = "logreg";
  std::string feature = "hadamard";
  std::size_t hidden = 500;
  std::size_t epochs = 0;
  double clf_lr = 0.0;
  bool tune_threshold = false;
  std::string features;
  std::string labels;
  std::string splits;
  // bench
  std::string sweep;
  std::string values;
  std::size_t warmup = 1;
  std::size_t timed_iters = 3;
  // gen-sbm
  std::size_t blocks = 2;
  std::size_t block_size = 50;
  double p_in = 0.1;
  double p_out = 0.01;
  std::string labels_out;
  std::string features_out;
  std::size_t noise_features = 0;
  std::string vertex_splits_out;

  std::string sidecar;
};

std::string text_of(const std::string& s) { return s; }
std::string text_of(bool b) { return b ? "true" : "false"; }
std::string text_of(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}
template <class T>
  requires std::is_integral_v<T>
std::string text_of(T v) { return std::to_string(v); }

// Registers options on a subcommand and remembers how to print each one back.
class Binder {
 public:
  explicit Binder(CLI::App* app) : app_(app) {}

  template <class T>
  CLI::Option* option(const std::string& name, T& ref, const std::string& desc) {
    fields_.emplace_back(name, [&ref] { return text_of(ref); });
    return app_->add_option("--" + name, ref, desc)->capture_default_str();
  }

  CLI::Option* flag(const std::string& name, bool& ref, const std::string& desc) {
    fields_.emplace_back(name, [&ref] { return text_of(ref); });
    return app_->add_flag("--" + name, ref, desc)->capture_default_str();
  }

  CLI::App* app() const { return app_; }

  std::string dump() const {
    std::string s = "command = " + app_->get_name() + "\n";
    for (const auto& [name, get] : fields_) {
      std::string v = get();
      if (v.empty()) continue;
      s += name + " = " + v + "\n";
    }
    return s;
  }

 private:
  CLI::App* app_;
  std::vector<std::pair<std::string, std::function<std::string()>>> fields_;
};

void add_training_options(Binder& b, RunConfig& rc) {
  b.option("edges", rc.edges, "edge list `src dst [weight]`")->required()->check(CLI::ExistingFile);
  b.flag("directed", rc.directed, "treat each line as a single directed edge");
  b.option("dim", rc.dim, "embedding dimension")->check(CLI::PositiveNumber);
  b.option("lr", rc.lr, "gradient-ascent step size")->check(CLI::PositiveNumber);
  b.option("iters", rc.iters, "training iterations");
  b.option("neg-ratio", rc.neg_ratio, "negatives per vertex as a multiple of its degree")->check(CLI::PositiveNumber);
  b.option("partitions", rc.partitions, "edge partitions")->check(CLI::PositiveNumber);
  b.option("threads", rc.threads, "worker threads (0: all)")->check(CLI::NonNegativeNumber);
  b.option("seed", rc.seed, "random seed");
  b.option("mode", rc.mode, "training objective")->check(CLI::IsMember({"vcne", "line1"}));
  b.option("strategy", rc.strategy, "edge partitioning")->check(CLI::IsMember({"hash-src", "hash-edge"}));
  b.option("exclude-neighbors", rc.exclude_neighbors, "reject true neighbours as negatives");
  b.option("max-rejections", rc.max_rejections, "rejection retries per negative slot");
  b.flag("degree-biased", rc.degree_biased, "draw negatives proportionally to degree^0.75");
  b.flag("weight-normalize", rc.weight_normalize, "scale positive messages by 1/w_i");
}

TrainConfig train_config(const RunConfig& rc) {
  TrainConfig cfg;
  cfg.dim = rc.dim;
  cfg.learning_rate = rc.lr;
  cfg.iterations = rc.iters;
  cfg.negative_ratio = rc.neg_ratio;
  cfg.partitions = rc.partitions;
  cfg.threads = rc.threads;
  cfg.seed = rc.seed;
  cfg.mode = parse_train_mode(rc.mode);
  cfg.strategy = parse_partition_strategy(rc.strategy);
  cfg.exclude_true_neighbors = rc.exclude_neighbors;
  cfg.max_rejections = rc.max_rejections;
  cfg.degree_biased = rc.degree_biased;
  cfg.weight_normalized = rc.weight_normalize;
  return cfg;
}

eval::ClassifierSpec classifier_spec(const RunConfig& rc) {
  eval::ClassifierSpec spec;
  spec.kind = eval::parse_classifier_kind(rc.classifier);
  spec.hidden_units = rc.hidden;
  spec.epochs = rc.epochs;
  spec.learning_rate = rc.clf_lr;
  spec.seed = rc.seed;
  return spec;
}

void add_classifier_options(Binder& b, RunConfig& rc) {
  b.option("classifier", rc.classifier, "classifier kind")->check(CLI::IsMember({"logreg", "mlp"}));
  b.option("hidden", rc.hidden, "mlp hidden units")->check(CLI::PositiveNumber);
  b.option("epochs", rc.epochs, "training epochs (0: classifier default)");
  b.option("clf-lr", rc.clf_lr, "classifier learning rate (0: classifier default)");
  b.option("seed", rc.seed, "random seed");
}

LoadedGraph load_graph(const RunConfig& rc, std::ostream& err) {
  LoadedGraph g = load_edge_list(rc.edges, !rc.directed);
  if (g.skipped_self_loops) err << "warning: skipped " << g.skipped_self_loops << " self-loop(s) in " << rc.edges << "\n";
  if (g.duplicate_edges) err << "warning: " << g.duplicate_edges << " duplicate edge(s) in " << rc.edges << ", last weight kept\n";
  return g;
}

void ensure_parent(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
}

// --------------------------------------------------------------------------

int cmd_train(const RunConfig& rc, std::ostream&, std::ostream& err) {
  LoadedGraph g = load_graph(rc, err);
  TrainConfig cfg = train_config(rc);
  TrainResult result = train(g.graph, cfg);
  const fs::path out = rc.out;
  ensure_parent(out);
  if (rc.format == "binary") {
    write_embeddings_binary(out, result.embeddings);
    g.remap.write(rc.remap_out.empty() ? fs::path(rc.out + ".remap") : fs::path(rc.remap_out));
  } else {
    write_embeddings_text(out, result.embeddings, g.remap);
    if (!rc.remap_out.empty()) g.remap.write(fs::path(rc.remap_out));
  }
  const fs::path report = rc.report.empty() ? fs::path(rc.out + ".report.tsv") : fs::path(rc.report);
  std::ofstream rep(report);
  if (!rep) throw IoError("cannot open " + report.string() + " for writing");
  result.report.write_tsv(rep);
  err << "trained " << g.graph.num_vertices() << " vertices, " << g.graph.num_edges() << " directed edges, "
      << cfg.iterations << " iterations -> " << out.string() << "\n";
  return kOk;
}

int cmd_link_split(const RunConfig& rc, std::ostream&, std::ostream& err) {
  LoadedGraph g = load_graph(rc, err);
  eval::LinkDataset ds = eval::make_link_dataset(g.graph, rc.holdout, rc.seed);
  const fs::path dir = rc.out_dir;
  fs::create_directories(dir);
  write_edge_list(dir / "core.txt", ds.core_graph, g.remap, true);
  eval::write_pairs(dir / "train.txt", ds.train, g.remap);
  eval::write_pairs(dir / "val.txt", ds.validation, g.remap);
  eval::write_pairs(dir / "test.txt", ds.test, g.remap);
  err << "held out " << ds.test.size() / 2 << " positive pairs per split; core graph has "
      << ds.core_graph.num_undirected_edges() << " edges\n";
  return kOk;
}

eval::LinkDataset read_splits(const fs::path& dir, const RemapTable& remap) {
  eval::LinkDataset ds;
  ds.train = eval::read_pairs(dir / "train.txt", remap);
  ds.validation = eval::read_pairs(dir / "val.txt", remap);
  ds.test = eval::read_pairs(dir / "test.txt", remap);
  return ds;
}

int cmd_eval_link(const RunConfig& rc, std::ostream& out, std::ostream&) {
  LoadedEmbeddings emb = read_embeddings_text(fs::path(rc.embeddings));
  eval::LinkDataset ds = read_splits(rc.splits_dir, emb.remap);
  eval::Metrics m = eval::link_predict(emb.table, ds, eval::parse_pair_feature(rc.feature), classifier_spec(rc),
                                       rc.tune_threshold);
  out << eval::format_metrics(m) << "\n";
  return kOk;
}

int cmd_jaccard(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  LoadedGraph g = load_graph(rc, err);
  eval::LinkDataset ds = read_splits(rc.splits_dir, g.remap);
  out << eval::format_metrics(eval::jaccard_predict(g.graph, ds, rc.threads)) << "\n";
  return kOk;
}

int cmd_classify(const RunConfig& rc, std::ostream& out, std::ostream&) {
  eval::VertexRows features = eval::read_vertex_rows(rc.features);
  eval::VertexRows label_rows = eval::read_vertex_rows(rc.labels);
  LoadedEmbeddings emb = read_embeddings_text(fs::path(rc.embeddings));

  std::unordered_map<ExternalId, std::size_t> label_index;
  for (std::size_t i = 0; i < label_rows.ids.size(); ++i) label_index.emplace(label_rows.ids[i], i);
  eval::LabelMatrix labels(features.ids.size(), label_rows.values.cols);
  EmbeddingTable table(features.ids.size(), emb.table.dim());
  for (std::size_t i = 0; i < features.ids.size(); ++i) {
    const ExternalId id = features.ids[i];
    auto li = label_index.find(id);
    if (li == label_index.end()) throw ValidationError("vertex " + std::to_string(id) + " has no labels");
    auto src = label_rows.values.row(li->second);
    for (std::size_t k = 0; k < labels.cols; ++k) {
      if (src[k] != 0.0 && src[k] != 1.0)
        throw ValidationError("vertex " + std::to_string(id) + " has a label value other than 0/1");
      labels.row(i)[k] = src[k] != 0.0;
    }
    auto row = emb.remap.find(id);
    if (!row) throw ValidationError("vertex " + std::to_string(id) + " has no embedding");
    auto u = emb.table.row(*row);
    std::copy(u.begin(), u.end(), table.row(i).begin());
  }
  eval::VertexSplits splits = eval::read_vertex_splits(rc.splits, features.ids);
  auto result = eval::classify_vertices(table, features.values, labels, splits, classifier_spec(rc));
  out << eval::format_metrics(result.features_only) << "\n";
  out << eval::format_metrics(result.combined) << "\n";
  return kOk;
}

int cmd_bench(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  LoadedGraph g = load_graph(rc, err);
  std::vector<std::string> values;
  {
    std::stringstream ss(rc.values);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) values.push_back(tok);
  }
  if (values.empty()) throw ValidationError("--values lists no sweep values");
  if (rc.timed_iters < 1) throw ValidationError("--timed-iters must be >= 1");
  for (const std::string& v : values) {
    TrainConfig cfg = train_config(rc);
    try {
      if (rc.sweep == "threads") cfg.threads = std::stoi(v);
      else if (rc.sweep == "dim") cfg.dim = std::stoul(v);
      else cfg.negative_ratio = std::stod(v);
    } catch (const std::exception&) {
      throw ValidationError("bad sweep value '" + v + "'");
    }
    cfg.iterations = rc.warmup + rc.timed_iters;
    TrainResult r = train(g.graph, cfg);
    double total = 0.0;
    for (std::size_t k = rc.warmup; k < r.report.iterations.size(); ++k) total += r.report.iterations[k].t_total_ms;
    const double mean = total / static_cast<double>(rc.timed_iters);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s\t%.3f\n", v.c_str(), mean);
    out << buf << std::flush;
  }
  return kOk;
}

int cmd_gen_sbm(const RunConfig& rc, std::ostream&, std::ostream& err) {
  SbmSpec spec;
  spec.block_sizes.assign(rc.blocks, rc.block_size);
  spec.p_in = rc.p_in;
  spec.p_out = rc.p_out;
  spec.seed = rc.seed;
  SbmGraph sbm = generate_sbm(spec);
  const RemapTable ids = RemapTable::identity(sbm.graph.num_vertices());
  ensure_parent(rc.out);
  write_edge_list(rc.out, sbm.graph, ids, true);
  if (!rc.labels_out.empty()) {
    std::ofstream f(rc.labels_out);
    if (!f) throw IoError("cannot open " + rc.labels_out);
    for (std::size_t v = 0; v < sbm.block_of.size(); ++v) {
      f << v;
      for (std::size_t b = 0; b < rc.blocks; ++b) f << (sbm.block_of[v] == b ? " 1" : " 0");
      f << '\n';
    }
  }
  if (!rc.features_out.empty()) {
    eval::Matrix x = noise_features(sbm.graph.num_vertices(), rc.noise_features, rc.seed);
    std::ofstream f(rc.features_out);
    if (!f) throw IoError("cannot open " + rc.features_out);
    char buf[64];
    for (std::size_t v = 0; v < x.rows; ++v) {
      f << v;
      for (double val : x.row(v)) {
        std::snprintf(buf, sizeof buf, " %.9g", val);
        f << buf;
      }
      f << '\n';
    }
  }
  if (!rc.vertex_splits_out.empty())
    eval::write_vertex_splits(rc.vertex_splits_out, random_vertex_splits(sbm.graph.num_vertices(), 0.5, 0.25, rc.seed),
                              ids);
  err << "generated SBM with " << sbm.graph.num_vertices() << " vertices and " << sbm.graph.num_undirected_edges()
      << " edges -> " << rc.out << "\n";
  return kOk;
}

// --------------------------------------------------------------------------

bool has_option(const std::vector<std::string>& args, const std::string& name) {
  const std::string flag = "--" + name;
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

}  // namespace

std::map<std::string, std::string> parse_config(std::istream& in, const std::string& source) {
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t lineno = 0;
  auto trim = [](std::string s) {
    const auto* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(source, lineno, "expected `key = value`");
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError(source, lineno, "empty key");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  CLI::App app{"Vertex-centric network embedding: training, link-prediction and classification tooling", "vcne"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key = value file; command-line flags override it");

  struct Sub {
    std::unique_ptr<Binder> binder;
    std::function<int(const RunConfig&, std::ostream&, std::ostream&)> fn;
    std::function<std::string()> default_sidecar;
  };
  std::vector<Sub> subs;
  auto add_sub = [&](const std::string& name, const std::string& desc, auto fn, auto sidecar) -> Binder& {
    CLI::App* s = app.add_subcommand(name, desc);
    s->add_option("--sidecar", rc.sidecar, "where to write the resolved config");
    subs.push_back({std::make_unique<Binder>(s), fn, sidecar});
    return *subs.back().binder;
  };

  {
    Binder& b = add_sub("train", "train embeddings", cmd_train, [&] { return rc.out + ".config"; });
    add_training_options(b, rc);
    b.option("out", rc.out, "embedding output path");
    b.option("format", rc.format, "embedding file format")->check(CLI::IsMember({"text", "binary"}));
    b.option("report", rc.report, "per-iteration report (default: <out>.report.tsv)");
    b.option("remap-out", rc.remap_out, "write the `external_id dense_id` table here");
  }
  {
    Binder& b = add_sub("link-split", "hold out edges for link prediction", cmd_link_split,
                        [&] { return (fs::path(rc.out_dir) / "link-split.config").string(); });
    b.option("edges", rc.edges, "edge list")->required()->check(CLI::ExistingFile);
    b.flag("directed", rc.directed, "treat each line as a single directed edge");
    b.option("holdout", rc.holdout, "fraction of edges per split");
    b.option("seed", rc.seed, "random seed");
    b.option("out-dir", rc.out_dir, "output directory");
  }
  {
    Binder& b = add_sub("eval-link", "link prediction from embeddings", cmd_eval_link,
                        [&] { return (fs::path(rc.splits_dir) / "eval-link.config").string(); });
    b.option("embeddings", rc.embeddings, "text embedding file")->required()->check(CLI::ExistingFile);
    b.option("splits-dir", rc.splits_dir, "directory with train/val/test.txt")->required()->check(CLI::ExistingDirectory);
    b.option("feature", rc.feature, "pair feature")->check(CLI::IsMember({"hadamard", "concat", "dot"}));
    b.flag("tune-threshold", rc.tune_threshold, "pick the decision threshold on validation");
    add_classifier_options(b, rc);
  }
  {
    Binder& b = add_sub("jaccard", "Jaccard-index link prediction baseline", cmd_jaccard,
                        [&] { return (fs::path(rc.splits_dir) / "jaccard.config").string(); });
    b.option("edges", rc.edges, "core graph edge list")->required()->check(CLI::ExistingFile);
    b.flag("directed", rc.directed, "treat each line as a single directed edge");
    b.option("splits-dir", rc.splits_dir, "directory with train/val/test.txt")->required()->check(CLI::ExistingDirectory);
    b.option("threads", rc.threads, "worker threads (0: all)")->check(CLI::NonNegativeNumber);
  }
  {
    Binder& b = add_sub("classify", "vertex classification with and without embeddings", cmd_classify,
                        [&] { return rc.embeddings + ".classify.config"; });
    b.option("embeddings", rc.embeddings, "text embedding file")->required()->check(CLI::ExistingFile);
    b.option("features", rc.features, "`vertex_id v1 ... vk` file")->required()->check(CLI::ExistingFile);
    b.option("labels", rc.labels, "`vertex_id l1 ... lm` 0/1 file")->required()->check(CLI::ExistingFile);
    b.option("splits", rc.splits, "`vertex_id train|val|test` file")->required()->check(CLI::ExistingFile);
    add_classifier_options(b, rc);
  }
  {
    Binder& b = add_sub("bench", "mean iteration time over a parameter sweep", cmd_bench,
                        [&] { return rc.edges + ".bench.config"; });
    add_training_options(b, rc);
    b.option("sweep", rc.sweep, "parameter to sweep")->required()->check(CLI::IsMember({"threads", "dim", "neg-ratio"}));
    b.option("values", rc.values, "comma-separated sweep values")->required();
    b.option("warmup", rc.warmup, "untimed warm-up iterations");
    b.option("timed-iters", rc.timed_iters, "timed iterations")->check(CLI::PositiveNumber);
  }
  {
    Binder& b = add_sub("gen-sbm", "generate a stochastic block model graph", cmd_gen_sbm,
                        [&] { return rc.out + ".config"; });
    b.option("blocks", rc.blocks, "number of blocks")->check(CLI::PositiveNumber);
    b.option("block-size", rc.block_size, "vertices per block")->check(CLI::PositiveNumber);
    b.option("p-in", rc.p_in, "intra-block edge probability")->check(CLI::Range(0.0, 1.0));
    b.option("p-out", rc.p_out, "inter-block edge probability")->check(CLI::Range(0.0, 1.0));
    b.option("seed", rc.seed, "random seed");
    b.option("out", rc.out, "edge list output")->required();
    b.option("labels-out", rc.labels_out, "one-hot block labels output");
    b.option("features-out", rc.features_out, "noise feature output");
    b.option("noise-features", rc.noise_features, "noise feature columns");
    b.option("vertex-splits-out", rc.vertex_splits_out, "50/25/25 vertex split output");
  }

  // Fold a --config file into the argument list; explicit flags win.
  std::vector<std::string> args = raw_args;
  for (std::size_t k = 0; k < args.size(); ++k) {
    std::string path;
    if (args[k] == "--config" && k + 1 < args.size()) {
      path = args[k + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(k), args.begin() + static_cast<std::ptrdiff_t>(k + 2));
    } else if (args[k].rfind("--config=", 0) == 0) {
      path = args[k].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      continue;
    }
    std::map<std::string, std::string> kv;
    try {
      std::ifstream in(path);
      if (!in) {
        err << "error: cannot open config file " << path << "\n";
        return kUsageError;
      }
      kv = parse_config(in, path);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kUsageError;
    }
    auto is_command = [&](const std::string& a) {
      return std::any_of(subs.begin(), subs.end(), [&](const Sub& s) { return s.binder->app()->get_name() == a; });
    };
    if (std::none_of(args.begin(), args.end(), is_command)) {
      auto it = kv.find("command");
      if (it == kv.end()) {
        err << "error: no subcommand given and " << path << " has no `command` key\n";
        return kUsageError;
      }
      args.insert(args.begin(), it->second);
    }
    for (const auto& [key, value] : kv) {
      if (key == "command" || has_option(args, key)) continue;
      args.push_back("--" + key + "=" + value);
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CLI::App* target = &app;
    for (auto* s : app.get_subcommands()) target = s;
    out << target->help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    CLI::App* target = &app;
    for (auto* s : app.get_subcommands()) target = s;
    err << target->help();
    return kUsageError;
  }

  for (const Sub& s : subs) {
    if (!s.binder->app()->parsed()) continue;
    try {
      const std::string resolved = s.binder->dump();
      err << resolved;
      const fs::path sidecar = rc.sidecar.empty() ? fs::path(s.default_sidecar()) : fs::path(rc.sidecar);
      ensure_parent(sidecar);
      std::ofstream side(sidecar);
      if (!side) throw IoError("cannot write config sidecar " + sidecar.string());
      side << resolved;
      side.close();
      return s.fn(rc, out, err);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kRuntimeError;
    }
  }
  return kUsageError;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace vcne::cli
