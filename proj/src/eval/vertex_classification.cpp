#include "vcne/eval/vertex_classification.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "vcne/error.hpp"

namespace vcne::eval {

namespace {

Matrix gather_rows(const Matrix& x, const std::vector<VertexId>& rows) {
  Matrix out(rows.size(), x.cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto src = x.row(rows[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

std::vector<int> gather_column(const LabelMatrix& y, const std::vector<VertexId>& rows, std::size_t col) {
  std::vector<int> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = y.row(rows[i])[col];
  return out;
}

}  // namespace

Matrix concat_features(const Matrix& features, const EmbeddingTable& e) {
  if (e.rows() != features.rows)
    throw ValidationError("embedding has " + std::to_string(e.rows()) + " rows for " +
                          std::to_string(features.rows) + " feature rows");
  Matrix out(features.rows, features.cols + e.dim());
  for (std::size_t i = 0; i < features.rows; ++i) {
    auto dst = out.row(i);
    auto f = features.row(i);
    auto u = e.row(i);
    std::copy(f.begin(), f.end(), dst.begin());
    std::copy(u.begin(), u.end(), dst.begin() + static_cast<std::ptrdiff_t>(f.size()));
  }
  return out;
}

Metrics one_vs_rest_micro(const Matrix& x, const LabelMatrix& labels, const VertexSplits& splits,
                          const ClassifierSpec& spec) {
  if (labels.rows != x.rows)
    throw ValidationError("labels cover " + std::to_string(labels.rows) + " vertices, features " +
                          std::to_string(x.rows));
  if (splits.train.empty() || splits.test.empty()) throw ValidationError("train and test splits must be non-empty");
  for (const auto* split : {&splits.train, &splits.validation, &splits.test})
    for (VertexId v : *split)
      if (v >= x.rows) throw ValidationError("split vertex " + std::to_string(v) + " out of range");

  const Matrix train_x = gather_rows(x, splits.train);
  const Matrix val_x = gather_rows(x, splits.validation);
  const Matrix test_x = gather_rows(x, splits.test);
  Confusion total;
  for (std::size_t label = 0; label < labels.cols; ++label) {
    auto y = gather_column(labels, splits.train, label);
    auto vy = gather_column(labels, splits.validation, label);
    BinaryClassifier c;
    try {
      c = train_classifier(train_x, y, spec, splits.validation.empty() ? nullptr : &val_x, vy);
    } catch (const ValidationError& err) {
      throw ValidationError("label " + std::to_string(label) + ": " + err.what());
    }
    total += confusion(c.predict(test_x), gather_column(labels, splits.test, label), 0.5);
  }
  return metrics_from(total, 0.5);
}

VertexClassification classify_vertices(const EmbeddingTable& e, const Matrix& features, const LabelMatrix& labels,
                                       const VertexSplits& splits, const ClassifierSpec& spec) {
  VertexClassification result;
  result.features_only = one_vs_rest_micro(features, labels, splits, spec);
  result.combined = one_vs_rest_micro(concat_features(features, e), labels, splits, spec);
  return result;
}

VertexRows read_vertex_rows(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  VertexRows out;
  std::vector<double> values;
  std::optional<std::size_t> width;
  std::unordered_map<ExternalId, std::size_t> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string tok;
    if (!(fields >> tok) || tok.front() == '#') continue;
    ExternalId id = 0;
    try {
      std::size_t used = 0;
      id = std::stoull(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError(path.string(), lineno, "bad vertex id '" + tok + "'");
    }
    std::size_t count = 0;
    double v = 0.0;
    while (fields >> v) {
      values.push_back(v);
      ++count;
    }
    if (!fields.eof()) throw ParseError(path.string(), lineno, "non-numeric value for vertex " + std::to_string(id));
    if (!width) width = count;
    if (count != *width)
      throw ValidationError(path.string() + ":" + std::to_string(lineno) + ": vertex " + std::to_string(id) +
                            " has " + std::to_string(count) + " values, expected " + std::to_string(*width));
    if (!seen.emplace(id, out.ids.size()).second)
      throw ValidationError(path.string() + ": vertex " + std::to_string(id) + " listed twice");
    out.ids.push_back(id);
  }
  out.values.rows = out.ids.size();
  out.values.cols = width.value_or(0);
  out.values.data = std::move(values);
  return out;
}

VertexSplits read_vertex_splits(const std::filesystem::path& path, const std::vector<ExternalId>& ids) {
  std::unordered_map<ExternalId, VertexId> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], static_cast<VertexId>(i));
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  VertexSplits s;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first.front() == '#') continue;
    std::istringstream all(line);
    ExternalId id = 0;
    std::string name;
    if (!(all >> id >> name)) throw ParseError(path.string(), lineno, "expected `vertex_id train|val|test`");
    auto it = index.find(id);
    if (it == index.end()) throw ValidationError(path.string() + ": vertex " + std::to_string(id) + " has no features");
    if (name == "train") s.train.push_back(it->second);
    else if (name == "val" || name == "validation") s.validation.push_back(it->second);
    else if (name == "test") s.test.push_back(it->second);
    else throw ParseError(path.string(), lineno, "unknown split '" + name + "'");
  }
  return s;
}

void write_vertex_splits(const std::filesystem::path& path, const VertexSplits& splits, const RemapTable& remap) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (VertexId v : splits.train) out << remap.external(v) << " train\n";
  for (VertexId v : splits.validation) out << remap.external(v) << " val\n";
  for (VertexId v : splits.test) out << remap.external(v) << " test\n";
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace vcne::eval
