#include "vcne/embedding_io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>

#include "vcne/error.hpp"

namespace vcne {

namespace {

void put_u64(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int k = 0; k < 8; ++k) b[k] = static_cast<unsigned char>(v >> (8 * k));
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int k = 7; k >= 0; --k) v = (v << 8) | b[k];
  return v;
}

void put_f32(std::ostream& out, float f) {
  auto bits = std::bit_cast<std::uint32_t>(f);
  unsigned char b[4];
  for (int k = 0; k < 4; ++k) b[k] = static_cast<unsigned char>(bits >> (8 * k));
  out.write(reinterpret_cast<const char*>(b), 4);
}

}  // namespace

void write_embeddings_text(std::ostream& out, const EmbeddingTable& e, const RemapTable& remap) {
  if (remap.size() != e.rows())
    throw ValidationError("remap table has " + std::to_string(remap.size()) + " ids for " +
                          std::to_string(e.rows()) + " embedding rows");
  std::vector<VertexId> order(e.rows());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return remap.external(a) < remap.external(b); });
  std::string line;
  char buf[64];
  for (VertexId v : order) {
    line = std::to_string(remap.external(v));
    for (double x : e.row(v)) {
      std::snprintf(buf, sizeof buf, " %.8f", x);
      line += buf;
    }
    line += '\n';
    out << line;
  }
}

void write_embeddings_text(const std::filesystem::path& path, const EmbeddingTable& e, const RemapTable& remap) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_embeddings_text(out, e, remap);
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

LoadedEmbeddings read_embeddings_text(std::istream& in, const std::string& source) {
  LoadedEmbeddings result;
  std::vector<double> values;
  std::optional<std::size_t> dim;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string tok;
    if (!(fields >> tok) || tok.front() == '#') continue;
    ExternalId id = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError(source, lineno, "bad vertex id '" + tok + "'");
    std::size_t count = 0;
    while (fields >> tok) {
      char* end = nullptr;
      double x = std::strtod(tok.c_str(), &end);
      if (end != tok.c_str() + tok.size()) throw ParseError(source, lineno, "bad component '" + tok + "'");
      values.push_back(x);
      ++count;
    }
    if (!dim) dim = count;
    if (count != *dim)
      throw ParseError(source, lineno,
                       "vertex " + std::to_string(id) + " has " + std::to_string(count) + " components, expected " +
                           std::to_string(*dim));
    if (result.remap.find(id)) throw ParseError(source, lineno, "duplicate vertex " + std::to_string(id));
    result.remap.intern(id);
  }
  result.table = EmbeddingTable(result.remap.size(), dim.value_or(0));
  std::copy(values.begin(), values.end(), result.table.data().begin());
  return result;
}

LoadedEmbeddings read_embeddings_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open embeddings " + path.string());
  return read_embeddings_text(in, path.string());
}

void write_embeddings_binary(const std::filesystem::path& path, const EmbeddingTable& e) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(kEmbeddingMagic, 4);
  put_u64(out, e.rows());
  put_u64(out, e.dim());
  for (double x : e.data()) put_f32(out, static_cast<float>(x));
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

EmbeddingTable read_embeddings_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open embeddings " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kEmbeddingMagic, 4) != 0) throw IoError(path.string() + ": not a VCNE embedding file");
  const std::uint64_t rows = get_u64(in);
  const std::uint64_t dim = get_u64(in);
  if (!in) throw IoError(path.string() + ": truncated header");
  EmbeddingTable e(rows, dim);
  std::vector<unsigned char> buf(rows * dim * 4);
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (static_cast<std::size_t>(in.gcount()) != buf.size()) throw IoError(path.string() + ": truncated data");
  auto data = e.data();
  for (std::size_t k = 0; k < data.size(); ++k) {
    std::uint32_t bits = 0;
    for (int b = 3; b >= 0; --b) bits = (bits << 8) | buf[4 * k + static_cast<std::size_t>(b)];
    data[k] = std::bit_cast<float>(bits);
  }
  return e;
}

}  // namespace vcne
