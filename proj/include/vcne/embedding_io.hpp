#pragma once
#include <filesystem>
#include <iosfwd>

#include "vcne/embedding_table.hpp"
#include "vcne/graph.hpp"

namespace vcne {

struct LoadedEmbeddings {
  EmbeddingTable table;
  RemapTable remap;  // dense ids follow file order
};

/// `external_id v1 ... vd` per line, components printed with 8 decimals, rows in ascending external id.
void write_embeddings_text(std::ostream& out, const EmbeddingTable& e, const RemapTable& remap);
void write_embeddings_text(const std::filesystem::path& path, const EmbeddingTable& e, const RemapTable& remap);
LoadedEmbeddings read_embeddings_text(std::istream& in, const std::string& source = "<stream>");
LoadedEmbeddings read_embeddings_text(const std::filesystem::path& path);

/// Binary layout (little-endian): "VCNE", uint64 rows, uint64 dim, float32 rows x dim row-major.
inline constexpr char kEmbeddingMagic[4] = {'V', 'C', 'N', 'E'};
void write_embeddings_binary(const std::filesystem::path& path, const EmbeddingTable& e);
EmbeddingTable read_embeddings_binary(const std::filesystem::path& path);

}  // namespace vcne
