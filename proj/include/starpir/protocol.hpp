#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "starpir/plan.hpp"
#include "starpir/random.hpp"

namespace starpir {

/// M files, each a b x k matrix over one field.
class Database {
 public:
  Database(Field field, std::vector<Matrix> files);
  static Database random(const Field& field, std::size_t files, std::size_t rows, std::size_t cols,
                         SeededRng& rng);

  const Field& field() const { return field_; }
  std::size_t file_count() const { return files_.size(); }
  std::size_t rows() const { return files_.front().rows(); }
  std::size_t cols() const { return files_.front().cols(); }
  const Matrix& file(std::size_t i) const { return files_.at(i); }
  /// (M b) x k matrix X; file i row beta is row i b + beta.
  Matrix stacked() const;

 private:
  Field field_;
  std::vector<Matrix> files_;
};

/// Y = X G_C held column by column: server j stores column j.
class StorageSystem {
 public:
  static StorageSystem store(const Database& db, const LinearCode& c);

  const LinearCode& code() const { return code_; }
  std::size_t servers() const { return columns_.size(); }
  std::size_t file_count() const { return files_; }
  std::size_t rows_per_file() const { return rows_; }
  std::span<const Element> column(std::size_t j) const { return columns_.at(j); }
  /// Y reassembled from the server columns.
  Matrix encoded() const;

 private:
  StorageSystem(LinearCode code, std::size_t files, std::size_t rows)
      : code_(std::move(code)), files_(files), rows_(rows) {}

  LinearCode code_;
  std::size_t files_;
  std::size_t rows_;
  std::vector<std::vector<Element>> columns_;
};

/// Fills a message vector of length dim D; the codeword is message * G_D.
using MessageSource = std::function<void(std::span<Element>)>;

MessageSource seeded_messages(const Field& field, SeededRng rng);

/// Everything the client sends, plus the randomness it keeps.
struct QueryBatch {
  std::size_t want = 0;  // 0-based file index, never shown to a server
  std::size_t files = 0;
  std::size_t rows = 0;
  /// queries[gamma][j]: the length M b vector sent to server j in
  /// iteration gamma, file-major then row-minor.
  std::vector<std::vector<std::vector<Element>>> queries;
  /// Row i b + beta of codewords[gamma] is the codeword of D masking file
  /// i, row beta in iteration gamma.
  std::vector<Matrix> codewords;

  std::size_t iterations() const { return queries.size(); }
  std::span<const Element> query(std::size_t gamma, std::size_t j) const { return queries.at(gamma).at(j); }
};

QueryBatch make_queries(const RetrievalPlan& plan, std::size_t files, std::size_t want, const MessageSource& source);
QueryBatch make_queries(const RetrievalPlan& plan, std::size_t files, std::size_t want, SeededRng rng);

/// What one server computes: its query dotted with its own column.
Element server_response(const Field& field, std::span<const Element> column, std::span<const Element> query);

/// responses[gamma][j] for every iteration and server.
struct ResponseBatch {
  std::vector<std::vector<Element>> responses;
};

/// Client-side loop calling server_response once per (iteration, server).
ResponseBatch respond(const StorageSystem& storage, const QueryBatch& queries);

/// Recovers the wanted file from a plan's responses.
///
/// Iteration gamma: the syndrome r H^T equals the wanted symbols on J_gamma
/// times the columns of H on J_gamma, solved through the information set
/// I_gamma containing J_gamma. Row beta of the file is then the symbols on
/// S_beta times the inverse of G_C restricted to S_beta. Inverses are
/// computed once per distinct set.
class Decoder {
 public:
  explicit Decoder(const RetrievalPlan& plan);
  Matrix decode(const ResponseBatch& responses) const;

 private:
  RetrievalPlan plan_;
  std::map<IndexSet, Matrix> star_inverse_;     // (H_I^T)^-1 for each containing set I
  std::map<IndexSet, Matrix> storage_inverse_;  // (G_S)^-1 for each S
};

Matrix decode_responses(const RetrievalPlan& plan, const ResponseBatch& responses);

struct RetrievalResult {
  Matrix file;
  std::size_t downloaded = 0;  // n s symbols
  Rational rate;               // b k / downloaded
};

/// make_queries, respond and decode in sequence.
RetrievalResult retrieve(const StorageSystem& storage, const RetrievalPlan& plan, std::size_t want, SeededRng rng);

/// The linear map from the wanted file (b k entries, row-major) to the s
/// stacked syndromes. Full row rank is exactly decodability.
Matrix retrieval_chain_matrix(const RetrievalPlan& plan);

}  // namespace starpir
