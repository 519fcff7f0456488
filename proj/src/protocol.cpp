#include "starpir/protocol.hpp"

#include <string>

namespace starpir {

Database::Database(Field field, std::vector<Matrix> files) : field_(std::move(field)), files_(std::move(files)) {
  if (files_.empty()) throw ValidationError("database needs at least one file");
  for (const Matrix& f : files_) {
    if (!(f.field() == field_)) throw ValidationError("file over a different field");
    if (f.rows() != files_.front().rows() || f.cols() != files_.front().cols())
      throw ValidationError("files must all have the same shape");
  }
  if (rows() == 0 || cols() == 0) throw ValidationError("files must be nonempty");
}

Database Database::random(const Field& field, std::size_t files, std::size_t rows, std::size_t cols,
                          SeededRng& rng) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < files; ++i) {
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.element(field);
    out.push_back(std::move(m));
  }
  return Database(field, std::move(out));
}

Matrix Database::stacked() const {
  Matrix x = files_.front();
  for (std::size_t i = 1; i < files_.size(); ++i) x = vstack(x, files_[i]);
  return x;
}

StorageSystem StorageSystem::store(const Database& db, const LinearCode& c) {
  if (!(db.field() == c.field())) throw ValidationError("database and storage code use different fields");
  if (db.cols() != c.dimension())
    throw ValidationError("file width " + std::to_string(db.cols()) + " differs from storage dimension " +
                          std::to_string(c.dimension()));
  const Matrix y = db.stacked() * c.generator();
  StorageSystem system(c, db.file_count(), db.rows());
  system.columns_.resize(c.length());
  for (std::size_t j = 0; j < c.length(); ++j) {
    system.columns_[j].resize(y.rows());
    for (std::size_t r = 0; r < y.rows(); ++r) system.columns_[j][r] = y(r, j);
  }
  return system;
}

Matrix StorageSystem::encoded() const {
  const std::size_t rows = columns_.front().size();
  Matrix y(code_.field(), rows, columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (std::size_t r = 0; r < rows; ++r) y(r, j) = columns_[j][r];
  return y;
}

MessageSource seeded_messages(const Field& field, SeededRng rng) {
  return [field, rng](std::span<Element> message) mutable {
    for (Element& e : message) e = rng.element(field);
  };
}

QueryBatch make_queries(const RetrievalPlan& plan, std::size_t files, std::size_t want, const MessageSource& source) {
  if (files == 0) throw ValidationError("need at least one file");
  if (want >= files)
    throw ValidationError("wanted file " + std::to_string(want + 1) + " outside 1.." + std::to_string(files));
  const Field& f = plan.storage().field();
  const LinearCode& d = plan.retrieval();
  const std::size_t n = plan.n(), b = plan.b(), s = plan.s();

  QueryBatch batch;
  batch.want = want;
  batch.files = files;
  batch.rows = b;
  batch.queries.assign(s, std::vector<std::vector<Element>>(n, std::vector<Element>(files * b, 0)));
  batch.codewords.reserve(s);
  Matrix messages(f, files * b, d.dimension());
  for (std::size_t gamma = 0; gamma < s; ++gamma) {
    for (std::size_t slot = 0; slot < files * b; ++slot) source(messages.row(slot));
    const Matrix& words = batch.codewords.emplace_back(messages * d.generator());
    for (std::size_t j = 0; j < n; ++j) {
      auto& query = batch.queries[gamma][j];
      for (std::size_t slot = 0; slot < files * b; ++slot) query[slot] = words(slot, j);
      if (auto beta = plan.row_for(gamma, j)) {
        Element& entry = query[want * b + *beta];
        entry = f.add(entry, 1);
      }
    }
  }
  return batch;
}

QueryBatch make_queries(const RetrievalPlan& plan, std::size_t files, std::size_t want, SeededRng rng) {
  return make_queries(plan, files, want, seeded_messages(plan.storage().field(), std::move(rng)));
}

Element server_response(const Field& field, std::span<const Element> column, std::span<const Element> query) {
  if (column.size() != query.size())
    throw ValidationError("query length " + std::to_string(query.size()) + " differs from stored column length " +
                          std::to_string(column.size()));
  return field.dot(query, column);
}

ResponseBatch respond(const StorageSystem& storage, const QueryBatch& queries) {
  const Field& f = storage.code().field();
  ResponseBatch out;
  out.responses.resize(queries.iterations());
  for (std::size_t gamma = 0; gamma < queries.iterations(); ++gamma) {
    if (queries.queries[gamma].size() != storage.servers())
      throw ValidationError("query batch addresses a different number of servers");
    out.responses[gamma].resize(storage.servers());
    for (std::size_t j = 0; j < storage.servers(); ++j)
      out.responses[gamma][j] = server_response(f, storage.column(j), queries.query(gamma, j));
  }
  return out;
}

Decoder::Decoder(const RetrievalPlan& plan) : plan_(plan) {
  const Matrix& h = plan_.star_dual().generator();
  for (std::size_t gamma = 0; gamma < plan_.s(); ++gamma) {
    const IndexSet& i = plan_.containing_set(gamma);
    if (!star_inverse_.count(i)) star_inverse_.emplace(i, invert(transpose(select_columns(h, i.indices()))));
  }
  const Matrix& g = plan_.storage().generator();
  for (const IndexSet& s : plan_.storage_sets())
    if (!storage_inverse_.count(s)) storage_inverse_.emplace(s, invert(select_columns(g, s.indices())));
}

Matrix Decoder::decode(const ResponseBatch& responses) const {
  const std::size_t n = plan_.n(), b = plan_.b(), k = plan_.k();
  if (responses.responses.size() != plan_.s()) throw ValidationError("expected one response vector per iteration");
  const Field& f = plan_.storage().field();
  const Matrix& h = plan_.star_dual().generator();

  // symbols[beta][j] = the wanted file's stored symbol y_j(beta)
  std::vector<std::vector<Element>> symbols(b, std::vector<Element>(n, 0));
  for (std::size_t gamma = 0; gamma < plan_.s(); ++gamma) {
    const auto& r = responses.responses[gamma];
    if (r.size() != n) throw ValidationError("response vector has the wrong length");
    const std::vector<Element> syndrome = multiply(r, transpose(h));
    const IndexSet& inf = plan_.containing_set(gamma);
    const std::vector<Element> v = multiply(syndrome, star_inverse_.at(inf));
    for (std::size_t p = 0; p < inf.size(); ++p)
      if (auto beta = plan_.row_for(gamma, inf[p])) symbols[*beta][inf[p]] = v[p];
  }

  Matrix file(f, b, k);
  for (std::size_t beta = 0; beta < b; ++beta) {
    const IndexSet& s = plan_.storage_sets()[beta];
    std::vector<Element> ys;
    ys.reserve(k);
    for (auto j : s) ys.push_back(symbols[beta][j]);
    const auto row = multiply(ys, storage_inverse_.at(s));
    for (std::size_t l = 0; l < k; ++l) file(beta, l) = row[l];
  }
  return file;
}

Matrix decode_responses(const RetrievalPlan& plan, const ResponseBatch& responses) {
  return Decoder(plan).decode(responses);
}

RetrievalResult retrieve(const StorageSystem& storage, const RetrievalPlan& plan, std::size_t want, SeededRng rng) {
  if (!(storage.code() == plan.storage())) throw ValidationError("storage system and plan use different codes");
  if (storage.rows_per_file() != plan.b())
    throw ValidationError("files have " + std::to_string(storage.rows_per_file()) + " rows but the plan needs " +
                          std::to_string(plan.b()));
  const QueryBatch queries = make_queries(plan, storage.file_count(), want, std::move(rng));
  const ResponseBatch responses = respond(storage, queries);
  RetrievalResult result{decode_responses(plan, responses), plan.n() * plan.s(), {}};
  result.rate = Rational(static_cast<std::int64_t>(plan.b() * plan.k()), static_cast<std::int64_t>(result.downloaded));
  return result;
}

Matrix retrieval_chain_matrix(const RetrievalPlan& plan) {
  const Field& f = plan.storage().field();
  const Matrix& g = plan.storage().generator();
  const Matrix& h = plan.star_dual().generator();
  const std::size_t b = plan.b(), k = plan.k(), c = h.rows();
  Matrix chain(f, b * k, plan.s() * c);
  for (std::size_t gamma = 0; gamma < plan.s(); ++gamma)
    for (auto j : plan.retrieval_sets()[gamma]) {
      const std::size_t beta = *plan.row_for(gamma, j);
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t i = 0; i < c; ++i) {
          Element& e = chain(beta * k + l, gamma * c + i);
          e = f.fma(e, g(l, j), h(i, j));
        }
    }
  return chain;
}

}  // namespace starpir
