#include "ellcode/codes.hpp"

#include <algorithm>
#include <unordered_map>

#include "ellcode/error.hpp"
#include "ellcode/kernels.hpp"

namespace ellcode {

namespace {

constexpr const char* kModule = "codes";

Matrix rows_to_matrix(const Field& F, const std::vector<std::vector<Fe>>& rows, std::size_t n) {
  return Matrix::from_rows(F, rows, n);
}

void require_block_length(std::size_t n, std::size_t ell) {
  if (ell == 0 || n % ell != 0)
    throw Error(ErrorKind::BadBlockLength, kModule,
                "block length " + std::to_string(ell) + " does not divide " + std::to_string(n));
}

}  // namespace

LinearCode LinearCode::from_matrix(const Matrix& rows, std::string provenance) {
  auto E = kernels::rref(rows);
  return LinearCode(std::move(E.reduced), std::move(E.pivots), std::move(provenance));
}

LinearCode LinearCode::from_rows(const Field& F, const std::vector<std::vector<Fe>>& rows, std::size_t n,
                                 std::string provenance) {
  return from_matrix(rows_to_matrix(F, rows, n), std::move(provenance));
}

Matrix LinearCode::parity_check() const { return nullspace(generator_); }

bool LinearCode::contains(const std::vector<Fe>& word) const {
  if (word.size() != length()) return false;
  const Field& F = field();
  std::vector<Fe> w = word;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Fe c = w[pivots_[i]];
    if (c.is_zero()) continue;
    const auto g = generator_.row(i);
    for (std::size_t j = 0; j < w.size(); ++j)
      if (!g[j].is_zero()) w[j] = F.sub(w[j], F.mul(c, g[j]));
  }
  return std::all_of(w.begin(), w.end(), [](const Fe& e) { return e.is_zero(); });
}

LinearCode dual(const LinearCode& C) {
  return LinearCode::from_matrix(C.parity_check(), "dual(" + C.provenance() + ")");
}

Fe SubfieldEmbedding::embed(const Fe& a) const { return image.at(small.index(a)); }

Fe SubfieldEmbedding::restrict(const Fe& a) const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] == a) return small.element(i);
  throw Error(ErrorKind::FieldMismatch, kModule, "element is not in the subfield");
}

SubfieldEmbedding subfield_embedding(const Field& large, unsigned d) {
  const unsigned m = large.degree();
  const auto p = large.characteristic();
  if (d == 0 || m % d != 0)
    throw Error(ErrorKind::InvalidSubfieldDegree, kModule,
                std::to_string(d) + " does not divide " + std::to_string(m));
  SubfieldEmbedding emb{d == 1 ? Field::prime(p) : Field::extension(p, d), large, {}};
  emb.image.resize(emb.small.order());
  if (d == m && emb.small == large) {
    for (std::uint64_t i = 0; i < emb.image.size(); ++i) emb.image[i] = large.element(i);
    return emb;
  }
  if (d == 1) {
    for (std::uint64_t i = 0; i < p; ++i) emb.image[i] = large.from_int(static_cast<std::int64_t>(i));
    return emb;
  }
  // A root in `large` of the small field's modulus fixes the embedding.
  const auto& f = emb.small.modulus();
  auto is_root = [&](const Fe& b) {
    Fe acc{};
    for (std::size_t i = f.size(); i-- > 0;)
      acc = large.add(large.mul(acc, b), large.from_int(f[i]));
    return acc.is_zero();
  };
  std::optional<Fe> beta;
  for (std::uint64_t i = 0; i < large.order() && !beta; ++i)
    if (is_root(large.element(i))) beta = large.element(i);
  for (std::uint64_t i = 0; i < emb.image.size(); ++i) {
    const auto coeffs = emb.small.decompose(emb.small.element(i));
    Fe acc{};
    for (std::size_t j = coeffs.size(); j-- > 0;)
      acc = large.add(large.mul(acc, *beta), large.from_int(coeffs[j]));
    emb.image[i] = acc;
  }
  return emb;
}

Matrix subfield_expansion(const Matrix& H, unsigned d) {
  const Field& L = H.field();
  const unsigned m = L.degree();
  const auto emb = subfield_embedding(L, d);
  const std::size_t n = H.cols();
  const Field& K = emb.small;
  if (emb.small == L) return H;
  std::unordered_map<std::uint64_t, Fe> back;
  for (std::uint64_t i = 0; i < emb.image.size(); ++i) back.emplace(L.index(emb.image[i]), K.element(i));

  std::vector<std::vector<Fe>> rows;
  if (d == 1) {
    // Each parity row splits into m rows over GF(p).
    for (std::size_t r = 0; r < H.rows(); ++r) {
      std::vector<std::vector<Fe>> split(m, std::vector<Fe>(n));
      for (std::size_t j = 0; j < n; ++j) {
        const auto c = L.decompose(H.at(r, j));
        for (unsigned t = 0; t < m; ++t) split[t][j] = K.from_int(c[t]);
      }
      for (auto& s : split) rows.push_back(std::move(s));
    }
  } else {
    // sum_j h_j c_j = 0 with c_j in K iff Tr(x^i sum_j h_j c_j) = 0 for i < m/d.
    const unsigned e = m / d;
    auto trace = [&](const Fe& a) {
      Fe s{};
      for (unsigned i = 0; i < e; ++i) s = L.add(s, L.frobenius(a, d * i));
      return back.at(L.index(s));
    };
    for (std::size_t r = 0; r < H.rows(); ++r) {
      Fe xi = L.one();
      for (unsigned i = 0; i < e; ++i) {
        std::vector<Fe> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = trace(L.mul(xi, H.at(r, j)));
        rows.push_back(std::move(row));
        xi = L.mul(xi, L.generator());
      }
    }
  }
  return Matrix::from_rows(K, rows, n);
}

LinearCode subfield_subcode(const LinearCode& C, unsigned d) {
  const auto prov = "subfield(" + std::to_string(d) + "," + C.provenance() + ")";
  const Matrix X = subfield_expansion(C.parity_check(), d);
  if (X.field() == C.field()) return LinearCode::from_matrix(C.generator(), prov);
  return LinearCode::from_matrix(nullspace(X), prov);
}

LinearCode extend_scalars(const LinearCode& C, const SubfieldEmbedding& emb) {
  if (!(C.field() == emb.small)) throw Error(ErrorKind::FieldMismatch, kModule, "code is not over the subfield");
  const Matrix& G = C.generator();
  Matrix M(emb.large, G.rows(), G.cols());
  for (std::size_t i = 0; i < G.rows(); ++i)
    for (std::size_t j = 0; j < G.cols(); ++j) M.at(i, j) = emb.embed(G.at(i, j));
  return LinearCode::from_matrix(M, "extend(" + C.provenance() + ")");
}

std::vector<Fe> block_shift(const std::vector<Fe>& word, std::size_t ell) {
  require_block_length(word.size(), ell);
  std::vector<Fe> out(word.size());
  for (std::size_t b = 0; b < word.size(); b += ell)
    for (std::size_t i = 0; i < ell; ++i) out[b + (i + 1) % ell] = word[b + i];
  return out;
}

bool is_quasi_cyclic(const LinearCode& C, std::size_t ell) {
  require_block_length(C.length(), ell);
  for (std::size_t i = 0; i < C.dimension(); ++i)
    if (!C.contains(block_shift(C.generator().row_vector(i), ell))) return false;
  return true;
}

BlockCirculant block_circulant_form(const LinearCode& C, std::size_t ell,
                                    const std::vector<std::vector<std::size_t>>& grouping) {
  require_block_length(C.length(), ell);
  std::vector<std::size_t> order;
  std::vector<bool> seen(C.length(), false);
  for (const auto& g : grouping) {
    if (g.size() != ell) throw Error(ErrorKind::BadBlockLength, kModule, "group size differs from block length");
    for (auto c : g) {
      if (c >= C.length() || seen[c]) throw Error(ErrorKind::BadBlockLength, kModule, "grouping is not a partition");
      seen[c] = true;
      order.push_back(c);
    }
  }
  if (order.size() != C.length()) throw Error(ErrorKind::BadBlockLength, kModule, "grouping is not a partition");

  const auto P = LinearCode::from_matrix(C.generator().select_columns(order));
  BlockCirculant out;
  std::vector<std::vector<Fe>> rows;
  for (std::size_t i = 0; i < P.dimension(); ++i) {
    auto r = P.generator().row_vector(i);
    if (!rows.empty() && row_space_contains(Matrix::from_rows(P.field(), rows, P.length()),
                                            Matrix::from_rows(P.field(), {r})))
      continue;
    for (std::size_t s = 0; s < ell; ++s) {
      if (!P.contains(r)) {
        out.witness = std::move(r);
        return out;
      }
      rows.push_back(r);
      r = block_shift(r, ell);
    }
  }
  out.ok = true;
  out.matrix = Matrix::from_rows(P.field(), rows, P.length());
  return out;
}

bool is_block_circulant(const Matrix& M, std::size_t ell) {
  if (ell == 0 || M.cols() % ell != 0 || M.rows() % ell != 0) return false;
  for (std::size_t g = 0; g < M.rows(); g += ell)
    for (std::size_t s = 0; s < ell; ++s)
      if (block_shift(M.row_vector(g + s), ell) != M.row_vector(g + (s + 1) % ell)) return false;
  return true;
}

LinearCode schur_square(const LinearCode& C) {
  return LinearCode::from_matrix(kernels::schur_products(C.generator()), "square(" + C.provenance() + ")");
}

std::size_t min_distance_exhaustive(const LinearCode& C) {
  std::uint64_t words = 1;
  for (std::size_t i = 0; i < C.dimension(); ++i) {
    words *= C.field().order();
    if (words > kMaxCodewords)
      throw Error(ErrorKind::CodeTooLarge, kModule,
                  "q^k exceeds " + std::to_string(kMaxCodewords) + " codewords");
  }
  return kernels::min_weight(C.generator());
}

}  // namespace ellcode
