#include "ellcode/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>

namespace ellcode::kernels {

namespace {

// Pivot search, swap and normalization; returns false when column c has no pivot.
bool prepare_pivot(Matrix& A, std::size_t r, std::size_t c) {
  const Field& F = A.field();
  std::size_t p = r;
  while (p < A.rows() && A.at(p, c).is_zero()) ++p;
  if (p == A.rows()) return false;
  if (p != r) std::swap_ranges(A.row(p).begin(), A.row(p).end(), A.row(r).begin());
  const Fe inv = F.inv(A.at(r, c));
  auto pr = A.row(r);
  for (std::size_t j = c; j < A.cols(); ++j) pr[j] = F.mul(pr[j], inv);
  return true;
}

void eliminate_row(Matrix& A, std::size_t i, std::size_t r, std::size_t c) {
  const Field& F = A.field();
  const Fe f = A.at(i, c);
  if (f.is_zero()) return;
  auto ri = A.row(i);
  auto pr = A.row(r);
  for (std::size_t j = c; j < A.cols(); ++j)
    if (!pr[j].is_zero()) ri[j] = F.sub(ri[j], F.mul(f, pr[j]));
}

Echelon finish(const Matrix& A, std::vector<std::size_t> pivots) {
  std::vector<std::size_t> keep(pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return Echelon{A.select_rows(keep), std::move(pivots)};
}

}  // namespace

Echelon rref_serial(const Matrix& M) {
  Matrix A = M;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
    if (!prepare_pivot(A, r, c)) continue;
    for (std::size_t i = 0; i < A.rows(); ++i)
      if (i != r) eliminate_row(A, i, r, c);
    pivots.push_back(c);
    ++r;
  }
  return finish(A, std::move(pivots));
}

Echelon rref_parallel(const Matrix& M) {
  Matrix A = M;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const auto rows = static_cast<std::ptrdiff_t>(A.rows());
  for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
    if (!prepare_pivot(A, r, c)) continue;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i)
      if (static_cast<std::size_t>(i) != r) eliminate_row(A, static_cast<std::size_t>(i), r, c);
    pivots.push_back(c);
    ++r;
  }
  return finish(A, std::move(pivots));
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> row_pairs(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(k * (k + 1) / 2);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) out.emplace_back(i, j);
  return out;
}

void product_row(const Matrix& G, Matrix& S, std::size_t out, std::size_t i, std::size_t j) {
  const Field& F = G.field();
  for (std::size_t c = 0; c < G.cols(); ++c) S.at(out, c) = F.mul(G.at(i, c), G.at(j, c));
}

}  // namespace

Matrix schur_products_serial(const Matrix& G) {
  const auto pairs = row_pairs(G.rows());
  Matrix S(G.field(), pairs.size(), G.cols());
  for (std::size_t t = 0; t < pairs.size(); ++t) product_row(G, S, t, pairs[t].first, pairs[t].second);
  return S;
}

Matrix schur_products_parallel(const Matrix& G) {
  const auto pairs = row_pairs(G.rows());
  Matrix S(G.field(), pairs.size(), G.cols());
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    const auto& [i, j] = pairs[static_cast<std::size_t>(t)];
    product_row(G, S, static_cast<std::size_t>(t), i, j);
  }
  return S;
}

Matrix evaluate_serial(const std::vector<CurveFunction>& functions, const std::vector<Point>& points) {
  if (functions.empty()) return Matrix(Field::prime(2), 0, points.size());
  Matrix M(functions.front().curve().field(), functions.size(), points.size());
  for (std::size_t i = 0; i < functions.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) M.at(i, j) = functions[i].evaluate(points[j]);
  return M;
}

Matrix evaluate_parallel(const std::vector<CurveFunction>& functions, const std::vector<Point>& points) {
  if (functions.empty()) return Matrix(Field::prime(2), 0, points.size());
  Matrix M(functions.front().curve().field(), functions.size(), points.size());
  const auto total = static_cast<std::ptrdiff_t>(functions.size() * points.size());
  const std::size_t n = points.size();
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t t = 0; t < total; ++t) {
    const std::size_t i = static_cast<std::size_t>(t) / n, j = static_cast<std::size_t>(t) % n;
    try {
      M.at(i, j) = functions[i].evaluate(points[j]);
    } catch (...) {
#pragma omp critical(ellcode_eval_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return M;
}

namespace {

// Walks every assignment of the low `free` digits (base q) on top of `word`,
// updating the word incrementally; returns the least nonzero weight seen,
// including the starting word itself.
std::size_t sweep_low_digits(const Matrix& G, std::size_t free, std::vector<Fe> word) {
  const Field& F = G.field();
  const std::uint64_t q = F.order();
  const std::size_t n = G.cols();
  std::vector<Fe> step(q);
  for (std::uint64_t a = 0; a + 1 < q; ++a) step[a] = F.sub(F.element(a + 1), F.element(a));
  step[q - 1] = F.sub(F.element(0), F.element(q - 1));
  auto weight = [&] {
    std::size_t w = 0;
    for (const auto& e : word) w += e.is_zero() ? 0 : 1;
    return w;
  };
  std::size_t best = n + 1;
  std::size_t w0 = weight();
  if (w0 > 0) best = w0;
  std::vector<std::uint64_t> digit(free, 0);
  while (true) {
    std::size_t i = 0;
    while (i < free) {
      const std::uint64_t old = digit[i];
      const Fe& delta = step[old];
      auto row = G.row(i);
      for (std::size_t j = 0; j < n; ++j)
        if (!row[j].is_zero()) word[j] = F.add(word[j], F.mul(delta, row[j]));
      if (old + 1 < q) {
        digit[i] = old + 1;
        break;
      }
      digit[i] = 0;
      ++i;
    }
    if (i == free) break;
    const std::size_t w = weight();
    if (w > 0 && w < best) best = w;
  }
  return best;
}

}  // namespace

std::size_t min_weight_serial(const Matrix& G) {
  if (G.rows() == 0) return 0;
  return sweep_low_digits(G, G.rows(), std::vector<Fe>(G.cols()));
}

std::size_t min_weight_parallel(const Matrix& G) {
  if (G.rows() == 0) return 0;
  const Field& F = G.field();
  const std::uint64_t q = F.order();
  const std::size_t k = G.rows(), n = G.cols();
  // Fix enough high digits to give every thread work.
  std::size_t fixed = 0;
  std::uint64_t tasks = 1;
  while (fixed < k && tasks < 256) {
    tasks *= q;
    ++fixed;
  }
  const std::size_t free = k - fixed;
  std::size_t best = n + 1;
  const auto total = static_cast<std::int64_t>(tasks);
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (std::int64_t t = 0; t < total; ++t) {
    std::vector<Fe> word(n);
    auto code = static_cast<std::uint64_t>(t);
    for (std::size_t r = free; r < k; ++r) {
      const Fe c = F.element(code % q);
      code /= q;
      if (c.is_zero()) continue;
      auto row = G.row(r);
      for (std::size_t j = 0; j < n; ++j) word[j] = F.add(word[j], F.mul(c, row[j]));
    }
    best = std::min(best, sweep_low_digits(G, free, std::move(word)));
  }
  return best;
}

Echelon rref(const Matrix& M) {
  return M.rows() * M.cols() >= kParallelThreshold ? rref_parallel(M) : rref_serial(M);
}

Matrix schur_products(const Matrix& G) {
  return G.rows() * G.rows() * G.cols() / 2 >= kParallelThreshold ? schur_products_parallel(G)
                                                                   : schur_products_serial(G);
}

Matrix evaluate(const std::vector<CurveFunction>& functions, const std::vector<Point>& points) {
  return functions.size() * points.size() >= 256 ? evaluate_parallel(functions, points)
                                                  : evaluate_serial(functions, points);
}

std::size_t min_weight(const Matrix& G) {
  std::uint64_t words = 1;
  for (std::size_t i = 0; i < G.rows() && words < 4096; ++i) words *= G.field().order();
  return words >= 4096 ? min_weight_parallel(G) : min_weight_serial(G);
}


}  // namespace ellcode::kernels
