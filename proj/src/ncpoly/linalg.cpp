#include "nchopf/linalg.hpp"

#include <sstream>

#include "nchopf/error.hpp"

namespace nchopf {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

bool Matrix::is_unipotent_upper() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? "," : "") << "(";
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << nchopf::to_string((*this)(i, j));
    out << ")";
  }
  return out.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(at(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        at(i, j) = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  std::vector<std::size_t> pivots;
  Matrix e = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -e(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::InvalidArgument, "right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  Matrix e = rref(std::move(aug), &pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = e(i, m.cols());
  return x;
}

namespace {

void axpy(std::map<std::size_t, Scalar>& acc, const Scalar& c, const std::map<std::size_t, Scalar>& x) {
  for (const auto& [k, v] : x) {
    Scalar& slot = acc[k];
    slot += c * v;
    if (is_zero(slot)) acc.erase(k);
  }
}

}  // namespace

LinearSpan::Reduced LinearSpan::reduce(const Polynomial& p) const {
  Reduced out{p, {}};
  // Terms are stored in ShortLex order, so the back is the largest word.
  // Once the largest word is not a pivot it stays in the residual, so the
  // remainder below it is reduced separately.
  Polynomial kept;
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const Term& top = rest.terms().back();
    auto it = rows_.find(top.word);
    if (it == rows_.end()) {
      kept += Polynomial::of(top.word, top.coeff);
      rest -= Polynomial::of(top.word, top.coeff);
      continue;
    }
    Scalar c = top.coeff;
    rest -= it->second.vector * c;
    axpy(out.combination, c, it->second.combination);
  }
  out.residual = kept;
  return out;
}

bool LinearSpan::insert(const Polynomial& p) {
  std::size_t id = inputs_++;
  Reduced r = reduce(p);
  if (r.residual.is_zero()) return false;
  // residual = p - Σ c_i input_i
  std::map<std::size_t, Scalar> comb;
  comb[id] = 1;
  axpy(comb, Scalar(-1), r.combination);
  Scalar lead = r.residual.terms().back().coeff;
  Scalar inv = 1 / lead;
  for (auto& [k, v] : comb) v *= inv;
  Word pivot = r.residual.terms().back().word;
  rows_.emplace(std::move(pivot), Row{r.residual * inv, std::move(comb)});
  return true;
}

std::optional<std::vector<Scalar>> LinearSpan::express(const Polynomial& p) const {
  Reduced r = reduce(p);
  if (!r.residual.is_zero()) return std::nullopt;
  std::vector<Scalar> out(inputs_);
  for (const auto& [k, v] : r.combination) out[k] = v;
  return out;
}

}  // namespace nchopf
