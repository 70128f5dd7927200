#include "tropcurve/exact.hpp"

#include <algorithm>

namespace tropcurve {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos)
    throw UsageError("empty rational");
  s = s.substr(first, last - first + 1);
  const auto slash = s.find('/');
  auto valid_int = [](const std::string &t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size())
      return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+')
    num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw UsageError("malformed rational '" + std::string(text) + "'");
  Rat r{Int(num), Int(den)};
  if (r.get_den() == 0)
    throw UsageError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat &r) { return r.get_str(); }

RatVec to_ratvec(const LatticePoint &p) {
  RatVec out;
  out.reserve(p.size());
  for (auto c : p)
    out.emplace_back(static_cast<long>(c));
  return out;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec> &rows) {
  if (rows.empty())
    return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw UsageError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

RatVec RatMatrix::row(std::size_t r) const {
  return RatVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVec RatMatrix::operator*(const RatVec &x) const {
  if (x.size() != cols_)
    throw UsageError("matrix-vector dimension mismatch");
  RatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out[r] += (*this)(r, c) * x[c];
  return out;
}

namespace {

// In-place reduction to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0)
      ++sel;
    if (sel == m.rows())
      continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(sel, c), m(row, c));
    const Rat inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0)
        continue;
      const Rat factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

std::optional<RatVec> solve_linear(const RatMatrix &a, const RatVec &b) {
  if (a.rows() != a.cols())
    throw UsageError("solve_linear: matrix is not square");
  if (b.size() != a.rows())
    throw UsageError("solve_linear: right-hand side has wrong length");
  const std::size_t n = a.rows();
  RatMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n)
    return std::nullopt;
  RatVec x(n);
  for (std::size_t r = 0; r < n; ++r)
    x[r] = aug(r, n);
  return x;
}

Rat determinant(const RatMatrix &a) {
  if (a.rows() != a.cols())
    throw UsageError("determinant: matrix is not square");
  RatMatrix m = a;
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col) == 0)
      ++sel;
    if (sel == n)
      return 0;
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c)
        std::swap(m(sel, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const Rat inv = 1 / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0)
        continue;
      const Rat factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c)
        m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

std::size_t rank(const RatMatrix &a) {
  RatMatrix m = a;
  return rref(m).size();
}

std::vector<std::size_t> pivot_columns(const RatMatrix &a) {
  RatMatrix m = a;
  return rref(m);
}

std::vector<RatVec> nullspace(const RatMatrix &a) {
  RatMatrix m = a;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    RatVec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Int> primitive_vector(const std::vector<Int> &v) {
  Int g = 0;
  for (const auto &c : v)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0)
    throw UsageError("primitive_vector: zero vector");
  std::vector<Int> out;
  out.reserve(v.size());
  for (const auto &c : v)
    out.push_back(c / g);
  return out;
}

LatticePoint primitive_vector(const LatticePoint &v) {
  std::vector<Int> big;
  big.reserve(v.size());
  for (auto c : v)
    big.emplace_back(static_cast<long>(c));
  LatticePoint out;
  for (const auto &c : primitive_vector(big))
    out.push_back(c.get_si());
  return out;
}

std::vector<Int> primitive_direction(const RatVec &v) {
  Int l = 1;
  for (const auto &c : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> ints;
  ints.reserve(v.size());
  for (const auto &c : v)
    ints.push_back(c.get_num() * (l / c.get_den()));
  return primitive_vector(ints);
}

Rat dot(const RatVec &a, const RatVec &b) {
  if (a.size() != b.size())
    throw UsageError("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec &a, const RatVec &b) {
  if (a.size() != b.size())
    throw UsageError("add: dimension mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec &a, const RatVec &b) {
  if (a.size() != b.size())
    throw UsageError("sub: dimension mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const RatVec &a, const Rat &s) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] * s;
  return out;
}

bool is_zero(const RatVec &v) {
  return std::all_of(v.begin(), v.end(), [](const Rat &c) { return c == 0; });
}

Int factorial(unsigned n) {
  Int f = 1;
  for (unsigned i = 2; i <= n; ++i)
    f *= i;
  return f;
}

} // namespace tropcurve
