#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/operators.hpp"

namespace neutro {

/// a + bI where the literal indeterminacy satisfies I * I = I. S is any
/// field-like scalar: double, or an exact rational type for ring-law checks.
template <class S = double>
class BasicNeutroNumber {
 public:
  constexpr BasicNeutroNumber() = default;
  constexpr BasicNeutroNumber(S a, S b = S(0)) : a_(a), b_(b) {}

  static constexpr BasicNeutroNumber indeterminacy() { return {S(0), S(1)}; }

  constexpr const S& a() const noexcept { return a_; }
  constexpr const S& b() const noexcept { return b_; }

  bool is_real() const { return b_ == S(0); }
  bool invertible() const { return a_ != S(0) && a_ + b_ != S(0); }

  /// 1/a + (1/(a+b) - 1/a) I, the unique y with x * y = 1.
  BasicNeutroNumber inverse() const {
    if (!invertible()) {
      throw UndefinedOperationError(
          "neutrosophic number is not invertible (a = 0 or a + b = 0)");
    }
    const S ia = S(1) / a_;
    return {ia, S(1) / (a_ + b_) - ia};
  }

  friend BasicNeutroNumber operator+(const BasicNeutroNumber& x,
                                     const BasicNeutroNumber& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend BasicNeutroNumber operator-(const BasicNeutroNumber& x,
                                     const BasicNeutroNumber& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend BasicNeutroNumber operator-(const BasicNeutroNumber& x) {
    return {-x.a_, -x.b_};
  }
  // (a + bI)(c + dI) = ac + (ad + bc + bd) I
  friend BasicNeutroNumber operator*(const BasicNeutroNumber& x,
                                     const BasicNeutroNumber& y) {
    return {x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_};
  }
  BasicNeutroNumber& operator+=(const BasicNeutroNumber& y) {
    return *this = *this + y;
  }
  BasicNeutroNumber& operator*=(const BasicNeutroNumber& y) {
    return *this = *this * y;
  }

  friend bool operator==(const BasicNeutroNumber& x,
                         const BasicNeutroNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  S a_ = S(0);
  S b_ = S(0);
};

using NeutroNumber = BasicNeutroNumber<double>;

/// x^n by repeated multiplication. I^n = I for n > 0; n <= 0 needs an
/// invertible base and is otherwise undefined.
template <class S>
BasicNeutroNumber<S> pow(const BasicNeutroNumber<S>& x, long long n) {
  BasicNeutroNumber<S> base = x;
  if (n <= 0) {
    if (!x.invertible()) {
      throw UndefinedOperationError("power " + std::to_string(n) +
                                    " of a non-invertible neutrosophic number");
    }
    base = x.inverse();
    n = -n;
  }
  BasicNeutroNumber<S> out(S(1));
  while (n > 0) {
    if (n & 1) out *= base;
    base *= base;
    n >>= 1;
  }
  return out;
}

/// a + b1 I1 + ... + bm Im. Only addition and scaling are defined: products
/// of distinct sub-indeterminacies have no agreed law.
template <class S = double>
class BasicRefinedNeutroNumber {
 public:
  BasicRefinedNeutroNumber(S a, std::vector<S> coeffs)
      : a_(a), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw UsageError("refined neutrosophic number needs at least one I_k");
    }
  }

  const S& a() const noexcept { return a_; }
  const std::vector<S>& coeffs() const noexcept { return coeffs_; }
  std::size_t m() const noexcept { return coeffs_.size(); }

  // The shorter operand is zero-padded.
  friend BasicRefinedNeutroNumber operator+(const BasicRefinedNeutroNumber& x,
                                            const BasicRefinedNeutroNumber& y) {
    std::vector<S> c(std::max(x.m(), y.m()), S(0));
    for (std::size_t k = 0; k < x.m(); ++k) c[k] = c[k] + x.coeffs_[k];
    for (std::size_t k = 0; k < y.m(); ++k) c[k] = c[k] + y.coeffs_[k];
    return {x.a_ + y.a_, std::move(c)};
  }

  BasicRefinedNeutroNumber scaled(const S& c) const {
    std::vector<S> out(coeffs_);
    for (auto& v : out) v = v * c;
    return {a_ * c, std::move(out)};
  }

  bool is_zero() const {
    return a_ == S(0) && std::all_of(coeffs_.begin(), coeffs_.end(),
                                     [](const S& v) { return v == S(0); });
  }

  // Equal as polynomials in I1..Im, ignoring trailing zero coefficients.
  friend bool operator==(const BasicRefinedNeutroNumber& x,
                         const BasicRefinedNeutroNumber& y) {
    if (!(x.a_ == y.a_)) return false;
    const std::size_t n = std::max(x.m(), y.m());
    for (std::size_t k = 0; k < n; ++k) {
      const S xv = k < x.m() ? x.coeffs_[k] : S(0);
      const S yv = k < y.m() ? y.coeffs_[k] : S(0);
      if (!(xv == yv)) return false;
    }
    return true;
  }

 private:
  S a_;
  std::vector<S> coeffs_;
};

using RefinedNeutroNumber = BasicRefinedNeutroNumber<double>;

template <class S>
BasicRefinedNeutroNumber<S> operator*(const S& c,
                                      const BasicRefinedNeutroNumber<S>& x) {
  return x.scaled(c);
}

/// Rectangular matrix of neutrosophic numbers, row-major.
template <class S = double>
class BasicNeutroMatrix {
 public:
  using value_type = BasicNeutroNumber<S>;

  BasicNeutroMatrix() = default;
  BasicNeutroMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  BasicNeutroMatrix(std::initializer_list<std::initializer_list<value_type>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw UsageError("matrix rows differ in length");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static BasicNeutroMatrix identity(std::size_t n) {
    BasicNeutroMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = value_type(S(1));
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  value_type& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const value_type& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend BasicNeutroMatrix operator+(const BasicNeutroMatrix& x,
                                     const BasicNeutroMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) {
      throw UsageError("matrix sum of " + x.shape() + " and " + y.shape());
    }
    BasicNeutroMatrix out(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.data_.size(); ++k) {
      out.data_[k] = x.data_[k] + y.data_[k];
    }
    return out;
  }

  friend BasicNeutroMatrix operator*(const BasicNeutroMatrix& x,
                                     const BasicNeutroMatrix& y) {
    if (x.cols_ != y.rows_) {
      throw UsageError("matrix product of " + x.shape() + " and " + y.shape());
    }
    BasicNeutroMatrix out(x.rows_, y.cols_);
    for (std::size_t r = 0; r < x.rows_; ++r) {
      for (std::size_t c = 0; c < y.cols_; ++c) {
        value_type acc;
        for (std::size_t k = 0; k < x.cols_; ++k) acc += x(r, k) * y(k, c);
        out(r, c) = acc;
      }
    }
    return out;
  }

  friend bool operator==(const BasicNeutroMatrix& x,
                         const BasicNeutroMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

using NeutroMatrix = BasicNeutroMatrix<double>;

// --- text form of a + bI ----------------------------------------------------

namespace detail {

inline std::string shortest_real(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace detail

/// Canonical token: "0", "1", "-1", "I", "-I", "2.5I", "3+2I", "-1+4I".
inline std::string to_string(const NeutroNumber& x) {
  const double a = x.a(), b = x.b();
  auto coeff = [](double v) {
    if (v == 1.0) return std::string("I");
    if (v == -1.0) return std::string("-I");
    return detail::shortest_real(v) + "I";
  };
  if (b == 0.0) return detail::shortest_real(a);
  if (a == 0.0) return coeff(b);
  std::string s = detail::shortest_real(a);
  std::string tail = coeff(b);
  if (tail.front() != '-') s += '+';
  return s + tail;
}

inline std::ostream& operator<<(std::ostream& os, const NeutroNumber& x) {
  return os << to_string(x);
}

namespace detail {

// Parses a leading real of the form [-+]digits[.digits][e[-+]digits].
inline bool read_real(std::string_view& s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc() || !std::isfinite(out)) return false;
  s.remove_prefix(static_cast<std::size_t>(res.ptr - s.data()));
  return true;
}

// Coefficient of I: "I", "+I", "-I", or a real followed by "I".
inline bool read_i_term(std::string_view s, double& out) {
  if (s.empty() || s.back() != 'I') return false;
  s.remove_suffix(1);
  if (s.empty() || s == "+") {
    out = 1.0;
    return true;
  }
  if (s == "-") {
    out = -1.0;
    return true;
  }
  return read_real(s, out) && s.empty();
}

}  // namespace detail

/// Parses "a", "bI", "a+bI", "a-bI", "I" or "-I". Throws ParseError.
inline NeutroNumber parse_neutro_number(std::string_view token) {
  const std::string tok(token);
  auto fail = [&]() -> NeutroNumber {
    throw ParseError("malformed neutrosophic number '" + tok + "'");
  };
  if (token.empty()) return fail();
  double b = 0.0;
  if (detail::read_i_term(token, b)) return {0.0, b};

  std::string_view rest = token;
  double a = 0.0;
  if (!detail::read_real(rest, a)) return fail();
  if (rest.empty()) return {a, 0.0};
  if (rest.front() != '+' && rest.front() != '-') return fail();
  if (!detail::read_i_term(rest, b)) return fail();
  return {a, b};
}

// --- adjacency matrices -----------------------------------------------------

enum class AdjacencyKind { Graph, CognitiveMap };

inline AdjacencyKind parse_adjacency_kind(std::string_view s) {
  if (s == "graph") return AdjacencyKind::Graph;
  if (s == "ncm" || s == "cognitive-map") return AdjacencyKind::CognitiveMap;
  throw UsageError("unknown adjacency kind '" + std::string(s) + "'");
}

struct AdjacencyReport {
  std::size_t size = 0;
  std::size_t edges = 0;                // entries equal to 1 or -1
  std::size_t indeterminate = 0;        // entries equal to I
  std::size_t symmetric_indeterminate_pairs = 0;
  bool symmetric = false;
};

/// Checks the entry alphabet ({0, 1, I} for graphs, {0, 1, -1, I} with a
/// zero diagonal for cognitive maps) and counts the indeterminate links.
/// A violation throws ConstraintError naming the first offending cell.
inline AdjacencyReport adjacency_validate(const NeutroMatrix& m,
                                          AdjacencyKind kind) {
  if (!m.square()) {
    throw UsageError("adjacency matrix must be square, got " + m.shape());
  }
  const NeutroNumber zero, one(1.0), minus_one(-1.0),
      ind = NeutroNumber::indeterminacy();
  AdjacencyReport r;
  r.size = m.rows();
  r.symmetric = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& x = m(i, j);
      const std::string cell = "cell (" + std::to_string(i + 1) + ", " +
                               std::to_string(j + 1) + ") = " + to_string(x);
      const bool ok = x == zero || x == one || x == ind ||
                      (kind == AdjacencyKind::CognitiveMap && x == minus_one);
      if (!ok) throw ConstraintError(cell + " is outside the entry alphabet");
      if (kind == AdjacencyKind::CognitiveMap && i == j && !(x == zero)) {
        throw ConstraintError(cell + ": cognitive maps need a zero diagonal");
      }
      if (x == ind) {
        ++r.indeterminate;
        if (j > i && m(j, i) == ind) ++r.symmetric_indeterminate_pairs;
      } else if (!(x == zero)) {
        ++r.edges;
      }
      if (!(x == m(j, i))) r.symmetric = false;
    }
  }
  return r;
}

/// Whitespace-separated tokens, one matrix row per line. Blank lines are
/// skipped. Errors report the 1-based line number.
inline NeutroMatrix parse_grid(std::string_view text) {
  std::vector<std::vector<NeutroNumber>> rows;
  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    std::vector<NeutroNumber> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
        ++pos;
        continue;
      }
      const auto end = line.find_first_of(" \t\r", pos);
      const auto tok = line.substr(pos, end - pos);
      try {
        row.push_back(parse_neutro_number(tok));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
      pos = end == std::string_view::npos ? line.size() : end;
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": row has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  NeutroMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

/// Canonical grid text: single spaces between tokens, '\n' after every row.
inline std::string emit_grid(const NeutroMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

/// Value of a path A -> ... -> Z: the neutrosophic conjunction of its edge
/// values, folded left. Min/max makes the fold associative.
inline Triplet path_influence(std::span<const Triplet> edges,
                              NormPair norms = NormPair::min_max()) {
  if (edges.empty()) throw UsageError("path has no edges");
  const auto sys = OperatorSystem::ns(norms);
  detail::require_operand(edges.front(), sys);
  Triplet acc = edges.front();
  for (std::size_t k = 1; k < edges.size(); ++k) {
    acc = conjunct(acc, edges[k], sys);
  }
  return acc;
}

}  // namespace neutro
