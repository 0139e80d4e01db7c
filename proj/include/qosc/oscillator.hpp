#pragma once

#include <map>
#include <string>
#include <utility>

#include "qosc/qfunctions.hpp"

namespace qosc {

enum class Generator { APlus, AMinus, K };
enum class RealizedOperator { APlus, AMinus, K, Tau, DzPlus, DzMinus };

std::string to_string(Generator g);
std::string to_string(RealizedOperator op);

// D x D matrix with sparse entries over any ring T with +, * and is_zero().
template <class T>
class SparseMatrix {
 public:
  using Index = std::pair<int, int>;

  explicit SparseMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw Error("matrix dimension must be positive");
  }

  static SparseMatrix identity(int dim) {
    SparseMatrix r(dim);
    for (int i = 0; i < dim; ++i) r.set(i, i, T(1));
    return r;
  }

  int dim() const { return dim_; }
  const std::map<Index, T>& entries() const { return entries_; }

  T at(int row, int col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? T() : it->second;
  }
  void set(int row, int col, T v) {
    if (row < 0 || col < 0 || row >= dim_ || col >= dim_) throw Error("matrix index out of range");
    if (v.is_zero()) {
      entries_.erase({row, col});
    } else {
      entries_[{row, col}] = std::move(v);
    }
  }

  bool is_zero() const { return entries_.empty(); }

  SparseMatrix& operator+=(const SparseMatrix& o) {
    require_same_dim(o);
    for (const auto& [ij, v] : o.entries_) set(ij.first, ij.second, at(ij.first, ij.second) + v);
    return *this;
  }
  SparseMatrix& operator-=(const SparseMatrix& o) {
    require_same_dim(o);
    for (const auto& [ij, v] : o.entries_) set(ij.first, ij.second, at(ij.first, ij.second) - v);
    return *this;
  }
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }

  template <class S>
  SparseMatrix scaled(const S& s) const {
    SparseMatrix r(dim_);
    for (const auto& [ij, v] : entries_) r.set(ij.first, ij.second, v * s);
    return r;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    a.require_same_dim(b);
    std::map<int, std::map<int, const T*>> b_rows;
    for (const auto& [ij, v] : b.entries_) b_rows[ij.first][ij.second] = &v;
    SparseMatrix r(a.dim_);
    for (const auto& [ij, av] : a.entries_) {
      auto row = b_rows.find(ij.second);
      if (row == b_rows.end()) continue;
      for (const auto& [col, bv] : row->second) {
        auto [it, inserted] = r.entries_.try_emplace({ij.first, col}, av * *bv);
        if (!inserted) it->second += av * *bv;
      }
    }
    std::erase_if(r.entries_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

 private:
  void require_same_dim(const SparseMatrix& o) const {
    if (o.dim_ != dim_) throw Error("matrix dimensions differ");
  }

  int dim_;
  std::map<Index, T> entries_;
};

struct GeneratorMatrix {
  std::string tag;
  SparseMatrix<PRational> matrix;
};

// Truncation of the Fock representation to span(xi_0 .. xi_{D-1}):
//   A+ xi_n = -q^{-(n+1)/2} xi_{n+1}
//   A- xi_n = q^{n/2+1} (1-q^{-n})/(1-q) xi_{n-1}
//   K  xi_n = q^{-n/2} xi_n
GeneratorMatrix generator_matrix(Generator which, int dim);

// Coefficient vector over the basis xi_n.
struct RepVector {
  int dim = 0;
  std::map<int, PRational> coeffs;
};
RepVector apply(const GeneratorMatrix& g, const RepVector& v);

// Difference-operator realization on Laurent polynomials in z, with
// T^{+-1/2}: z^k -> q^{+-k/2} z^k:
//   A+  = q^{-1/2} (z - 1/z)^{-1} (z^-2 T^{1/2} - z^2 T^{-1/2})
//   A-  = q/(1-q) tau,  tau = (z - 1/z)^{-1} (T^{1/2} - T^{-1/2})
//   K   = (z - 1/z)^{-1} (-z^-1 T^{1/2} + z T^{-1/2})
//   Dz+ = z^-1 (1 - T),  Dz- = z^-1 (1 - T^{-1})
// Throws NotDivisible when the divided difference leaves the ring.
ZLaurent apply_realization(RealizedOperator which, const ZLaurent& f);
ZLaurent apply_realization(Generator which, const ZLaurent& f);

struct MatrixElementResult {
  int m = 0;
  int n = 0;
  QuarterExponent mu;
  QuarterExponent nu;
  AlphaBetaPoly value;
};

// Exponent of the m >= n prefactor. Confirmed: q^{(m-n)[(mu-1/4)(m-n)-n/2-1/4]}.
// Swapped uses the outer factor (n-m) instead; kept for comparison only.
enum class LowerPrefactor { Confirmed, Swapped };

MatrixElementResult matrix_element_closed_form(QuarterExponent mu, QuarterExponent nu, int m, int n,
                                               LowerPrefactor orientation = LowerPrefactor::Confirmed);

// Entry (m, n) of E^{(mu)}((1-q) alpha A+) E^{(nu)}((beta/q)(1-q) A-), each
// exponential summed to order N over the D-dimensional truncation. Building
// the two factors once and reading many entries is the intended use.
class MatrixElementOracle {
 public:
  MatrixElementOracle(QuarterExponent mu, QuarterExponent nu, int dim, int series_order);

  // Throws WindowTooSmall unless D > max(m, n) + N and N >= m + n.
  AlphaBetaPoly entry(int m, int n) const;

  int dim() const { return dim_; }
  int series_order() const { return order_; }

 private:
  int dim_;
  int order_;
  SparseMatrix<AlphaBetaPoly> left_;
  SparseMatrix<AlphaBetaPoly> right_;
};

AlphaBetaPoly matrix_element_oracle(QuarterExponent mu, QuarterExponent nu, int m, int n, int dim, int series_order);

// E^{(mu)}(alpha A+) 1 as a series in alpha, through repeated application of
// the realized A+ to the vacuum.
ZSeries apply_U_to_vacuum(QuarterExponent mu, int order);

// E^{(1/4)}((beta (1-q)/q) A-) f with beta in the formal a slot. A- lowers
// the z-degree of a symmetric f, so the operator series terminates.
ZLaurent apply_E_A_minus(const ZLaurent& f);
inline ZLaurent apply_E_A_minus_to_hermite(int n) { return apply_E_A_minus(continuous_q_hermite(n)); }

// sum_k c_k x^k -> sum_k c_k factor^k (alpha beta)^k
AlphaBetaPoly at_alpha_beta(const XPoly& f, const PRational& factor);

}  // namespace qosc
