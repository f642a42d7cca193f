#ifndef NIG_SPECTRA_HPP
#define NIG_SPECTRA_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "nig/graph.hpp"

namespace nig {

/// det(xI - A) as exact integer coefficients c_0..c_n (index = power of x).
struct CharPolynomial {
  std::vector<mpz_class> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  const mpz_class& operator[](int k) const { return coefficients[static_cast<std::size_t>(k)]; }

  /// "x^6 - 9x^4" style rendering, highest power first.
  std::string to_string() const;

  friend bool operator==(const CharPolynomial&, const CharPolynomial&) = default;
};

/// Counts of positive, negative and zero adjacency eigenvalues.
struct InertiaSignature {
  int positive = 0;
  int negative = 0;
  int nullity = 0;

  int order() const { return positive + negative + nullity; }
  int rank() const { return positive + negative; }

  InertiaSignature& operator+=(const InertiaSignature& o) {
    positive += o.positive;
    negative += o.negative;
    nullity += o.nullity;
    return *this;
  }
  friend InertiaSignature operator+(InertiaSignature a, const InertiaSignature& b) { return a += b; }
  friend bool operator==(const InertiaSignature&, const InertiaSignature&) = default;
};

std::string to_string(const InertiaSignature& s);

/// Faddeev-LeVerrier recurrence in exact integer arithmetic. Every division
/// by k in the recurrence is exact for integer matrices.
CharPolynomial char_poly(const Graph& g);

/// Inertia from the sign pattern of a real-rooted polynomial (Descartes'
/// rule is exact when all roots are real). Throws on the zero polynomial.
InertiaSignature inertia_signcount(const CharPolynomial& p);

/// Inertia by symmetric congruence (Sylvester's law) over the rationals,
/// 1x1 pivots first, 2x2 pivots when the remaining diagonal is all zero.
/// Uses int64 fractions and falls back to GMP rationals on overflow.
InertiaSignature inertia_congruence(const Graph& g);

/// Same elimination, GMP rationals throughout.
InertiaSignature inertia_congruence_exact(const Graph& g);

/// Default inertia backend.
inline InertiaSignature inertia(const Graph& g) { return inertia_congruence(g); }

inline int negative_inertia(const Graph& g) { return inertia(g).negative; }

/// Exact inertia of one-vertex extensions of a fixed graph. With A the
/// adjacency matrix and b the new vertex's neighbourhood: if b is outside the
/// column space both p and n grow by one; otherwise the sign of b^T A^+ b
/// decides (positive: n grows, negative: p grows, zero: nullity grows).
class VertexExtensionOracle {
 public:
  explicit VertexExtensionOracle(const Graph& g);

  const InertiaSignature& base() const { return base_; }
  InertiaSignature extended(VertexMask neighbourhood) const;

 private:
  int order_;
  InertiaSignature base_;
  std::vector<std::vector<mpz_class>> null_basis_;  // integer kernel vectors
  std::vector<std::vector<mpz_class>> inverse_;     // (A + Z Z^T)^{-1} scaled by a positive integer
  // int64 copies, used when every entry is small enough that sums cannot overflow
  bool small_ = false;
  std::vector<std::vector<std::int64_t>> null_small_;
  std::vector<std::vector<std::int64_t>> inverse_small_;
};

/// (floor(n/2), floor(n/2), n mod 2) for the path on n vertices.
InertiaSignature formula_path_inertia(int n);

/// Negative inertia of the n-cycle. Evaluates both the floor/ceil form split
/// by parity and the residue-mod-4 form, and throws std::logic_error if they
/// ever disagree. Throws std::invalid_argument for n < 3.
int formula_cycle_negative(int n);

}  // namespace nig

#endif  // NIG_SPECTRA_HPP
