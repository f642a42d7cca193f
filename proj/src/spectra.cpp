#include "nig/spectra.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace nig {

std::string CharPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = (*this)[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

std::string to_string(const InertiaSignature& s) {
  return "p=" + std::to_string(s.positive) + " n=" + std::to_string(s.negative) +
         " eta=" + std::to_string(s.nullity);
}

CharPolynomial char_poly(const Graph& g) {
  const int n = g.order();
  CharPolynomial p;
  p.coefficients.assign(static_cast<std::size_t>(n) + 1, 0);
  p.coefficients[n] = 1;
  if (n == 0) return p;

  using Matrix = std::vector<std::vector<mpz_class>>;
  Matrix m(n, std::vector<mpz_class>(n, 0));  // M_0 = 0
  Matrix am(n, std::vector<mpz_class>(n, 0));
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (int i = 0; i < n; ++i) m[i][i] += p.coefficients[n - k + 1];
    // A M_k: row i is the sum of rows of M_k at the neighbours of i.
    for (int i = 0; i < n; ++i) {
      auto& row = am[i];
      for (auto& x : row) x = 0;
      for (VertexMask nb = g.neighbors(i); nb; nb &= nb - 1) {
        const auto& src = m[std::countr_zero(nb)];
        for (int j = 0; j < n; ++j) row[j] += src[j];
      }
    }
    mpz_class trace = 0;
    for (int i = 0; i < n; ++i) trace += am[i][i];
    mpz_class c = -trace;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
    p.coefficients[n - k] = c;
    std::swap(m, am);
  }
  return p;
}

InertiaSignature inertia_signcount(const CharPolynomial& p) {
  const int deg = p.degree();
  int lowest = 0;
  while (lowest <= deg && p[lowest] == 0) ++lowest;
  if (lowest > deg) throw std::invalid_argument("inertia of the zero polynomial");

  int variations = 0;
  int last_sign = 0;
  for (int k = deg; k >= lowest; --k) {
    int s = sgn(p[k]);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++variations;
    last_sign = s;
  }
  InertiaSignature sig;
  sig.nullity = lowest;
  sig.positive = variations;
  sig.negative = deg - lowest - variations;
  return sig;
}

namespace {

struct RationalOverflow {};

// int64 fraction with overflow detection; the congruence fast path.
class SmallRational {
 public:
  SmallRational() = default;
  explicit SmallRational(std::int64_t v) : num_(v), den_(1) {}

  friend bool operator==(const SmallRational& a, const SmallRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const SmallRational& a, int v) { return !(a == SmallRational(v)); }
  friend bool operator==(const SmallRational& a, int v) { return a == SmallRational(v); }
  friend bool operator>(const SmallRational& a, const SmallRational& b) {
    return static_cast<__int128>(a.num_) * b.den_ > static_cast<__int128>(b.num_) * a.den_;
  }
  friend SmallRational operator+(const SmallRational& a, const SmallRational& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend SmallRational operator-(const SmallRational& a, const SmallRational& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend SmallRational operator*(const SmallRational& a, const SmallRational& b) {
    return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend SmallRational operator/(const SmallRational& a, const SmallRational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  friend SmallRational operator-(const SmallRational& a) { return make(-static_cast<__int128>(a.num_), a.den_); }
  SmallRational& operator-=(const SmallRational& b) { return *this = *this - b; }
  SmallRational& operator+=(const SmallRational& b) { return *this = *this + b; }
  SmallRational& operator*=(const SmallRational& b) { return *this = *this * b; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

 private:
  static __int128 gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static SmallRational make(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
    SmallRational r;
    if (num == 0) return r;
    if (num <= kMax && -num <= kMax && den <= kMax) {
      auto n64 = static_cast<std::int64_t>(num);
      auto d64 = static_cast<std::int64_t>(den);
      if (d64 != 1) {
        const std::int64_t g = std::gcd(n64, d64);
        n64 /= g;
        d64 /= g;
      }
      r.num_ = n64;
      r.den_ = d64;
      return r;
    }
    const __int128 g = gcd(num, den);
    num /= g;
    den /= g;
    if (num > kMax || -num > kMax || den > kMax) throw RationalOverflow{};
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

template <class Q>
InertiaSignature congruence_eliminate(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<Q>> s(n, std::vector<Q>(n, Q(0)));
  for (int i = 0; i < n; ++i) {
    for (VertexMask nb = g.neighbors(i); nb; nb &= nb - 1) s[i][std::countr_zero(nb)] = Q(1);
  }

  InertiaSignature sig;
  std::vector<int> live(n);
  for (int i = 0; i < n; ++i) live[i] = i;

  auto erase = [&live](int v) { std::erase(live, v); };

  while (!live.empty()) {
    int diag = -1;
    for (int v : live) {
      if (s[v][v] != 0) {
        diag = v;
        break;
      }
    }
    if (diag >= 0) {
      const Q pivot = s[diag][diag];
      (pivot > Q(0) ? sig.positive : sig.negative) += 1;
      erase(diag);
      for (int r : live) {
        if (s[r][diag] == 0) continue;
        const Q f = s[r][diag] / pivot;
        for (int c : live) {
          if (s[diag][c] != 0) s[r][c] -= f * s[diag][c];
        }
      }
      continue;
    }

    int pi = -1;
    int pj = -1;
    for (int v : live) {
      for (int w : live) {
        if (w != v && s[v][w] != 0) {
          pi = v;
          pj = w;
          break;
        }
      }
      if (pi >= 0) break;
    }
    if (pi < 0) {
      sig.nullity += static_cast<int>(live.size());
      break;
    }

    // Block [[0, a], [a, 0]] has eigenvalues +-a.
    sig.positive += 1;
    sig.negative += 1;
    const Q a = s[pi][pj];
    erase(pi);
    erase(pj);
    for (int r : live) {
      const Q& ri = s[r][pi];
      const Q& rj = s[r][pj];
      if (ri == 0 && rj == 0) continue;
      for (int c : live) {
        const Q& ic = s[pi][c];
        const Q& jc = s[pj][c];
        if (ic == 0 && jc == 0) continue;
        s[r][c] -= (ri * jc + rj * ic) / a;
      }
    }
  }
  return sig;
}

}  // namespace

InertiaSignature inertia_congruence(const Graph& g) {
  try {
    return congruence_eliminate<SmallRational>(g);
  } catch (const RationalOverflow&) {
    return congruence_eliminate<mpq_class>(g);
  }
}

InertiaSignature inertia_congruence_exact(const Graph& g) { return congruence_eliminate<mpq_class>(g); }

namespace {

template <class Q>
using Matrix = std::vector<std::vector<Q>>;

mpz_class numerator(const mpq_class& x) { return x.get_num(); }
mpz_class denominator(const mpq_class& x) { return x.get_den(); }

// Kernel basis from the reduced row echelon form.
template <class Q>
Matrix<Q> kernel_basis(Matrix<Q> m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int sel = -1;
    for (int r = row; r < n; ++r) {
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[row], m[sel]);
    const Q inv = Q(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Q f = m[r][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  Matrix<Q> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Q> z(n, Q(0));
    z[free] = Q(1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) z[pivot_col[r]] = -m[r][free];
    basis.push_back(std::move(z));
  }
  return basis;
}

template <class Q>
Matrix<Q> invert(Matrix<Q> m) {
  const int n = static_cast<int>(m.size());
  Matrix<Q> inv(n, std::vector<Q>(n, Q(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = Q(1);
  for (int col = 0; col < n; ++col) {
    int sel = col;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) throw std::logic_error("matrix is singular");
    std::swap(m[col], m[sel]);
    std::swap(inv[col], inv[sel]);
    const Q p = Q(1) / m[col][col];
    for (int c = 0; c < n; ++c) {
      m[col][c] *= p;
      inv[col][c] *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Q f = m[r][col];
      for (int c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

// Multiplies a rational vector by the lcm of its denominators.
template <class Q>
std::vector<mpz_class> clear_denominators(const std::vector<Q>& v, const mpz_class& scale) {
  std::vector<mpz_class> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(numerator(x) * (scale / denominator(x)));
  return out;
}

// Kernel basis Z and (A + Z Z^T)^{-1}.
template <class Q>
std::pair<Matrix<Q>, Matrix<Q>> extension_rational(const Graph& g) {
  const int n = g.order();
  Matrix<Q> a(n, std::vector<Q>(n, Q(0)));
  for (int i = 0; i < n; ++i) {
    for (VertexMask nb = g.neighbors(i); nb; nb &= nb - 1) a[i][std::countr_zero(nb)] = Q(1);
  }
  Matrix<Q> kernel = kernel_basis(a);
  Matrix<Q> b = a;
  for (const auto& z : kernel) {
    for (int i = 0; i < n; ++i) {
      if (z[i] == 0) continue;
      for (int j = 0; j < n; ++j) b[i][j] += z[i] * z[j];
    }
  }
  return {std::move(kernel), invert(std::move(b))};
}

// Scales each vector (or the whole matrix when `per_row` is false) to
// integers; nullopt when an entry reaches 2^40, which keeps every sum of at
// most 64 x 64 entries inside int64.
std::optional<std::vector<std::vector<std::int64_t>>> clear_small(
    const Matrix<SmallRational>& m, bool per_row) {
  constexpr __int128 kLimit = __int128{1} << 40;
  auto lcm128 = [](__int128 x, __int128 y) -> __int128 {
    __int128 a = x, b = y;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return x / a * y;
  };
  std::vector<__int128> scales;
  __int128 global = 1;
  for (const auto& row : m) {
    __int128 sc = per_row ? 1 : global;
    for (const auto& x : row) {
      sc = lcm128(sc, x.den());
      if (sc >= kLimit) return std::nullopt;
    }
    if (per_row) {
      scales.push_back(sc);
    } else {
      global = sc;
    }
  }
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    const __int128 sc = per_row ? scales[r] : global;
    auto& row = out.emplace_back();
    for (const auto& x : m[r]) {
      const __int128 v = static_cast<__int128>(x.num()) * (sc / x.den());
      if (v >= kLimit || -v >= kLimit) return std::nullopt;
      row.push_back(static_cast<std::int64_t>(v));
    }
  }
  return out;
}

}  // namespace

VertexExtensionOracle::VertexExtensionOracle(const Graph& g) : order_(g.order()) {
  base_ = inertia(g);
  try {
    auto [kernel, h] = extension_rational<SmallRational>(g);
    auto z = clear_small(kernel, true);
    auto hi = clear_small(h, false);
    if (z && hi) {
      small_ = true;
      null_small_ = std::move(*z);
      inverse_small_ = std::move(*hi);
      return;
    }
  } catch (const RationalOverflow&) {
  }
  auto [kernel, h] = extension_rational<mpq_class>(g);
  for (const auto& z : kernel) {
    mpz_class scale = 1;
    for (const auto& x : z) scale = lcm(scale, denominator(x));
    null_basis_.push_back(clear_denominators(z, scale));
  }
  mpz_class scale = 1;
  for (const auto& row : h) {
    for (const auto& x : row) scale = lcm(scale, denominator(x));
  }
  for (const auto& row : h) inverse_.push_back(clear_denominators(row, scale));
}

InertiaSignature VertexExtensionOracle::extended(VertexMask neighbourhood) const {
  if (order_ < kMaxOrder && (neighbourhood >> order_) != 0) {
    throw std::invalid_argument("neighbourhood exceeds the graph order");
  }
  InertiaSignature s = base_;
  auto grow = [&s](int sign) {
    if (sign > 0) {
      s.negative += 1;
    } else if (sign < 0) {
      s.positive += 1;
    } else {
      s.nullity += 1;
    }
  };
  if (small_) {
    for (const auto& z : null_small_) {
      std::int64_t dot = 0;
      for (VertexMask m = neighbourhood; m; m &= m - 1) dot += z[std::countr_zero(m)];
      if (dot != 0) {
        s.positive += 1;
        s.negative += 1;
        s.nullity -= 1;
        return s;
      }
    }
    std::int64_t q = 0;
    for (VertexMask m = neighbourhood; m; m &= m - 1) {
      const auto& row = inverse_small_[std::countr_zero(m)];
      for (VertexMask w = neighbourhood; w; w &= w - 1) q += row[std::countr_zero(w)];
    }
    grow(q > 0 ? 1 : (q < 0 ? -1 : 0));
    return s;
  }
  for (const auto& z : null_basis_) {
    mpz_class dot = 0;
    for (VertexMask m = neighbourhood; m; m &= m - 1) dot += z[std::countr_zero(m)];
    if (dot != 0) {
      s.positive += 1;
      s.negative += 1;
      s.nullity -= 1;
      return s;
    }
  }
  mpz_class q = 0;
  for (VertexMask m = neighbourhood; m; m &= m - 1) {
    const auto& row = inverse_[std::countr_zero(m)];
    for (VertexMask w = neighbourhood; w; w &= w - 1) q += row[std::countr_zero(w)];
  }
  grow(sgn(q));
  return s;
}

InertiaSignature formula_path_inertia(int n) {
  if (n < 0) throw std::invalid_argument("path order must be nonnegative");
  return {n / 2, n / 2, n % 2};
}

int formula_cycle_negative(int n) {
  if (n < 3) throw std::invalid_argument("cycle order must be at least 3");
  auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };

  const int by_parity = (n % 2 == 0) ? 2 * ((n - 1) / 4) + 1 : 2 * ceil_div(n - 1, 4);
  const int half_up = ceil_div(n, 2);
  const int by_residue = (n % 4 == 2 || n % 4 == 3) ? half_up : half_up - 1;
  if (by_parity != by_residue) {
    throw std::logic_error("cycle inertia closed forms disagree at n=" + std::to_string(n));
  }
  return by_parity;
}

}  // namespace nig
