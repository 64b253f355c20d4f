#include "fsplit/covers.hpp"

#include <algorithm>
#include <numeric>

namespace fsplit {

UniPoly::UniPoly(RingPtr r, std::vector<Polynomial> c)
    : ring(std::move(r)), coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) throw std::invalid_argument("zero univariate polynomial");
  for (const auto& p : coeffs)
    if (!same_ring(p.ring(), ring)) throw std::invalid_argument("coefficient ring mismatch");
}

bool UniPoly::is_monic() const { return coeffs.back() == Polynomial::one(ring); }

UniPoly UniPoly::derivative() const {
  std::vector<Polynomial> d;
  for (size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i].scaled((long long)i));
  if (d.empty() || std::all_of(d.begin(), d.end(), [](const Polynomial& p) {
        return p.is_zero();
      }))
    throw std::domain_error("derivative is zero");
  return UniPoly(ring, std::move(d));
}

namespace {

// Fraction-free Bareiss determinant over the polynomial ring.
Polynomial bareiss_det(const RingPtr& ring, std::vector<std::vector<Polynomial>> M) {
  size_t n = M.size();
  if (n == 0) return Polynomial::one(ring);
  Polynomial prev = Polynomial::one(ring);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      size_t swap = k + 1;
      while (swap < n && M[swap][k].is_zero()) ++swap;
      if (swap == n) return Polynomial::zero(ring);
      std::swap(M[k], M[swap]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Polynomial num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        auto div = exact_divide(num, prev);
        if (!div.has_value()) throw std::logic_error("Bareiss division failure");
        M[i][j] = *div;
      }
    for (size_t i = k + 1; i < n; ++i) M[i][k] = Polynomial::zero(ring);
    prev = M[k][k];
    if (prev.is_zero()) return Polynomial::zero(ring);
  }
  return sign < 0 ? -M[n - 1][n - 1] : M[n - 1][n - 1];
}

}  // namespace

Polynomial resultant(const UniPoly& g, const UniPoly& h) {
  const RingPtr& ring = g.ring;
  if (!same_ring(ring, h.ring)) throw std::invalid_argument("ring mismatch");
  int dg = g.degree(), dh = h.degree();
  if (dg == 0 && dh == 0) return Polynomial::one(ring);
  size_t n = (size_t)(dg + dh);
  std::vector<std::vector<Polynomial>> M(n,
                                         std::vector<Polynomial>(n, Polynomial::zero(ring)));
  // dh rows of g's coefficients (descending), then dg rows of h's.
  for (int r = 0; r < dh; ++r)
    for (int i = 0; i <= dg; ++i) M[r][r + i] = g.coeffs[dg - i];
  for (int r = 0; r < dg; ++r)
    for (int i = 0; i <= dh; ++i) M[dh + r][r + i] = h.coeffs[dh - i];
  return bareiss_det(ring, std::move(M));
}

std::optional<Polynomial> discriminant(const UniPoly& g) {
  if (!g.is_monic()) throw std::invalid_argument("discriminant requires a monic polynomial");
  int d = g.degree();
  if (d < 1) throw std::invalid_argument("discriminant of a constant");
  bool zero_derivative = true;
  for (size_t i = 1; i < g.coeffs.size(); ++i)
    zero_derivative &= g.coeffs[i].scaled((long long)i).is_zero();
  if (zero_derivative) return std::nullopt;  // inseparable
  Polynomial r = resultant(g, g.derivative());
  if (r.is_zero()) return std::nullopt;  // inseparable
  long long sgn = ((long long)d * (d - 1) / 2) % 2 == 0 ? 1 : -1;
  return r.scaled(sgn);
}

KummerReport kummer_analyze(const KummerCover& K) {
  if (K.n < 1) throw std::invalid_argument("Kummer exponent must be positive");
  if (K.radicand.is_zero()) throw std::invalid_argument("zero radicand");
  long long p = K.characteristic;
  if (p != 0 && !is_prime(p)) throw std::invalid_argument("characteristic must be prime or 0");
  bool tame = (p == 0) || (std::gcd((long long)K.n, p) == 1);
  long long e = K.n / std::gcd(K.n, std::max(K.valuation, 1));
  // branch = disc(T^n - f), computed from the Sylvester matrix.
  const RingPtr& ring = K.radicand.ring();
  std::vector<Polynomial> coeffs(K.n + 1, Polynomial::zero(ring));
  coeffs[0] = -K.radicand;
  coeffs[K.n] = Polynomial::one(ring);
  Polynomial branch = Polynomial::zero(ring);
  if (K.n >= 2) {
    auto d = discriminant(UniPoly(ring, std::move(coeffs)));
    if (d.has_value()) branch = *d;
  }
  return {tame, e, branch};
}

bool nef_check(const RamificationData& data) {
  if (data.d <= 0 || data.n <= 0 || data.e <= 0 || data.f <= 0)
    throw std::invalid_argument("ramification data must be positive");
  return data.d == data.n * data.e * data.f;
}

bool verify_factorization(const Polynomial& lhs,
                          const std::vector<std::pair<Polynomial, int>>& factors,
                          const IdealHandle& modulus) {
  Polynomial prod = Polynomial::one(lhs.ring());
  for (const auto& [f, mult] : factors) {
    if (mult < 0) throw std::invalid_argument("negative multiplicity");
    prod = prod * f.pow(mult);
  }
  return ideal_member(lhs - prod, modulus);
}

}  // namespace fsplit
