#include "geodex/field.hpp"

#include <algorithm>
#include <numeric>

namespace geodex {

namespace {

constexpr std::uint64_t kMaxQ = 1u << 16;

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first,
// trailing zeros trimmed.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

// Remainder of a modulo monic m.
Poly pmod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  while (a.size() >= m.size()) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::uint64_t t = static_cast<std::uint64_t>(lead) * m[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - t) % p);
    }
    trim(a);
  }
  return a;
}

bool divides(const Poly& d, const Poly& a, std::uint32_t p) {
  // d must be monic.
  return pmod(a, d, p).empty();
}

Poly poly_from_code(std::uint64_t code, std::uint32_t p, std::uint32_t deg) {
  Poly c(deg + 1, 0);
  for (std::uint32_t i = 0; i < deg; ++i) {
    c[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  c[deg] = 1;
  return c;
}

bool poly_irreducible(const Poly& m, std::uint32_t p) {
  std::uint32_t deg = static_cast<std::uint32_t>(m.size()) - 1;
  if (deg == 1) return true;
  if (m[0] == 0) return false;
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code)
      if (divides(poly_from_code(code, p, d), m, p)) return false;
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> fs;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

FieldPtr Field::make(std::uint32_t p, std::uint32_t f) {
  require(is_prime(p), errc::not_prime, "characteristic " + std::to_string(p) + " is not prime");
  require(f >= 1, errc::bad_params, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    q *= p;
    require(q <= kMaxQ, errc::too_large, "field size exceeds 2^16");
  }
  std::vector<std::uint32_t> modulus;
  if (f == 1) {
    modulus = {0, 1};  // x
  } else {
    for (std::uint64_t code = 1; code < q; ++code) {
      Poly cand = poly_from_code(code, p, f);
      if (poly_irreducible(cand, p)) {
        modulus.assign(cand.begin(), cand.end());
        break;
      }
    }
  }
  return make(p, f, std::move(modulus));
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t f, std::vector<std::uint32_t> modulus) {
  require(is_prime(p), errc::not_prime, "characteristic " + std::to_string(p) + " is not prime");
  require(f >= 1, errc::bad_params, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    q *= p;
    require(q <= kMaxQ, errc::too_large, "field size exceeds 2^16");
  }
  require(modulus.size() == f + 1, errc::bad_params, "modulus degree must equal f");
  require(modulus[f] == 1, errc::bad_params, "modulus must be monic");
  for (auto c : modulus) require(c < p, errc::bad_params, "modulus coefficient out of range");
  if (f > 1) {
    Poly m(modulus.begin(), modulus.end());
    require(poly_irreducible(m, p), errc::reducible, "modulus is reducible");
  }
  auto field = std::shared_ptr<Field>(new Field());
  field->p_ = p;
  field->f_ = f;
  field->q_ = static_cast<std::uint32_t>(q);
  field->modulus_ = std::move(modulus);
  field->build_tables();
  return field;
}

void Field::build_tables() {
  Poly m(modulus_.begin(), modulus_.end());
  auto code_of = [&](const Poly& a) {
    std::uint64_t code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = code * p_ + a[i];
    return static_cast<Fel>(code);
  };
  auto poly_of = [&](Fel a) {
    Poly c;
    while (a) {
      c.push_back(a % p_);
      a /= p_;
    }
    return c;
  };
  auto raw_mul = [&](Fel a, Fel b) { return code_of(pmod(pmul(poly_of(a), poly_of(b), p_), m, p_)); };

  // Find the smallest multiplicative generator.
  std::uint32_t n = q_ - 1;
  auto raw_pow = [&](Fel a, std::uint32_t e) {
    Fel r = 1;
    while (e) {
      if (e & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  std::vector<std::uint32_t> rs = prime_factors(n);
  generator_ = 0;
  for (Fel g = 1; g < q_; ++g) {
    bool ok = raw_pow(g, n) == 1;
    for (auto r : rs)
      if (ok && raw_pow(g, n / r) == 1) ok = false;
    if (ok) {
      generator_ = g;
      break;
    }
  }
  require(generator_ != 0, errc::internal, "no multiplicative generator found");

  antilog_.assign(n, 0);
  log_.assign(q_, 0);
  Fel cur = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    antilog_[i] = cur;
    log_[cur] = i;
    cur = raw_mul(cur, generator_);
  }
  require(cur == 1, errc::internal, "generator order mismatch");

  if (q_ <= 256) {
    add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (Fel a = 0; a < q_; ++a)
      for (Fel b = 0; b < q_; ++b) {
        Fel s = 0, mul9 = 1, x = a, y = b;
        for (std::uint32_t i = 0; i < f_; ++i) {
          s += (x % p_ + y % p_) % p_ * mul9;
          x /= p_;
          y /= p_;
          mul9 *= p_;
        }
        add_table_[static_cast<std::size_t>(a) * q_ + b] = s;
      }
  }
}

Fel Field::add(Fel a, Fel b) const {
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  Fel s = 0, place = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    s += (a % p_ + b % p_) % p_ * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return s;
}

Fel Field::neg(Fel a) const {
  Fel s = 0, place = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    s += (p_ - a % p_) % p_ * place;
    a /= p_;
    place *= p_;
  }
  return s;
}

Fel Field::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Field::mul(Fel a, Fel b) const {
  if (a == 0 || b == 0) return 0;
  std::uint32_t s = log_[a] + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return antilog_[s];
}

Fel Field::inv(Fel a) const {
  require(a != 0, errc::division_by_zero, "inverse of zero");
  std::uint32_t l = log_[a];
  return antilog_[l == 0 ? 0 : q_ - 1 - l];
}

Fel Field::pow(Fel a, long long e) const {
  if (a == 0) {
    require(e > 0, errc::division_by_zero, "zero to a non-positive power");
    return 0;
  }
  long long n = q_ - 1;
  long long r = ((static_cast<long long>(log_[a]) * (e % n)) % n + n) % n;
  return antilog_[static_cast<std::size_t>(r)];
}

Fel Field::frobenius(Fel a, std::uint32_t r) const {
  if (a == 0) return 0;
  r %= f_;
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < r; ++i) e = e * p_ % (q_ - 1);
  std::uint64_t l = static_cast<std::uint64_t>(log_[a]) * e % (q_ - 1);
  return antilog_[static_cast<std::size_t>(l)];
}

bool Field::is_square(Fel a) const {
  if (a == 0 || p_ == 2) return true;
  return log_[a] % 2 == 0;
}

Fel Field::nonsquare() const {
  require(p_ != 2, errc::bad_params, "every element of a characteristic-2 field is a square");
  for (Fel a = 1; a < q_; ++a)
    if (!is_square(a)) return a;
  fail(errc::internal, "no non-square found");
}

std::vector<std::uint32_t> Field::digits(Fel a) const {
  std::vector<std::uint32_t> d(f_, 0);
  for (std::uint32_t i = 0; i < f_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Fel Field::from_digits(const std::vector<std::uint32_t>& d) const {
  require(d.size() == f_, errc::bad_params, "digit vector length must equal f");
  Fel a = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    require(d[i] < p_, errc::bad_params, "digit out of range");
    a = a * p_ + d[i];
  }
  return a;
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_params: return "bad_params";
    case errc::too_large: return "too_large";
    case errc::malformed_input: return "malformed_input";
    case errc::not_prime: return "not_prime";
    case errc::reducible: return "reducible";
    case errc::division_by_zero: return "division_by_zero";
    case errc::ambient_mismatch: return "ambient_mismatch";
    case errc::unsupported_characteristic: return "unsupported_characteristic";
    case errc::not_a_square: return "not_a_square";
    case errc::not_bipartite: return "not_bipartite";
    case errc::not_antipodal: return "not_antipodal";
    case errc::bad_distance: return "bad_distance";
    case errc::disconnected: return "disconnected";
    case errc::not_permutation: return "not_permutation";
    case errc::bad_flag: return "bad_flag";
    case errc::not_a_geodesic: return "not_a_geodesic";
    case errc::opposite_ends: return "opposite_ends";
    case errc::bad_type: return "bad_type";
    case errc::not_distinct: return "not_distinct";
    case errc::not_singular: return "not_singular";
    case errc::maximal_not_allowed: return "maximal_not_allowed";
    case errc::not_opposite_maximals: return "not_opposite_maximals";
    case errc::not_distance_regular: return "not_distance_regular";
    case errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace geodex
