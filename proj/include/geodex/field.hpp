// Arithmetic in GF(p^f). An element is encoded as an integer in [0, p^f):
// its base-p digits are the coefficients of the residue polynomial, least
// significant digit first. Multiplication and inversion run over discrete
// log tables built at construction; addition is digit-wise (with a full
// table for small fields).
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "geodex/errors.hpp"

namespace geodex {

using Fel = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
  // Deterministic modulus: the lexicographically smallest monic irreducible
  // polynomial of degree f, comparing coefficient vectors as base-p integers.
  static FieldPtr make(std::uint32_t p, std::uint32_t f);
  // Explicit modulus: coefficient vector of length f+1, monic, irreducible.
  static FieldPtr make(std::uint32_t p, std::uint32_t f, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t f() const { return f_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Fel add(Fel a, Fel b) const;
  Fel sub(Fel a, Fel b) const;
  Fel neg(Fel a) const;
  Fel mul(Fel a, Fel b) const;
  Fel inv(Fel a) const;
  Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }
  Fel pow(Fel a, long long e) const;

  // r-fold Frobenius a -> a^(p^r).
  Fel frobenius(Fel a, std::uint32_t r = 1) const;

  // Smallest generator of the multiplicative group.
  Fel primitive() const { return generator_; }
  bool is_square(Fel a) const;
  // Smallest non-square element; requires odd q.
  Fel nonsquare() const;

  std::vector<std::uint32_t> digits(Fel a) const;
  Fel from_digits(const std::vector<std::uint32_t>& d) const;

  bool same(const Field& other) const {
    return p_ == other.p_ && f_ == other.f_ && modulus_ == other.modulus_;
  }

private:
  Field() = default;
  void build_tables();

  std::uint32_t p_ = 0, f_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Fel generator_ = 0;
  std::vector<std::uint32_t> log_;      // log_[a] for a != 0
  std::vector<Fel> antilog_;            // antilog_[i] = generator^i, i in [0, q-1)
  std::vector<Fel> add_table_;          // q*q, only when q <= 256
};

}  // namespace geodex
