#pragma once

// Finite fields of order q = p^k <= 16 as exhaustive tables. Elements are
// 0..q-1; element e stands for the polynomial whose base-p digits are the
// coefficients of e (least significant digit = constant term), reduced
// modulo a fixed irreducible polynomial:
//   q=4  x^2+x+1    q=8  x^3+x+1    q=9  x^2+1    q=16  x^4+x+1

#include <cstdint>
#include <string>
#include <vector>

#include "hallpaige/error.hpp"

namespace hallpaige {

class FiniteField {
 public:
  using Value = std::uint32_t;

  explicit FiniteField(std::size_t q) : q_(q) {
    std::vector<std::uint32_t> modulus;  // low-to-high coefficients, monic
    switch (q) {
      case 2: case 3: case 5: case 7: case 11: case 13:
        p_ = q;
        k_ = 1;
        break;
      case 4: p_ = 2; k_ = 2; modulus = {1, 1, 1}; break;
      case 8: p_ = 2; k_ = 3; modulus = {1, 1, 0, 1}; break;
      case 9: p_ = 3; k_ = 2; modulus = {1, 0, 1}; break;
      case 16: p_ = 2; k_ = 4; modulus = {1, 1, 0, 0, 1}; break;
      default: fail(Errc::UnsupportedQ, "no field table for q = " + std::to_string(q));
    }
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    for (Value a = 0; a < q; ++a)
      for (Value b = 0; b < q; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<std::uint32_t> sum(k_);
        for (std::size_t i = 0; i < k_; ++i) sum[i] = (da[i] + db[i]) % p_;
        add_[a * q + b] = value(sum);
        std::vector<std::uint32_t> prod(2 * k_, 0);
        for (std::size_t i = 0; i < k_; ++i)
          for (std::size_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (std::size_t d = 2 * k_ - 1; d >= k_ && d > 0; --d) {
          const std::uint32_t c = prod[d];
          if (c == 0) continue;
          // subtract c * x^(d-k) * modulus
          for (std::size_t i = 0; i <= k_; ++i)
            prod[d - k_ + i] = (prod[d - k_ + i] + p_ * p_ - c * modulus[i] % p_) % p_;
        }
        prod.resize(k_);
        mul_[a * q + b] = value(prod);
      }
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    for (Value a = 0; a < q; ++a)
      for (Value b = 0; b < q; ++b) {
        if (add(a, b) == 0) neg_[a] = b;
        if (mul(a, b) == 1) inv_[a] = b;
      }
    check_axioms();
  }

  std::size_t order() const noexcept { return q_; }
  std::size_t characteristic() const noexcept { return p_; }
  std::size_t degree() const noexcept { return k_; }

  Value add(Value a, Value b) const { return add_[a * q_ + b]; }
  Value mul(Value a, Value b) const { return mul_[a * q_ + b]; }
  Value neg(Value a) const { return neg_[a]; }
  Value sub(Value a, Value b) const { return add(a, neg(b)); }
  /// inv(0) is 0.
  Value inv(Value a) const { return inv_[a]; }

  /// Smallest element generating the multiplicative group.
  Value primitive_element() const {
    for (Value a = 1; a < q_; ++a) {
      std::size_t ord = 1;
      for (Value x = a; x != 1; x = mul(x, a)) ++ord;
      if (ord == q_ - 1) return a;
    }
    fail(Errc::Internal, "no primitive element");
  }

 private:
  std::vector<std::uint32_t> digits(Value v) const {
    std::vector<std::uint32_t> d(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      d[i] = v % p_;
      v /= static_cast<Value>(p_);
    }
    return d;
  }
  Value value(const std::vector<std::uint32_t>& d) const {
    Value v = 0;
    for (std::size_t i = k_; i-- > 0;) v = v * static_cast<Value>(p_) + d[i];
    return v;
  }

  void check_axioms() const {
    const auto q = static_cast<Value>(q_);
    for (Value a = 0; a < q; ++a) {
      ensure(add(a, 0) == a && mul(a, 1) == a, "field identities");
      ensure(add(a, neg(a)) == 0, "field negation");
      if (a) ensure(mul(a, inv(a)) == 1, "field inverse");
      for (Value b = 0; b < q; ++b) {
        ensure(add(a, b) == add(b, a) && mul(a, b) == mul(b, a), "field commutativity");
        for (Value c = 0; c < q; ++c) {
          ensure(add(add(a, b), c) == add(a, add(b, c)), "field add associativity");
          ensure(mul(mul(a, b), c) == mul(a, mul(b, c)), "field mul associativity");
          ensure(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), "field distributivity");
        }
      }
    }
  }

  std::size_t q_, p_ = 0, k_ = 0;
  std::vector<Value> add_, mul_, neg_, inv_;
};

}  // namespace hallpaige
