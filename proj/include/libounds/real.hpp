#pragma once

// Precision layer: an RAII wrapper over MPFR values plus a context that owns
// the working precision, cached constants, and exact integer factorials.
// All operations round to nearest; results are deterministic for a given
// precision, so formatted output is reproducible across runs and platforms.

#include <cstdint>

#define MPFR_USE_INTMAX_T
#include <mpfr.h>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace libounds {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

class Real {
 public:
  explicit Real(mpfr_prec_t prec) {
    check_prec(prec);
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(long value, mpfr_prec_t prec) {
    check_prec(prec);
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  Real(int value, mpfr_prec_t prec) : Real(static_cast<long>(value), prec) {}
  Real(std::uint64_t value, mpfr_prec_t prec) {
    check_prec(prec);
    mpfr_init2(v_, prec);
    mpfr_set_uj(v_, value, MPFR_RNDN);
  }
  Real(double value, mpfr_prec_t prec) {
    check_prec(prec);
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, value, MPFR_RNDN);
  }
  Real(const std::string& decimal, mpfr_prec_t prec) {
    check_prec(prec);
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
      mpfr_clear(v_);
      throw DomainError("unparsable decimal literal: " + decimal);
    }
  }
  Real(const mpz_class& value, mpfr_prec_t prec) {
    check_prec(prec);
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
  }

  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // largest integer <= value, which must fit in a signed 64-bit integer
  std::int64_t floor_int64() const {
    Real f(precision());
    mpfr_rint_floor(f.v_, v_, MPFR_RNDN);
    if (!mpfr_fits_intmax_p(f.v_, MPFR_RNDZ)) {
      throw CapacityError("floor does not fit a 64-bit integer");
    }
    return static_cast<std::int64_t>(mpfr_get_sj(f.v_, MPFR_RNDZ));
  }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // shortest-faithful scientific string with the given significant digits
  std::string str(std::size_t significant = 20) const {
    return format("%." + std::to_string(significant - 1) + "RNe");
  }
  // fixed-point string with the given number of decimals, half-even rounding
  std::string str_fixed(std::size_t decimals) const {
    return format("%." + std::to_string(decimals) + "RNf");
  }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a, long b) {
    Real r(a.precision());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(const Real& a, long b) {
    Real r(a.precision());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator-(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, long b) {
    Real r(a.precision());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b) {
    Real r(a.precision());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a) {
    Real r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

 private:
  static void check_prec(mpfr_prec_t prec) {
    if (prec < MPFR_PREC_MIN || prec > MPFR_PREC_MAX) {
      throw ConfigError("precision outside the representable range");
    }
  }
  static mpfr_prec_t join(const Real& a, const Real& b) {
    return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
  }
  std::string format(const std::string& spec) const {
    char* out = nullptr;
    if (mpfr_asprintf(&out, spec.c_str(), v_) < 0) {
      throw CapacityError("formatting failed");
    }
    std::string s(out);
    mpfr_free_str(out);
    return s;
  }

  mpfr_t v_;
};

inline Real sqrt(const Real& a) {
  Real r(a.precision());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real log(const Real& a) {
  Real r(a.precision());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real exp(const Real& a) {
  Real r(a.precision());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& base, const Real& exponent) {
  Real r(std::max(base.precision(), exponent.precision()));
  mpfr_pow(r.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
  return r;
}
inline Real pow_int(const Real& base, long exponent) {
  Real r(base.precision());
  mpfr_pow_si(r.raw(), base.raw(), exponent, MPFR_RNDN);
  return r;
}
inline Real abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real floor(const Real& a) {
  Real r(a.precision());
  mpfr_rint_floor(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real ceil(const Real& a) {
  Real r(a.precision());
  mpfr_rint_ceil(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real round_nearest(const Real& a) {
  Real r(a.precision());
  mpfr_rint(r.raw(), a.raw(), MPFR_RNDN);  // ties to even, like the display path
  return r;
}
inline const Real& max(const Real& a, const Real& b) { return a < b ? b : a; }
inline const Real& min(const Real& a, const Real& b) { return b < a ? b : a; }
// 2^e as a Real, for tolerance ladders
inline Real pow2(long e, mpfr_prec_t prec) {
  Real r(1L, prec);
  mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

// Owns the working precision and caches the constants every module needs.
// The floor of 96 bits keeps double-rounding in the 20-digit machine column
// impossible; jobs that need more simply ask for more.
class PrecisionContext {
 public:
  static constexpr mpfr_prec_t kMinBits = 96;
  static constexpr unsigned long kFactorialCap = 1'000'000;

  explicit PrecisionContext(mpfr_prec_t bits) : bits_(bits), e_(bits), gamma_(bits), pi_(bits) {
    if (bits < kMinBits) {
      throw ConfigError("precision below the 96-bit floor");
    }
    Real one(1L, bits_);
    mpfr_exp(e_.raw(), one.raw(), MPFR_RNDN);
    mpfr_const_euler(gamma_.raw(), MPFR_RNDN);
    mpfr_const_pi(pi_.raw(), MPFR_RNDN);
    factorials_.emplace_back(1);
  }

  mpfr_prec_t bits() const { return bits_; }
  const Real& e() const { return e_; }
  const Real& euler_gamma() const { return gamma_; }
  const Real& pi() const { return pi_; }

  Real make(int value) const { return Real(static_cast<long>(value), bits_); }
  Real make(long value) const { return Real(value, bits_); }
  Real make(std::uint64_t value) const { return Real(value, bits_); }
  Real make(double value) const { return Real(value, bits_); }
  Real make(const std::string& decimal) const { return Real(decimal, bits_); }
  Real make(const char* decimal) const { return Real(std::string(decimal), bits_); }

  // exact n!, cached incrementally
  const mpz_class& factorial(unsigned long n) const {
    if (n > kFactorialCap) {
      throw CapacityError("factorial request beyond cap");
    }
    while (factorials_.size() <= n) {
      factorials_.push_back(factorials_.back() * static_cast<unsigned long>(factorials_.size()));
    }
    return factorials_[n];
  }
  Real factorial_real(unsigned long n) const { return Real(factorial(n), bits_); }

 private:
  mpfr_prec_t bits_;
  Real e_;
  Real gamma_;
  Real pi_;
  mutable std::vector<mpz_class> factorials_;
};

inline PrecisionContext make_context(mpfr_prec_t bits = 192) { return PrecisionContext(bits); }

}  // namespace libounds
