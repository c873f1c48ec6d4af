#pragma once

#include <cstddef>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace ballot {

/// Decimal digits -> MPFR bits, with a few guard bits.
mpfr_prec_t digits_to_bits(std::size_t digits) noexcept;

/// Owning MPFR value. Every arithmetic result takes the larger of the operand
/// precisions, so a computation stays at the precision its inputs were created with.
class Real {
public:
    explicit Real(mpfr_prec_t bits = 64);
    Real(long value, mpfr_prec_t bits);
    Real(const mpz_class& value, mpfr_prec_t bits);
    Real(const mpq_class& value, mpfr_prec_t bits);
    /// Decimal literal, e.g. "-3.731220575".
    Real(const std::string& text, mpfr_prec_t bits);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_ptr get() noexcept { return value_; }

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    Real operator-() const;

    friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
    friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
    friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
    friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

    bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
    int sign() const noexcept { return mpfr_sgn(value_); }
    double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }

    /// Scientific notation with `digits` significant digits, e.g. "-1.50000000000000e+00".
    std::string to_scientific(std::size_t digits) const;
    /// Fixed notation rounded to `decimals` places after the point.
    std::string to_fixed(std::size_t decimals) const;

private:
    mpfr_t value_;
};

Real abs(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
/// Natural log of a positive integer of any size, at `bits` precision.
Real log(const mpz_class& x, mpfr_prec_t bits);

}  // namespace ballot
