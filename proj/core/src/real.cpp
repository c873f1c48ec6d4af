#include "ballot/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "ballot/error.hpp"

namespace ballot {

namespace {

// 3.3219... bits per decimal digit.
constexpr double kBitsPerDigit = 3.3219280948873623;

mpfr_prec_t max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

void promote(mpfr_ptr x, mpfr_prec_t bits) {
    if (mpfr_get_prec(x) < bits) mpfr_prec_round(x, bits, MPFR_RNDN);
}

}  // namespace

mpfr_prec_t digits_to_bits(std::size_t digits) noexcept {
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * kBitsPerDigit)) + 16;
}

Real::Real(mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& value, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string& text, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    if (mpfr_set_str(value_, text.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(value_);
        throw Error(ErrorCode::InvalidArgument, "not a decimal number: '" + text + "'");
    }
}

Real::Real(const Real& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(value_, other.precision());
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real& Real::operator+=(const Real& rhs) {
    promote(value_, max_prec(*this, rhs));
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs) {
    promote(value_, max_prec(*this, rhs));
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs) {
    promote(value_, max_prec(*this, rhs));
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs) {
    promote(value_, max_prec(*this, rhs));
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r(*this);
    mpfr_neg(r.value_, r.value_, MPFR_RNDN);
    return r;
}

std::string Real::to_scientific(std::size_t digits) const {
    if (mpfr_nan_p(value_)) return "nan";
    const auto fmt = "%." + std::to_string(digits > 0 ? digits - 1 : 0) + "Re";
    const int len = mpfr_snprintf(nullptr, 0, fmt.c_str(), value_);
    std::vector<char> buf(static_cast<std::size_t>(len) + 1);
    mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), value_);
    return std::string(buf.data(), static_cast<std::size_t>(len));
}

std::string Real::to_fixed(std::size_t decimals) const {
    if (mpfr_nan_p(value_)) return "nan";
    const auto fmt = "%." + std::to_string(decimals) + "Rf";
    const int len = mpfr_snprintf(nullptr, 0, fmt.c_str(), value_);
    std::vector<char> buf(static_cast<std::size_t>(len) + 1);
    mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), value_);
    return std::string(buf.data(), static_cast<std::size_t>(len));
}

Real abs(const Real& x) {
    Real r(x);
    mpfr_abs(r.get(), r.get(), MPFR_RNDN);
    return r;
}

Real log(const Real& x) {
    Real r(x.precision());
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real exp(const Real& x) {
    Real r(x.precision());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real log(const mpz_class& x, mpfr_prec_t bits) {
    if (sgn(x) <= 0) throw Error(ErrorCode::NonpositiveTerm, "logarithm of a non-positive integer");
    // Rounding x to `bits` first costs at most one ulp of relative error.
    Real v(x, bits);
    return log(v);
}

}  // namespace ballot
