#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace gptd {

/// Exact rational number. Always stored in canonical form: reduced
/// fraction with positive denominator. All arithmetic is exact; no
/// operation ever rounds.
///
/// Thin value wrapper over GMP's mpq_class. The wrapper exists so that
/// every construction path canonicalizes (mpq_class itself does not
/// canonicalize values built from raw integer pairs or strings).
class Rat {
  public:
    Rat() : q_(0) {}
    Rat(long num) : q_(num) {}  // NOLINT(google-explicit-constructor): mirrors integer literals
    Rat(long num, long den) : q_(num, den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpz_class& num) : q_(num) {}
    explicit Rat(mpq_class q) : q_(std::move(q)) {
        if (q_.get_den() == 0) throw std::invalid_argument("Rat: zero denominator");
        q_.canonicalize();
    }

    /// Parses "p/q" or "p" with optional leading '-'. Throws
    /// std::invalid_argument on malformed input or zero denominator.
    static Rat parse(const std::string& text);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    /// Canonical textual form: "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    /// Lossy conversion for display only; never used in any decision.
    double to_double() const { return q_.get_d(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }

    Rat abs() const {
        Rat r(*this);
        r.q_ = ::abs(r.q_);
        return r;
    }

    Rat& operator+=(const Rat& o) {
        q_ += o.q_;
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        q_ -= o.q_;
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        q_ *= o.q_;
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) {
        Rat r;
        r.q_ = -a.q_;
        return r;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  private:
    mpq_class q_;
};

}  // namespace gptd
