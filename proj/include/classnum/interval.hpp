#ifndef CLASSNUM_INTERVAL_HPP
#define CLASSNUM_INTERVAL_HPP

#include <functional>
#include <stdexcept>
#include <string>

#include "classnum/numbers.hpp"

namespace classnum {

// Exact rational interval arithmetic. All inequality claims against
// transcendental quantities are adjudicated through intervals whose
// endpoints are rationals: the true real value of every composed
// expression lies inside the computed interval (outward rounding), so a
// verdict of holds/fails is a proof, and "undecided" tells the caller to
// refine precision. No floating point anywhere.

class IntervalRational {
public:
    IntervalRational() : lo_(0), hi_(0) {}
    explicit IntervalRational(const Rational& point) : lo_(point), hi_(point) {}
    explicit IntervalRational(const Integer& point)
        : lo_(Rational(point)), hi_(Rational(point)) {}
    IntervalRational(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const IntervalRational& other) const {
        return lo_ <= other.lo_ && other.hi_ <= hi_;
    }

private:
    Rational lo_, hi_;
};

IntervalRational operator+(const IntervalRational& a, const IntervalRational& b);
IntervalRational operator-(const IntervalRational& a, const IntervalRational& b);
IntervalRational operator*(const IntervalRational& a, const IntervalRational& b);
/// Division; the divisor interval must not contain zero.
IntervalRational operator/(const IntervalRational& a, const IntervalRational& b);

/// Integer power with exact endpoint arithmetic (handles sign straddles).
IntervalRational pow_int(const IntervalRational& a, long e);

// Directed rounding to `digits` significant decimal digits. Rounding is
// outward on intervals, so enclosure is preserved while denominators stay
// bounded along long computations.
Rational round_down(const Rational& x, unsigned digits);
Rational round_up(const Rational& x, unsigned digits);
IntervalRational round_outward(const IntervalRational& a, unsigned digits);

enum class Constant { e, pi };

/// Interval of width <= 10^-precision around the constant, truncated
/// outward from stored 210-digit decimal bounds. Monotone: higher
/// precision gives a nested interval. precision must be in [1, 200].
IntervalRational enclosure(Constant c, unsigned precision);

/// Maximum precision honoured by enclosure() and the verdict escalation.
inline constexpr unsigned kMaxPrecision = 200;

/// sqrt(x) for x >= 0, enclosed to ~digits significant digits.
IntervalRational sqrt_enclosure(const Rational& x, unsigned digits);
IntervalRational sqrt_enclosure(const IntervalRational& x, unsigned digits);

/// k-th root of x >= 0.
IntervalRational root_enclosure(const Rational& x, unsigned long k, unsigned digits);

/// base^exp for base > 0 (real power, monotone corners + dyadic exponent).
IntervalRational pow_enclosure(const IntervalRational& base,
                               const IntervalRational& exp, unsigned digits);

/// log_base(x) for x > 0, base >= 2 (bit extraction on a base-2 core).
IntervalRational log_enclosure(const IntervalRational& x, unsigned base,
                               unsigned digits);

enum class Rel { lt, le, ge, gt };
enum class Verdict { holds, fails, undecided };

/// Compares two enclosures: holds/fails only when the intervals are
/// disjoint in the asserted (resp. negated) order.
Verdict verdict(const IntervalRational& lhs, Rel rel, const IntervalRational& rhs);

struct UndecidedError : std::runtime_error {
    explicit UndecidedError(const std::string& what) : std::runtime_error(what) {}
};

/// Runs `probe` at doubling precision until it returns a decided verdict;
/// throws UndecidedError once kMaxPrecision is exhausted.
Verdict decide(const std::function<Verdict(unsigned digits)>& probe,
               unsigned start_digits = 14);

const char* to_string(Verdict v);

}  // namespace classnum

#endif
