#include "classnum/interval.hpp"

#include <algorithm>
#include <array>

namespace classnum {

namespace {

// floor(c * 10^210) for the supported constants. The interval
// [D/10^210, (D+1)/10^210] encloses the true value; truncating to fewer
// digits widens it outward, so refinement is monotone.
constexpr unsigned kStoredDigits = 210;

const char* const kScaledE =
    "27182818284590452353602874713526624977572470936999595749669676277240766"
    "30353547594571382178525166427427466391932003059921817413596629043572900"
    "334295260595630738132328627943490763233829880753195251019011573834187";

const char* const kScaledPi =
    "31415926535897932384626433832795028841971693993751058209749445923078164"
    "06286208998628034825342117067982148086513282306647093844609550582231725"
    "359408128481117450284102701938521105559644622948954930381964428810975";

Integer pow10(unsigned long e) { return int_pow(Integer(10), e); }

// floor/ceil of x scaled by 10^shift, shift may be negative.
Integer scaled_floor(const Rational& x, long shift) {
    Integer num = x.get_num(), den = x.get_den();
    if (shift >= 0)
        num *= pow10(static_cast<unsigned long>(shift));
    else
        den *= pow10(static_cast<unsigned long>(-shift));
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Rational from_scaled(const Integer& v, long shift) {
    Rational r;
    if (shift >= 0)
        r = Rational(v, pow10(static_cast<unsigned long>(shift)));
    else
        r = Rational(v * pow10(static_cast<unsigned long>(-shift)), 1);
    r.canonicalize();
    return r;
}

// Decimal order of magnitude of |x|, within one digit.
long approx_magnitude(const Rational& x) {
    if (x == 0) return 0;
    long nb = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 10));
    long db = static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 10));
    return nb - db;
}

Rational round_dir(const Rational& x, unsigned digits, bool up) {
    if (x == 0) return x;
    long shift = static_cast<long>(digits) - approx_magnitude(x);
    Integer f = scaled_floor(x, shift);
    if (up && from_scaled(f, shift) != x) f += 1;
    return from_scaled(f, shift);
}

Rational sqrt_rational_dir(const Rational& x, unsigned digits, bool up) {
    if (x < 0) throw std::invalid_argument("sqrt: negative radicand");
    if (x == 0) return Rational(0);
    // sqrt(n/d) = sqrt(n*d)/d; scale so the integer root carries enough digits.
    const Integer n = x.get_num(), d = x.get_den();
    const unsigned long t = digits + 4;
    Integer s;
    Integer scaled = n * d * pow10(2 * t);
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    if (up && s * s != scaled) s += 1;
    Rational r(s, d * pow10(t));
    r.canonicalize();
    return r;
}

Rational mul_dir(const Rational& a, const Rational& b, unsigned digits, bool up) {
    return round_dir(a * b, digits, up);
}

// a^n for a > 0, n >= 0, directed rounding per multiply.
Rational pow_int_dir(const Rational& a, const Integer& n, unsigned digits, bool up) {
    Rational result(1);
    Rational sq = a;
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    if (n == 0) return result;
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(n.get_mpz_t(), i)) result = mul_dir(result, sq, digits, up);
        if (i + 1 < bits) sq = mul_dir(sq, sq, digits, up);
    }
    return result;
}

// a^x for a > 0 and rational x, rounded toward the requested direction.
// Splits x = n + f and evaluates a^f through a chain of directed square
// roots of a over a dyadic approximation of f.
Rational pow_dir(const Rational& a, const Rational& x, unsigned digits, bool up) {
    if (a <= 0) throw std::invalid_argument("pow: base must be positive");
    if (x == 0 || a == 1) return Rational(1);
    if (a < 1) {
        Rational inv = 1 / a;
        return 1 / pow_dir(inv, x, digits, !up);
    }
    if (x < 0) {
        Rational nx = -x;
        return 1 / pow_dir(a, nx, digits, !up);
    }

    const unsigned work = digits + 12;
    Integer n = scaled_floor(x, 0);
    Rational f = x - Rational(n);

    Rational result = pow_int_dir(a, n, work, up);
    if (f != 0) {
        unsigned long t = (10UL * digits) / 3 + 16;
        Integer p;
        const Integer& fden = f.get_den();
        if (mpz_popcount(fden.get_mpz_t()) == 1 &&
            mpz_sizeinbase(fden.get_mpz_t(), 2) - 1 <= t) {
            // exponent denominator is already a small power of two; the
            // square-root chain is exact at that depth
            t = mpz_sizeinbase(fden.get_mpz_t(), 2) - 1;
            p = f.get_num();
        } else {
            // dyadic exponent p/2^t with p >= f*2^t (up) or <= (down)
            Rational scaled = f;
            Integer two_t = int_pow(Integer(2), t);
            scaled *= Rational(two_t);
            mpz_fdiv_q(p.get_mpz_t(), scaled.get_num().get_mpz_t(),
                       scaled.get_den().get_mpz_t());
            if (up && Rational(p) != scaled) p += 1;
        }
        if (p == int_pow(Integer(2), t)) {
            result = mul_dir(result, a, work, up);
        } else {
            // every use of r is monotone increasing, so directed rounding
            // of the chain keeps the bound sound and the digits flat
            Rational r = a;
            for (unsigned long i = 1; i <= t; ++i) {
                r = round_dir(sqrt_rational_dir(r, work, up), work, up);
                if (mpz_tstbit(p.get_mpz_t(), t - i))
                    result = mul_dir(result, r, work, up);
            }
        }
    }
    return round_dir(result, digits + 2, up);
}

// Lower bound of log2(x) for x >= 1 by squaring bit extraction; also
// reports a sound slack covering the truncated tail and rounding losses.
void log2_core(const Rational& x, unsigned digits, Rational& lo, Rational& hi) {
    const unsigned work = digits + 8;
    const unsigned long t = (10UL * digits) / 3 + 12;

    // bring y = x / 2^k into [1,2); the bit-size estimate is off by at
    // most one, fixed up by the comparison loops
    long nb = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
    long k = nb - db;
    Rational y = x;
    if (k > 0)
        y /= Rational(int_pow(Integer(2), static_cast<unsigned long>(k)));
    else if (k < 0)
        y *= Rational(int_pow(Integer(2), static_cast<unsigned long>(-k)));
    while (y >= 2) {
        y /= 2;
        ++k;
    }
    while (y < 1) {
        y *= 2;
        --k;
    }

    Integer acc = 0;
    for (unsigned long i = 0; i < t; ++i) {
        y = round_dir(y * y, work, false);
        acc <<= 1;
        if (y >= 2) {
            y /= 2;
            acc += 1;
        }
    }
    Integer two_t = int_pow(Integer(2), t);
    Rational frac(acc, two_t);
    frac.canonicalize();
    lo = Rational(k) + frac;
    // tail < 2^-t plus accumulated one-sided rounding deficit; per-step
    // relative loss is < 10^(2-work), summed with geometric weights
    Rational slack = Rational(1, two_t) + Rational(1000, pow10(work));
    slack.canonicalize();
    hi = lo + slack;
}

// log2 enclosure for arbitrary positive rational.
void log2_dir(const Rational& x, unsigned digits, Rational& lo, Rational& hi) {
    if (x <= 0) throw std::invalid_argument("log: argument must be positive");
    if (x == 1) {
        lo = hi = Rational(0);
        return;
    }
    if (x < 1) {
        Rational l2, h2;
        log2_core(1 / x, digits, l2, h2);
        lo = -h2;
        hi = -l2;
        return;
    }
    log2_core(x, digits, lo, hi);
}

}  // namespace

IntervalRational::IntervalRational(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("IntervalRational: lo > hi");
}

IntervalRational operator+(const IntervalRational& a, const IntervalRational& b) {
    return {a.lo() + b.lo(), a.hi() + b.hi()};
}

IntervalRational operator-(const IntervalRational& a, const IntervalRational& b) {
    return {a.lo() - b.hi(), a.hi() - b.lo()};
}

IntervalRational operator*(const IntervalRational& a, const IntervalRational& b) {
    const Rational p1 = a.lo() * b.lo(), p2 = a.lo() * b.hi();
    const Rational p3 = a.hi() * b.lo(), p4 = a.hi() * b.hi();
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

IntervalRational operator/(const IntervalRational& a, const IntervalRational& b) {
    if (b.lo() <= 0 && b.hi() >= 0)
        throw std::domain_error("interval division by interval containing zero");
    const Rational p1 = a.lo() / b.lo(), p2 = a.lo() / b.hi();
    const Rational p3 = a.hi() / b.lo(), p4 = a.hi() / b.hi();
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

IntervalRational pow_int(const IntervalRational& a, long e) {
    if (e == 0) return IntervalRational(Rational(1));
    if (e < 0) return IntervalRational(Rational(1)) / pow_int(a, -e);
    const auto ue = static_cast<unsigned long>(e);
    auto rpow = [ue](const Rational& x) {
        Rational r;
        mpz_pow_ui(r.get_num_mpz_t(), x.get_num().get_mpz_t(), ue);
        mpz_pow_ui(r.get_den_mpz_t(), x.get_den().get_mpz_t(), ue);
        r.canonicalize();
        return r;
    };
    const Rational plo = rpow(a.lo()), phi = rpow(a.hi());
    if (e % 2 != 0 || a.lo() >= 0) return {plo, phi};
    if (a.hi() <= 0) return {phi, plo};
    return {Rational(0), std::max(plo, phi)};  // even power across zero
}

Rational round_down(const Rational& x, unsigned digits) {
    return round_dir(x, digits, false);
}

Rational round_up(const Rational& x, unsigned digits) {
    return round_dir(x, digits, true);
}

IntervalRational round_outward(const IntervalRational& a, unsigned digits) {
    return {round_dir(a.lo(), digits, false), round_dir(a.hi(), digits, true)};
}

IntervalRational enclosure(Constant c, unsigned precision) {
    if (precision < 1 || precision > kMaxPrecision)
        throw std::invalid_argument("enclosure: precision must be in [1, 200]");
    static const Integer parsed_e(kScaledE, 10);
    static const Integer parsed_pi(kScaledPi, 10);
    const Integer* full_ptr = nullptr;
    switch (c) {
        case Constant::e: full_ptr = &parsed_e; break;
        case Constant::pi: full_ptr = &parsed_pi; break;
    }
    if (!full_ptr) throw std::invalid_argument("enclosure: unsupported constant");
    const Integer& full = *full_ptr;
    // truncate the stored floor value to the requested grid
    Integer lo_scaled = full / pow10(kStoredDigits - precision);
    Rational lo(lo_scaled, pow10(precision));
    lo.canonicalize();
    Rational hi = lo + Rational(1, pow10(precision));
    hi.canonicalize();
    return {lo, hi};
}

IntervalRational sqrt_enclosure(const Rational& x, unsigned digits) {
    return {sqrt_rational_dir(x, digits, false), sqrt_rational_dir(x, digits, true)};
}

IntervalRational sqrt_enclosure(const IntervalRational& x, unsigned digits) {
    return {sqrt_rational_dir(x.lo(), digits, false),
            sqrt_rational_dir(x.hi(), digits, true)};
}

IntervalRational root_enclosure(const Rational& x, unsigned long k, unsigned digits) {
    if (k == 0) throw std::invalid_argument("root: k must be >= 1");
    if (x < 0) throw std::invalid_argument("root: negative radicand");
    if (x == 0) return IntervalRational(Rational(0));
    const Integer n = x.get_num(), d = x.get_den();
    const unsigned long t = digits + 4;
    Integer scaled = n * int_pow(d, k - 1) * pow10(k * t);
    Integer s = iroot(scaled, k);
    Rational lo(s, d * pow10(t));
    lo.canonicalize();
    Rational hi(s + 1, d * pow10(t));
    hi.canonicalize();
    return {lo, hi};
}

IntervalRational pow_enclosure(const IntervalRational& base,
                               const IntervalRational& exp, unsigned digits) {
    if (base.lo() <= 0)
        throw std::invalid_argument("pow_enclosure: base must be positive");
    // monotone in both arguments when base >= 1 and exponent >= 0
    if (base.lo() >= 1 && exp.lo() >= 0)
        return {pow_dir(base.lo(), exp.lo(), digits, false),
                pow_dir(base.hi(), exp.hi(), digits, true)};
    const std::array<Rational, 2> bs{base.lo(), base.hi()};
    const std::array<Rational, 2> xs{exp.lo(), exp.hi()};
    Rational lo, hi;
    bool first = true;
    for (const auto& b : bs)
        for (const auto& x : xs) {
            Rational d = pow_dir(b, x, digits, false);
            Rational u = pow_dir(b, x, digits, true);
            if (first) {
                lo = d;
                hi = u;
                first = false;
            } else {
                lo = std::min(lo, d);
                hi = std::max(hi, u);
            }
        }
    return {lo, hi};
}

IntervalRational log_enclosure(const IntervalRational& x, unsigned base,
                               unsigned digits) {
    if (base < 2) throw std::invalid_argument("log: base must be >= 2");
    if (x.lo() <= 0) throw std::invalid_argument("log: argument must be positive");
    Rational llo, lhi, dummy_lo, dummy_hi;
    log2_dir(x.lo(), digits, llo, dummy_hi);
    log2_dir(x.hi(), digits, dummy_lo, lhi);
    IntervalRational num(llo, lhi);
    if ((base & (base - 1)) == 0) {
        unsigned k = 0;
        for (unsigned b = base; b > 1; b >>= 1) ++k;
        return num / IntervalRational(Rational(k));
    }
    Rational blo, bhi;
    log2_dir(Rational(base), digits, blo, bhi);
    return num / IntervalRational(blo, bhi);
}

Verdict verdict(const IntervalRational& lhs, Rel rel, const IntervalRational& rhs) {
    switch (rel) {
        case Rel::lt:
            if (lhs.hi() < rhs.lo()) return Verdict::holds;
            if (lhs.lo() >= rhs.hi()) return Verdict::fails;
            return Verdict::undecided;
        case Rel::le:
            if (lhs.hi() <= rhs.lo()) return Verdict::holds;
            if (lhs.lo() > rhs.hi()) return Verdict::fails;
            return Verdict::undecided;
        case Rel::ge:
            if (lhs.lo() >= rhs.hi()) return Verdict::holds;
            if (lhs.hi() < rhs.lo()) return Verdict::fails;
            return Verdict::undecided;
        case Rel::gt:
            if (lhs.lo() > rhs.hi()) return Verdict::holds;
            if (lhs.hi() <= rhs.lo()) return Verdict::fails;
            return Verdict::undecided;
    }
    throw std::logic_error("verdict: bad relation");
}

Verdict decide(const std::function<Verdict(unsigned digits)>& probe,
               unsigned start_digits) {
    // escalation doubles toward kMaxPrecision; the registered checks all
    // decide far below the cap
    unsigned digits = std::max(1u, start_digits);
    bool last_round = false;
    for (;;) {
        if (digits >= kMaxPrecision) {
            digits = kMaxPrecision;
            last_round = true;
        }
        Verdict v = probe(digits);
        if (v != Verdict::undecided) return v;
        if (last_round)
            throw UndecidedError("undecided at maximum precision (" +
                                 std::to_string(kMaxPrecision) + " digits)");
        digits *= 2;
    }
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::undecided: return "undecided";
    }
    return "?";
}

}  // namespace classnum
