#include "classnum/numbers.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace classnum {

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

namespace {

// Prime factorization by trial division; inputs here stay well below 2^64.
std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
    std::vector<std::pair<Integer, unsigned>> out;
    Integer p = 2;
    while (p * p <= n) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

Integer euler_phi(const Integer& n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
    Integer r = n;
    for (const auto& [p, e] : factorize(n)) {
        r /= p;
        r *= p - 1;
    }
    return r;
}

int moebius(const Integer& n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be >= 1");
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::vector<Integer> divisors(const Integer& n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<Integer> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long d, unsigned long k) {
    if (k > d) throw std::invalid_argument("binomial: k > d");
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), d, k);
    return r;
}

Integer gaussian_binomial(unsigned long d, unsigned long k, const Integer& q) {
    if (k > d) throw std::invalid_argument("gaussian_binomial: k > d");
    if (q < 2) throw std::invalid_argument("gaussian_binomial: q must be >= 2");
    // prod_{i=0}^{k-1} (q^{d-i} - 1) / (q^{i+1} - 1); divisions stay exact
    // when performed after each numerator factor.
    Integer num = 1;
    for (unsigned long i = 0; i < k; ++i) num *= int_pow(q, d - i) - 1;
    Integer den = 1;
    for (unsigned long i = 0; i < k; ++i) den *= int_pow(q, i + 1) - 1;
    Integer r, rem;
    mpz_tdiv_qr(r.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw std::logic_error("gaussian_binomial: non-exact division");
    return r;
}

Integer int_pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Integer iroot(const Integer& x, unsigned long k) {
    if (x < 0) throw std::invalid_argument("iroot: negative radicand");
    if (k == 0) throw std::invalid_argument("iroot: k must be >= 1");
    Integer r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

bool is_prime_power(unsigned long q, unsigned long& prime, unsigned long& exponent) {
    if (q < 2) return false;
    auto fac = factorize(Integer(q));
    if (fac.size() != 1) return false;
    prime = fac[0].first.get_ui();
    exponent = fac[0].second;
    return true;
}

bool is_prime_power(unsigned long q) {
    unsigned long p, e;
    return is_prime_power(q, p, e);
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace classnum
