#include "classnum/partitions.hpp"

#include <array>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace classnum {

unsigned long Partition::sum() const {
    unsigned long s = 0;
    for (unsigned long p : parts) s += p;
    return s;
}

namespace {

std::mutex table_mutex;
std::vector<Integer> table{Integer(1)};  // p(0) = 1

// extend the pentagonal-number recurrence table up to n
void extend_table(unsigned long n) {
    for (unsigned long m = table.size(); m <= n; ++m) {
        Integer v = 0;
        for (unsigned long k = 1;; ++k) {
            const unsigned long g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            if (sign > 0)
                v += table[m - g1];
            else
                v -= table[m - g1];
            const unsigned long g2 = k * (3 * k + 1) / 2;
            if (g2 <= m) {
                if (sign > 0)
                    v += table[m - g2];
                else
                    v -= table[m - g2];
            }
        }
        table.push_back(v);
    }
}

}  // namespace

Integer partition_count(unsigned long n) {
    std::lock_guard<std::mutex> lock(table_mutex);
    extend_table(n);
    return table[n];
}

void for_each_partition(unsigned long n,
                        const std::function<void(const Partition&)>& visit) {
    Partition current;
    // descending-first recursive generation; parts bounded by the previous one
    std::function<void(unsigned long, unsigned long)> gen =
        [&](unsigned long remaining, unsigned long max_part) {
            if (remaining == 0) {
                visit(current);
                return;
            }
            for (unsigned long p = std::min(remaining, max_part); p >= 1; --p) {
                current.parts.push_back(p);
                gen(remaining - p, p);
                current.parts.pop_back();
            }
        };
    gen(n, n == 0 ? 1 : n);
}

PartitionClassification classify(unsigned long d) {
    if (d < 1) throw std::invalid_argument("classify: d must be >= 1");

    // partitions of j with parts <= i, split by parity of the part count
    std::vector<std::array<Integer, 2>> g(d + 1, {Integer(0), Integer(0)});
    g[0][0] = 1;
    for (unsigned long part = 1; part <= d; ++part)
        for (unsigned long j = part; j <= d; ++j) {
            // appending one more copy of `part` flips the parity
            g[j][0] += g[j - part][1];
            g[j][1] += g[j - part][0];
        }

    // partitions into distinct odd parts (0/1 knapsack)
    std::vector<Integer> h(d + 1, Integer(0));
    h[0] = 1;
    for (unsigned long part = 1; part <= d; part += 2)
        for (unsigned long j = d; j >= part; --j) h[j] += h[j - part];

    PartitionClassification out;
    // a cycle type is even iff d - #parts is even, i.e. #parts = d (mod 2)
    const unsigned even_parity = d % 2;
    out.even_count = g[d][even_parity];
    out.odd_count = g[d][1 - even_parity];
    out.total = out.even_count + out.odd_count;
    out.distinct_odd_count = h[d];
    return out;
}

Integer k_symmetric(unsigned long d) {
    if (d < 1) throw std::invalid_argument("k_symmetric: d must be >= 1");
    return partition_count(d);
}

Integer k_alternating(unsigned long d) {
    if (d < 1) throw std::invalid_argument("k_alternating: d must be >= 1");
    if (d <= 9) {
        // direct check: count even cycle types; a type splits into two
        // classes exactly when its parts are all odd and distinct
        Integer k = 0;
        for_each_partition(d, [&](const Partition& part) {
            const unsigned long nparts = part.parts.size();
            if ((d - nparts) % 2 != 0) return;
            k += 1;
            bool distinct_odd = true;
            for (std::size_t i = 0; i < nparts; ++i) {
                if (part.parts[i] % 2 == 0) distinct_odd = false;
                if (i + 1 < nparts && part.parts[i] == part.parts[i + 1])
                    distinct_odd = false;
            }
            if (distinct_odd) k += 1;
        });
        return k;
    }
    const PartitionClassification c = classify(d);
    return c.even_count + c.distinct_odd_count;
}

Integer two_distinct_odd_count(unsigned long l) {
    if (l % 2 != 0)
        throw std::invalid_argument("two_distinct_odd_count: l must be even");
    return Integer(l / 4);
}

namespace {

IntervalRational point(const Integer& v) { return IntervalRational(Rational(v)); }
IntervalRational point(unsigned long v) { return IntervalRational(Rational(static_cast<unsigned long>(v))); }

// e^(pi sqrt(2d/3)) / d^(3/4)
IntervalRational pribitkin_rhs(unsigned long d, unsigned digits) {
    const auto e = enclosure(Constant::e, digits);
    const auto pi = enclosure(Constant::pi, digits);
    Rational two_thirds_d(2 * Integer(d), Integer(3));
    two_thirds_d.canonicalize();
    const auto expo = pi * sqrt_enclosure(two_thirds_d, digits);
    const auto num = pow_enclosure(e, expo, digits);
    const auto den = pow_enclosure(point(d), IntervalRational(Rational(3, 4)), digits);
    return num / den;
}

Verdict pribitkin_probe(unsigned long d, unsigned digits) {
    return verdict(point(partition_count(d)), Rel::lt, pribitkin_rhs(d, digits));
}

Verdict stirling_probe(unsigned long d, unsigned digits) {
    const auto e = enclosure(Constant::e, digits);
    const auto pi = enclosure(Constant::pi, digits);
    const auto sqrt_2pi = sqrt_enclosure(IntervalRational(Rational(2)) * pi, digits);
    const auto d_pow = pow_enclosure(
        point(d), IntervalRational(Rational(2 * Integer(d) + 1, 2)), digits);
    const auto e_neg_d =
        pow_enclosure(e, IntervalRational(-Rational(Integer(d))), digits);
    const auto fact = point(factorial(d));

    const Verdict lower =
        verdict(round_outward(sqrt_2pi * d_pow * e_neg_d, digits + 4), Rel::le, fact);
    const Verdict upper =
        verdict(fact, Rel::le, round_outward(e * d_pow * e_neg_d, digits + 4));
    if (lower == Verdict::holds && upper == Verdict::holds) return Verdict::holds;
    if (lower == Verdict::fails || upper == Verdict::fails) return Verdict::fails;
    return Verdict::undecided;
}

}  // namespace

bool check_pribitkin(unsigned long d) {
    if (d < 1) throw std::invalid_argument("check_pribitkin: d must be >= 1");
    return decide([d](unsigned digits) { return pribitkin_probe(d, digits); }) ==
           Verdict::holds;
}

bool check_stirling(unsigned long d) {
    if (d < 2) throw std::invalid_argument("check_stirling: d must be >= 2");
    return decide([d](unsigned digits) { return stirling_probe(d, digits); }) ==
           Verdict::holds;
}

bool check_praeger_saxl(const Integer& order, unsigned long d) {
    return order < int_pow(Integer(4), d);
}

const std::vector<InequalityChain>& inequality_chains() {
    static const std::vector<InequalityChain> chains = [] {
        std::vector<InequalityChain> v;

        // 2 (5e)^(d + sqrt d) >= d^(d + 5/4)
        v.push_back(InequalityChain{
            "alternating-primitive",
            "2(5e)^(d+sqrt(d)) >= d^(d+5/4)",
            80,
            [](unsigned long d, unsigned digits) {
                const auto e = enclosure(Constant::e, digits);
                const auto base = IntervalRational(Rational(5)) * e;
                const auto expo =
                    point(d) + sqrt_enclosure(Rational(Integer(d)), digits);
                const auto lhs = IntervalRational(Rational(2)) *
                                 pow_enclosure(base, expo, digits);
                Rational ex(4 * Integer(d) + 5, 4);
                ex.canonicalize();
                const auto rhs =
                    pow_enclosure(point(d), IntervalRational(ex), digits);
                return verdict(lhs, Rel::ge, rhs);
            }});

        // d < (1/4) log d + pi sqrt(2d/3) log e + 2, logs base 2
        v.push_back(InequalityChain{
            "alternating-imprimitive",
            "d < (1/4)log2(d) + pi sqrt(2d/3) log2(e) + 2",
            80,
            [](unsigned long d, unsigned digits) {
                const auto e = enclosure(Constant::e, digits);
                const auto pi = enclosure(Constant::pi, digits);
                const auto log_d = log_enclosure(point(d), 2, digits);
                const auto log_e = log_enclosure(e, 2, digits);
                Rational td(2 * Integer(d), 3);
                td.canonicalize();
                const auto rhs = log_d / IntervalRational(Rational(4)) +
                                 pi * sqrt_enclosure(td, digits) * log_e +
                                 IntervalRational(Rational(2));
                return verdict(point(d), Rel::lt, rhs);
            }});

        // d - log d - 1 <= pi sqrt(2d/3) log e + 1, logs base 2
        v.push_back(InequalityChain{
            "imprimitive-growth",
            "d - log2(d) - 1 <= pi sqrt(2d/3) log2(e) + 1",
            10000,
            [](unsigned long d, unsigned digits) {
                const auto e = enclosure(Constant::e, digits);
                const auto pi = enclosure(Constant::pi, digits);
                const auto log_d = log_enclosure(point(d), 2, digits);
                const auto log_e = log_enclosure(e, 2, digits);
                Rational td(2 * Integer(d), 3);
                td.canonicalize();
                const auto lhs =
                    point(d) - log_d - IntervalRational(Rational(1));
                const auto rhs = pi * sqrt_enclosure(td, digits) * log_e +
                                 IntervalRational(Rational(1));
                return verdict(lhs, Rel::le, rhs);
            }});
        return v;
    }();
    return chains;
}

unsigned long max_d_satisfying(const std::string& name) {
    const InequalityChain* chain = nullptr;
    for (const auto& c : inequality_chains())
        if (c.name == name) chain = &c;
    if (!chain)
        throw std::invalid_argument("max_d_satisfying: unknown inequality '" +
                                    name + "'");

    unsigned long max_true = 0;
    bool seen_false = false;
    for (unsigned long d = 1; d <= chain->scan_limit; ++d) {
        const Verdict v =
            decide([&](unsigned digits) { return chain->probe(d, digits); });
        if (v == Verdict::holds) {
            if (seen_false)
                throw std::logic_error("max_d_satisfying: satisfying set for '" +
                                       name + "' is not downward closed");
            max_true = d;
        } else {
            seen_false = true;
        }
    }
    return max_true;
}

}  // namespace classnum
