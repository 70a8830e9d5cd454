#include "classnum/wreath.hpp"

#include <stdexcept>

namespace classnum {

namespace {

std::size_t orbit_count(const std::vector<std::size_t>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::size_t orbits = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++orbits;
        for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return orbits;
}

}  // namespace

Integer necklace_count(unsigned long d, const Integer& k) {
    if (d == 0) throw std::invalid_argument("necklace_count: d >= 1");
    Integer sum = 0;
    for (const Integer& t : divisors(Integer(d)))
        sum += euler_phi(t) * int_pow(k, d / t.get_ui());
    Integer r, rem;
    Integer dd(d);
    mpz_tdiv_qr(r.get_mpz_t(), rem.get_mpz_t(), sum.get_mpz_t(), dd.get_mpz_t());
    if (rem != 0) throw std::logic_error("necklace_count: non-integral quotient");
    return r;
}

Integer k_wreath_generic(const Integer& k, const PermutationGroup& top) {
    if (k < 1) throw std::invalid_argument("k_wreath_generic: k >= 1");
    Integer total = 0;
    for (const auto& cls : top.conjugacy_classes()) {
        const Permutation& rep = top.elements()[cls[0]];
        const PermutationGroup cent = top.centralizer(rep);
        Integer burnside = 0;
        for (const auto& c : cent.elements())
            burnside += int_pow(k, orbit_count(action_on_cycles(c, rep)));
        Integer orbits, rem;
        const Integer cent_order(static_cast<unsigned long>(cent.order()));
        mpz_tdiv_qr(orbits.get_mpz_t(), rem.get_mpz_t(), burnside.get_mpz_t(),
                    cent_order.get_mpz_t());
        if (rem != 0)
            throw std::logic_error("k_wreath_generic: Burnside sum not divisible "
                                   "by centralizer order");
        total += orbits;
    }
    return total;
}

Integer k_wreath_cyclic(const Integer& k, unsigned long r) {
    if (k < 1 || r < 1) throw std::invalid_argument("k_wreath_cyclic: k, r >= 1");
    Integer total = 0;
    for (const Integer& m : divisors(Integer(r)))
        total += euler_phi(m) * necklace_count(r / m.get_ui(), k);
    return total;
}

Integer k_wreath(const WreathDescriptor& w) {
    if (w.top) return k_wreath_generic(w.base_class_count, *w.top);
    return k_wreath_cyclic(w.base_class_count, w.cyclic_order);
}

bool check_regular_estimate(const Integer& k, const PermutationGroup& top) {
    if (!top.is_regular())
        throw std::invalid_argument("check_regular_estimate: top is not regular");
    const unsigned long r = top.degree();
    const Integer W = k_wreath_generic(k, top);
    const Integer k_r = int_pow(k, r);
    Rational main_term(k_r, Integer(r));
    main_term.canonicalize();

    // k^r/r - W <= k^(r/2), compared on squares to stay rational
    Rational low_gap = main_term - Rational(W);
    if (low_gap > 0 && low_gap * low_gap > Rational(k_r)) return false;
    // W - k^r/r <= 2r k^(r/2)
    Rational high_gap = Rational(W) - main_term;
    if (high_gap > 0 &&
        high_gap * high_gap > Rational(4 * Integer(r) * Integer(r) * k_r))
        return false;
    return true;
}

bool check_m12_growth(unsigned long r) {
    if (r < 1) throw std::invalid_argument("check_m12_growth: r >= 1");
    const Integer v = k_wreath_cyclic(Integer(15), r);
    Integer lhs;
    mpz_pow_ui(lhs.get_mpz_t(), v.get_mpz_t(), 100);
    return lhs > int_pow(Integer(12), 108 * r);
}

unsigned long m12_growth_threshold(unsigned long limit) {
    unsigned long last_false = 0;
    for (unsigned long r = 1; r <= limit; ++r)
        if (!check_m12_growth(r)) last_false = r;
    if (last_false >= limit)
        throw std::logic_error("m12_growth_threshold: no stable threshold below limit");
    return last_false + 1;
}

PermutationGroup tuple_group(const PermutationGroup& base,
                             const PermutationGroup& top, std::size_t cap) {
    const unsigned bd = base.degree();
    const unsigned r = top.degree();
    if (bd == 0 || r == 0)
        throw std::invalid_argument("tuple_group: degenerate factors");

    Integer expected(static_cast<unsigned long>(top.order()));
    expected *= int_pow(Integer(static_cast<unsigned long>(base.order())), r);
    if (expected > Integer(static_cast<unsigned long>(cap)))
        throw GroupTooLargeError("tuple_group: |base|^r |top| exceeds cap");

    const unsigned degree = bd * r;
    std::vector<Permutation> gens;
    // one copy of each base generator per position
    for (unsigned pos = 0; pos < r; ++pos)
        for (const auto& g : base.generators()) {
            std::vector<std::uint8_t> img(degree);
            for (unsigned i = 0; i < r; ++i)
                for (unsigned x = 0; x < bd; ++x)
                    img[i * bd + x] = static_cast<std::uint8_t>(
                        i * bd + (i == pos ? g(x) : x));
            gens.push_back(Permutation(std::move(img)));
        }
    // top generators permute the blocks
    for (const auto& p : top.generators()) {
        std::vector<std::uint8_t> img(degree);
        for (unsigned i = 0; i < r; ++i)
            for (unsigned x = 0; x < bd; ++x)
                img[i * bd + x] = static_cast<std::uint8_t>(p(i) * bd + x);
        gens.push_back(Permutation(std::move(img)));
    }
    PermutationGroup G = PermutationGroup::closure(degree, std::move(gens), cap);
    if (Integer(static_cast<unsigned long>(G.order())) != expected)
        throw std::logic_error("tuple_group: closure order mismatch");
    return G;
}

}  // namespace classnum
