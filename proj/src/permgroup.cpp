#include "classnum/permgroup.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace classnum {

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (std::uint8_t v : img_) {
        if (v >= img_.size() || seen[v])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(unsigned degree) {
    std::vector<std::uint8_t> img(degree);
    for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(
    unsigned degree, const std::vector<std::vector<unsigned>>& cycles) {
    std::vector<std::uint8_t> img(degree);
    for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= degree)
                throw std::invalid_argument("from_cycles: point out of range");
            img[c[i]] = static_cast<std::uint8_t>(c[(i + 1) % c.size()]);
        }
    return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation& b) const {
    if (degree() != b.degree())
        throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<std::uint8_t> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[i] = b.img_[img_[i]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint8_t> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        img[img_[i]] = static_cast<std::uint8_t>(i);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    for (std::uint8_t v : p.images()) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<std::vector<unsigned>> cycles(const Permutation& x) {
    std::vector<std::vector<unsigned>> out;
    std::vector<bool> seen(x.degree(), false);
    for (unsigned start = 0; start < x.degree(); ++start) {
        if (seen[start]) continue;
        std::vector<unsigned> cycle;
        unsigned p = start;
        do {
            seen[p] = true;
            cycle.push_back(p);
            p = x(p);
        } while (p != start);
        out.push_back(std::move(cycle));
    }
    return out;
}

PermutationGroup PermutationGroup::closure(unsigned degree,
                                           std::vector<Permutation> generators,
                                           std::size_t cap) {
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw std::invalid_argument("closure: generator degree mismatch");
    PermutationGroup G;
    G.degree_ = degree;
    G.generators_ = std::move(generators);
    G.elements_.push_back(Permutation::identity(degree));
    G.index_.emplace(G.elements_[0], 0);
    for (std::size_t head = 0; head < G.elements_.size(); ++head) {
        const Permutation current = G.elements_[head];
        for (const auto& g : G.generators_) {
            Permutation next = current.then(g);
            if (G.index_.contains(next)) continue;
            if (G.elements_.size() >= cap)
                throw GroupTooLargeError("closure: group too large for oracle (cap " +
                                         std::to_string(cap) + ")");
            G.index_.emplace(next, static_cast<std::uint32_t>(G.elements_.size()));
            G.elements_.push_back(std::move(next));
        }
    }
    return G;
}

PermutationGroup PermutationGroup::from_elements(unsigned degree,
                                                 std::vector<Permutation> elements) {
    PermutationGroup G;
    G.degree_ = degree;
    G.elements_ = std::move(elements);
    // put the identity first to keep enumeration conventions uniform
    for (std::size_t i = 0; i < G.elements_.size(); ++i)
        if (G.elements_[i].is_identity()) {
            std::swap(G.elements_[0], G.elements_[i]);
            break;
        }
    for (std::size_t i = 0; i < G.elements_.size(); ++i)
        G.index_.emplace(G.elements_[i], static_cast<std::uint32_t>(i));
    if (G.index_.size() != G.elements_.size())
        throw std::invalid_argument("from_elements: duplicate elements");
    G.generators_ = G.elements_;
    return G;
}

bool PermutationGroup::contains(const Permutation& p) const {
    return p.degree() == degree_ && index_.contains(p);
}

std::uint32_t PermutationGroup::index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
        throw std::invalid_argument("index_of: element not in group");
    return it->second;
}

const std::vector<std::vector<std::uint32_t>>& PermutationGroup::conjugacy_classes()
    const {
    if (!classes_.empty() || elements_.empty()) return classes_;
    std::vector<Permutation> gen_inv;
    gen_inv.reserve(generators_.size());
    for (const auto& g : generators_) gen_inv.push_back(g.inverse());

    std::vector<bool> assigned(elements_.size(), false);
    for (std::uint32_t i = 0; i < elements_.size(); ++i) {
        if (assigned[i]) continue;
        std::vector<std::uint32_t> cls{i};
        assigned[i] = true;
        for (std::size_t head = 0; head < cls.size(); ++head) {
            const Permutation& y = elements_[cls[head]];
            for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
                Permutation conj = gen_inv[gi].then(y).then(generators_[gi]);
                const std::uint32_t idx = index_.at(conj);
                if (!assigned[idx]) {
                    assigned[idx] = true;
                    cls.push_back(idx);
                }
            }
        }
        classes_.push_back(std::move(cls));
    }
    return classes_;
}

PermutationGroup PermutationGroup::centralizer(const Permutation& x) const {
    if (!contains(x))
        throw std::invalid_argument("centralizer: element not in group");
    std::vector<Permutation> cent;
    for (const auto& g : elements_)
        if (g.then(x) == x.then(g)) cent.push_back(g);
    return from_elements(degree_, std::move(cent));
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& big) const {
    if (degree_ != big.degree_) return false;
    for (const auto& e : elements_)
        if (!big.contains(e)) return false;
    return true;
}

bool PermutationGroup::is_normal_in(const PermutationGroup& big) const {
    if (!is_subgroup_of(big)) return false;
    for (const auto& g : big.generators_) {
        const Permutation gi = g.inverse();
        for (const auto& n : elements_)
            if (!contains(gi.then(n).then(g))) return false;
    }
    return true;
}

bool PermutationGroup::is_transitive() const {
    if (degree_ == 0) return true;
    std::vector<bool> orbit(degree_, false);
    orbit[0] = true;
    std::deque<unsigned> queue{0};
    std::size_t hit = 1;
    while (!queue.empty()) {
        unsigned p = queue.front();
        queue.pop_front();
        for (const auto& g : generators_) {
            unsigned q = g(p);
            if (!orbit[q]) {
                orbit[q] = true;
                ++hit;
                queue.push_back(q);
            }
        }
    }
    return hit == degree_;
}

bool PermutationGroup::is_regular() const {
    return is_transitive() && order() == degree_;
}

std::vector<std::size_t> action_on_cycles(const Permutation& c,
                                          const Permutation& x) {
    if (c.then(x) != x.then(c))
        throw std::invalid_argument("action_on_cycles: c does not centralize x");
    const auto cycs = cycles(x);
    std::vector<std::size_t> cycle_of(x.degree());
    for (std::size_t i = 0; i < cycs.size(); ++i)
        for (unsigned p : cycs[i]) cycle_of[p] = i;
    std::vector<std::size_t> induced(cycs.size());
    for (std::size_t i = 0; i < cycs.size(); ++i)
        induced[i] = cycle_of[c(cycs[i][0])];
    return induced;
}

bool check_subgroup_inequalities(const PermutationGroup& G,
                                 const PermutationGroup& H) {
    if (!H.is_subgroup_of(G))
        throw std::invalid_argument("check_subgroup_inequalities: H is not a subgroup of G");
    const Integer kG(static_cast<unsigned long>(G.class_count()));
    const Integer kH(static_cast<unsigned long>(H.class_count()));
    const Integer index(static_cast<unsigned long>(G.order() / H.order()));
    return kH <= index * kG && kG <= index * kH;
}

std::size_t g_classes_of_normal(const PermutationGroup& G,
                                const PermutationGroup& N) {
    std::vector<Permutation> gen_inv;
    for (const auto& g : G.generators()) gen_inv.push_back(g.inverse());
    std::unordered_map<Permutation, bool, PermutationHash> assigned;
    for (const auto& n : N.elements()) assigned.emplace(n, false);
    std::size_t count = 0;
    for (const auto& n : N.elements()) {
        if (assigned.at(n)) continue;
        ++count;
        std::vector<Permutation> orbit{n};
        assigned.at(n) = true;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (std::size_t gi = 0; gi < G.generators().size(); ++gi) {
                Permutation conj =
                    gen_inv[gi].then(orbit[head]).then(G.generators()[gi]);
                auto it = assigned.find(conj);
                if (it == assigned.end())
                    throw std::logic_error("g_classes_of_normal: orbit left N");
                if (!it->second) {
                    it->second = true;
                    orbit.push_back(std::move(conj));
                }
            }
        }
    }
    return count;
}

std::size_t quotient_class_count(const PermutationGroup& G,
                                 const PermutationGroup& N) {
    // coset partition in enumeration order
    const std::uint32_t none = UINT32_MAX;
    std::vector<std::uint32_t> coset_of(G.order(), none);
    std::vector<std::uint32_t> rep;
    for (std::uint32_t i = 0; i < G.order(); ++i) {
        if (coset_of[i] != none) continue;
        const auto id = static_cast<std::uint32_t>(rep.size());
        rep.push_back(i);
        for (const auto& n : N.elements())
            coset_of[G.index_of(n.then(G.elements()[i]))] = id;
    }
    const std::size_t m = rep.size();
    auto coset = [&](const Permutation& p) { return coset_of[G.index_of(p)]; };

    // multiplication-then-lookup on representatives
    std::vector<std::vector<std::uint32_t>> mul(m, std::vector<std::uint32_t>(m));
    std::vector<std::uint32_t> inv(m);
    for (std::uint32_t a = 0; a < m; ++a) {
        for (std::uint32_t b = 0; b < m; ++b)
            mul[a][b] = coset(G.elements()[rep[a]].then(G.elements()[rep[b]]));
        inv[a] = coset(G.elements()[rep[a]].inverse());
    }
    std::vector<bool> assigned(m, false);
    std::size_t k = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (assigned[i]) continue;
        ++k;
        for (std::uint32_t g = 0; g < m; ++g) assigned[mul[mul[inv[g]][i]][g]] = true;
    }
    return k;
}

bool check_normal_inequalities(const PermutationGroup& G,
                               const PermutationGroup& N) {
    if (!N.is_normal_in(G))
        throw std::invalid_argument("check_normal_inequalities: N is not normal in G");
    const Integer kG(static_cast<unsigned long>(G.class_count()));
    const Integer kN(static_cast<unsigned long>(N.class_count()));
    const Integer kQ(static_cast<unsigned long>(quotient_class_count(G, N)));
    const Integer index(static_cast<unsigned long>(G.order() / N.order()));
    const Integer gclasses(static_cast<unsigned long>(g_classes_of_normal(G, N)));
    return kG <= kN * kQ && kG <= index * gclasses;
}

bool check_burnside_identity(const PermutationGroup& G) {
    const Integer order(static_cast<unsigned long>(G.order()));
    Integer centralizer_sum = 0;
    for (const auto& cls : G.conjugacy_classes()) {
        const Integer size(static_cast<unsigned long>(cls.size()));
        const Integer cent(static_cast<unsigned long>(
            G.centralizer(G.elements()[cls[0]]).order()));
        if (size * cent != order) return false;  // orbit-stabilizer
        centralizer_sum += size * cent;
    }
    return centralizer_sum ==
           Integer(static_cast<unsigned long>(G.class_count())) * order;
}

bool check_pyber_bound(const PermutationGroup& P) {
    const unsigned long r = P.degree();
    const Integer k(static_cast<unsigned long>(P.class_count()));
    if (k > int_pow(Integer(2), r >= 1 ? r - 1 : 0)) return false;
    if (r >= 4 && k * k * k > int_pow(Integer(5), r - 1)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// catalog

namespace catalog {

namespace {

using Cycles = std::vector<std::vector<unsigned>>;

// GF(q) for q = p or p^2 with tiny tables; elements encoded 0..q-1 as
// a0 + p*a1 (a1 the coefficient of the adjoined root)
struct SmallField {
    unsigned q, p;
    explicit SmallField(unsigned q_) : q(q_) {
        unsigned long pp = 0, e = 0;
        if (!is_prime_power(q_, pp, e) || e > 2)
            throw std::invalid_argument("SmallField: need q = p or p^2");
        p = static_cast<unsigned>(pp);
        ext = (e == 2);
        if (ext && p > 2) {
            for (c = 2; c < p; ++c) {
                bool residue = false;
                for (unsigned x = 0; x < p; ++x)
                    if (x * x % p == c) residue = true;
                if (!residue) break;
            }
        }
    }
    bool ext = false;
    unsigned c = 0;  // x^2 = c for odd p; x^2 = x + 1 for p = 2

    unsigned add(unsigned a, unsigned b) const {
        if (!ext) return (a + b) % p;
        return (a % p + b % p) % p + p * ((a / p + b / p) % p);
    }
    unsigned mul(unsigned a, unsigned b) const {
        if (!ext) return (a * b) % p;
        unsigned a0 = a % p, a1 = a / p, b0 = b % p, b1 = b / p;
        unsigned cross = a0 * b1 + a1 * b0, sq = a1 * b1;
        if (p == 2) return (a0 * b0 + sq) % 2 + 2 * ((cross + sq) % 2);
        return (a0 * b0 + c * sq) % p + p * (cross % p);
    }
    unsigned neg(unsigned a) const {
        for (unsigned b = 0; b < q; ++b)
            if (add(a, b) == 0) return b;
        throw std::logic_error("SmallField: no negative");
    }
    unsigned inv(unsigned a) const {
        for (unsigned b = 0; b < q; ++b)
            if (mul(a, b) == 1) return b;
        throw std::invalid_argument("SmallField: zero has no inverse");
    }
    unsigned generator() const {
        for (unsigned g = 1; g < q; ++g) {
            unsigned x = 1, n = 0;
            do {
                x = mul(x, g);
                ++n;
            } while (x != 1);
            if (n == q - 1) return g;
        }
        throw std::logic_error("SmallField: no multiplicative generator");
    }
};

// projective line points: 0 = infinity, 1 + e for each field element e
std::vector<Permutation> psl2_generators(unsigned q, bool pgl) {
    const SmallField F(q);
    auto translation = [&](unsigned shift) {
        std::vector<std::uint8_t> img(q + 1);
        img[0] = 0;
        for (unsigned e = 0; e < q; ++e)
            img[1 + e] = static_cast<std::uint8_t>(1 + F.add(e, shift));
        return Permutation(std::move(img));
    };
    auto inversion = [&]() {  // z -> -1/z
        std::vector<std::uint8_t> img(q + 1);
        img[0] = 1;  // infinity -> 0
        img[1] = 0;  // 0 -> infinity
        for (unsigned e = 1; e < q; ++e)
            img[1 + e] = static_cast<std::uint8_t>(1 + F.neg(F.inv(e)));
        return Permutation(std::move(img));
    };
    const unsigned g = F.generator();
    std::vector<Permutation> gens{translation(1), inversion()};
    if (F.ext) gens.push_back(translation(g));  // span the additive group
    if (pgl && q % 2 == 1) {
        std::vector<std::uint8_t> img(q + 1);  // z -> g z, g a non-square
        img[0] = 0;
        for (unsigned e = 0; e < q; ++e)
            img[1 + e] = static_cast<std::uint8_t>(1 + F.mul(g, e));
        gens.push_back(Permutation(std::move(img)));
    }
    return gens;
}

PermutationGroup close(unsigned degree, const std::vector<Cycles>& gens) {
    std::vector<Permutation> perms;
    for (const auto& c : gens) perms.push_back(Permutation::from_cycles(degree, c));
    return PermutationGroup::closure(degree, std::move(perms));
}

const Cycles kM11Gen1{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}};
const Cycles kM11Gen2{{2, 6, 10, 7}, {3, 9, 4, 5}};
const Cycles kM12Gen3{{0, 11}, {1, 10}, {2, 5}, {3, 7}, {4, 8}, {6, 9}};

}  // namespace

PermutationGroup cyclic(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclic: n >= 1");
    if (n == 1) return PermutationGroup::closure(1, {});
    std::vector<unsigned> cyc(n);
    for (unsigned i = 0; i < n; ++i) cyc[i] = i;
    return close(n, {{cyc}});
}

PermutationGroup dihedral(unsigned n) {
    if (n < 3) throw std::invalid_argument("dihedral: n >= 3");
    std::vector<unsigned> rot(n);
    for (unsigned i = 0; i < n; ++i) rot[i] = i;
    std::vector<std::uint8_t> refl(n);
    for (unsigned i = 0; i < n; ++i) refl[i] = static_cast<std::uint8_t>((n - i) % n);
    return PermutationGroup::closure(
        n, {Permutation::from_cycles(n, {rot}), Permutation(std::move(refl))});
}

PermutationGroup symmetric(unsigned d) {
    if (d < 1 || d > 8) throw std::invalid_argument("symmetric: 1 <= d <= 8");
    if (d == 1) return PermutationGroup::closure(1, {});
    std::vector<unsigned> cyc(d);
    for (unsigned i = 0; i < d; ++i) cyc[i] = i;
    return close(d, {{{0, 1}}, {cyc}});
}

PermutationGroup alternating(unsigned d) {
    if (d < 3 || d > 8) throw std::invalid_argument("alternating: 3 <= d <= 8");
    if (d == 3) return close(3, {{{0, 1, 2}}});
    std::vector<unsigned> cyc;
    if (d % 2 == 1) {
        for (unsigned i = 0; i < d; ++i) cyc.push_back(i);
    } else {
        for (unsigned i = 1; i < d; ++i) cyc.push_back(i);
    }
    return close(d, {{{0, 1, 2}}, {cyc}});
}

PermutationGroup klein_four() {
    return close(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
}

PermutationGroup s3_regular() {
    // right-regular action of S3 on its own six elements
    const PermutationGroup s3 = symmetric(3);
    std::vector<Permutation> gens;
    for (const auto& g : s3.generators()) {
        std::vector<std::uint8_t> img(6);
        for (unsigned i = 0; i < 6; ++i) {
            const Permutation moved = s3.elements()[i].then(g);
            for (unsigned j = 0; j < 6; ++j)
                if (s3.elements()[j] == moved) img[i] = static_cast<std::uint8_t>(j);
        }
        gens.push_back(Permutation(std::move(img)));
    }
    return PermutationGroup::closure(6, std::move(gens));
}

PermutationGroup psl2(unsigned q) {
    if (q != 4 && q != 5 && q != 7 && q != 9 && q != 11)
        throw std::invalid_argument("psl2: catalog has q in {4,5,7,9,11}");
    return PermutationGroup::closure(q + 1, psl2_generators(q, false));
}

PermutationGroup pgl2(unsigned q) {
    if (q != 4 && q != 5 && q != 7 && q != 9 && q != 11)
        throw std::invalid_argument("pgl2: catalog has q in {4,5,7,9,11}");
    return PermutationGroup::closure(q + 1, psl2_generators(q, true));
}

PermutationGroup mathieu11() { return close(11, {kM11Gen1, kM11Gen2}); }

PermutationGroup mathieu12() {
    return close(12, {kM11Gen1, kM11Gen2, kM12Gen3});
}

PermutationGroup mathieu11_in_12() { return close(12, {kM11Gen1, kM11Gen2}); }

PermutationGroup by_name(const std::string& name) {
    auto parse_num = [&](std::size_t pos) {
        return static_cast<unsigned>(std::stoul(name.substr(pos)));
    };
    if (name == "K4") return klein_four();
    if (name == "S3R") return s3_regular();
    if (name == "M11") return mathieu11();
    if (name == "M12") return mathieu12();
    if (name.rfind("PSL2(", 0) == 0 && name.back() == ')')
        return psl2(static_cast<unsigned>(
            std::stoul(name.substr(5, name.size() - 6))));
    if (name.rfind("PGL2(", 0) == 0 && name.back() == ')')
        return pgl2(static_cast<unsigned>(
            std::stoul(name.substr(5, name.size() - 6))));
    if (name.size() >= 2) {
        switch (name[0]) {
            case 'C': return cyclic(parse_num(1));
            case 'D': return dihedral(parse_num(1));
            case 'S': return symmetric(parse_num(1));
            case 'A': return alternating(parse_num(1));
            default: break;
        }
    }
    throw std::invalid_argument("catalog: unknown group name '" + name + "'");
}

std::vector<Entry> all() {
    std::vector<Entry> out;
    for (unsigned n = 1; n <= 12; ++n)
        out.push_back({"C" + std::to_string(n), cyclic(n)});
    for (unsigned n = 3; n <= 6; ++n)
        out.push_back({"D" + std::to_string(n), dihedral(n)});
    for (unsigned d = 2; d <= 8; ++d)
        out.push_back({"S" + std::to_string(d), symmetric(d)});
    for (unsigned d = 3; d <= 8; ++d)
        out.push_back({"A" + std::to_string(d), alternating(d)});
    out.push_back({"K4", klein_four()});
    out.push_back({"S3R", s3_regular()});
    for (unsigned q : {4u, 5u, 7u, 9u, 11u})
        out.push_back({"PSL2(" + std::to_string(q) + ")", psl2(q)});
    for (unsigned q : {5u, 7u, 9u, 11u})
        out.push_back({"PGL2(" + std::to_string(q) + ")", pgl2(q)});
    out.push_back({"M11", mathieu11()});
    out.push_back({"M12", mathieu12()});
    return out;
}

namespace {

PermutationGroup at_degree(unsigned degree, const std::vector<Cycles>& gens) {
    return close(degree, gens);
}

}  // namespace

std::vector<std::pair<Entry, Entry>> subgroup_pairs() {
    std::vector<std::pair<Entry, Entry>> out;
    auto add = [&](const std::string& gn, PermutationGroup G, const std::string& hn,
                   PermutationGroup H) {
        out.push_back({{gn, std::move(G)}, {hn, std::move(H)}});
    };
    add("S4", symmetric(4), "A4", alternating(4));
    add("S4", symmetric(4), "D4", at_degree(4, {{{0, 1, 2, 3}}, {{0, 2}}}));
    add("S4", symmetric(4), "C4", at_degree(4, {{{0, 1, 2, 3}}}));
    add("S4", symmetric(4), "K4", klein_four());
    add("S4", symmetric(4), "S3@4", at_degree(4, {{{0, 1}}, {{0, 1, 2}}}));
    add("S4", symmetric(4), "C2@4", at_degree(4, {{{0, 1}}}));
    add("S4", symmetric(4), "1@4", at_degree(4, {}));
    add("S5", symmetric(5), "A5", alternating(5));
    add("S5", symmetric(5), "C5", at_degree(5, {{{0, 1, 2, 3, 4}}}));
    add("S5", symmetric(5), "S4@5", at_degree(5, {{{0, 1}}, {{0, 1, 2, 3}}}));
    add("A5", alternating(5), "C5", at_degree(5, {{{0, 1, 2, 3, 4}}}));
    add("A5", alternating(5), "K4@5", at_degree(5, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}}));
    add("A5", alternating(5), "A4@5", at_degree(5, {{{0, 1, 2}}, {{1, 2, 3}}}));
    add("S6", symmetric(6), "A6", alternating(6));
    add("A6", alternating(6), "A5@6", at_degree(6, {{{0, 1, 2}}, {{0, 1, 2, 3, 4}}}));
    add("C6", cyclic(6), "C3@6", at_degree(6, {{{0, 2, 4}, {1, 3, 5}}}));
    add("C6", cyclic(6), "C2@6", at_degree(6, {{{0, 3}, {1, 4}, {2, 5}}}));
    add("D6", dihedral(6), "C6", cyclic(6));
    add("S7", symmetric(7), "A7", alternating(7));
    add("S8", symmetric(8), "A8", alternating(8));
    for (unsigned q : {5u, 7u, 9u, 11u})
        add("PGL2(" + std::to_string(q) + ")", pgl2(q),
            "PSL2(" + std::to_string(q) + ")", psl2(q));
    add("M12", mathieu12(), "M11@12", mathieu11_in_12());
    return out;
}

std::vector<std::pair<Entry, Entry>> normal_pairs() {
    std::vector<std::pair<Entry, Entry>> out;
    auto add = [&](const std::string& gn, PermutationGroup G, const std::string& nn,
                   PermutationGroup N) {
        out.push_back({{gn, std::move(G)}, {nn, std::move(N)}});
    };
    add("S4", symmetric(4), "A4", alternating(4));
    add("S4", symmetric(4), "K4", klein_four());
    add("A4", alternating(4), "K4", klein_four());
    add("S5", symmetric(5), "A5", alternating(5));
    add("S6", symmetric(6), "A6", alternating(6));
    add("S7", symmetric(7), "A7", alternating(7));
    add("S8", symmetric(8), "A8", alternating(8));
    add("C6", cyclic(6), "C3@6", at_degree(6, {{{0, 2, 4}, {1, 3, 5}}}));
    add("C6", cyclic(6), "C2@6", at_degree(6, {{{0, 3}, {1, 4}, {2, 5}}}));
    add("D4", dihedral(4), "C4", cyclic(4));
    add("D6", dihedral(6), "C6", cyclic(6));
    add("K4", klein_four(), "C2a", at_degree(4, {{{0, 1}, {2, 3}}}));
    for (unsigned q : {5u, 7u, 9u, 11u})
        add("PGL2(" + std::to_string(q) + ")", pgl2(q),
            "PSL2(" + std::to_string(q) + ")", psl2(q));
    return out;
}

}  // namespace catalog

}  // namespace classnum
