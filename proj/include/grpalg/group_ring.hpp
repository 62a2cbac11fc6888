#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "grpalg/cyclotomic.hpp"
#include "grpalg/group.hpp"
#include "grpalg/rational.hpp"

namespace grpalg {

inline bool coeff_is_zero(const Int& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const Rat& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const Cyclotomic& c) { return c.is_zero(); }

inline std::string coeff_str(const Int& c) { return int_str(c); }
inline std::string coeff_str(const Rat& c) { return rat_str(c); }
inline std::string coeff_str(const Cyclotomic& c) { return c.str(); }

// Sparse exact-coefficient element of the group ring RG. Terms are kept in
// a map ordered by element index, zero coefficients never stored.
// Multiplication accumulates densely for small groups.
template <typename C>
class GroupRingElement {
  public:
    explicit GroupRingElement(const FiniteGroup& G) : G_(&G) {}

    static GroupRingElement zero(const FiniteGroup& G) { return GroupRingElement(G); }

    static GroupRingElement one(const FiniteGroup& G)
        requires std::constructible_from<C, int>
    {
        return from_group_element(G, G.identity());
    }

    static GroupRingElement from_group_element(const FiniteGroup& G, int g)
        requires std::constructible_from<C, int>
    {
        GroupRingElement x(G);
        x.set_coeff(g, C(1));
        return x;
    }

    static GroupRingElement scalar(const FiniteGroup& G, const C& c) {
        GroupRingElement x(G);
        x.set_coeff(G.identity(), c);
        return x;
    }

    const FiniteGroup& group() const { return *G_; }
    const std::map<int, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }

    C coeff(int g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? C{} : it->second;
    }

    void set_coeff(int g, C c) {
        check(g >= 0 && g < G_->order(), errc::bad_input, "coefficient index out of range");
        if (coeff_is_zero(c))
            terms_.erase(g);
        else
            terms_[g] = std::move(c);
    }

    void add_coeff(int g, const C& c) {
        auto it = terms_.find(g);
        if (it == terms_.end()) {
            if (!coeff_is_zero(c))
                terms_.emplace(g, c);
        } else {
            it->second += c;
            if (coeff_is_zero(it->second))
                terms_.erase(it);
        }
    }

    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
        same_ring(a, b);
        GroupRingElement r = a;
        for (const auto& [g, c] : b.terms_)
            r.add_coeff(g, c);
        return r;
    }

    friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
        same_ring(a, b);
        GroupRingElement r = a;
        for (const auto& [g, c] : b.terms_)
            r.add_coeff(g, -c);
        return r;
    }

    GroupRingElement operator-() const {
        GroupRingElement r(*G_);
        for (const auto& [g, c] : terms_)
            r.terms_.emplace(g, -c);
        return r;
    }

    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        same_ring(a, b);
        const FiniteGroup& G = *a.G_;
        GroupRingElement r(G);
        if (G.order() <= 64) {
            // dense accumulation on the hot path
            std::vector<C> acc(static_cast<size_t>(G.order()), C{});
            std::vector<char> hit(static_cast<size_t>(G.order()), 0);
            for (const auto& [g, cg] : a.terms_)
                for (const auto& [h, ch] : b.terms_) {
                    int x = G.mul(g, h);
                    acc[static_cast<size_t>(x)] += cg * ch;
                    hit[static_cast<size_t>(x)] = 1;
                }
            for (int x = 0; x < G.order(); ++x)
                if (hit[static_cast<size_t>(x)] && !coeff_is_zero(acc[static_cast<size_t>(x)]))
                    r.terms_.emplace(x, std::move(acc[static_cast<size_t>(x)]));
        } else {
            for (const auto& [g, cg] : a.terms_)
                for (const auto& [h, ch] : b.terms_)
                    r.add_coeff(G.mul(g, h), cg * ch);
        }
        return r;
    }

    friend GroupRingElement operator*(const C& s, const GroupRingElement& a) {
        GroupRingElement r(*a.G_);
        for (const auto& [g, c] : a.terms_) {
            C v = s * c;
            if (!coeff_is_zero(v))
                r.terms_.emplace(g, std::move(v));
        }
        return r;
    }

    GroupRingElement& operator+=(const GroupRingElement& o) { return *this = *this + o; }
    GroupRingElement& operator-=(const GroupRingElement& o) { return *this = *this - o; }
    GroupRingElement& operator*=(const GroupRingElement& o) { return *this = *this * o; }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        same_ring(a, b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) {
        return !(a == b);
    }

    bool is_one() const
        requires std::constructible_from<C, int>
    {
        return terms_.size() == 1 && terms_.begin()->first == G_->identity() &&
               terms_.begin()->second == C(1);
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [g, c] : terms_) {
            if (!first)
                os << " + ";
            os << "(" << coeff_str(c) << ")*" << G_->label(g);
            first = false;
        }
        return os.str();
    }

  private:
    const FiniteGroup* G_;
    std::map<int, C> terms_;

    static void same_ring(const GroupRingElement& a, const GroupRingElement& b) {
        check(a.G_ == b.G_ || *a.G_ == *b.G_, errc::ring_mismatch,
              "group ring elements over different groups");
    }
};

using ZGElement = GroupRingElement<Int>;
using QGElement = GroupRingElement<Rat>;
using CycGElement = GroupRingElement<Cyclotomic>;

template <typename C>
GroupRingElement<C> star(const GroupRingElement<C>& a) {
    GroupRingElement<C> r(a.group());
    for (const auto& [g, c] : a.terms())
        r.set_coeff(a.group().inv(g), c);
    return r;
}

template <typename C>
GroupRingElement<C> conjugate_by(const GroupRingElement<C>& a, int g) {
    GroupRingElement<C> r(a.group());
    for (const auto& [x, c] : a.terms())
        r.set_coeff(a.group().conjugate(x, g), c);
    return r;
}

template <typename C>
C augmentation(const GroupRingElement<C>& a) {
    C s{};
    for (const auto& [g, c] : a.terms())
        s += c;
    return s;
}

// T(sum r_g g) = r_1, the coefficient of the identity.
template <typename C>
C trace_T(const GroupRingElement<C>& a) {
    return a.coeff(a.group().identity());
}

template <typename C>
GroupRingElement<C> power(const GroupRingElement<C>& a, unsigned long e)
    requires std::constructible_from<C, int>
{
    GroupRingElement<C> r = GroupRingElement<C>::one(a.group());
    GroupRingElement<C> base = a;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

inline QGElement to_rational(const ZGElement& a) {
    QGElement r(a.group());
    for (const auto& [g, c] : a.terms())
        r.set_coeff(g, Rat(c));
    return r;
}

inline ZGElement to_integer(const QGElement& a) {
    ZGElement r(a.group());
    for (const auto& [g, c] : a.terms()) {
        check(rat_is_integer(c), errc::bad_parameters,
              "coefficient " + rat_str(c) + " is not an integer");
        r.set_coeff(g, c.get_num());
    }
    return r;
}

// N~ = sum of the subgroup's elements (integer coefficients).
inline ZGElement group_sum_tilde(const FiniteGroup& G, const Subgroup& N) {
    ZGElement r(G);
    for (int s : N.members)
        r.set_coeff(s, Int(1));
    return r;
}

// N^ = N~ / |N|, an idempotent of QG.
inline QGElement group_sum_hat(const FiniteGroup& G, const Subgroup& N) {
    QGElement r(G);
    Rat c = rat_of(1, N.order());
    for (int s : N.members)
        r.set_coeff(s, c);
    return r;
}

// Relative augmentation RG -> R(G/N). The returned element lives over
// q.group; the Quotient must outlive it.
template <typename C>
GroupRingElement<C> relative_augmentation(const GroupRingElement<C>& a, const Quotient& q) {
    GroupRingElement<C> r(q.group);
    for (const auto& [g, c] : a.terms())
        r.add_coeff(q.to_coset[static_cast<size_t>(g)], c);
    return r;
}

template <typename C>
bool is_idempotent(const GroupRingElement<C>& a) {
    return a * a == a;
}

template <typename C>
bool is_central(const GroupRingElement<C>& a) {
    for (int g = 0; g < a.group().order(); ++g)
        if (conjugate_by(a, g) != a)
            return false;
    return true;
}

// Idempotent bookkeeping: centrality, stabilizer S_G(e) = {g : g e = e},
// and n_e, the least positive integer clearing all denominators.
struct IdempotentRecord {
    QGElement element;
    bool central = false;
    Subgroup stabilizer;
    Int n_e = 1;
};

inline IdempotentRecord idempotent_record(const QGElement& e) {
    check(is_idempotent(e), errc::not_idempotent, "element is not idempotent");
    const FiniteGroup& G = e.group();
    IdempotentRecord rec{e, is_central(e), trivial_subgroup(G), Int(1)};
    std::vector<int> stab;
    for (int g = 0; g < G.order(); ++g) {
        if (QGElement::from_group_element(G, g) * e == e)
            stab.push_back(g);
    }
    rec.stabilizer = make_subgroup(G, std::move(stab));
    Int ne(1);
    for (const auto& [g, c] : e.terms())
        ne = int_lcm(ne, c.get_den());
    rec.n_e = ne;
    return rec;
}

// Order of a certified unit by brute force. If u is not torsion the loop
// stops early when Berman's lemma certifies infinite order: a normalized
// torsion unit with nonzero identity coefficient must equal 1, so a power
// that violates this shows u cannot be torsion.
struct ElementOrderResult {
    std::optional<long> order;       // least t <= max_order with u^t = 1
    bool berman_witness = false;     // some power contradicts Berman torsion
    long berman_power = 0;
    Int max_abs_coeff = 0;           // coefficient growth evidence
};

inline ElementOrderResult element_order_bruteforce(const ZGElement& u, const ZGElement& u_inv,
                                                   long max_order) {
    check(u * u_inv == ZGElement::one(u.group()) && u_inv * u == ZGElement::one(u.group()),
          errc::not_a_unit, "element has no certified inverse");
    ElementOrderResult res;
    ZGElement p = u;
    for (long t = 1; t <= max_order; ++t) {
        for (const auto& [g, c] : p.terms()) {
            Int a = abs(c);
            if (a > res.max_abs_coeff)
                res.max_abs_coeff = a;
        }
        if (p.is_one()) {
            res.order = t;
            return res;
        }
        if (!coeff_is_zero(trace_T(p)) && augmentation(p) == 1) {
            res.berman_witness = true;
            res.berman_power = t;
            return res;
        }
        p = p * u;
    }
    return res;
}

} // namespace grpalg
