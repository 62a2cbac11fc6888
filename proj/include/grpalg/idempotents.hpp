#pragma once

#include <optional>

#include "grpalg/group_ring.hpp"

namespace grpalg {

// Least t >= 1 with h^t in K; the order of hK in H/K.
inline int coset_order(const FiniteGroup& G, const Subgroup& K, int h) {
    int x = h, t = 1;
    while (!K.contains(x)) {
        x = G.mul(x, h);
        ++t;
    }
    return t;
}

// Minimal-index element of H generating the cyclic group H/K, if any.
inline std::optional<int> cyclic_generator_mod(const FiniteGroup& G, const Subgroup& H,
                                               const Subgroup& K) {
    int q = H.order() / K.order();
    for (int h : H.members)
        if (coset_order(G, K, h) == q)
            return h;
    return std::nullopt;
}

// epsilon(H,K) viewed inside QG: H^ when H = K, otherwise the product of
// (K^ - D^) over the subgroups D with D/K minimal normal in H/K.
inline QGElement epsilon(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    check(H.contains_all(K), errc::bad_input, "epsilon requires K <= H");
    for (int h : H.members)
        for (int k : K.members)
            check(K.contains(G.conjugate(k, h)), errc::not_normal_in_h, "K is not normal in H");
    if (H.members == K.members)
        return group_sum_hat(G, H);
    QGElement e = QGElement::one(G);
    QGElement khat = group_sum_hat(G, K);
    for (const auto& D : minimal_normal_above(G, H, K))
        e = e * (khat - group_sum_hat(G, D));
    invariant(is_idempotent(e), "epsilon(H,K) failed the idempotency check");
    return e;
}

// Verdicts for the Shoda conditions (S1)-(S3) and the strong conditions
// (SS1)-(SS3), plus the idempotent data attached to the pair.
struct ShodaPairRecord {
    Subgroup H, K;
    bool s1 = false, s2 = false, s3 = false;
    bool ss1 = false, ss2 = false, ss3 = false;
    QGElement eps;
    std::optional<QGElement> e_idem; // e(G,H,K), present for strong pairs
    Subgroup centralizer_of_epsilon;

    bool is_shoda() const { return s1 && s2 && s3; }
    bool is_strong() const { return ss1 && ss2 && ss3; }
};

namespace detail {

inline bool normal_in(const FiniteGroup& G, const Subgroup& inner, const Subgroup& outer) {
    for (int g : outer.members)
        for (int s : inner.members)
            if (!inner.contains(G.conjugate(s, g)))
                return false;
    return true;
}

} // namespace detail

// Fills (S1)-(S3): K normal in H, H/K cyclic, and the commutator condition
// "for every g in G \ H there is h in H with (h,g) in H \ K".
inline ShodaPairRecord is_shoda_pair(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    check(H.contains_all(K), errc::bad_input, "pair requires K <= H");
    ShodaPairRecord rec{H, K, false, false, false, false, false, false,
                        QGElement::zero(G), std::nullopt, trivial_subgroup(G)};
    rec.s1 = detail::normal_in(G, K, H);
    if (rec.s1)
        rec.s2 = cyclic_generator_mod(G, H, K).has_value();
    rec.s3 = true;
    for (int g = 0; g < G.order() && rec.s3; ++g) {
        if (H.contains(g))
            continue;
        bool found = false;
        for (int h : H.members) {
            int c = G.commutator(h, g);
            if (H.contains(c) && !K.contains(c)) {
                found = true;
                break;
            }
        }
        rec.s3 = found;
    }
    if (rec.s1)
        rec.eps = epsilon(G, H, K);
    return rec;
}

namespace detail {

// Right transversal of S in G: one representative per coset S*t. The
// canonical choice takes the least element of each coset; a seed permutes
// the choice inside each coset (used for independence checks).
inline std::vector<int> right_transversal(const FiniteGroup& G, const Subgroup& S,
                                          uint64_t seed = 0) {
    std::vector<int> rep;
    std::vector<char> done(static_cast<size_t>(G.order()), 0);
    std::mt19937_64 rng(seed);
    for (int g = 0; g < G.order(); ++g) {
        if (done[static_cast<size_t>(g)])
            continue;
        std::vector<int> coset;
        for (int s : S.members) {
            int x = G.mul(s, g);
            done[static_cast<size_t>(x)] = 1;
            coset.push_back(x);
        }
        std::sort(coset.begin(), coset.end());
        rep.push_back(seed == 0 ? coset.front()
                                : coset[static_cast<size_t>(rng() % coset.size())]);
    }
    return rep;
}

} // namespace detail

// Fills (SS1)-(SS3) on top of the Shoda verdicts and records Cen_G(eps).
// When all three hold, the centralizer must equal N_G(K) (asserted, not
// assumed) and e_idem = e(G,H,K) is attached as a verified central
// idempotent.
inline ShodaPairRecord is_strong_shoda_pair(const FiniteGroup& G, const Subgroup& H,
                                            const Subgroup& K) {
    ShodaPairRecord rec = is_shoda_pair(G, H, K);
    Subgroup N = normalizer(G, K);
    rec.ss1 = N.contains_all(H) && detail::normal_in(G, H, N);
    if (rec.ss1) {
        auto gen = cyclic_generator_mod(G, H, K);
        bool maximal = gen.has_value();
        if (maximal) {
            for (int x : N.members) {
                if (H.contains(x))
                    continue;
                if (K.contains(G.commutator(*gen, x))) { // <H/K, xK> would be abelian
                    maximal = false;
                    break;
                }
            }
        }
        rec.ss2 = maximal;
    }
    if (rec.s1) {
        std::vector<int> cen;
        for (int g = 0; g < G.order(); ++g)
            if (conjugate_by(rec.eps, g) == rec.eps)
                cen.push_back(g);
        rec.centralizer_of_epsilon = make_subgroup(G, std::move(cen));
        rec.ss3 = true;
        for (int g = 0; g < G.order() && rec.ss3; ++g) {
            if (N.contains(g))
                continue;
            if (!(rec.eps * conjugate_by(rec.eps, g)).is_zero())
                rec.ss3 = false;
        }
        if (rec.is_strong()) {
            invariant(rec.centralizer_of_epsilon.members == N.members,
                      "Cen_G(eps) != N_G(K) for a strong Shoda pair");
            QGElement e = QGElement::zero(G);
            for (int t : detail::right_transversal(G, rec.centralizer_of_epsilon))
                e += conjugate_by(rec.eps, t);
            invariant(is_idempotent(e), "e(G,H,K) is not idempotent");
            invariant(is_central(e), "e(G,H,K) is not central");
            rec.e_idem = std::move(e);
        }
    }
    return rec;
}

// e(G,H,K) = sum of eps(H,K)^t over a right transversal of Cen_G(eps);
// additionally checked against a second, randomized transversal.
inline QGElement e_from_pair(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    ShodaPairRecord rec = is_strong_shoda_pair(G, H, K);
    check(rec.is_strong(), errc::not_strong_pair, "(H,K) is not a strong Shoda pair");
    QGElement e2 = QGElement::zero(G);
    for (int t : detail::right_transversal(G, rec.centralizer_of_epsilon, 0x9e3779b97f4a7c15ull))
        e2 += conjugate_by(rec.eps, t);
    invariant(*rec.e_idem == e2, "e(G,H,K) depends on the transversal");
    return *rec.e_idem;
}

enum class PCIProvenance { abelian_epsilon, strong_shoda };

struct PCIEntry {
    QGElement idempotent;
    PCIProvenance provenance;
    Subgroup H, K; // source pair ((G,N) reads as H = G for the abelian route)
};

struct PCISet {
    std::vector<PCIEntry> idempotents;
    bool complete = false;                   // sum equals 1
    bool certified_strongly_monomial = false; // complete and count = d
};

namespace detail {

inline void verify_orthogonal(const std::vector<PCIEntry>& es) {
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j)
            invariant((es[i].idempotent * es[j].idempotent).is_zero(),
                      "primitive central idempotents are not orthogonal");
}

inline bool sums_to_one(const std::vector<PCIEntry>& es, const FiniteGroup& G) {
    QGElement sum = QGElement::zero(G);
    for (const auto& e : es)
        sum += e.idempotent;
    return sum == QGElement::one(G);
}

} // namespace detail

// Primitive central idempotents of QG for abelian G: one eps(G,N) per
// subgroup N with cyclic quotient.
inline PCISet pci_abelian(const FiniteGroup& G, int order_bound = FiniteGroup::kDefaultAssocBound) {
    check(G.is_abelian(), errc::not_abelian, "pci_abelian requires an abelian group");
    PCISet set;
    Subgroup full = full_subgroup(G);
    for (const auto& N : all_subgroups(G, order_bound)) {
        if (!cyclic_generator_mod(G, full, N).has_value())
            continue;
        set.idempotents.push_back(
            PCIEntry{epsilon(G, full, N), PCIProvenance::abelian_epsilon, full, N});
    }
    std::sort(set.idempotents.begin(), set.idempotents.end(),
              [](const PCIEntry& a, const PCIEntry& b) {
                  if (a.H.order() != b.H.order())
                      return a.H.order() < b.H.order();
                  if (a.K.order() != b.K.order())
                      return a.K.order() < b.K.order();
                  return std::tie(a.H.members, a.K.members) < std::tie(b.H.members, b.K.members);
              });
    detail::verify_orthogonal(set.idempotents);
    set.complete = detail::sums_to_one(set.idempotents, G);
    set.certified_strongly_monomial =
        set.complete &&
        static_cast<int>(set.idempotents.size()) == cyclic_subgroup_class_count(G);
    return set;
}

// Enumerates candidate pairs K normal-in H, keeps the strong Shoda pairs,
// computes e(G,H,K), deduplicates equal idempotents, and certifies
// completeness (sum = 1) plus the Artin count. An incomplete set is
// returned as-is with complete = false (the group need not be strongly
// monomial).
inline PCISet pci_strongly_monomial(const FiniteGroup& G,
                                    int order_bound = FiniteGroup::kDefaultAssocBound) {
    auto subgroups = all_subgroups(G, order_bound);
    PCISet set;
    std::map<std::map<int, Rat>, size_t> seen;
    for (const auto& K : subgroups) {
        Subgroup N = normalizer(G, K);
        for (const auto& H : subgroups) {
            if (!H.contains_all(K) || !N.contains_all(H))
                continue;
            if (H.order() % K.order() != 0)
                continue;
            // cheap filters first: SS1 and the cyclic part of SS2
            if (!detail::normal_in(G, H, N))
                continue;
            auto gen = cyclic_generator_mod(G, H, K);
            if (!gen)
                continue;
            ShodaPairRecord rec = is_strong_shoda_pair(G, H, K);
            if (!rec.is_strong())
                continue;
            const QGElement& e = *rec.e_idem;
            if (seen.emplace(e.terms(), set.idempotents.size()).second)
                set.idempotents.push_back(PCIEntry{e, PCIProvenance::strong_shoda, H, K});
        }
    }
    std::sort(set.idempotents.begin(), set.idempotents.end(),
              [](const PCIEntry& a, const PCIEntry& b) {
                  if (a.H.order() != b.H.order())
                      return a.H.order() < b.H.order();
                  if (a.K.order() != b.K.order())
                      return a.K.order() < b.K.order();
                  return std::tie(a.H.members, a.K.members) < std::tie(b.H.members, b.K.members);
              });
    detail::verify_orthogonal(set.idempotents);
    set.complete = detail::sums_to_one(set.idempotents, G);
    set.certified_strongly_monomial =
        set.complete &&
        static_cast<int>(set.idempotents.size()) == cyclic_subgroup_class_count(G);
    return set;
}

} // namespace grpalg
