#pragma once

#include <optional>
#include <set>

#include "grpalg/idempotents.hpp"

namespace grpalg {

enum class UnitKind {
    trivial,
    bass,
    alternating,
    bicyclic_left,
    bicyclic_right,
    generalized_bicyclic,
    central_averaged,
};

inline const char* unit_kind_name(UnitKind k) {
    switch (k) {
    case UnitKind::trivial: return "trivial";
    case UnitKind::bass: return "bass";
    case UnitKind::alternating: return "alternating";
    case UnitKind::bicyclic_left: return "bicyclic_left";
    case UnitKind::bicyclic_right: return "bicyclic_right";
    case UnitKind::generalized_bicyclic: return "generalized_bicyclic";
    case UnitKind::central_averaged: return "central_averaged";
    }
    return "?";
}

// A unit of ZG always ships with its verified inverse; "unit" is never
// inferred from context.
struct CertifiedUnit {
    ZGElement u;
    ZGElement u_inv;
    UnitKind kind;
    std::string params;
    bool normalized; // augmentation = +1
};

inline CertifiedUnit make_certified_unit(ZGElement u, ZGElement u_inv, UnitKind kind,
                                         std::string params) {
    const FiniteGroup& G = u.group();
    auto one = ZGElement::one(G);
    check(u * u_inv == one && u_inv * u == one, errc::not_a_unit,
          "inverse certification failed for " + params);
    Int aug = augmentation(u);
    invariant(aug == 1 || aug == -1, "unit with augmentation != +-1");
    bool normalized = aug == 1;
    return CertifiedUnit{std::move(u), std::move(u_inv), kind, std::move(params), normalized};
}

inline CertifiedUnit trivial_unit(const FiniteGroup& G, int g, bool negate = false) {
    ZGElement u = ZGElement::from_group_element(G, g);
    if (negate)
        u = -u;
    ZGElement v = ZGElement::from_group_element(G, G.inv(g));
    if (negate)
        v = -v;
    return make_certified_unit(std::move(u), std::move(v), UnitKind::trivial,
                               std::string(negate ? "-" : "") + G.label(g));
}

inline ElementOrderResult element_order_bruteforce(const CertifiedUnit& cu, long max_order) {
    return element_order_bruteforce(cu.u, cu.u_inv, max_order);
}

namespace detail {

// u_{k,m}(x) = (1 + x + ... + x^{k-1})^m + ((1-k^m)/n)(1 + x + ... + x^{n-1})
// for any unit x of finite order n in ZG; no reduction of k is applied here
// (the k = k' mod n identity is a theorem about this raw formula).
inline ZGElement bass_formula(const ZGElement& x, long n, long k, long m) {
    const FiniteGroup& G = x.group();
    check(k >= 1 && m >= 1 && n >= 1, errc::bad_parameters, "bass parameters must be positive");
    check(std::gcd(mod_pos(k, n) == 0 ? n : mod_pos(k, n), n) == 1, errc::bad_parameters,
          "bass unit requires gcd(k, n) = 1");
    Int km = int_pow(Int(k), static_cast<unsigned long>(m));
    Int rem = (km - 1) % n;
    check(sgn(rem) == 0, errc::bad_parameters, "bass unit requires k^m = 1 mod n");
    ZGElement partial = ZGElement::zero(G); // 1 + x + ... + x^{k-1}
    ZGElement tilde = ZGElement::zero(G);   // 1 + x + ... + x^{n-1}
    ZGElement p = ZGElement::one(G);
    for (long i = 0; i < std::max(k, n); ++i) {
        if (i < k)
            partial += p;
        if (i < n)
            tilde += p;
        p = p * x;
    }
    ZGElement u = power(partial, static_cast<unsigned long>(m));
    Int scale = (1 - km) / n;
    return u + scale * tilde;
}

} // namespace detail

// Bass unit u_{k,m}(g) with certified inverse u_{l,m}(g^k), kl = 1 mod |g|.
// k is reduced mod |g|; k = 1 mod |g| yields the trivial unit.
inline CertifiedUnit bass_unit(const FiniteGroup& G, int g, long k, long m) {
    long n = G.element_order(g);
    long k0 = mod_pos(k, n);
    if (n == 1)
        k0 = 1;
    check(std::gcd(k0 == 0 ? n : k0, n) == 1, errc::bad_parameters,
          "bass unit requires gcd(k, |g|) = 1");
    check(pow_mod(k0 == 0 ? 1 : k0, m, n) == 1 % n, errc::bad_parameters,
          "bass unit requires k^m = 1 mod |g|");
    std::string params = "u_{" + std::to_string(k0) + "," + std::to_string(m) + "}(" +
                         G.label(g) + ")";
    if (k0 == 1 || n == 1)
        return make_certified_unit(ZGElement::one(G), ZGElement::one(G), UnitKind::bass, params);
    ZGElement x = ZGElement::from_group_element(G, g);
    ZGElement u = detail::bass_formula(x, n, k0, m);
    long l = inverse_mod(k0, n);
    ZGElement xk = ZGElement::from_group_element(G, G.power(g, k0));
    ZGElement v = detail::bass_formula(xk, n, l, m);
    return make_certified_unit(std::move(u), std::move(v), UnitKind::bass, params);
}

// Torsion criterion: u_{k,m}(g) has finite order iff k = +-1 mod |g|.
inline bool bass_is_torsion(const FiniteGroup& G, int g, long k) {
    long n = G.element_order(g);
    long k0 = mod_pos(k, n);
    check(std::gcd(k0 == 0 ? n : k0, n) == 1, errc::bad_parameters,
          "bass torsion test requires gcd(k, |g|) = 1");
    if (n == 1)
        return true;
    return k0 == 1 % n || k0 == mod_pos(-1, n);
}

// Alternating unit u_{k,m}(-g) for g of odd order; -g has order 2|g| and
// the correction term vanishes.
inline CertifiedUnit alternating_unit(const FiniteGroup& G, int g, long k, long m) {
    long n = G.element_order(g);
    check(n % 2 == 1, errc::even_order, "alternating units require g of odd order");
    long N = 2 * n; // order of -g
    long k0 = mod_pos(k, N);
    check(std::gcd(k0 == 0 ? N : k0, N) == 1, errc::bad_parameters,
          "alternating unit requires gcd(k, 2|g|) = 1");
    check(pow_mod(k0 == 0 ? 1 : k0, m, N) == 1 % N, errc::bad_parameters,
          "alternating unit requires k^m = 1 mod 2|g|");
    std::string params = "u_{" + std::to_string(k0) + "," + std::to_string(m) + "}(-" +
                         G.label(g) + ")";
    if (k0 == 1)
        return make_certified_unit(ZGElement::one(G), ZGElement::one(G), UnitKind::alternating,
                                   params);
    ZGElement x = -ZGElement::from_group_element(G, g);
    ZGElement u = detail::bass_formula(x, N, k0, m);
    long l = inverse_mod(k0, N);
    ZGElement xk = power(x, static_cast<unsigned long>(k0));
    ZGElement v = detail::bass_formula(xk, N, l, m);
    return make_certified_unit(std::move(u), std::move(v), UnitKind::alternating, params);
}

// Trivial exactly when h normalizes <g>.
inline bool bicyclic_is_trivial(const FiniteGroup& G, int h, int g) {
    return normalizer(G, subgroup_closure(G, {g})).contains(h);
}

// b(h, g~) = 1 + (1-g) h g~, with inverse 1 - (1-g) h g~.
inline CertifiedUnit bicyclic_left(const FiniteGroup& G, int h, int g) {
    ZGElement tilde = group_sum_tilde(G, subgroup_closure(G, {g}));
    ZGElement eta = (ZGElement::one(G) - ZGElement::from_group_element(G, g)) *
                    ZGElement::from_group_element(G, h) * tilde;
    CertifiedUnit cu = make_certified_unit(ZGElement::one(G) + eta, ZGElement::one(G) - eta,
                                           UnitKind::bicyclic_left,
                                           "b(" + G.label(h) + ", ~" + G.label(g) + ")");
    invariant(bicyclic_is_trivial(G, h, g) == cu.u.is_one(),
              "bicyclic triviality disagrees with the normalizer criterion");
    return cu;
}

// b(g~, h) = 1 + g~ h (1-g).
inline CertifiedUnit bicyclic_right(const FiniteGroup& G, int g, int h) {
    ZGElement tilde = group_sum_tilde(G, subgroup_closure(G, {g}));
    ZGElement eta = tilde * ZGElement::from_group_element(G, h) *
                    (ZGElement::one(G) - ZGElement::from_group_element(G, g));
    CertifiedUnit cu = make_certified_unit(ZGElement::one(G) + eta, ZGElement::one(G) - eta,
                                           UnitKind::bicyclic_right,
                                           "b(~" + G.label(g) + ", " + G.label(h) + ")");
    invariant(bicyclic_is_trivial(G, h, g) == cu.u.is_one(),
              "bicyclic triviality disagrees with the normalizer criterion");
    return cu;
}

enum class Side { left, right };

// Generalized bicyclic unit from an idempotent of QG with its n_e:
// b(x,e) = 1 + n_e^2 (1-e) x e  (left)  or  1 + n_e^2 e x (1-e)  (right).
inline CertifiedUnit generalized_bicyclic(const IdempotentRecord& rec, int x, Side side) {
    const FiniteGroup& G = rec.element.group();
    check(is_idempotent(rec.element), errc::not_idempotent, "record element is not idempotent");
    QGElement e = rec.element;
    QGElement xe = QGElement::from_group_element(G, x);
    Rat ne2(rec.n_e * rec.n_e);
    QGElement eta_q = side == Side::left ? ne2 * ((QGElement::one(G) - e) * xe * e)
                                         : ne2 * (e * xe * (QGElement::one(G) - e));
    invariant((eta_q * eta_q).is_zero(), "generalized bicyclic nilpotent part has nonzero square");
    ZGElement eta = to_integer(eta_q);
    std::string params = side == Side::left ? "b(" + G.label(x) + ", e)" : "b(e, " + G.label(x) + ")";
    return make_certified_unit(ZGElement::one(G) + eta, ZGElement::one(G) - eta,
                               UnitKind::generalized_bicyclic, params);
}

// Trace certificate for a free pair of unipotents: a^2 = b^2 = 0 and
// |T(ab)| >= 2 T(1) = 2 certify that <1+a, 1+b> is free of rank 2.
struct FreePairCertificate {
    ZGElement a;
    ZGElement b;
    Rat trace_value;
    Rat threshold; // 2 T(1) = 2
};

inline FreePairCertificate free_pair_certificate(const ZGElement& a, const ZGElement& b) {
    check((a * a).is_zero(), errc::not_square_zero, "first element does not square to zero");
    check((b * b).is_zero(), errc::not_square_zero, "second element does not square to zero");
    Rat t(trace_T(a * b));
    Rat threshold = rat_of(2);
    check(abs(t) >= threshold, errc::certificate_below_threshold,
          "|T(ab)| = " + rat_str(abs(t)) + " is below 2 T(1) = 2");
    return FreePairCertificate{a, b, t, threshold};
}

struct MarciniakSehgalPair {
    CertifiedUnit u;
    CertifiedUnit u_star;
    FreePairCertificate certificate;
};

// For a nontrivial bicyclic unit u, the pair (u, u*) generates a free group
// of rank 2; the attached certificate has T(ab) = 2|h| exactly.
inline MarciniakSehgalPair marciniak_sehgal_pair(const FiniteGroup& G, int g, int h,
                                                 Side side = Side::left) {
    check(!bicyclic_is_trivial(G, g, h), errc::trivial_bicyclic,
          "bicyclic unit b with middle " + G.label(g) + " and tilde " + G.label(h) +
              " is trivial");
    CertifiedUnit cu = side == Side::left ? bicyclic_left(G, g, h) : bicyclic_right(G, h, g);
    ZGElement a = cu.u - ZGElement::one(G);
    ZGElement b = star(a);
    FreePairCertificate cert = free_pair_certificate(a, b);
    invariant(cert.trace_value == rat_of(2 * G.element_order(h)),
              "Marciniak-Sehgal trace is not 2|h|");
    CertifiedUnit ustar = make_certified_unit(star(cu.u), star(cu.u_inv), cu.kind,
                                              cu.params + "*");
    return MarciniakSehgalPair{std::move(cu), std::move(ustar), std::move(cert)};
}

// Generator emission for the finite-index theorem: all Bass units with
// 1 < k < |g| and m = ord(k mod |g|), plus all nontrivial bicyclic units of
// both types. Deduplicated (a unit and its inverse count once). No
// finite-index claim is attached.
inline std::vector<CertifiedUnit> jespers_leal_generators(const FiniteGroup& G) {
    std::vector<CertifiedUnit> out;
    // dedup per family (a unit and its inverse count once); the left and
    // right families can overlap as ring elements but are emitted as
    // separate generator descriptions
    std::set<std::map<int, Int>> seen_bass, seen_left, seen_right;
    auto emit = [&](std::set<std::map<int, Int>>& seen, CertifiedUnit cu) {
        if (cu.u.is_one())
            return;
        if (seen.count(cu.u.terms()))
            return;
        seen.insert(cu.u.terms());
        seen.insert(cu.u_inv.terms());
        out.push_back(std::move(cu));
    };
    for (int g = 0; g < G.order(); ++g) {
        long n = G.element_order(g);
        for (long k = 2; k < n; ++k) {
            if (std::gcd(k, n) != 1)
                continue;
            emit(seen_bass, bass_unit(G, g, k, multiplicative_order(k, n)));
        }
    }
    for (int g = 0; g < G.order(); ++g) {
        for (int h = 0; h < G.order(); ++h) {
            if (bicyclic_is_trivial(G, h, g))
                continue;
            emit(seen_left, bicyclic_left(G, h, g));
            emit(seen_right, bicyclic_right(G, g, h));
        }
    }
    return out;
}

enum class JPVerdict { applies, not_applicable };

// Obstruction to finite index for 2-groups mapping onto D8: the verdict is
// APPLIES when some epimorphism has at least two of b, ab, a^2 b, a^3 b
// without order-2 preimages.
struct JespersParmenterResult {
    JPVerdict verdict = JPVerdict::not_applicable;
    std::optional<Subgroup> kernel;
    std::vector<int> lacking; // indices of D8 elements lacking order-2 preimages
};

inline JespersParmenterResult jespers_parmenter_obstruction(const FiniteGroup& G) {
    JespersParmenterResult res;
    int n = G.order();
    if (n < 8 || (n & (n - 1)) != 0)
        return res; // hypothesis needs a 2-group
    for (auto& epi : find_epimorphisms_onto_d8(G)) {
        std::vector<int> lacking;
        for (int target = 4; target <= 7; ++target) { // b, ab, a^2b, a^3b in catalog D8
            bool found = false;
            for (int x = 0; x < n && !found; ++x)
                found = epi.image[static_cast<size_t>(x)] == target && G.element_order(x) == 2;
            if (!found)
                lacking.push_back(target);
        }
        if (lacking.size() >= 2) {
            res.verdict = JPVerdict::applies;
            res.kernel = std::move(epi.kernel);
            res.lacking = std::move(lacking);
            return res;
        }
    }
    return res;
}

// Search for a non-central idempotent of the form g^ e inside QGe. Returns
// the first hit in canonical order; empty signals a fixed-point-free action
// on that component.
inline std::optional<std::pair<int, QGElement>> find_noncentral_idempotent(const FiniteGroup& G,
                                                                           const QGElement& e) {
    for (int g = 0; g < G.order(); ++g) {
        QGElement f = group_sum_hat(G, subgroup_closure(G, {g})) * e;
        if (f.is_zero() || f == e)
            continue;
        for (int x = 0; x < G.order(); ++x) {
            QGElement xe = QGElement::from_group_element(G, x) * e;
            if (f * xe != xe * f)
                return std::make_pair(g, f);
        }
    }
    return std::nullopt;
}

} // namespace grpalg
