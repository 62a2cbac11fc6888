#pragma once

#include "grpalg/central_units.hpp"
#include "grpalg/hilbert.hpp"
#include "grpalg/idempotents.hpp"

namespace grpalg {

// The center of a crossed-product component: the subfield of Q(xi_h) fixed
// by the Galois image of the action.
struct CenterDesc {
    int conductor = 1;
    std::vector<int> galois_image; // subgroup of (Z/h)*, sorted, 1 included
    int degree = 1;                // phi(h) / |image|

    bool is_rational() const { return degree == 1; }

    // Squarefree d with the field equal to Q(sqrt d), for the conductors the
    // classifier needs; 0 encodes "not a known quadratic".
    long quadratic_discriminant() const {
        if (degree != 2)
            return 0;
        if (conductor == 3 || conductor == 6)
            return -3;
        if (conductor == 4)
            return -1;
        if (conductor == 8) {
            if (galois_image == std::vector<int>{1, 3})
                return -2;
            if (galois_image == std::vector<int>{1, 5})
                return -1;
            if (galois_image == std::vector<int>{1, 7})
                return 2;
        }
        if (conductor == 5 && galois_image == std::vector<int>{1, 4})
            return 5;
        return 0;
    }

    std::string display() const {
        if (degree == 1)
            return "Q";
        long d = quadratic_discriminant();
        if (d == -1)
            return "Q(i)";
        if (d != 0)
            return "Q(sqrt" + std::string(d < 0 ? "-" : "") + std::to_string(std::abs(d)) + ")";
        if (static_cast<long>(galois_image.size()) == 1)
            return cyclotomic_field_display(conductor);
        if (galois_image == std::vector<int>{1, conductor - 1}) // maximal real subfield
            return "Q(xi_" + std::to_string(conductor) + "+xi_" + std::to_string(conductor) +
                   "^-1)";
        std::string s = "Fix(xi_" + std::to_string(conductor) + ";{";
        for (size_t i = 0; i < galois_image.size(); ++i)
            s += (i ? "," : "") + std::to_string(galois_image[i]);
        return s + "})";
    }

    static std::string cyclotomic_field_display(int h) {
        if (h <= 2)
            return "Q";
        if (h == 3 || h == 6)
            return "Q(sqrt-3)";
        if (h == 4)
            return "Q(i)";
        return "Q(xi_" + std::to_string(h) + ")";
    }
};

// Symbolic Wedderburn component M_n(Q(xi_h) * (N/H)) attached to a strong
// Shoda pair: the Galois action, the 2-cocycle twisting (as exponents of
// xi_h) and the resulting center and dimension.
struct SimpleComponentDescriptor {
    Subgroup H, K, N;
    int n = 1;              // [G:N], matrix size over the crossed product
    int h = 1;              // [H:K]
    int quotient_order = 1; // [N:H]
    std::vector<int> coset_reps;            // transversal of H in N, identity first
    std::vector<int> action;                // residue i mod h per coset, action[c]: xi -> xi^i
    std::vector<std::vector<int>> twisting; // f(a,b) as exponents mod h
    CenterDesc center;
    long dimension = 1; // n^2 * [N:H] * phi(h)
    bool faithful = false;
    QGElement idempotent;
};

inline SimpleComponentDescriptor component_from_pair(const FiniteGroup& G, const Subgroup& H,
                                                     const Subgroup& K) {
    ShodaPairRecord rec = is_strong_shoda_pair(G, H, K);
    check(rec.is_strong(), errc::not_strong_pair, "(H,K) is not a strong Shoda pair");
    Subgroup N = normalizer(G, K);
    invariant(rec.centralizer_of_epsilon.members == N.members, "Cen(eps) != N_G(K)");

    SimpleComponentDescriptor d{H,
                                K,
                                N,
                                G.order() / N.order(),
                                H.order() / K.order(),
                                N.order() / H.order(),
                                {},
                                {},
                                {},
                                CenterDesc{},
                                1,
                                false,
                                *rec.e_idem};
    int x = *cyclic_generator_mod(G, H, K);

    // transversal of H in N; the identity's coset is represented by the
    // identity so that u_1 = 1 and f(1,-) = f(-,1) = 0
    std::vector<char> covered(static_cast<size_t>(G.order()), 0);
    std::vector<int> reps;
    for (int a : N.members) {
        if (covered[static_cast<size_t>(a)])
            continue;
        bool identity_coset = false;
        std::vector<int> coset;
        for (int hh : H.members) {
            int y = G.mul(hh, a);
            covered[static_cast<size_t>(y)] = 1;
            coset.push_back(y);
            if (y == G.identity())
                identity_coset = true;
        }
        std::sort(coset.begin(), coset.end());
        reps.push_back(identity_coset ? G.identity() : coset.front());
    }
    d.coset_reps = reps;
    invariant(static_cast<int>(reps.size()) == d.quotient_order, "bad transversal of H in N");

    auto coset_of = [&](int y) {
        for (size_t c = 0; c < reps.size(); ++c) {
            // y in H * reps[c] iff y * reps[c]^{-1} in H
            if (H.contains(G.mul(y, G.inv(reps[static_cast<size_t>(c)]))))
                return static_cast<int>(c);
        }
        fail(errc::invariant_violation, "element escapes the coset decomposition");
    };

    // exponent of x mod K: z = x^j k; returns j in 0..h-1
    auto log_x = [&](int z) {
        int p = G.identity();
        for (int j = 0; j < d.h; ++j) {
            if (K.contains(G.mul(G.inv(p), z)))
                return j;
            p = G.mul(p, x);
        }
        fail(errc::invariant_violation, "element is not in <x>K");
    };

    // action: y x y^{-1} = x^i mod K
    d.action.resize(reps.size());
    for (size_t c = 0; c < reps.size(); ++c) {
        int y = reps[c];
        int conj = G.mul(G.mul(y, x), G.inv(y));
        d.action[c] = log_x(conj);
    }
    // injective homomorphism into (Z/h)^x
    for (size_t a = 0; a < reps.size(); ++a) {
        invariant(std::gcd(static_cast<long>(d.action[a] == 0 ? d.h : d.action[a]),
                           static_cast<long>(d.h)) == 1,
                  "action residue is not a unit mod h");
        for (size_t b = 0; b < reps.size(); ++b) {
            int ab = coset_of(G.mul(reps[a], reps[b]));
            invariant((d.action[a] * d.action[b]) % d.h == d.action[static_cast<size_t>(ab)] % d.h,
                      "action is not a homomorphism");
        }
        if (d.action[a] % d.h == 1 % d.h)
            invariant(reps[a] == G.identity() || d.h <= 2,
                      "action is not injective (SS2 must force faithfulness)");
    }

    // twisting: u_a u_b = x^j u_{ab} mod K
    d.twisting.assign(reps.size(), std::vector<int>(reps.size(), 0));
    for (size_t a = 0; a < reps.size(); ++a)
        for (size_t b = 0; b < reps.size(); ++b) {
            int prod = G.mul(reps[a], reps[b]);
            int ab = coset_of(prod);
            int z = G.mul(prod, G.inv(reps[static_cast<size_t>(ab)]));
            d.twisting[a][b] = log_x(z);
        }
    // 2-cocycle identity: f(a,b) + f(ab,c) = i_a f(b,c) + f(a,bc) mod h
    for (size_t a = 0; a < reps.size(); ++a)
        for (size_t b = 0; b < reps.size(); ++b)
            for (size_t c = 0; c < reps.size(); ++c) {
                int ab = coset_of(G.mul(reps[a], reps[b]));
                int bc = coset_of(G.mul(reps[b], reps[c]));
                long lhs = d.twisting[a][b] + d.twisting[static_cast<size_t>(ab)][c];
                long rhs = static_cast<long>(d.action[a]) * d.twisting[b][c] +
                           d.twisting[a][static_cast<size_t>(bc)];
                invariant(mod_pos(lhs, d.h) == mod_pos(rhs, d.h), "twisting violates the cocycle identity");
            }

    std::vector<int> image;
    for (size_t c = 0; c < reps.size(); ++c)
        image.push_back(d.h == 1 ? 1 : mod_pos(d.action[c], d.h));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    long phi_h = euler_phi(d.h);
    d.center = CenterDesc{d.h, image, static_cast<int>(phi_h / static_cast<long>(image.size()))};

    d.dimension = static_cast<long>(d.n) * d.n * d.quotient_order * phi_h;
    Rat dim_check = rat_of(G.order()) * trace_T(d.idempotent);
    invariant(dim_check == rat_of(d.dimension),
              "descriptor dimension disagrees with |G| T(e)");

    auto stab = idempotent_record(d.idempotent).stabilizer;
    d.faithful = stab.is_trivial();
    return d;
}

// Perlis-Walker data for abelian G: QG = prod over d | |G| of Q(xi_d)^{k_d}
// with k_d the number of cyclic subgroups of order d.
inline std::vector<std::pair<long, long>> perlis_walker(const FiniteGroup& G) {
    check(G.is_abelian(), errc::not_abelian, "perlis_walker requires an abelian group");
    std::set<std::vector<int>> cyclics;
    for (int g = 0; g < G.order(); ++g)
        cyclics.insert(subgroup_closure(G, {g}).members);
    std::map<long, long> kd;
    for (const auto& mem : cyclics)
        ++kd[static_cast<long>(mem.size())];
    long total = 0;
    std::vector<std::pair<long, long>> out;
    for (auto [dd, k] : kd) {
        out.emplace_back(dd, k);
        total += k * euler_phi(dd);
    }
    invariant(total == G.order(), "Perlis-Walker dimensions do not sum to |G|");
    return out;
}

enum class ComponentKind {
    field,
    matrix_over_field,
    quaternion_division,
    quaternion_split, // (a,b/Q) that splits; ring-isomorphic to M_2(Q)
    crossed_unresolved,
};

enum class Exceptional { no, type1, type2, unknown };
enum class Tri { no, yes, unknown };

inline const char* tri_name(Tri t) {
    switch (t) {
    case Tri::no: return "false";
    case Tri::yes: return "true";
    case Tri::unknown: return "unknown";
    }
    return "?";
}

inline const char* exceptional_name(Exceptional e) {
    switch (e) {
    case Exceptional::no: return "no";
    case Exceptional::type1: return "type1";
    case Exceptional::type2: return "type2";
    case Exceptional::unknown: return "unknown";
    }
    return "?";
}

struct QuaternionParams {
    Rat a, b; // center Q; normalized with a >= b
};

struct ComponentClassification {
    ComponentKind kind = ComponentKind::crossed_unresolved;
    int matrix_size = 1; // over the displayed base ring
    CenterDesc base;
    std::optional<QuaternionParams> quat;
    Exceptional exceptional = Exceptional::unknown;
    Tri totally_definite = Tri::unknown;
    std::string display;
};

namespace detail {

inline bool twisting_is_zero(const SimpleComponentDescriptor& d) {
    for (const auto& row : d.twisting)
        for (int v : row)
            if (v % d.h != 0)
                return false;
    return true;
}

inline Exceptional matrix_exceptional(int size, const CenterDesc& base) {
    if (size != 2)
        return Exceptional::no;
    if (base.is_rational())
        return Exceptional::type2;
    long disc = base.quadratic_discriminant();
    if (disc == -1 || disc == -2 || disc == -3)
        return Exceptional::type2;
    if (disc != 0 || base.degree > 2)
        return Exceptional::no; // real quadratic or higher degree
    return Exceptional::unknown; // quadratic center we failed to identify
}

inline std::string quaternion_display(const QuaternionParams& q) {
    if (q.a == rat_of(-1) && q.b == rat_of(-1))
        return "H(Q)";
    return "(" + rat_str(q.a) + "," + rat_str(q.b) + "/Q)";
}

} // namespace detail

inline ComponentClassification classify_component(const SimpleComponentDescriptor& d) {
    ComponentClassification c;
    long phi_h = euler_phi(d.h);
    if (d.quotient_order == 1) {
        CenterDesc full{d.h, {1}, static_cast<int>(phi_h)};
        if (d.n == 1) {
            c.kind = ComponentKind::field;
            c.matrix_size = 1;
            c.base = full;
            c.exceptional = Exceptional::no;
            c.totally_definite = Tri::no;
            c.display = CenterDesc::cyclotomic_field_display(d.h);
            return c;
        }
        c.kind = ComponentKind::matrix_over_field;
        c.matrix_size = d.n;
        c.base = full;
        c.exceptional = detail::matrix_exceptional(d.n, full);
        c.totally_definite = Tri::no;
        c.display = "M" + std::to_string(d.n) + "(" + CenterDesc::cyclotomic_field_display(d.h) + ")";
        return c;
    }
    if (detail::twisting_is_zero(d)) {
        // trivial cocycle splits the crossed product over its center
        c.kind = ComponentKind::matrix_over_field;
        c.matrix_size = d.n * d.quotient_order;
        c.base = d.center;
        c.exceptional = detail::matrix_exceptional(c.matrix_size, c.base);
        c.totally_definite = Tri::no;
        c.display = "M" + std::to_string(c.matrix_size) + "(" + d.center.display() + ")";
        return c;
    }
    if (d.quotient_order == 2 && phi_h == 2) {
        // cyclic algebra (Q(xi_h)/Q, conj, c) = (alpha, c / Q)
        Rat alpha = rat_of(d.h == 4 ? -1 : -3);
        size_t b = d.coset_reps[0] == d.H.parent->identity() ? 1 : 0;
        int j = d.twisting[b][b];
        invariant(mod_pos(2L * j, d.h) == 0, "u_b^2 is not fixed by the action");
        Rat cc = j % d.h == 0 ? rat_of(1) : rat_of(-1);
        QuaternionParams qp{std::max(alpha, cc), std::min(alpha, cc)};
        bool splits = quaternion_splits_over_rationals(alpha, cc);
        if (splits) {
            c.kind = ComponentKind::quaternion_split;
            c.matrix_size = 2 * d.n;
            c.base = CenterDesc{1, {1}, 1};
            c.quat = qp;
            c.exceptional = detail::matrix_exceptional(c.matrix_size, c.base);
            c.totally_definite = Tri::no;
            c.display = "M" + std::to_string(c.matrix_size) + "(Q)";
            return c;
        }
        c.kind = ComponentKind::quaternion_division;
        c.matrix_size = d.n;
        c.base = CenterDesc{1, {1}, 1};
        c.quat = qp;
        c.totally_definite = (sgn(qp.a) < 0 && sgn(qp.b) < 0) ? Tri::yes : Tri::no;
        if (d.n == 1) {
            c.exceptional =
                c.totally_definite == Tri::yes ? Exceptional::no : Exceptional::type1;
        } else if (d.n == 2) {
            bool listed = (qp.a == rat_of(-1) && (qp.b == rat_of(-1) || qp.b == rat_of(-3))) ||
                          (qp.a == rat_of(-2) && qp.b == rat_of(-5));
            c.exceptional = listed && c.totally_definite == Tri::yes ? Exceptional::type2
                                                                     : Exceptional::unknown;
        } else {
            c.exceptional = Exceptional::no;
        }
        std::string core = detail::quaternion_display(qp);
        c.display = d.n == 1 ? core : "M" + std::to_string(d.n) + "(" + core + ")";
        return c;
    }
    c.kind = ComponentKind::crossed_unresolved;
    c.matrix_size = d.n;
    c.base = d.center;
    c.exceptional = Exceptional::unknown;
    c.totally_definite = Tri::unknown;
    std::string core = "Q(xi_" + std::to_string(d.h) + ")*C" + std::to_string(d.quotient_order);
    c.display = d.n == 1 ? core : "M" + std::to_string(d.n) + "(" + core + ")";
    return c;
}

struct DecompositionEntry {
    SimpleComponentDescriptor desc;
    ComponentClassification cls;
};

struct Decomposition {
    PCISet pci;
    std::vector<DecompositionEntry> entries;
};

// One entry per primitive central idempotent; requires a complete PCI set
// and asserts the Wedderburn dimension count.
inline Decomposition decomposition_report(const FiniteGroup& G,
                                          int order_bound = FiniteGroup::kDefaultAssocBound) {
    Decomposition dec{pci_strongly_monomial(G, order_bound), {}};
    check(dec.pci.complete, errc::incomplete_pci,
          "strong Shoda pairs do not exhaust QG for this group");
    long total = 0;
    for (const auto& entry : dec.pci.idempotents) {
        SimpleComponentDescriptor d = component_from_pair(G, entry.H, entry.K);
        invariant(d.idempotent == entry.idempotent, "descriptor idempotent mismatch");
        ComponentClassification cls = classify_component(d);
        total += d.dimension;
        dec.entries.push_back(DecompositionEntry{std::move(d), std::move(cls)});
    }
    invariant(total == G.order(), "component dimensions do not sum to |G|");
    return dec;
}

inline std::vector<std::string> component_displays(const Decomposition& dec) {
    std::vector<std::string> out;
    for (const auto& e : dec.entries)
        out.push_back(e.cls.display);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- structure predicates --------------------------------------------------

namespace detail {

inline bool all_cyclic_subgroups_normal(const FiniteGroup& G) {
    for (int g = 0; g < G.order(); ++g)
        if (!is_normal(G, subgroup_closure(G, {g})))
            return false;
    return true;
}

inline bool is_power_of_two(long n) { return n >= 1 && (n & (n - 1)) == 0; }

} // namespace detail

// Finite unit group: G abelian of exponent dividing 4 or 6, or a
// Hamiltonian 2-group (Q8 x elementary abelian 2-group).
inline Tri higman_finite_units(const FiniteGroup& G) {
    if (G.is_abelian()) {
        long e = G.exponent();
        return (4 % e == 0 || 6 % e == 0) ? Tri::yes : Tri::no;
    }
    bool hamiltonian_two = detail::is_power_of_two(G.order()) &&
                           detail::all_cyclic_subgroups_normal(G);
    return hamiltonian_two ? Tri::yes : Tri::no;
}

// U(ZG) virtually a free product of abelian groups: G abelian, Q8 x C2^n,
// or one of D6, D8, Q12, P16.
inline Tri virtually_free_product_abelian(const FiniteGroup& G) {
    if (G.is_abelian())
        return Tri::yes;
    if (detail::is_power_of_two(G.order()) && detail::all_cyclic_subgroups_normal(G))
        return Tri::yes; // Hamiltonian 2-group = Q8 x C2^n
    for (const char* name : {"D6", "D8", "Q12", "P16"}) {
        auto H = catalog(name);
        if (G.order() == H.order() && is_isomorphic(G, H))
            return Tri::yes;
    }
    return Tri::no;
}

// U(ZG) virtually a direct product of free-by-free groups: every component
// a field, a totally definite quaternion algebra, or M_2(K) with K one of
// Q(i), Q(sqrt-2), Q(sqrt-3).
inline Tri virtually_free_by_free(const Decomposition& dec) {
    bool unknown = false;
    for (const auto& e : dec.entries) {
        switch (e.cls.kind) {
        case ComponentKind::field:
            continue;
        case ComponentKind::quaternion_division:
            if (e.cls.matrix_size == 1 && e.cls.totally_definite == Tri::yes)
                continue;
            return Tri::no;
        case ComponentKind::matrix_over_field:
        case ComponentKind::quaternion_split: {
            long disc = e.cls.base.quadratic_discriminant();
            if (e.cls.matrix_size == 2 && (disc == -1 || disc == -2 || disc == -3))
                continue;
            return Tri::no;
        }
        case ComponentKind::crossed_unresolved:
            unknown = true;
            continue;
        }
    }
    return unknown ? Tri::unknown : Tri::yes;
}

inline Tri has_exceptional(const Decomposition& dec) {
    bool unknown = false;
    for (const auto& e : dec.entries) {
        if (e.cls.exceptional == Exceptional::type1 || e.cls.exceptional == Exceptional::type2)
            return Tri::yes;
        if (e.cls.exceptional == Exceptional::unknown)
            unknown = true;
    }
    return unknown ? Tri::unknown : Tri::no;
}

// HFA predicate: cut and no exceptional components.
inline Tri hfa(const FiniteGroup& G, const Decomposition& dec) {
    if (!is_cut(G))
        return Tri::no;
    Tri exc = has_exceptional(dec);
    if (exc == Tri::yes)
        return Tri::no;
    if (exc == Tri::no)
        return Tri::yes;
    return Tri::unknown;
}

inline Tri virtually_free_by_free(const FiniteGroup& G) {
    return virtually_free_by_free(decomposition_report(G));
}

inline Tri has_exceptional(const FiniteGroup& G) { return has_exceptional(decomposition_report(G)); }

inline Tri hfa(const FiniteGroup& G) { return hfa(G, decomposition_report(G)); }

} // namespace grpalg
