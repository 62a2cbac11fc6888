#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grpalg/error.hpp"
#include "grpalg/numtheory.hpp"

namespace grpalg {

// A finite group as a validated multiplication table. Immutable after
// construction; elements are indices 0..order-1.
class FiniteGroup {
  public:
    static constexpr int kDefaultAssocBound = 64;
    static constexpr int kDefaultMaxOrder = 512;

    static FiniteGroup from_table(int order, const std::vector<std::vector<int>>& table,
                                  std::vector<std::string> labels = {},
                                  int assoc_exhaustive_bound = kDefaultAssocBound) {
        check(order >= 1, errc::bad_input, "group order must be positive");
        check(static_cast<int>(table.size()) == order, errc::bad_input,
              "table row count does not match order");
        FiniteGroup G;
        G.order_ = order;
        G.table_.assign(static_cast<size_t>(order) * order, -1);
        for (int i = 0; i < order; ++i) {
            check(static_cast<int>(table[i].size()) == order, errc::bad_input,
                  "table row " + std::to_string(i) + " has wrong length");
            for (int j = 0; j < order; ++j) {
                int v = table[i][j];
                check(v >= 0 && v < order, errc::bad_input,
                      "table entry out of range at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
                G.table_[static_cast<size_t>(i) * order + j] = v;
            }
        }
        G.validate_latin_square();
        G.find_identity();
        G.compute_inverses();
        G.validate_associativity(assoc_exhaustive_bound);
        if (labels.empty()) {
            G.labels_.resize(order);
            for (int i = 0; i < order; ++i)
                G.labels_[i] = (i == G.identity_) ? "1" : "g" + std::to_string(i);
        } else {
            check(static_cast<int>(labels.size()) == order, errc::bad_input,
                  "label count does not match order");
            G.labels_ = std::move(labels);
        }
        return G;
    }

    // Closure of permutation generators on {0..degree-1}; elements are
    // ordered lexicographically by image tuple (the identity comes first).
    static FiniteGroup from_permutation_images(int degree, std::vector<std::vector<int>> gens,
                                               int max_order = kDefaultMaxOrder) {
        check(degree >= 1, errc::bad_input, "degree must be positive");
        std::vector<int> id(degree);
        for (int i = 0; i < degree; ++i)
            id[i] = i;
        for (const auto& p : gens) {
            check(static_cast<int>(p.size()) == degree, errc::bad_input,
                  "generator degree mismatch");
            std::vector<char> seen(degree, 0);
            for (int v : p) {
                check(v >= 0 && v < degree && !seen[v], errc::bad_input,
                      "generator is not a permutation");
                seen[v] = 1;
            }
        }
        std::set<std::vector<int>> elems;
        elems.insert(id);
        for (auto& p : gens)
            elems.insert(p);
        std::vector<std::vector<int>> frontier(elems.begin(), elems.end());
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& x : frontier) {
                for (const auto& g : gens) {
                    std::vector<int> xg(degree), gx(degree);
                    for (int i = 0; i < degree; ++i) {
                        xg[i] = x[g[i]];
                        gx[i] = g[x[i]];
                    }
                    for (auto& prod : {xg, gx}) {
                        if (elems.insert(prod).second) {
                            check(static_cast<int>(elems.size()) <= max_order,
                                  errc::closure_too_large,
                                  "permutation closure exceeds max order " +
                                      std::to_string(max_order));
                            next.push_back(prod);
                        }
                    }
                }
            }
            frontier = std::move(next);
        }
        std::vector<std::vector<int>> sorted(elems.begin(), elems.end());
        int n = static_cast<int>(sorted.size());
        std::map<std::vector<int>, int> index;
        for (int i = 0; i < n; ++i)
            index[sorted[i]] = i;
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<int> prod(degree);
                for (int k = 0; k < degree; ++k)
                    prod[k] = sorted[i][sorted[j][k]];
                table[i][j] = index.at(prod);
            }
        std::vector<std::string> labels(n);
        for (int i = 0; i < n; ++i)
            labels[i] = cycle_label(sorted[i]);
        return from_table(n, table, std::move(labels));
    }

    static FiniteGroup from_permutation_cycles(int degree,
                                               const std::vector<std::vector<std::vector<int>>>& gens,
                                               int max_order = kDefaultMaxOrder) {
        std::vector<std::vector<int>> images;
        for (const auto& cycles : gens) {
            std::vector<int> img(degree);
            for (int i = 0; i < degree; ++i)
                img[i] = i;
            for (const auto& cyc : cycles) {
                for (size_t k = 0; k < cyc.size(); ++k) {
                    int from = cyc[k];
                    int to = cyc[(k + 1) % cyc.size()];
                    check(from >= 0 && from < degree && to >= 0 && to < degree, errc::bad_input,
                          "cycle point out of range");
                    img[from] = to;
                }
            }
            images.push_back(std::move(img));
        }
        return from_permutation_images(degree, std::move(images), max_order);
    }

    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
    int inv(int a) const { return inverse_[static_cast<size_t>(a)]; }
    // g^{-1} x g
    int conjugate(int x, int g) const { return mul(mul(inv(g), x), g); }
    // (a,b) = a^{-1} b^{-1} a b
    int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

    int power(int g, long e) const {
        int r = identity_;
        long n = element_order(g);
        e = mod_pos(e, n);
        int base = g;
        while (e > 0) {
            if (e & 1)
                r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    int element_order(int g) const {
        int x = g, n = 1;
        while (x != identity_) {
            x = mul(x, g);
            ++n;
        }
        return n;
    }

    long exponent() const {
        long e = 1;
        for (int g = 0; g < order_; ++g)
            e = std::lcm(e, static_cast<long>(element_order(g)));
        return e;
    }

    bool is_abelian() const {
        for (int a = 0; a < order_; ++a)
            for (int b = a + 1; b < order_; ++b)
                if (mul(a, b) != mul(b, a))
                    return false;
        return true;
    }

    const std::string& label(int g) const { return labels_[static_cast<size_t>(g)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.order_ == b.order_ && a.table_ == b.table_;
    }

  private:
    int order_ = 1;
    int identity_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
    std::string name_;

    void validate_latin_square() const {
        std::vector<char> seen(static_cast<size_t>(order_));
        for (int i = 0; i < order_; ++i) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int j = 0; j < order_; ++j) {
                int v = mul(i, j);
                check(!seen[v], errc::not_latin_square,
                      "row " + std::to_string(i) + " repeats element " + std::to_string(v));
                seen[v] = 1;
            }
            std::fill(seen.begin(), seen.end(), 0);
            for (int j = 0; j < order_; ++j) {
                int v = mul(j, i);
                check(!seen[v], errc::not_latin_square,
                      "column " + std::to_string(i) + " repeats element " + std::to_string(v));
                seen[v] = 1;
            }
        }
    }

    void find_identity() {
        for (int e = 0; e < order_; ++e) {
            bool ok = true;
            for (int i = 0; i < order_ && ok; ++i)
                ok = mul(e, i) == i && mul(i, e) == i;
            if (ok) {
                identity_ = e;
                return;
            }
        }
        fail(errc::no_identity, "table has no two-sided identity");
    }

    void compute_inverses() {
        inverse_.assign(static_cast<size_t>(order_), -1);
        for (int i = 0; i < order_; ++i) {
            for (int j = 0; j < order_; ++j) {
                if (mul(i, j) == identity_ && mul(j, i) == identity_) {
                    inverse_[i] = j;
                    break;
                }
            }
            check(inverse_[i] >= 0, errc::no_identity,
                  "element " + std::to_string(i) + " has no two-sided inverse");
        }
    }

    // Exhaustive up to the bound, deterministic sampling above it.
    void validate_associativity(int bound) const {
        if (order_ <= bound) {
            for (int a = 0; a < order_; ++a)
                for (int b = 0; b < order_; ++b)
                    for (int c = 0; c < order_; ++c)
                        check(mul(mul(a, b), c) == mul(a, mul(b, c)), errc::not_associative,
                              "triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + ") fails associativity");
            return;
        }
        std::mt19937 rng(static_cast<unsigned>(order_) * 2654435761u);
        std::uniform_int_distribution<int> d(0, order_ - 1);
        for (int t = 0; t < 50000; ++t) {
            int a = d(rng), b = d(rng), c = d(rng);
            check(mul(mul(a, b), c) == mul(a, mul(b, c)), errc::not_associative,
                  "triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ") fails associativity");
        }
    }

    static std::string cycle_label(const std::vector<int>& img) {
        int n = static_cast<int>(img.size());
        std::vector<char> done(n, 0);
        std::ostringstream os;
        bool any = false;
        for (int i = 0; i < n; ++i) {
            if (done[i] || img[i] == i)
                continue;
            os << "(";
            int j = i;
            bool first = true;
            while (!done[j]) {
                done[j] = 1;
                if (!first)
                    os << " ";
                os << j;
                first = false;
                j = img[j];
            }
            os << ")";
            any = true;
        }
        return any ? os.str() : "e";
    }
};

// Subgroup as a sorted member list over a parent group.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> members; // sorted

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int g) const { return std::binary_search(members.begin(), members.end(), g); }
    bool contains_all(const Subgroup& other) const {
        return std::includes(members.begin(), members.end(), other.members.begin(),
                             other.members.end());
    }
    bool is_trivial() const { return members.size() == 1; }
    bool is_full() const { return parent && order() == parent->order(); }

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
    friend bool operator<(const Subgroup& a, const Subgroup& b) {
        if (a.members.size() != b.members.size())
            return a.members.size() < b.members.size();
        return a.members < b.members;
    }
};

inline Subgroup trivial_subgroup(const FiniteGroup& G) {
    return Subgroup{&G, {G.identity()}};
}

inline Subgroup full_subgroup(const FiniteGroup& G) {
    Subgroup S{&G, std::vector<int>(static_cast<size_t>(G.order()))};
    for (int i = 0; i < G.order(); ++i)
        S.members[static_cast<size_t>(i)] = i;
    return S;
}

inline Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<char> in(static_cast<size_t>(G.order()), 0);
    std::vector<int> elems{G.identity()};
    in[static_cast<size_t>(G.identity())] = 1;
    std::vector<int> frontier;
    for (int g : gens) {
        check(g >= 0 && g < G.order(), errc::bad_input, "generator index out of range");
        if (!in[static_cast<size_t>(g)]) {
            in[static_cast<size_t>(g)] = 1;
            elems.push_back(g);
            frontier.push_back(g);
        }
    }
    while (!frontier.empty()) {
        std::vector<int> next;
        for (size_t fi = 0; fi < frontier.size(); ++fi) {
            int x = frontier[fi];
            for (size_t i = 0; i < elems.size(); ++i) {
                for (int p : {G.mul(x, elems[i]), G.mul(elems[i], x)}) {
                    if (!in[static_cast<size_t>(p)]) {
                        in[static_cast<size_t>(p)] = 1;
                        elems.push_back(p);
                        next.push_back(p);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(elems.begin(), elems.end());
    return Subgroup{&G, std::move(elems)};
}

// Extend an already-closed subgroup by one element.
inline Subgroup subgroup_extend(const FiniteGroup& G, const Subgroup& S, int g) {
    std::vector<int> gens = S.members;
    gens.push_back(g);
    return subgroup_closure(G, gens);
}

// Validates closure, identity and inverses; Lagrange check included.
inline Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup S{&G, members};
    check(S.contains(G.identity()), errc::not_a_subgroup, "member set lacks the identity");
    for (int a : members) {
        check(a >= 0 && a < G.order(), errc::not_a_subgroup, "member out of range");
        check(S.contains(G.inv(a)), errc::not_a_subgroup,
              "member set not closed under inverse at " + G.label(a));
        for (int b : members)
            check(S.contains(G.mul(a, b)), errc::not_a_subgroup,
                  "member set not closed under product at " + G.label(a) + "*" + G.label(b));
    }
    check(G.order() % S.order() == 0, errc::not_a_subgroup, "Lagrange check failed");
    return S;
}

inline bool is_normal(const FiniteGroup& G, const Subgroup& S) {
    for (int g = 0; g < G.order(); ++g)
        for (int s : S.members)
            if (!S.contains(G.conjugate(s, g)))
                return false;
    return true;
}

inline Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& S, int g) {
    std::vector<int> m;
    m.reserve(S.members.size());
    for (int s : S.members)
        m.push_back(G.conjugate(s, g));
    std::sort(m.begin(), m.end());
    return Subgroup{&G, std::move(m)};
}

inline std::vector<Subgroup> all_subgroups(const FiniteGroup& G,
                                           int order_bound = FiniteGroup::kDefaultAssocBound) {
    check(G.order() <= order_bound, errc::order_bound_exceeded,
          "subgroup enumeration bound " + std::to_string(order_bound) + " exceeded by order " +
              std::to_string(G.order()));
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    std::vector<Subgroup> queue{trivial_subgroup(G)};
    seen.insert(queue.front().members);
    while (!queue.empty()) {
        Subgroup S = std::move(queue.back());
        queue.pop_back();
        for (int g = 0; g < G.order(); ++g) {
            if (S.contains(g))
                continue;
            Subgroup T = subgroup_extend(G, S, g);
            if (seen.insert(T.members).second)
                queue.push_back(T);
        }
        out.push_back(std::move(S));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Subgroup> normal_subgroups(const FiniteGroup& G,
                                              int order_bound = FiniteGroup::kDefaultAssocBound) {
    std::vector<Subgroup> out;
    for (auto& S : all_subgroups(G, order_bound))
        if (is_normal(G, S))
            out.push_back(std::move(S));
    return out;
}

inline Subgroup centralizer(const FiniteGroup& G, const Subgroup& S) {
    make_subgroup(G, S.members); // enforce the subgroup precondition
    std::vector<int> m;
    for (int g = 0; g < G.order(); ++g) {
        bool commutes = true;
        for (int s : S.members)
            if (G.mul(g, s) != G.mul(s, g)) {
                commutes = false;
                break;
            }
        if (commutes)
            m.push_back(g);
    }
    return make_subgroup(G, std::move(m));
}

inline Subgroup center(const FiniteGroup& G) { return centralizer(G, full_subgroup(G)); }

inline Subgroup normalizer(const FiniteGroup& G, const Subgroup& S) {
    make_subgroup(G, S.members); // enforce the subgroup precondition
    std::vector<int> m;
    for (int g = 0; g < G.order(); ++g) {
        bool stable = true;
        for (int s : S.members)
            if (!S.contains(G.conjugate(s, g))) {
                stable = false;
                break;
            }
        if (stable)
            m.push_back(g);
    }
    return make_subgroup(G, std::move(m));
}

inline Subgroup commutator_subgroup(const FiniteGroup& G) {
    std::vector<int> gens;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            gens.push_back(G.commutator(a, b));
    return subgroup_closure(G, gens);
}

// Quotient group with coset representatives (least element index per coset)
// and the projection map. The coset of the identity comes first only if the
// identity is the least element of N, so cosets are ordered by their least
// representative.
struct Quotient {
    FiniteGroup group;
    std::vector<int> to_coset;       // element index -> coset index
    std::vector<int> representative; // coset index -> element index
};

inline Quotient quotient(const FiniteGroup& G, const Subgroup& N) {
    check(is_normal(G, N), errc::not_normal, "quotient by a non-normal subgroup");
    int n = G.order();
    std::vector<int> to_coset(static_cast<size_t>(n), -1);
    std::vector<int> reps;
    for (int g = 0; g < n; ++g) {
        if (to_coset[static_cast<size_t>(g)] >= 0)
            continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(g);
        for (int s : N.members)
            to_coset[static_cast<size_t>(G.mul(s, g))] = c; // coset Ng
    }
    int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(static_cast<size_t>(q), std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                to_coset[static_cast<size_t>(G.mul(reps[static_cast<size_t>(i)],
                                                   reps[static_cast<size_t>(j)]))];
    std::vector<std::string> labels(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i)
        labels[static_cast<size_t>(i)] = "[" + G.label(reps[static_cast<size_t>(i)]) + "]";
    Quotient Q{FiniteGroup::from_table(q, table, std::move(labels)), std::move(to_coset),
               std::move(reps)};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            invariant(Q.to_coset[static_cast<size_t>(G.mul(a, b))] ==
                          Q.group.mul(Q.to_coset[static_cast<size_t>(a)],
                                      Q.to_coset[static_cast<size_t>(b)]),
                      "quotient projection is not a homomorphism");
    return Q;
}

// Normal closure of (K together with seed elements) inside the subgroup H.
inline Subgroup normal_closure_in(const FiniteGroup& G, const Subgroup& H,
                                  std::vector<int> seed) {
    std::vector<char> in(static_cast<size_t>(G.order()), 0);
    std::vector<int> elems;
    auto add = [&](int x) {
        if (!in[static_cast<size_t>(x)]) {
            in[static_cast<size_t>(x)] = 1;
            elems.push_back(x);
            return true;
        }
        return false;
    };
    add(G.identity());
    for (int s : seed)
        add(s);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < elems.size(); ++i) {
            for (size_t j = 0; j < elems.size(); ++j)
                if (add(G.mul(elems[i], elems[j])))
                    changed = true;
            for (int h : H.members)
                if (add(G.conjugate(elems[i], h)))
                    changed = true;
        }
    }
    std::sort(elems.begin(), elems.end());
    return Subgroup{&G, std::move(elems)};
}

// Subgroups D with K < D and D/K minimal normal in H/K (all inside the
// subgroup H of G). Every minimal normal subgroup is the H-normal closure
// of K and a single extra element, so taking inclusion-minimal closures is
// exhaustive.
inline std::vector<Subgroup> minimal_normal_above(const FiniteGroup& G, const Subgroup& H,
                                                  const Subgroup& K) {
    check(H.contains_all(K), errc::bad_input, "K must be contained in H");
    for (int h : H.members)
        for (int k : K.members)
            check(K.contains(G.conjugate(k, h)), errc::not_normal, "K is not normal in H");
    std::set<std::vector<int>> closures;
    for (int x : H.members) {
        if (K.contains(x))
            continue;
        std::vector<int> seed = K.members;
        seed.push_back(x);
        closures.insert(normal_closure_in(G, H, std::move(seed)).members);
    }
    std::vector<Subgroup> out;
    for (const auto& c : closures) {
        bool minimal = true;
        for (const auto& d : closures) {
            if (d == c)
                continue;
            if (std::includes(c.begin(), c.end(), d.begin(), d.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            out.push_back(Subgroup{&G, c});
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Subgroup> minimal_normal_subgroups_of_quotient(const FiniteGroup& G,
                                                                  const Subgroup& N) {
    check(is_normal(G, N), errc::not_normal, "N must be normal in G");
    return minimal_normal_above(G, full_subgroup(G), N);
}

struct ConjugacyClassSet {
    std::vector<std::vector<int>> classes; // each sorted; ordered by least member
    std::vector<int> class_of;
    int class_count = 0;
    int real_closed_count = 0; // classes X with X = X^{-1}
};

inline ConjugacyClassSet conjugacy_classes(const FiniteGroup& G) {
    ConjugacyClassSet cs;
    cs.class_of.assign(static_cast<size_t>(G.order()), -1);
    for (int g = 0; g < G.order(); ++g) {
        if (cs.class_of[static_cast<size_t>(g)] >= 0)
            continue;
        int c = static_cast<int>(cs.classes.size());
        std::vector<int> cls;
        for (int x = 0; x < G.order(); ++x) {
            int y = G.conjugate(g, x);
            if (cs.class_of[static_cast<size_t>(y)] < 0) {
                cs.class_of[static_cast<size_t>(y)] = c;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        cs.classes.push_back(std::move(cls));
    }
    cs.class_count = static_cast<int>(cs.classes.size());
    for (const auto& cls : cs.classes) {
        std::vector<int> inv;
        inv.reserve(cls.size());
        for (int g : cls)
            inv.push_back(G.inv(g));
        std::sort(inv.begin(), inv.end());
        if (inv == cls)
            ++cs.real_closed_count;
    }
    return cs;
}

enum class KField { rational, real };

struct KClassSet {
    KField field = KField::rational;
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;
};

inline KClassSet k_classes(const FiniteGroup& G, KField field) {
    long n = G.exponent();
    std::vector<int> parent(static_cast<size_t>(G.order()));
    for (int i = 0; i < G.order(); ++i)
        parent[static_cast<size_t>(i)] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    ConjugacyClassSet cc = conjugacy_classes(G);
    for (const auto& cls : cc.classes)
        for (size_t i = 1; i < cls.size(); ++i)
            unite(cls[0], cls[i]);
    if (field == KField::rational) {
        for (int g = 0; g < G.order(); ++g)
            for (long r : coprime_residues(n))
                unite(g, G.power(g, r));
    } else {
        for (int g = 0; g < G.order(); ++g)
            unite(g, G.inv(g));
    }
    std::map<int, std::vector<int>> buckets;
    for (int g = 0; g < G.order(); ++g)
        buckets[find(g)].push_back(g);
    KClassSet ks;
    ks.field = field;
    ks.class_of.assign(static_cast<size_t>(G.order()), -1);
    for (auto& [root, mem] : buckets) {
        int c = static_cast<int>(ks.classes.size());
        std::sort(mem.begin(), mem.end());
        for (int g : mem)
            ks.class_of[static_cast<size_t>(g)] = c;
        ks.classes.push_back(std::move(mem));
    }
    return ks;
}

// Conjugacy classes of cyclic subgroups; the count is Artin's d, the number
// of rational irreducible characters.
inline std::vector<std::vector<Subgroup>> cyclic_subgroup_classes(const FiniteGroup& G) {
    std::set<std::vector<int>> cyclics;
    for (int g = 0; g < G.order(); ++g)
        cyclics.insert(subgroup_closure(G, {g}).members);
    std::vector<std::vector<int>> list(cyclics.begin(), cyclics.end());
    std::vector<char> used(list.size(), 0);
    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < list.size(); ++i)
        index[list[i]] = i;
    std::vector<std::vector<Subgroup>> classes;
    for (size_t i = 0; i < list.size(); ++i) {
        if (used[i])
            continue;
        std::vector<Subgroup> orbit;
        std::set<std::vector<int>> orbit_set;
        Subgroup S{&G, list[i]};
        for (int g = 0; g < G.order(); ++g) {
            auto T = conjugate_subgroup(G, S, g);
            if (orbit_set.insert(T.members).second) {
                used[index.at(T.members)] = 1;
                orbit.push_back(std::move(T));
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    return classes;
}

inline int cyclic_subgroup_class_count(const FiniteGroup& G) {
    return static_cast<int>(cyclic_subgroup_classes(G).size());
}

inline std::vector<Subgroup> upper_central_series(const FiniteGroup& G) {
    std::vector<Subgroup> series{trivial_subgroup(G)};
    while (true) {
        const Subgroup& Z = series.back();
        std::vector<int> next;
        for (int g = 0; g < G.order(); ++g) {
            bool in_next = true;
            for (int x = 0; x < G.order(); ++x)
                if (!Z.contains(G.commutator(g, x))) {
                    in_next = false;
                    break;
                }
            if (in_next)
                next.push_back(g);
        }
        Subgroup N = make_subgroup(G, std::move(next));
        if (N.members == Z.members)
            break;
        series.push_back(std::move(N));
        if (series.back().is_full())
            break;
    }
    return series;
}

inline bool is_nilpotent(const FiniteGroup& G) { return upper_central_series(G).back().is_full(); }

// Isomorphism testing by generator-image backtracking; only supported for
// small orders (needed for D8 recognition and the structure predicates).
inline std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& A,
                                                        const FiniteGroup& B,
                                                        int order_bound = 16) {
    if (A.order() != B.order())
        return std::nullopt;
    check(A.order() <= order_bound, errc::order_bound_exceeded,
          "isomorphism testing bounded at order " + std::to_string(order_bound));
    // quick invariant: element order multisets must match
    std::vector<int> oa, ob;
    for (int i = 0; i < A.order(); ++i) {
        oa.push_back(A.element_order(i));
        ob.push_back(B.element_order(i));
    }
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob)
        return std::nullopt;

    // greedy generating set of A, with discovery order recording x = y * gen[i]
    std::vector<int> gens;
    struct Step {
        int elem, from, gen;
    };
    std::vector<Step> discovery;
    {
        Subgroup S = trivial_subgroup(A);
        while (S.order() < A.order()) {
            int g = 0;
            while (S.contains(g))
                ++g;
            gens.push_back(g);
            S = subgroup_extend(A, S, g);
        }
        std::vector<int> from(static_cast<size_t>(A.order()), -1), via(static_cast<size_t>(A.order()), -1);
        std::vector<char> in(static_cast<size_t>(A.order()), 0);
        std::vector<int> queue{A.identity()};
        in[static_cast<size_t>(A.identity())] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                int y = A.mul(x, gens[gi]);
                if (!in[static_cast<size_t>(y)]) {
                    in[static_cast<size_t>(y)] = 1;
                    from[static_cast<size_t>(y)] = x;
                    via[static_cast<size_t>(y)] = static_cast<int>(gi);
                    queue.push_back(y);
                }
            }
        }
        for (int x : queue)
            if (x != A.identity())
                discovery.push_back({x, from[static_cast<size_t>(x)], via[static_cast<size_t>(x)]});
    }

    std::vector<int> img(gens.size(), -1);
    std::vector<int> phi(static_cast<size_t>(A.order()), -1);
    std::function<bool(size_t)> assign = [&](size_t gi) -> bool {
        if (gi == gens.size()) {
            std::fill(phi.begin(), phi.end(), -1);
            phi[static_cast<size_t>(A.identity())] = B.identity();
            for (const auto& st : discovery)
                phi[static_cast<size_t>(st.elem)] =
                    B.mul(phi[static_cast<size_t>(st.from)], img[static_cast<size_t>(st.gen)]);
            std::vector<char> hit(static_cast<size_t>(B.order()), 0);
            for (int x = 0; x < A.order(); ++x) {
                if (phi[static_cast<size_t>(x)] < 0 || hit[static_cast<size_t>(phi[static_cast<size_t>(x)])])
                    return false;
                hit[static_cast<size_t>(phi[static_cast<size_t>(x)])] = 1;
            }
            for (int x = 0; x < A.order(); ++x)
                for (int y = 0; y < A.order(); ++y)
                    if (phi[static_cast<size_t>(A.mul(x, y))] !=
                        B.mul(phi[static_cast<size_t>(x)], phi[static_cast<size_t>(y)]))
                        return false;
            return true;
        }
        int want = A.element_order(gens[gi]);
        for (int b = 0; b < B.order(); ++b) {
            if (B.element_order(b) != want)
                continue;
            img[gi] = b;
            if (assign(gi + 1))
                return true;
        }
        img[gi] = -1;
        return false;
    };
    if (assign(0))
        return phi;
    return std::nullopt;
}

inline bool is_isomorphic(const FiniteGroup& A, const FiniteGroup& B, int order_bound = 16) {
    return find_isomorphism(A, B, order_bound).has_value();
}

// ---- catalog -------------------------------------------------------------

inline FiniteGroup cyclic_group(int n) {
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        labels[static_cast<size_t>(i)] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
    auto G = FiniteGroup::from_table(n, t, std::move(labels));
    G.set_name("C" + std::to_string(n));
    return G;
}

// Dihedral group of order n (D8 names the group of order 8), with
// presentation a^{n/2} = 1, b^2 = 1, ba = a^{-1}b.
inline FiniteGroup dihedral_group(int n) {
    check(n >= 4 && n % 2 == 0, errc::unknown_name, "dihedral order must be even and >= 4");
    int m = n / 2;
    auto idx = [m](int i, int r) { return mod_pos(i, m) + (r ? m : 0); };
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int i1 = i % m, r1 = i / m, i2 = j % m, r2 = j / m;
            // (a^i b^r1)(a^j b^r2): b a^j = a^{-j} b
            int e = r1 ? i1 - i2 : i1 + i2;
            t[static_cast<size_t>(i)][static_cast<size_t>(j)] = idx(e, r1 ^ r2);
        }
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (int i = 0; i < m; ++i) {
        labels[static_cast<size_t>(i)] =
            i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i));
        labels[static_cast<size_t>(m + i)] =
            i == 0 ? "b" : (i == 1 ? "ab" : "a^" + std::to_string(i) + "b");
    }
    auto G = FiniteGroup::from_table(n, t, std::move(labels));
    G.set_name("D" + std::to_string(n));
    return G;
}

// Dicyclic group of order 4m: a^{2m} = 1, b^2 = a^m, ba = a^{-1}b.
inline FiniteGroup dicyclic_group(int order4m) {
    check(order4m >= 8 && order4m % 4 == 0, errc::unknown_name,
          "dicyclic order must be a multiple of 4 and >= 8");
    int m = order4m / 4;
    int twom = 2 * m;
    auto idx = [twom](int i, int r) { return mod_pos(i, twom) + (r ? twom : 0); };
    int n = order4m;
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int i1 = i % twom, r1 = i / twom, i2 = j % twom, r2 = j / twom;
            int e = r1 ? i1 - i2 : i1 + i2;
            if (r1 && r2)
                e += m; // b^2 = a^m
            t[static_cast<size_t>(i)][static_cast<size_t>(j)] = idx(e, r1 ^ r2);
        }
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (int i = 0; i < twom; ++i) {
        labels[static_cast<size_t>(i)] =
            i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i));
        labels[static_cast<size_t>(twom + i)] =
            i == 0 ? "b" : (i == 1 ? "ab" : "a^" + std::to_string(i) + "b");
    }
    auto G = FiniteGroup::from_table(n, t, std::move(labels));
    G.set_name("Q" + std::to_string(n));
    return G;
}

// P16 = <a,b | a^4 = 1, b^4 = 1, aba^{-1}b^{-1} = a^2>, i.e. C4 x| C4 with
// b a b^{-1} = a^{-1}.
inline FiniteGroup p16_group() {
    int n = 16;
    auto idx = [](int i, int j) { return mod_pos(i, 4) * 4 + mod_pos(j, 4); };
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int i1 = x / 4, j1 = x % 4, i2 = y / 4, j2 = y % 4;
            // b^j a = a^{(-1)^j} b^j
            int e = (j1 % 2 == 0) ? i1 + i2 : i1 - i2;
            t[static_cast<size_t>(x)][static_cast<size_t>(y)] = idx(e, j1 + j2);
        }
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::string s;
            if (i == 1)
                s += "a";
            else if (i > 1)
                s += "a^" + std::to_string(i);
            if (j == 1)
                s += "b";
            else if (j > 1)
                s += "b^" + std::to_string(j);
            if (s.empty())
                s = "1";
            labels[static_cast<size_t>(i * 4 + j)] = s;
        }
    auto G = FiniteGroup::from_table(n, t, std::move(labels));
    G.set_name("P16");
    return G;
}

inline FiniteGroup symmetric_group(int n, int max_order = FiniteGroup::kDefaultMaxOrder) {
    check(n >= 1, errc::unknown_name, "symmetric group degree must be positive");
    if (n == 1) {
        auto G = cyclic_group(1);
        G.set_name("S1");
        return G;
    }
    std::vector<std::vector<int>> gens;
    std::vector<int> transposition(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        transposition[static_cast<size_t>(i)] = i;
    std::swap(transposition[0], transposition[1]);
    gens.push_back(transposition);
    if (n > 2) {
        std::vector<int> cycle(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            cycle[static_cast<size_t>(i)] = (i + 1) % n;
        gens.push_back(cycle);
    }
    auto G = FiniteGroup::from_permutation_images(n, gens, max_order);
    G.set_name("S" + std::to_string(n));
    return G;
}

inline FiniteGroup alternating_group(int n, int max_order = FiniteGroup::kDefaultMaxOrder) {
    check(n >= 1, errc::unknown_name, "alternating group degree must be positive");
    if (n <= 2) {
        auto G = cyclic_group(1);
        G.set_name("A" + std::to_string(n));
        return G;
    }
    // consecutive 3-cycles generate A_n
    std::vector<std::vector<int>> gens;
    for (int s = 0; s + 2 < n; ++s) {
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            img[static_cast<size_t>(i)] = i;
        img[static_cast<size_t>(s)] = s + 1;
        img[static_cast<size_t>(s + 1)] = s + 2;
        img[static_cast<size_t>(s + 2)] = s;
        gens.push_back(std::move(img));
    }
    auto G = FiniteGroup::from_permutation_images(n, gens, max_order);
    G.set_name("A" + std::to_string(n));
    return G;
}

inline FiniteGroup direct_product_many(const std::vector<FiniteGroup>& factors) {
    check(!factors.empty(), errc::bad_input, "empty product");
    if (factors.size() == 1)
        return factors.front();
    int n = 1;
    for (const auto& F : factors)
        n *= F.order();
    auto decompose = [&](int x) {
        std::vector<int> parts(factors.size());
        for (size_t k = factors.size(); k-- > 0;) {
            parts[k] = x % factors[k].order();
            x /= factors[k].order();
        }
        return parts;
    };
    auto compose = [&](const std::vector<int>& parts) {
        int x = 0;
        for (size_t k = 0; k < factors.size(); ++k)
            x = x * factors[k].order() + parts[k];
        return x;
    };
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto a = decompose(x), b = decompose(y);
            std::vector<int> c(factors.size());
            for (size_t k = 0; k < factors.size(); ++k)
                c[k] = factors[k].mul(a[k], b[k]);
            t[static_cast<size_t>(x)][static_cast<size_t>(y)] = compose(c);
        }
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
        auto parts = decompose(x);
        std::string s = "(";
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k)
                s += ",";
            s += factors[k].label(parts[k]);
        }
        s += ")";
        labels[static_cast<size_t>(x)] = s;
    }
    return FiniteGroup::from_table(n, t, std::move(labels));
}

inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
    return direct_product_many({A, B});
}

// Catalog grammar: C{n}, D{n} (order n, even), Q{4m}, S{n}, A{n}, E{2^k},
// P16, and products joined by "x".
inline FiniteGroup catalog(const std::string& name, int max_order = FiniteGroup::kDefaultMaxOrder) {
    std::vector<std::string> atoms;
    std::string cur;
    for (char ch : name) {
        if (ch == 'x') {
            atoms.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    atoms.push_back(cur);
    auto parse_atom = [max_order](const std::string& atom) -> FiniteGroup {
        check(!atom.empty(), errc::unknown_name, "empty catalog atom");
        if (atom == "P16")
            return p16_group();
        char kind = atom[0];
        long n = 0;
        for (size_t i = 1; i < atom.size(); ++i) {
            check(atom[i] >= '0' && atom[i] <= '9', errc::unknown_name,
                  "bad catalog name '" + atom + "'");
            n = n * 10 + (atom[i] - '0');
        }
        check(n >= 1, errc::unknown_name, "bad catalog name '" + atom + "'");
        check(n <= max_order, errc::order_bound_exceeded,
              "catalog group order exceeds bound " + std::to_string(max_order));
        switch (kind) {
        case 'C':
            return cyclic_group(static_cast<int>(n));
        case 'D':
            return dihedral_group(static_cast<int>(n));
        case 'Q':
            return dicyclic_group(static_cast<int>(n));
        case 'S': {
            long ord = 1;
            for (long i = 2; i <= n; ++i)
                ord *= i;
            check(ord <= max_order, errc::order_bound_exceeded,
                  "S" + std::to_string(n) + " exceeds order bound");
            return symmetric_group(static_cast<int>(n), max_order);
        }
        case 'A': {
            long ord = 1;
            for (long i = 2; i <= n; ++i)
                ord *= i;
            ord = n >= 3 ? ord / 2 : 1;
            check(ord <= max_order, errc::order_bound_exceeded,
                  "A" + std::to_string(n) + " exceeds order bound");
            return alternating_group(static_cast<int>(n), max_order);
        }
        case 'E': {
            long m = n;
            check(m >= 2 && (m & (m - 1)) == 0, errc::unknown_name,
                  "E expects a power of 2, got '" + atom + "'");
            std::vector<FiniteGroup> cs;
            while (m > 1) {
                cs.push_back(cyclic_group(2));
                m /= 2;
            }
            auto G = direct_product_many(cs);
            G.set_name(atom);
            return G;
        }
        default:
            fail(errc::unknown_name, "unknown catalog name '" + atom + "'");
        }
    };
    std::vector<FiniteGroup> parts;
    long total = 1;
    for (const auto& a : atoms) {
        parts.push_back(parse_atom(a));
        total *= parts.back().order();
        check(total <= max_order, errc::order_bound_exceeded,
              "product order exceeds bound " + std::to_string(max_order));
    }
    FiniteGroup G = direct_product_many(parts);
    G.set_name(name);
    return G;
}

// The curated corpus used by the test suites and `catalog-list`.
inline std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (int n = 1; n <= 32; ++n)
        names.push_back("C" + std::to_string(n));
    for (int n = 4; n <= 32; n += 2)
        names.push_back("D" + std::to_string(n));
    for (int n = 8; n <= 32; n += 4)
        names.push_back("Q" + std::to_string(n));
    names.insert(names.end(), {"S3", "S4", "A4", "E4", "E8", "E16", "E32", "P16"});
    names.insert(names.end(),
                 {"Q8xC2", "Q8xC2xC2", "Q8xC3", "C4xC2", "C4xC4", "C4xC2xC2", "C8xC2", "C8xC4",
                  "C8xC2xC2", "C16xC2", "C4xC4xC2", "C3xC3", "C6xC2", "C9xC3", "C6xC3",
                  "C12xC2", "C10xC2", "D8xC2", "D6xC2"});
    return names;
}

// D8 recognition: all normal subgroups K with G/K isomorphic to D8, each
// carrying the epimorphism G -> D8 as an element map.
struct D8Epimorphism {
    Subgroup kernel;
    std::vector<int> image; // image[g] = element index in catalog D8
};

inline std::vector<D8Epimorphism> find_epimorphisms_onto_d8(
    const FiniteGroup& G, int order_bound = FiniteGroup::kDefaultAssocBound) {
    std::vector<D8Epimorphism> out;
    if (G.order() % 8 != 0)
        return out;
    static const FiniteGroup d8 = dihedral_group(8);
    for (auto& K : normal_subgroups(G, order_bound)) {
        if (G.order() / K.order() != 8)
            continue;
        Quotient Q = quotient(G, K);
        auto iso = find_isomorphism(Q.group, d8);
        if (!iso)
            continue;
        std::vector<int> image(static_cast<size_t>(G.order()));
        for (int g = 0; g < G.order(); ++g)
            image[static_cast<size_t>(g)] = (*iso)[static_cast<size_t>(Q.to_coset[static_cast<size_t>(g)])];
        out.push_back(D8Epimorphism{std::move(K), std::move(image)});
    }
    return out;
}

} // namespace grpalg
