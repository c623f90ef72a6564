#pragma once

// Generic crystal machinery: the interface every concrete crystal satisfies, the
// tensor product, graph enumeration, the axiom checker and the brute-force
// oracles (isomorphism R and energy propagation) used to validate hand-coded maps.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dkr/error.hpp"
#include "dkr/weight.hpp"

namespace dkr {

inline constexpr std::size_t kDefaultNodeBudget = 2'000'000;

template <class C>
concept Crystal = requires(const C& c, const typename C::value_type& b, int i) {
    { c.indices() } -> std::convertible_to<std::vector<int>>;
    { c.e(i, b) } -> std::same_as<std::optional<typename C::value_type>>;
    { c.f(i, b) } -> std::same_as<std::optional<typename C::value_type>>;
    { c.eps(i, b) } -> std::convertible_to<int>;
    { c.phi(i, b) } -> std::convertible_to<int>;
    { c.wt(b) } -> std::same_as<Weight>;
    { c.simple_root(i) } -> std::same_as<Weight>;
};

template <class C>
concept FiniteCrystal = Crystal<C> && requires(const C& c) {
    { c.elements() } -> std::convertible_to<std::vector<typename C::value_type>>;
};

// Index set without the affine node 0.
inline std::vector<int> classical(std::vector<int> idx) {
    idx.erase(std::remove(idx.begin(), idx.end(), 0), idx.end());
    return idx;
}

// Binary tensor product B1 (x) B2 in the signature convention: f acts on the left
// factor iff phi(b1) > eps(b2), e acts on the left factor iff phi(b1) >= eps(b2).
template <Crystal A, Crystal B>
class Tensor {
public:
    using left_type = typename A::value_type;
    using right_type = typename B::value_type;
    using value_type = std::pair<left_type, right_type>;

    Tensor(A a, B b) : a_(std::move(a)), b_(std::move(b)) {}

    const A& left() const { return a_; }
    const B& right() const { return b_; }

    std::vector<int> indices() const { return a_.indices(); }
    Weight simple_root(int i) const { return a_.simple_root(i); }

    bool e_acts_left(int i, const value_type& x) const {
        return a_.phi(i, x.first) >= b_.eps(i, x.second);
    }
    bool f_acts_left(int i, const value_type& x) const {
        return a_.phi(i, x.first) > b_.eps(i, x.second);
    }

    int eps(int i, const value_type& x) const {
        int ea = a_.eps(i, x.first), pa = a_.phi(i, x.first);
        return std::max(ea, b_.eps(i, x.second) - (pa - ea));
    }
    int phi(int i, const value_type& x) const {
        int eb = b_.eps(i, x.second), pb = b_.phi(i, x.second);
        return std::max(pb, a_.phi(i, x.first) + (pb - eb));
    }
    Weight wt(const value_type& x) const { return a_.wt(x.first) + b_.wt(x.second); }

    std::optional<value_type> e(int i, const value_type& x) const {
        if (e_acts_left(i, x)) {
            auto y = a_.e(i, x.first);
            if (!y) return std::nullopt;
            return value_type{*y, x.second};
        }
        auto y = b_.e(i, x.second);
        if (!y) return std::nullopt;
        return value_type{x.first, *y};
    }
    std::optional<value_type> f(int i, const value_type& x) const {
        if (f_acts_left(i, x)) {
            auto y = a_.f(i, x.first);
            if (!y) return std::nullopt;
            return value_type{*y, x.second};
        }
        auto y = b_.f(i, x.second);
        if (!y) return std::nullopt;
        return value_type{x.first, *y};
    }

    std::vector<value_type> elements() const
        requires FiniteCrystal<A> && FiniteCrystal<B>
    {
        std::vector<value_type> out;
        auto ea = a_.elements();
        auto eb = b_.elements();
        out.reserve(ea.size() * eb.size());
        for (const auto& x : ea)
            for (const auto& y : eb) out.emplace_back(x, y);
        return out;
    }

private:
    A a_;
    B b_;
};

// Signature rule on a homogeneous list of factors; equivalent to folding the
// binary rule in either association.
struct SignatureResult {
    int eps = 0;
    int phi = 0;
    std::optional<std::size_t> e_pos;  // factor hit by e (rightmost uncancelled '-')
    std::optional<std::size_t> f_pos;  // factor hit by f (leftmost uncancelled '+')
};

template <Crystal C>
SignatureResult signature(const C& c, int i, const std::vector<typename C::value_type>& t) {
    SignatureResult r;
    std::vector<std::size_t> plus;   // unmatched '+', stack
    std::vector<std::size_t> minus;  // unmatched '-'
    for (std::size_t k = 0; k < t.size(); ++k) {
        for (int m = c.eps(i, t[k]); m > 0; --m) {
            if (!plus.empty()) plus.pop_back();
            else minus.push_back(k);
        }
        for (int m = c.phi(i, t[k]); m > 0; --m) plus.push_back(k);
    }
    r.eps = static_cast<int>(minus.size());
    r.phi = static_cast<int>(plus.size());
    if (!minus.empty()) r.e_pos = minus.back();
    if (!plus.empty()) r.f_pos = plus.front();
    return r;
}

template <Crystal C>
std::optional<std::vector<typename C::value_type>> tensor_e(const C& c, int i,
                                                            std::vector<typename C::value_type> t) {
    auto s = signature(c, i, t);
    if (!s.e_pos) return std::nullopt;
    auto y = c.e(i, t[*s.e_pos]);
    if (!y) return std::nullopt;
    t[*s.e_pos] = *y;
    return t;
}

template <Crystal C>
std::optional<std::vector<typename C::value_type>> tensor_f(const C& c, int i,
                                                            std::vector<typename C::value_type> t) {
    auto s = signature(c, i, t);
    if (!s.f_pos) return std::nullopt;
    auto y = c.f(i, t[*s.f_pos]);
    if (!y) return std::nullopt;
    t[*s.f_pos] = *y;
    return t;
}

template <Crystal C>
int tensor_eps(const C& c, int i, const std::vector<typename C::value_type>& t) {
    return signature(c, i, t).eps;
}

template <Crystal C>
int tensor_phi(const C& c, int i, const std::vector<typename C::value_type>& t) {
    return signature(c, i, t).phi;
}

template <Crystal C>
Weight tensor_wt(const C& c, const std::vector<typename C::value_type>& t, std::size_t size) {
    Weight w(size);
    for (const auto& b : t) w += c.wt(b);
    return w;
}

// Colored digraph of a connected component. Arrows are f-arrows.
template <class V>
struct CrystalGraph {
    struct Arrow {
        std::size_t from;
        int i;
        std::size_t to;
    };
    std::vector<V> nodes;
    std::map<V, std::size_t> index;
    std::vector<Arrow> arrows;

    std::size_t size() const { return nodes.size(); }
    bool contains(const V& v) const { return index.count(v) != 0; }
};

template <Crystal C>
CrystalGraph<typename C::value_type> enumerate_component(const C& c, const typename C::value_type& seed,
                                                         const std::vector<int>& indices,
                                                         std::size_t budget = kDefaultNodeBudget) {
    using V = typename C::value_type;
    CrystalGraph<V> g;
    auto visit = [&](const V& v) -> std::size_t {
        auto it = g.index.find(v);
        if (it != g.index.end()) return it->second;
        if (g.nodes.size() >= budget) {
            throw BudgetExceeded("enumerate_component: more than " + std::to_string(budget) + " nodes");
        }
        std::size_t id = g.nodes.size();
        g.nodes.push_back(v);
        g.index.emplace(v, id);
        return id;
    };
    visit(seed);
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        for (int i : indices) {
            if (auto y = c.f(i, g.nodes[k])) {
                std::size_t to = visit(*y);
                g.arrows.push_back({k, i, to});
            }
            if (auto y = c.e(i, g.nodes[k])) visit(*y);
        }
    }
    return g;
}

struct AxiomReport {
    std::size_t elements = 0;
    std::size_t checks = 0;
    std::size_t violation_count = 0;
    std::vector<std::string> violations;  // first few, for diagnostics

    bool ok() const { return violation_count == 0; }
    void fail(int axiom, int i, std::size_t elem, const std::string& what) {
        ++violation_count;
        if (violations.size() < 32) {
            std::ostringstream os;
            os << "axiom " << axiom << ", i=" << i << ", element #" << elem << ": " << what;
            violations.push_back(os.str());
        }
    }
};

// Checks the seven crystal axioms on every element of `elems`:
//  1 phi = eps + <h_i, wt>;  2/3 wt shifts by +-alpha_i under e/f;
//  4/5 eps/phi shift by one under e/f;  6 f(b)=b' iff e(b')=b;
//  7 eps/phi are finite and equal the string lengths (no -infinity here).
template <Crystal C>
AxiomReport check_axioms(const C& c, const std::vector<typename C::value_type>& elems,
                         const std::vector<int>& indices, int max_string = 1000) {
    AxiomReport rep;
    rep.elements = elems.size();
    for (std::size_t k = 0; k < elems.size(); ++k) {
        const auto& b = elems[k];
        Weight w = c.wt(b);
        for (int i : indices) {
            ++rep.checks;
            const int ep = c.eps(i, b), ph = c.phi(i, b);
            const Weight a = c.simple_root(i);
            if (ph != ep + w[i]) rep.fail(1, i, k, "phi != eps + <h_i,wt>");
            auto eb = c.e(i, b);
            auto fb = c.f(i, b);
            if (eb) {
                if (!(c.wt(*eb) == w + a)) rep.fail(2, i, k, "wt(e b) != wt b + alpha_i");
                if (c.eps(i, *eb) != ep - 1 || c.phi(i, *eb) != ph + 1) rep.fail(4, i, k, "eps/phi after e");
                auto back = c.f(i, *eb);
                if (!back || !(*back == b)) rep.fail(6, i, k, "f(e b) != b");
            }
            if (fb) {
                if (!(c.wt(*fb) == w - a)) rep.fail(3, i, k, "wt(f b) != wt b - alpha_i");
                if (c.eps(i, *fb) != ep + 1 || c.phi(i, *fb) != ph - 1) rep.fail(5, i, k, "eps/phi after f");
                auto back = c.e(i, *fb);
                if (!back || !(*back == b)) rep.fail(6, i, k, "e(f b) != b");
            }
            int up = 0;
            for (auto x = eb; x && up <= max_string; x = c.e(i, *x)) ++up;
            int down = 0;
            for (auto x = fb; x && down <= max_string; x = c.f(i, *x)) ++down;
            if (ep < 0 || ph < 0 || up != ep || down != ph) rep.fail(7, i, k, "string lengths differ from eps/phi");
        }
    }
    return rep;
}

// The unique colored-graph isomorphism between the components of `left` and
// `right` containing the two seeds. Throws ConsistencyError if the two graphs
// disagree anywhere (which would mean no isomorphism sends seed to seed).
template <Crystal C1, Crystal C2>
std::map<typename C1::value_type, typename C2::value_type> graph_isomorphism(
    const C1& left, const C2& right, const typename C1::value_type& seed_left,
    const typename C2::value_type& seed_right, std::size_t budget = kDefaultNodeBudget) {
    using V1 = typename C1::value_type;
    using V2 = typename C2::value_type;
    const std::vector<int> idx = left.indices();
    std::map<V1, V2> m;
    std::map<V2, V1> inv;
    std::deque<V1> todo;
    auto bind = [&](const V1& x, const V2& y) {
        auto it = m.find(x);
        if (it != m.end()) {
            if (!(it->second == y)) throw ConsistencyError("graph_isomorphism: node mapped twice");
            return;
        }
        auto jt = inv.find(y);
        if (jt != inv.end()) throw ConsistencyError("graph_isomorphism: map is not injective");
        if (m.size() >= budget) throw BudgetExceeded("graph_isomorphism: node budget exceeded");
        if (!(left.wt(x) == right.wt(y))) throw ConsistencyError("graph_isomorphism: weight mismatch");
        m.emplace(x, y);
        inv.emplace(y, x);
        todo.push_back(x);
    };
    bind(seed_left, seed_right);
    while (!todo.empty()) {
        V1 x = todo.front();
        todo.pop_front();
        V2 y = m.at(x);
        for (int i : idx) {
            if (left.eps(i, x) != right.eps(i, y) || left.phi(i, x) != right.phi(i, y))
                throw ConsistencyError("graph_isomorphism: eps/phi mismatch");
            auto a = left.e(i, x);
            auto b = right.e(i, y);
            if (a.has_value() != b.has_value()) throw ConsistencyError("graph_isomorphism: e arrow mismatch");
            if (a) bind(*a, *b);
            a = left.f(i, x);
            b = right.f(i, y);
            if (a.has_value() != b.has_value()) throw ConsistencyError("graph_isomorphism: f arrow mismatch");
            if (a) bind(*a, *b);
        }
    }
    return m;
}

// Brute-force combinatorial R on B (x) B' sending the seed ua (x) ub to ub (x) ua.
template <Crystal A, Crystal B>
std::map<std::pair<typename A::value_type, typename B::value_type>,
         std::pair<typename B::value_type, typename A::value_type>>
brute_force_r(const A& a, const B& b, const typename A::value_type& ua, const typename B::value_type& ub,
              std::size_t budget = kDefaultNodeBudget) {
    Tensor<A, B> lhs(a, b);
    Tensor<B, A> rhs(b, a);
    return graph_isomorphism(lhs, rhs, {ua, ub}, {ub, ua}, budget);
}

// Energy function on the component of `seed` in A (x) B, obtained by walking
// arrows and applying the defining 0-arrow recurrence. Throws on inconsistency.
template <Crystal A, Crystal B, class RMap>
std::map<std::pair<typename A::value_type, typename B::value_type>, int> propagate_energy(
    const A& a, const B& b, const RMap& r, const std::pair<typename A::value_type, typename B::value_type>& seed,
    int seed_value = 0) {
    using P = std::pair<typename A::value_type, typename B::value_type>;
    Tensor<A, B> t(a, b);
    std::map<P, int> h;
    std::deque<P> todo;
    // Energy change when e_0 is applied to z.
    auto delta = [&](const P& z) {
        const auto& img = r.at(z);  // (b~', b~)
        const bool before = a.phi(0, z.first) >= b.eps(0, z.second);
        const bool after = b.phi(0, img.first) >= a.eps(0, img.second);
        if (before && after) return 1;
        if (!before && !after) return -1;
        return 0;
    };
    auto set = [&](const P& z, int v) {
        auto it = h.find(z);
        if (it != h.end()) {
            if (it->second != v) throw ConsistencyError("propagate_energy: inconsistent energy");
            return;
        }
        h.emplace(z, v);
        todo.push_back(z);
    };
    set(seed, seed_value);
    while (!todo.empty()) {
        P x = todo.front();
        todo.pop_front();
        const int hx = h.at(x);
        for (int i : t.indices()) {
            if (auto y = t.e(i, x)) set(*y, i == 0 ? hx + delta(x) : hx);
            if (auto y = t.f(i, x)) set(*y, i == 0 ? hx - delta(*y) : hx);
        }
    }
    return h;
}

// z^m b: the affinization of a crystal; e_0 raises the mode, f_0 lowers it.
template <class V>
struct Affine {
    int mode = 0;
    V elem{};
    friend auto operator<=>(const Affine&, const Affine&) = default;
};

template <Crystal C>
class AffineCrystal {
public:
    using value_type = Affine<typename C::value_type>;
    explicit AffineCrystal(C c) : c_(std::move(c)) {}
    std::vector<int> indices() const { return c_.indices(); }
    Weight simple_root(int i) const { return c_.simple_root(i); }
    int eps(int i, const value_type& x) const { return c_.eps(i, x.elem); }
    int phi(int i, const value_type& x) const { return c_.phi(i, x.elem); }
    Weight wt(const value_type& x) const { return c_.wt(x.elem); }
    std::optional<value_type> e(int i, const value_type& x) const {
        auto y = c_.e(i, x.elem);
        if (!y) return std::nullopt;
        return value_type{x.mode + (i == 0 ? 1 : 0), *y};
    }
    std::optional<value_type> f(int i, const value_type& x) const {
        auto y = c_.f(i, x.elem);
        if (!y) return std::nullopt;
        return value_type{x.mode - (i == 0 ? 1 : 0), *y};
    }

private:
    C c_;
};

}  // namespace dkr
