#include "dkr/zero_action.hpp"

#include <cassert>
#include <numeric>

#include "dkr/error.hpp"

namespace dkr {

namespace {

// 1-based row arrays with one spare slot on each side.
struct Rows {
    std::vector<Letter> r1, r2;
    explicit Rows(const Tableau& t) : r1(t.size() + 2, 0), r2(t.size() + 2, 0) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            r1[j + 1] = t[j].top;
            r2[j + 1] = t[j].bottom;
        }
    }
    explicit Rows(std::size_t k) : r1(k + 2, 0), r2(k + 2, 0) {}
    Tableau to_tableau(std::size_t k) const {
        Tableau t(k);
        for (std::size_t j = 0; j < k; ++j) t[j] = {r1[j + 1], r2[j + 1]};
        return t;
    }
};

int count_top_ones(const Tableau& t) {
    int a = 0;
    for (const auto& c : t) a += c.top == 1;
    return a;
}

int count_bottom_bar_ones(const Tableau& t) {
    int b = 0;
    for (const auto& c : t) b += c.bottom == -1;
    return b;
}

}  // namespace

Tableau iota_up(const Tableau& t, int n) {
    const int k = static_cast<int>(t.size());
    if (k == 0) return Tableau{{2, -2}};
    Rows in(t);
    Rows out(k + 1);
    const auto& T1 = in.r1;
    const auto& T2 = in.r2;
    if (T1[k] == 1) {
        out.r1[k + 1] = 2;
        out.r2[k + 1] = -2;
    } else {
        out.r1[k + 1] = T1[k];
        out.r2[k + 1] = -1;
    }
    for (int i = 2; i <= k; ++i) {
        if (T2[i] != bar(T1[i - 1])) {
            out.r1[i] = T1[i - 1];
            out.r2[i] = T2[i];
        } else if (T2[i - 1] == n && T1[i - 1] == n - 1) {
            out.r1[i] = -n;
            out.r2[i] = n;
        } else {
            out.r1[i] = plus1(T1[i - 1]);
            out.r2[i] = plus1(T2[i]);
        }
    }
    if (T2[1] == -1) {
        out.r1[1] = 2;
        out.r2[1] = -2;
    } else {
        out.r1[1] = 1;
        out.r2[1] = T2[1];
    }
    return out.to_tableau(k + 1);
}

std::optional<Tableau> iota_down(const Tableau& tp, int n) {
    const int K = static_cast<int>(tp.size());
    if (K == 0) return std::nullopt;
    const int k = K - 1;
    if (k == 0) {
        if (tp[0] == Column{2, -2}) return Tableau{};
        return std::nullopt;
    }
    Rows p(tp);
    Rows t(k);
    // Undo the first and last columns, then the interior shift.
    if (p.r1[1] == 2 && p.r2[1] == -2) t.r2[1] = -1;
    else if (p.r1[1] == 1) t.r2[1] = p.r2[1];
    else return std::nullopt;
    if (p.r1[K] == 2 && p.r2[K] == -2) t.r1[k] = 1;
    else if (p.r2[K] == -1) t.r1[k] = p.r1[K];
    else return std::nullopt;
    for (int i = 2; i <= k; ++i) {
        const Letter a = p.r1[i], b = p.r2[i];
        if (a >= 2 && b == -a) {
            t.r1[i - 1] = a - 1;
            t.r2[i] = -(a - 1);
        } else if (a == -n && b == n) {
            t.r1[i - 1] = n - 1;
            t.r2[i] = -(n - 1);
        } else {
            t.r1[i - 1] = a;
            t.r2[i] = b;
        }
    }
    Tableau cand = t.to_tableau(k);
    if (!validate_b2(cand, n)) return std::nullopt;
    if (iota_up(cand, n) != tp) return std::nullopt;
    return cand;
}

std::optional<Tableau> iota(int j, int k, const Tableau& t, int n) {
    std::optional<Tableau> cur = t;
    while (j < k && cur) {
        cur = iota_up(*cur, n);
        ++j;
    }
    while (j > k && cur) {
        cur = iota_down(*cur, n);
        --j;
    }
    return cur;
}

int min_level(const Tableau& t, int n) {
    int l = static_cast<int>(t.size());
    Tableau cur = t;
    while (l > 0) {
        auto d = iota_down(cur, n);
        if (!d) break;
        cur = *d;
        --l;
    }
    return l;
}

Tableau psi(const Tableau& t, int n) {
    const int l = static_cast<int>(t.size());
    const int a = count_top_ones(t);
    const int b = count_bottom_bar_ones(t);
    if (a < 1) throw DomainError("psi: tableau has no top entry 1");
    Rows in(t);
    const auto& T1 = in.r1;
    const auto& T2 = in.r2;
    Rows P(t);
    auto is_n_pair = [n](Letter x, Letter y) { return (x == n && y == -n) || (x == -n && y == n); };

    int m = -1;
    for (int i = a; i < l - b; ++i) {
        const Letter x1 = T1[i + 1];
        const Letter y = P.r2[i];
        const bool stop = leq(y, x1, n) && !is_n_pair(x1, y) &&
                          !(T2[i + 1] == bar(x1) && leq(x1, y, n) && leq(y, bar(x1), n));
        if (stop) {
            m = i;
            break;
        }
        if (T2[i + 1] != bar(T1[i + 1])) {
            P.r1[i] = T1[i + 1];
            P.r2[i + 1] = T2[i + 1];
        } else if (P.r2[i] == n && T1[i + 1] == -n && T2[i + 1] == n) {
            P.r1[i] = n - 1;
            P.r2[i + 1] = -(n - 1);
        } else {
            P.r1[i] = minus1(T1[i + 1]);
            P.r2[i + 1] = minus1(T2[i + 1]);
        }
    }
    if (m < 0) m = l - b;

    Letter x;
    if (T2[m] != bar(T1[m])) x = T2[m];
    else if (m > 1 && T2[m - 1] == n && T1[m] == -n && T2[m] == n) x = -(n - 1);
    else x = minus1(T2[m]);

    const bool special = m < l && T1[m + 1] == -n && T2[m + 1] == -(n - 1) && x == n - 1;
    if (m == l || x != bar(T2[m + 1])) P.r1[m] = x;
    else if (special) P.r1[m] = -n;
    else P.r1[m] = plus1(x);
    if (m != l) {
        if (x != bar(T2[m + 1])) P.r2[m] = T2[m + 1];
        else if (special) P.r2[m] = n;
        else P.r2[m] = plus1(T2[m + 1]);
    }
    for (int i = m + 1; i < l - b; ++i) {
        if (T1[i] != bar(T2[i + 1])) {
            P.r1[i] = T1[i];
            P.r2[i] = T2[i + 1];
        } else if (T1[i + 1] == -n && T2[i + 1] == -(n - 1) && T1[i] == n - 1) {
            P.r1[i] = -n;
            P.r2[i] = n;
        } else {
            P.r1[i] = plus1(T1[i]);
            P.r2[i] = plus1(T2[i + 1]);
        }
    }
    P.r2[l - b] = -1;
    return P.to_tableau(l);
}

Tableau psi_inverse(const Tableau& t, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::map<Tableau, std::vector<Tableau>>> tables;
    const int l = static_cast<int>(t.size());
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, l);
    auto it = tables.find(key);
    if (it == tables.end()) {
        std::map<Tableau, std::vector<Tableau>> inv;
        for (const auto& x : level_elements(l, n)) {
            if (min_level(x, n) != l || count_top_ones(x) == 0) continue;
            inv[psi(x, n)].push_back(x);
        }
        it = tables.emplace(key, std::move(inv)).first;
    }
    auto jt = it->second.find(t);
    if (jt == it->second.end() || jt->second.size() != 1)
        throw ConsistencyError("psi_inverse: no unique preimage for " + format_tableau(t));
    return jt->second.front();
}

Tableau star_bc(const Tableau& t, int n) {
    const int k = static_cast<int>(t.size());
    const int l = min_level(t, n);
    Tableau x = *iota(k, l, t, n);
    const int a = count_top_ones(x);
    const int b = count_bottom_bar_ones(x);
    for (int j = 0; j < a - b; ++j) x = psi(x, n);
    for (int j = 0; j < b - a; ++j) x = psi_inverse(x, n);
    auto back = iota(l, k, x, n);
    if (!back) throw ConsistencyError("star_bc: cannot return to level " + std::to_string(k));
    return *back;
}

Tableau sigma(const Tableau& t, int n, int s) {
    const int k = static_cast<int>(t.size());
    Tableau st = star_bc(t, n);
    const int l = min_level(st, n);
    auto r = iota(k, s + l - k, st, n);
    if (!r) throw ConsistencyError("sigma: iota absent for " + format_tableau(t));
    return *r;
}

std::optional<Tableau> e0(const Tableau& t, int n, int s) {
    auto y = classical_e(1, sigma(t, n, s), n);
    if (!y) return std::nullopt;
    return sigma(*y, n, s);
}

std::optional<Tableau> f0(const Tableau& t, int n, int s) {
    auto y = classical_f(1, sigma(t, n, s), n);
    if (!y) return std::nullopt;
    return sigma(*y, n, s);
}

int eps0(const Tableau& t, int n, int s) { return classical_eps(1, sigma(t, n, s), n); }
int phi0(const Tableau& t, int n, int s) { return classical_phi(1, sigma(t, n, s), n); }

ZeroString zero_string_closed_form(const Tableau& t, int n, int s) {
    ZeroString z;
    auto cat = [](Tableau a, const Tableau& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    auto rep = [](Column c, int j) { return Tableau(j, c); };
    const Column e21{-2, -1};
    if (t == Tableau{{1, 3}, {-2, -1}}) {
        for (int j = 1; j <= s - 1; ++j) z.f.push_back(cat(u(j - 1), Tableau{{1, 3}, {3, -3}}));
        for (int j = 1; j <= s - 2; ++j) z.e.push_back(cat(Tableau{{1, 3}}, rep(e21, j + 1)));
        return z;
    }
    if (t.size() != 1 || !validate_b2(t, n, s))
        throw DomainError("zero_string_closed_form: outside the closed-form domain");
    const Letter t11 = t[0].top, t21 = t[0].bottom;
    if (t21 == -2 && t11 != 1 && t11 != 2) {
        for (int j = 1; j <= s; ++j) z.f.push_back(cat(u(j - 1), Tableau{{1, t11}}));
    } else if (t21 == -1 && t11 != 2 && t11 != -2) {
        for (int j = 1; j <= s; ++j) z.f.push_back(cat(u(j - 1), Tableau{{2, t11}}));
    } else if (t11 == -2 && t21 == -1) {
        for (int j = 1; j <= s + 1; ++j) z.f.push_back(u(j - 1));
    } else {
        for (int j = 1; j <= s - 1; ++j) z.f.push_back(cat(u(j), t));
    }
    // The first two e-cases also exclude t21 = 1bar (resp. 2bar): read literally
    // they would produce the invalid column (1bar, 1bar) (resp. (2bar, 2bar)).
    if (t11 == 2 && t21 != -2 && t21 != -1) {
        for (int j = 1; j <= s; ++j) z.e.push_back(cat(Tableau{{t21, -1}}, rep(e21, j - 1)));
    } else if (t11 == 1 && t21 != 2 && t21 != -2) {
        for (int j = 1; j <= s; ++j) z.e.push_back(cat(Tableau{{t21, -2}}, rep(e21, j - 1)));
    } else if (t11 == 1 && t21 == 2) {
        for (int j = 1; j <= s + 1; ++j) z.e.push_back(rep(e21, j - 1));
    } else {
        for (int j = 1; j <= s - 1; ++j) z.e.push_back(cat(t, rep(e21, j)));
    }
    return z;
}

KRCrystal::KRCrystal(int n, int s) : n_(n), s_(s), cartan_(cartan_d(n)), cache_(std::make_shared<Cache>()) {
    if (n < 4) throw DomainError("rank must be at least 4");
    if (s < 1) throw DomainError("capacity must be positive");
}

std::vector<int> KRCrystal::indices() const {
    std::vector<int> idx(n_ + 1);
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

Weight KRCrystal::simple_root(int i) const { return dkr::simple_root(cartan_, i); }

const Tableau& KRCrystal::sigma_of(const Tableau& t) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->sigma.find(t);
        if (it != cache_->sigma.end()) return it->second;
    }
    Tableau v = sigma(t, n_, s_);
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->sigma.emplace(t, std::move(v)).first->second;
}

std::optional<Tableau> KRCrystal::e(int i, const Tableau& t) const {
    if (i != 0) return classical_e(i, t, n_);
    auto y = classical_e(1, sigma_of(t), n_);
    if (!y) return std::nullopt;
    return sigma_of(*y);
}

std::optional<Tableau> KRCrystal::f(int i, const Tableau& t) const {
    if (i != 0) return classical_f(i, t, n_);
    auto y = classical_f(1, sigma_of(t), n_);
    if (!y) return std::nullopt;
    return sigma_of(*y);
}

int KRCrystal::eps(int i, const Tableau& t) const {
    return i == 0 ? classical_eps(1, sigma_of(t), n_) : classical_eps(i, t, n_);
}

int KRCrystal::phi(int i, const Tableau& t) const {
    return i == 0 ? classical_phi(1, sigma_of(t), n_) : classical_phi(i, t, n_);
}

}  // namespace dkr
