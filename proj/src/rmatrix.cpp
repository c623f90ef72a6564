#include "dkr/rmatrix.hpp"

#include <algorithm>
#include <numeric>

#include "dkr/error.hpp"

namespace dkr {

namespace {

Tableau cat(Tableau a, const Tableau& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

std::pair<Tableau, Tableau> r_b2s_b21_hw(int k, const Tableau& b, int n, int s) {
    if (k < 0 || k > s) throw DomainError("r_b2s_b21_hw: level out of range");
    const Tableau u1 = u(1);
    if (b == u1) {
        if (k == s) return {u1, u(s)};
        if (k == s - 1) return {Tableau{}, u(s)};
        return {u1, cat(u(k + 1), Tableau{{-2, -1}})};
    }
    if (b.empty()) {
        if (k == s) return {u1, u(s - 1)};
        return {Tableau{}, u(k)};
    }
    if (b.size() == 1) {
        const Column c = b[0];
        if (c == Column{1, 3} && k == s) return {u1, cat(u(s - 1), Tableau{{1, 3}})};
        if (c == Column{1, 3} && k >= 1) return {u1, cat(u(k - 1), Tableau{{1, 3}, {3, -3}})};
        if (c == Column{3, 4} && k >= 1) return {u1, cat(u(k - 1), Tableau{{3, 4}})};
        if (c == Column{3, -3} && k >= 1) return {u1, cat(u(k - 1), Tableau{{3, -3}})};
        if (c == Column{1, -2} && k >= 1) return {u1, cat(u(k - 1), Tableau{{1, -2}})};
        if (c == Column{3, -2} && k >= 2) return {u1, cat(u(k - 2), Tableau{{1, 3}})};
        if (c == Column{-2, -1} && k == 1) return {u1, Tableau{{-2, -1}}};
        if (c == Column{-2, -1} && k >= 2) return {u1, u(k - 2)};
        if (n == 4 && c == Column{3, -4} && k >= 1) return {u1, cat(u(k - 1), Tableau{{3, -4}})};
    }
    throw DomainError("r_b2s_b21_hw: u_" + std::to_string(k) + " (x) " + format_tableau(b) +
                      " is not a tabulated highest weight vector");
}

int h_b2s_b21_hw(int k, const Tableau& b, int n, int s) {
    r_b2s_b21_hw(k, b, n, s);  // validates membership in the table
    if (b == u(1) && k == s) return 0;
    if (b == u(1) && k == s - 1) return -1;
    if (b == Tableau{{1, 3}} && k == s) return -1;
    if (b.empty() && k == s) return -1;
    return -2;
}

std::pair<int, Tableau> b2s_b21_highest(const Tableau& t, const Tableau& tp, int n) {
    auto [p, q] = word_to_pq(concat(reading(t), reading(tp)), n);
    Word h = hw_word_from_q(q, n);
    const std::size_t k2 = 2 * t.size();
    if (h.size() < k2 || unread(Word(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(k2))) != u(t.size()))
        throw ConsistencyError("b2s_b21_highest: highest weight word does not start with u_k");
    return {static_cast<int>(t.size()), unread(Word(h.begin() + static_cast<std::ptrdiff_t>(k2), h.end()))};
}

RImage r_b2s_b21(const Tableau& t, const Tableau& tp, int n, int s) {
    if (!validate_b2(t, n, s)) throw DomainError("r_b2s_b21: " + format_tableau(t) + " is not in B^{2,s}");
    if (!validate_b2(tp, n, 1)) throw DomainError("r_b2s_b21: " + format_tableau(tp) + " is not in B^{2,1}");
    auto [p, q] = word_to_pq(concat(reading(t), reading(tp)), n);
    (void)q;
    auto [k, b] = b2s_b21_highest(t, tp, n);
    auto [x, y] = r_b2s_b21_hw(k, b, n, s);
    auto [p2, q2] = word_to_pq(concat(reading(x), reading(y)), n);
    (void)p2;
    Word w = pq_to_word(p, q2, n);
    const auto m = static_cast<std::ptrdiff_t>(2 * x.size());
    RImage img{unread(Word(w.begin(), w.begin() + m)), unread(Word(w.begin() + m, w.end())), h_b2s_b21_hw(k, b, n, s)};
    if (!validate_b2(img.first, n, 1) || !validate_b2(img.second, n, s))
        throw ConsistencyError("r_b2s_b21: rebuilt pair is not in B^{2,1} (x) B^{2,s}");
    return img;
}

B2sB21R::B2sB21R(int n, int s) : n_(n), s_(s), cache_(std::make_shared<Cache>()) {
    if (n < 4) throw DomainError("rank must be at least 4");
    if (s < 1) throw DomainError("capacity must be positive");
}

const RImage& B2sB21R::operator()(const Tableau& t, const Tableau& tp) const {
    auto key = std::make_pair(t, tp);
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->fwd.find(key);
        if (it != cache_->fwd.end()) return it->second;
    }
    RImage img = r_b2s_b21(t, tp, n_, s_);
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->fwd.emplace(std::move(key), std::move(img)).first->second;
}

RImage B2sB21R::inverse(const Tableau& first, const Tableau& second) const {
    bool built;
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        built = cache_->inverse_built;
    }
    if (!built) {
        std::map<std::pair<Tableau, Tableau>, std::pair<Tableau, Tableau>> inv;
        for (const auto& t : b2s_elements(n_, s_))
            for (const auto& tp : b2s_elements(n_, 1)) {
                const RImage& img = (*this)(t, tp);
                if (!inv.emplace(std::make_pair(img.first, img.second), std::make_pair(t, tp)).second)
                    throw ConsistencyError("B2sB21R::inverse: R is not injective");
            }
        std::lock_guard<std::mutex> lock(cache_->mu);
        cache_->inv = std::move(inv);
        cache_->inverse_built = true;
    }
    std::pair<Tableau, Tableau> pre;
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->inv.find({first, second});
        if (it == cache_->inv.end())
            throw DomainError("B2sB21R::inverse: " + format_tableau(first) + " (x) " + format_tableau(second) +
                              " is not in B^{2,1} (x) B^{2,s}");
        pre = it->second;
    }
    return RImage{pre.first, pre.second, (*this)(pre.first, pre.second).energy};
}

std::pair<Tableau, Letter> r_b11_b21_hw(const Tableau& t, int n) {
    (void)n;
    if (t == u(1)) return {u(1), 1};
    if (t == Tableau{{2, 3}}) return {u(1), 3};
    if (t.empty()) return {u(1), -2};
    if (t == Tableau{{2, -2}}) return {Tableau{}, 1};
    throw DomainError("r_b11_b21_hw: 1 (x) " + format_tableau(t) + " is not a tabulated highest weight vector");
}

std::pair<Tableau, Letter> r_b11_b21(Letter b, const Tableau& t, int n) {
    if (!is_letter(b, n)) throw DomainError("r_b11_b21: not a letter");
    if (!validate_b2(t, n, 1)) throw DomainError("r_b11_b21: " + format_tableau(t) + " is not in B^{2,1}");
    auto [p, q] = word_to_pq(concat(Word{b}, reading(t)), n);
    Word h = hw_word_from_q(q, n);
    if (h.empty() || h.front() != 1) throw ConsistencyError("r_b11_b21: highest weight word does not start with 1");
    auto [x, y] = r_b11_b21_hw(unread(Word(h.begin() + 1, h.end())), n);
    auto [p2, q2] = word_to_pq(concat(reading(x), Word{y}), n);
    (void)p2;
    Word w = pq_to_word(p, q2, n);
    const auto m = static_cast<std::ptrdiff_t>(2 * x.size());
    if (static_cast<std::ptrdiff_t>(w.size()) != m + 1) throw ConsistencyError("r_b11_b21: rebuilt word has wrong length");
    Tableau first = unread(Word(w.begin(), w.begin() + m));
    if (!validate_b2(first, n, 1)) throw ConsistencyError("r_b11_b21: rebuilt tableau is not in B^{2,1}");
    return {first, w.back()};
}

OneRowImage r_one_row(const OneRow& b, const OneRow& bp, int n) {
    const int s = std::accumulate(b.begin(), b.end(), 0);
    const int sp = std::accumulate(bp.begin(), bp.end(), 0);
    if (s < 1 || !OneRowCrystal(n, s).contains(b)) throw DomainError("r_one_row: first factor is not a one-row element");
    if (sp < 1 || !OneRowCrystal(n, sp).contains(bp)) throw DomainError("r_one_row: second factor is not a one-row element");
    const int z = std::min(x_of(b, 1, n), xbar_of(bp, 1, n));
    Word tstar = one_row_letters(b, n);
    tstar.erase(tstar.begin(), tstar.begin() + z);
    Word v = one_row_letters(bp, n);
    v.resize(v.size() - static_cast<std::size_t>(z));
    const int l = s - z, k = sp - z;

    KNTableau t;
    for (Letter a : tstar) t.push_back({a});
    for (auto it = v.rbegin(); it != v.rend(); ++it) t = insert(*it, t, n);

    const auto h = shape(t);
    int m = 0;
    for (int x : h) {
        if (x > 2) throw ConsistencyError("r_one_row: insertion produced a column of height > 2");
        if (x == 2) ++m;
    }
    if (static_cast<int>(h.size()) != k + l - m || m > k)
        throw ConsistencyError("r_one_row: unexpected shape after insertion");

    Word w;
    for (int r = 0; r < l - m; ++r) w.push_back(remove_box(t, t.size() - 1, n));
    for (int j = m - 1; j >= 0; --j) w.push_back(remove_box(t, static_cast<std::size_t>(j), n));

    Word first(static_cast<std::size_t>(z), 1);
    for (const auto& col : t) first.insert(first.end(), col.begin(), col.end());
    Word second = w;
    second.insert(second.end(), static_cast<std::size_t>(z), -1);

    OneRowImage img{one_row_from_letters(first, n), one_row_from_letters(second, n), 2 * std::min(l, k) - m - 2 * sp};
    if (!OneRowCrystal(n, sp).contains(img.first) || !OneRowCrystal(n, s).contains(img.second))
        throw ConsistencyError("r_one_row: image is not in B^{1,s'} (x) B^{1,s}");
    return img;
}

}  // namespace dkr
