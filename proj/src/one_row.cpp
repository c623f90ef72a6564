#include "dkr/one_row.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dkr/error.hpp"

namespace dkr {

int& x_of(OneRow& b, int i, int /*n*/) { return b[i - 1]; }
int& xbar_of(OneRow& b, int i, int n) { return b[2 * n - i]; }
int x_of(const OneRow& b, int i, int /*n*/) { return b[i - 1]; }
int xbar_of(const OneRow& b, int i, int n) { return b[2 * n - i]; }

namespace {

int pos(int v) { return v > 0 ? v : 0; }

std::optional<OneRow> checked(OneRow b) {
    for (int v : b)
        if (v < 0) return std::nullopt;
    return b;
}

}  // namespace

OneRowCrystal::OneRowCrystal(int n, int s) : n_(n), s_(s), cartan_(cartan_d(n)) {
    if (n < 4) throw DomainError("rank must be at least 4");
    if (s < 1) throw DomainError("capacity must be positive");
}

std::vector<int> OneRowCrystal::indices() const {
    std::vector<int> idx(n_ + 1);
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

Weight OneRowCrystal::simple_root(int i) const { return dkr::simple_root(cartan_, i); }

std::optional<OneRow> OneRowCrystal::e(int i, const OneRow& b0) const {
    const int n = n_;
    OneRow b = b0;
    if (i == 0) {
        if (x_of(b, 2, n) > xbar_of(b, 2, n)) {
            --x_of(b, 2, n);
            ++xbar_of(b, 1, n);
        } else {
            --x_of(b, 1, n);
            ++xbar_of(b, 2, n);
        }
    } else if (i == n) {
        if (xbar_of(b, n, n) == 0) {
            ++x_of(b, n, n);
            --xbar_of(b, n - 1, n);
        } else {
            // here x_n = 0 since b is valid
            ++x_of(b, n - 1, n);
            --xbar_of(b, n, n);
        }
    } else {
        if (x_of(b, i + 1, n) > xbar_of(b, i + 1, n)) {
            ++x_of(b, i, n);
            --x_of(b, i + 1, n);
        } else {
            ++xbar_of(b, i + 1, n);
            --xbar_of(b, i, n);
        }
    }
    return checked(std::move(b));
}

std::optional<OneRow> OneRowCrystal::f(int i, const OneRow& b0) const {
    const int n = n_;
    OneRow b = b0;
    if (i == 0) {
        if (x_of(b, 2, n) >= xbar_of(b, 2, n)) {
            ++x_of(b, 2, n);
            --xbar_of(b, 1, n);
        } else {
            ++x_of(b, 1, n);
            --xbar_of(b, 2, n);
        }
    } else if (i == n) {
        if (x_of(b, n, n) > 0 && xbar_of(b, n, n) == 0) {
            --x_of(b, n, n);
            ++xbar_of(b, n - 1, n);
        } else {
            --x_of(b, n - 1, n);
            ++xbar_of(b, n, n);
        }
    } else {
        if (x_of(b, i + 1, n) >= xbar_of(b, i + 1, n)) {
            --x_of(b, i, n);
            ++x_of(b, i + 1, n);
        } else {
            --xbar_of(b, i + 1, n);
            ++xbar_of(b, i, n);
        }
    }
    return checked(std::move(b));
}

int OneRowCrystal::eps(int i, const OneRow& b) const {
    const int n = n_;
    if (i == 0) return x_of(b, 1, n) + pos(x_of(b, 2, n) - xbar_of(b, 2, n));
    if (i == n) return xbar_of(b, n - 1, n) + xbar_of(b, n, n);
    if (i == n - 1) return xbar_of(b, n - 1, n) + x_of(b, n, n);
    return xbar_of(b, i, n) + pos(x_of(b, i + 1, n) - xbar_of(b, i + 1, n));
}

int OneRowCrystal::phi(int i, const OneRow& b) const {
    const int n = n_;
    if (i == 0) return xbar_of(b, 1, n) + pos(xbar_of(b, 2, n) - x_of(b, 2, n));
    if (i == n) return x_of(b, n - 1, n) + x_of(b, n, n);
    if (i == n - 1) return x_of(b, n - 1, n) + xbar_of(b, n, n);
    return x_of(b, i, n) + pos(xbar_of(b, i + 1, n) - x_of(b, i + 1, n));
}

Weight OneRowCrystal::wt(const OneRow& b) const {
    const int n = n_;
    auto x = [&](int i) { return x_of(b, i, n); };
    auto xb = [&](int i) { return xbar_of(b, i, n); };
    Weight w(n + 1);
    w[0] = xb(1) - x(1) + xb(2) - x(2);
    for (int i = 1; i <= n - 2; ++i) w[i] = x(i) - xb(i) + xb(i + 1) - x(i + 1);
    w[n - 1] = x(n - 1) - xb(n - 1) + xb(n) - x(n);
    w[n] = x(n - 1) - xb(n - 1) + x(n) - xb(n);
    return w;
}

bool OneRowCrystal::contains(const OneRow& b) const {
    if (static_cast<int>(b.size()) != 2 * n_) return false;
    int sum = 0;
    for (int v : b) {
        if (v < 0) return false;
        sum += v;
    }
    return sum == s_ && (x_of(b, n_, n_) == 0 || xbar_of(b, n_, n_) == 0);
}

OneRow OneRowCrystal::highest() const {
    OneRow b(2 * n_, 0);
    b[0] = s_;
    return b;
}

std::vector<OneRow> OneRowCrystal::elements() const {
    std::vector<OneRow> out;
    OneRow cur(2 * n_, 0);
    // compositions of s into 2n parts
    auto rec = [&](auto&& self, int k, int left) -> void {
        if (k == 2 * n_ - 1) {
            cur[k] = left;
            if (contains(cur)) out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[k] = v;
            self(self, k + 1, left - v);
        }
    };
    rec(rec, 0, s_);
    std::sort(out.begin(), out.end());
    return out;
}

Word one_row_letters(const OneRow& b, int n) {
    Word w;
    for (int i = 1; i <= n; ++i)
        for (int k = 0; k < x_of(b, i, n); ++k) w.push_back(i);
    for (int i = n; i >= 1; --i)
        for (int k = 0; k < xbar_of(b, i, n); ++k) w.push_back(-i);
    return w;
}

OneRow one_row_from_letters(const Word& w, int n) {
    OneRow b(2 * n, 0);
    for (Letter a : w) {
        if (!is_letter(a, n)) throw DomainError("one_row_from_letters: bad letter");
        if (a > 0) ++x_of(b, a, n);
        else ++xbar_of(b, -a, n);
    }
    return b;
}

std::string format_one_row(const OneRow& b) {
    std::ostringstream os;
    for (std::size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << b[k];
    return os.str();
}

OneRow parse_one_row(const std::string& s) {
    OneRow b;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t p = 0;
            int v = std::stoi(item, &p);
            b.push_back(v);
        } catch (const std::exception&) {
            throw DomainError("bad coordinate list '" + s + "'");
        }
    }
    return b;
}

AOneRowCrystal::AOneRowCrystal(int m, int s) : m_(m), s_(s), cartan_(cartan_a(m)) {}

std::vector<int> AOneRowCrystal::indices() const {
    std::vector<int> idx(m_);
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

Weight AOneRowCrystal::simple_root(int i) const { return dkr::simple_root(cartan_, i); }

// e_i moves a letter i+1 to i; e_0 moves a 1 to m.
std::optional<std::vector<int>> AOneRowCrystal::e(int i, const std::vector<int>& x) const {
    const int from = i == 0 ? 0 : i;  // coordinate losing a box
    const int to = i == 0 ? m_ - 1 : i - 1;
    if (x[from] == 0) return std::nullopt;
    auto y = x;
    --y[from];
    ++y[to];
    return y;
}

std::optional<std::vector<int>> AOneRowCrystal::f(int i, const std::vector<int>& x) const {
    const int from = i == 0 ? m_ - 1 : i - 1;
    const int to = i == 0 ? 0 : i;
    if (x[from] == 0) return std::nullopt;
    auto y = x;
    --y[from];
    ++y[to];
    return y;
}

int AOneRowCrystal::eps(int i, const std::vector<int>& x) const { return i == 0 ? x[0] : x[i]; }
int AOneRowCrystal::phi(int i, const std::vector<int>& x) const { return i == 0 ? x[m_ - 1] : x[i - 1]; }

Weight AOneRowCrystal::wt(const std::vector<int>& x) const {
    Weight w(m_);
    for (int i = 0; i < m_; ++i) w[i] = phi(i, x) - eps(i, x);
    return w;
}

std::vector<std::vector<int>> AOneRowCrystal::elements() const {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(m_, 0);
    auto rec = [&](auto&& self, int k, int left) -> void {
        if (k == m_ - 1) {
            cur[k] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[k] = v;
            self(self, k + 1, left - v);
        }
    };
    rec(rec, 0, s_);
    return out;
}

bool a_valid(const ATableau& t, int m) {
    if (t.empty()) return true;
    const std::size_t s = t[0].size();
    for (std::size_t r = 0; r < t.size(); ++r) {
        if (t[r].size() != s) return false;
        for (std::size_t c = 0; c < s; ++c) {
            if (t[r][c] < 1 || t[r][c] > m) return false;
            if (c + 1 < s && t[r][c] > t[r][c + 1]) return false;
            if (r + 1 < t.size() && t[r][c] >= t[r + 1][c]) return false;
        }
    }
    return true;
}

std::vector<ATableau> a_rectangles(int r, int s, int m) {
    std::vector<ATableau> out;
    ATableau cur(r, std::vector<int>(s, 0));
    auto rec = [&](auto&& self, int cell) -> void {
        if (cell == r * s) {
            out.push_back(cur);
            return;
        }
        const int i = cell / s, j = cell % s;
        int lo = 1;
        if (j > 0) lo = std::max(lo, cur[i][j - 1]);
        if (i > 0) lo = std::max(lo, cur[i - 1][j] + 1);
        for (int v = lo; v <= m; ++v) {
            cur[i][j] = v;
            self(self, cell + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<int> a_row_word(const ATableau& t) {
    std::vector<int> w;
    for (const auto& row : t)
        for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
    return w;
}

namespace {

// Position (into the row word) hit by e_i (want_e) or f_i.
int a_signature_pos(int i, const std::vector<int>& w, bool want_e) {
    std::vector<int> plus, minus;
    for (int k = 0; k < static_cast<int>(w.size()); ++k) {
        if (w[k] == i + 1) {
            if (!plus.empty()) plus.pop_back();
            else minus.push_back(k);
        }
        if (w[k] == i) plus.push_back(k);
    }
    if (want_e) return minus.empty() ? -1 : minus.back();
    return plus.empty() ? -1 : plus.front();
}

ATableau a_replace(const ATableau& t, int p, int v) {
    ATableau out = t;
    int k = 0;
    for (auto& row : out)
        for (int c = static_cast<int>(row.size()) - 1; c >= 0; --c, ++k)
            if (k == p) row[c] = v;
    return out;
}

}  // namespace

std::optional<ATableau> a_e(int i, const ATableau& t) {
    int p = a_signature_pos(i, a_row_word(t), true);
    if (p < 0) return std::nullopt;
    return a_replace(t, p, i);
}

std::optional<ATableau> a_f(int i, const ATableau& t) {
    int p = a_signature_pos(i, a_row_word(t), false);
    if (p < 0) return std::nullopt;
    return a_replace(t, p, i + 1);
}

std::vector<std::vector<int>> a_coordinates(const ATableau& t, int m) {
    std::vector<std::vector<int>> x(t.size(), std::vector<int>(m, 0));
    for (std::size_t r = 0; r < t.size(); ++r)
        for (int v : t[r]) ++x[r][v - 1];
    return x;
}

ATableau a_from_coordinates(const std::vector<std::vector<int>>& x) {
    ATableau t;
    for (const auto& row : x) {
        std::vector<int> r;
        for (std::size_t j = 0; j < row.size(); ++j)
            for (int k = 0; k < row[j]; ++k) r.push_back(static_cast<int>(j) + 1);
        t.push_back(r);
    }
    return t;
}

std::vector<int> a_one_row_coords(const std::vector<int>& row, int m) {
    std::vector<int> x(m, 0);
    for (int v : row) ++x[v - 1];
    return x;
}

}  // namespace dkr
