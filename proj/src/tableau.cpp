#include "dkr/tableau.hpp"

#include <algorithm>
#include <ostream>
#include <cctype>
#include <map>
#include <mutex>

#include "dkr/error.hpp"

namespace dkr {

std::ostream& operator<<(std::ostream& os, const Column& c) {
    return os << '(' << letter_str(c.top) << ',' << letter_str(c.bottom) << ')';
}

bool valid_column(const Column& c, int n) {
    if ((c.top == -n && c.bottom == n) || (c.top == n && c.bottom == -n)) return true;
    if (c.top == 1 && c.bottom == -1) return false;
    return lt(c.top, c.bottom, n);
}

bool validate_b2(const Tableau& t, int n, int s) {
    if (s >= 0 && static_cast<int>(t.size()) > s) return false;
    for (const auto& c : t) {
        if (!is_letter(c.top, n) || !is_letter(c.bottom, n)) return false;
        if (!valid_column(c, n)) return false;
    }
    for (std::size_t j = 0; j + 1 < t.size(); ++j) {
        const Letter a = t[j].top, b = t[j + 1].top, c = t[j].bottom, d = t[j + 1].bottom;
        if (!leq(a, b, n) || !leq(c, d, n)) return false;
        // forbidden 2x2 configurations [a b; c d]
        if (a == b && d == -a) return false;
        if (c == -a && d == -a) return false;
        if (a == n - 1 && b == n && c == n && d == -(n - 1)) return false;
        if (a == n - 1 && b == -n && c == -n && d == -(n - 1)) return false;
    }
    return true;
}

const std::vector<Tableau>& level_elements(int k, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Tableau>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Column> cols;
    for (Letter a : alphabet(n))
        for (Letter b : alphabet(n))
            if (valid_column({a, b}, n)) cols.push_back({a, b});
    std::vector<Tableau> cur{Tableau{}};
    for (int j = 0; j < k; ++j) {
        std::vector<Tableau> next;
        for (const auto& t : cur) {
            for (const auto& c : cols) {
                Tableau x = t;
                x.push_back(c);
                // only the new adjacent pair needs checking
                Tableau tail(x.end() - std::min<std::size_t>(2, x.size()), x.end());
                if (validate_b2(tail, n)) next.push_back(std::move(x));
            }
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cache.emplace(key, std::move(cur)).first->second;
}

std::vector<Tableau> b2s_elements(int n, int s) {
    std::vector<Tableau> out;
    for (int k = 0; k <= s; ++k) {
        const auto& lv = level_elements(k, n);
        out.insert(out.end(), lv.begin(), lv.end());
    }
    return out;
}

Word reading(const Tableau& t) {
    Word w;
    w.reserve(2 * t.size());
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        w.push_back(it->top);
        w.push_back(it->bottom);
    }
    return w;
}

Tableau unread(const Word& w) {
    if (w.size() % 2) throw DomainError("unread: odd word length");
    const std::size_t k = w.size() / 2;
    Tableau t(k);
    for (std::size_t j = 0; j < k; ++j) t[j] = {w[2 * (k - 1 - j)], w[2 * (k - 1 - j) + 1]};
    return t;
}

std::optional<Tableau> classical_e(int i, const Tableau& t, int n) {
    auto w = word_e(i, reading(t), n);
    if (!w) return std::nullopt;
    return unread(*w);
}

std::optional<Tableau> classical_f(int i, const Tableau& t, int n) {
    auto w = word_f(i, reading(t), n);
    if (!w) return std::nullopt;
    return unread(*w);
}

int classical_eps(int i, const Tableau& t, int n) { return word_eps(i, reading(t), n); }
int classical_phi(int i, const Tableau& t, int n) { return word_phi(i, reading(t), n); }
Weight tableau_wt(const Tableau& t, int n) { return word_wt(reading(t), n); }

Tableau u(int k) { return Tableau(k, Column{1, 2}); }

Tableau null_config(int k) {
    Tableau t;
    const int h = k / 2;
    for (int j = 0; j < h; ++j) t.push_back({1, -2});
    if (k % 2) t.push_back({2, -2});
    for (int j = 0; j < h; ++j) t.push_back({2, -1});
    return t;
}

Tableau make_tableau(const Word& top, const Word& bottom) {
    if (top.size() != bottom.size()) throw DomainError("make_tableau: rows of different length");
    Tableau t;
    for (std::size_t j = 0; j < top.size(); ++j) t.push_back({top[j], bottom[j]});
    return t;
}

std::string format_tableau(const Tableau& t) {
    if (t.empty()) return "e";
    std::string top, bottom;
    for (const auto& c : t) {
        top += letter_str(c.top);
        bottom += letter_str(c.bottom);
    }
    return top + "/" + bottom;
}

namespace {

Word parse_row(const std::string& s) {
    Word w;
    std::size_t k = 0;
    while (k < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[k]))) {
            ++k;
            continue;
        }
        bool barred = false;
        if (s[k] == '-') {
            barred = true;
            ++k;
        }
        if (k >= s.size() || !std::isdigit(static_cast<unsigned char>(s[k])))
            throw DomainError("bad tableau row '" + s + "'");
        int v = s[k] - '0';
        ++k;
        if (v == 0) throw DomainError("letter 0 in '" + s + "'");
        w.push_back(barred ? -v : v);
    }
    return w;
}

}  // namespace

Tableau parse_tableau(const std::string& s) {
    std::string trimmed;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed == "e" || trimmed.empty()) return {};
    auto slash = trimmed.find('/');
    if (slash == std::string::npos || trimmed.find('/', slash + 1) != std::string::npos)
        throw DomainError("tableau needs exactly one '/': '" + s + "'");
    Word top = parse_row(trimmed.substr(0, slash));
    Word bottom = parse_row(trimmed.substr(slash + 1));
    if (top.size() != bottom.size()) throw DomainError("rows of different length in '" + s + "'");
    return make_tableau(top, bottom);
}

}  // namespace dkr
