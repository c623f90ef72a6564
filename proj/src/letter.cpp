#include "dkr/letter.hpp"

#include <cstdlib>
#include <sstream>

#include "dkr/error.hpp"

namespace dkr {

int letter_key(Letter a, int n) { return a > 0 ? a : 2 * n + 1 + a; }

Order compare(Letter a, Letter b, int n) {
    if (a == b) return Order::equal;
    if ((a == n && b == -n) || (a == -n && b == n)) return Order::incomparable;
    return letter_key(a, n) < letter_key(b, n) ? Order::less : Order::greater;
}

bool leq(Letter a, Letter b, int n) {
    Order o = compare(a, b, n);
    return o == Order::less || o == Order::equal;
}

bool lt(Letter a, Letter b, int n) { return compare(a, b, n) == Order::less; }

std::vector<Letter> alphabet(int n) {
    std::vector<Letter> out;
    for (int i = 1; i <= n; ++i) out.push_back(i);
    for (int i = n; i >= 1; --i) out.push_back(-i);
    return out;
}

bool is_letter(Letter a, int n) { return a != 0 && std::abs(a) <= n; }

std::string letter_str(Letter a) { return a > 0 ? std::to_string(a) : "-" + std::to_string(-a); }

Letter parse_letter(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw DomainError("bad letter '" + s + "'");
    }
    if (pos != s.size() || v == 0) throw DomainError("bad letter '" + s + "'");
    return v;
}

std::optional<Letter> letter_e(int i, Letter b, int n) {
    if (i == 0) {
        if (b == 2) return -1;
        if (b == 1) return -2;
        return std::nullopt;
    }
    if (i < n) {
        if (b == i + 1) return i;
        if (b == -i) return -(i + 1);
        return std::nullopt;
    }
    if (b == -(n - 1)) return n;
    if (b == -n) return n - 1;
    return std::nullopt;
}

std::optional<Letter> letter_f(int i, Letter b, int n) {
    if (i == 0) {
        if (b == -1) return 2;
        if (b == -2) return 1;
        return std::nullopt;
    }
    if (i < n) {
        if (b == i) return i + 1;
        if (b == -(i + 1)) return -i;
        return std::nullopt;
    }
    if (b == n) return -(n - 1);
    if (b == n - 1) return -n;
    return std::nullopt;
}

int letter_eps(int i, Letter b, int n) { return letter_e(i, b, n) ? 1 : 0; }
int letter_phi(int i, Letter b, int n) { return letter_f(i, b, n) ? 1 : 0; }

Weight letter_wt(Letter b, int n) {
    // content in the epsilon basis: +e_b for unbarred, -e_|b| for barred
    std::vector<int> v(n + 2, 0);
    v[std::abs(b)] = b > 0 ? 1 : -1;
    Weight w(n + 1);
    for (int i = 1; i < n; ++i) w[i] = v[i] - v[i + 1];
    w[n] = v[n - 1] + v[n];
    w[0] = -(v[1] + v[2]);
    return w;
}

namespace {

struct WordSignature {
    int eps = 0;
    int phi = 0;
    int e_pos = -1;
    int f_pos = -1;
};

WordSignature word_signature(int i, const Word& w, int n) {
    WordSignature s;
    std::vector<int> plus;
    std::vector<int> minus;
    for (int k = 0; k < static_cast<int>(w.size()); ++k) {
        if (letter_eps(i, w[k], n)) {
            if (!plus.empty()) plus.pop_back();
            else minus.push_back(k);
        }
        if (letter_phi(i, w[k], n)) plus.push_back(k);
    }
    s.eps = static_cast<int>(minus.size());
    s.phi = static_cast<int>(plus.size());
    if (!minus.empty()) s.e_pos = minus.back();
    if (!plus.empty()) s.f_pos = plus.front();
    return s;
}

}  // namespace

std::optional<Word> word_e(int i, const Word& w, int n) {
    auto s = word_signature(i, w, n);
    if (s.e_pos < 0) return std::nullopt;
    Word out = w;
    out[s.e_pos] = *letter_e(i, w[s.e_pos], n);
    return out;
}

std::optional<Word> word_f(int i, const Word& w, int n) {
    auto s = word_signature(i, w, n);
    if (s.f_pos < 0) return std::nullopt;
    Word out = w;
    out[s.f_pos] = *letter_f(i, w[s.f_pos], n);
    return out;
}

int word_eps(int i, const Word& w, int n) { return word_signature(i, w, n).eps; }
int word_phi(int i, const Word& w, int n) { return word_signature(i, w, n).phi; }

Weight word_wt(const Word& w, int n) {
    Weight out(n + 1);
    for (Letter b : w) out += letter_wt(b, n);
    return out;
}

bool word_is_highest(const Word& w, int n) {
    for (int i = 1; i <= n; ++i)
        if (word_eps(i, w, n) > 0) return false;
    return true;
}

std::string word_str(const Word& w) {
    std::ostringstream os;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) os << ' ';
        os << letter_str(w[k]);
    }
    return os.str();
}

LetterCrystal::LetterCrystal(int n) : n_(n), cartan_(cartan_d(n)) {
    if (n < 4) throw DomainError("rank must be at least 4");
}

std::vector<int> LetterCrystal::indices() const {
    std::vector<int> idx;
    for (int i = 0; i <= n_; ++i) idx.push_back(i);
    return idx;
}

Weight LetterCrystal::simple_root(int i) const { return dkr::simple_root(cartan_, i); }

}  // namespace dkr
