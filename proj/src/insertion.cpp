#include "dkr/insertion.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "dkr/error.hpp"

namespace dkr {

std::vector<std::tuple<Letter, Letter, Letter>> xi_branches(Letter x, Letter y, Letter z, int n) {
    std::vector<std::tuple<Letter, Letter, Letter>> hits;
    auto npair = [n](Letter a, Letter b) { return (a == -n && b == n) || (a == n && b == -n); };
    if (leq(z, x, n) && lt(x, y, n) && y != bar(z)) hits.emplace_back(x, z, y);
    if (lt(x, z, n) && leq(z, y, n) && y != bar(x)) hits.emplace_back(y, x, z);
    if (y == bar(z) && z > 0 && z < n - 1 && lt(z, x, n) && lt(x, bar(z), n))
        hits.emplace_back(x, z + 1, -(z + 1));
    if (y == bar(x) && x > 1 && x < n && leq(x, z, n) && leq(z, bar(x), n))
        hits.emplace_back(-(x - 1), x - 1, z);
    if (leq(-(n - 1), y, n) && npair(x, z)) hits.emplace_back(y, x, z);
    if (leq(z, n - 1, n) && npair(x, y)) hits.emplace_back(x, z, y);
    if ((x == n && y == -n && z == -n) || (x == -n && y == n && z == n)) hits.emplace_back(-(n - 1), n - 1, z);
    if (x == -n && y == -(n - 1) && z == n - 1) hits.emplace_back(-n, -n, n);
    if (x == n && y == -(n - 1) && z == n - 1) hits.emplace_back(n, n, -n);
    return hits;
}

std::tuple<Letter, Letter, Letter> xi(Letter x, Letter y, Letter z, int n) {
    auto hits = xi_branches(x, y, z, n);
    if (hits.empty())
        throw DomainError("xi: no branch applies to " + word_str({x, y, z}));
    for (const auto& h : hits)
        if (h != hits.front()) throw DomainError("xi: branches disagree on " + word_str({x, y, z}));
    return hits.front();
}

ColumnInsertion insert_column(Letter b, const KNColumn& c, int n) {
    const std::size_t k = c.size();
    if (k == 0) return {ColumnInsertion::Kind::append, {b}, 0};
    if (k == 1 && leq(b, c[0], n)) return {ColumnInsertion::Kind::bump, {b}, c[0]};
    const Letter last = c.back();
    if (lt(last, b, n) || (last == n && b == -n) || (last == -n && b == n)) {
        KNColumn s = c;
        s.push_back(b);
        // pair removal: least y with y, ybar in S and #{x : x <= y or x >= ybar} > y
        for (int y = 1; y <= n; ++y) {
            if (std::find(s.begin(), s.end(), y) == s.end()) continue;
            if (std::find(s.begin(), s.end(), -y) == s.end()) continue;
            int cnt = 0;
            for (Letter x : s) cnt += (leq(x, y, n) || leq(-y, x, n)) ? 1 : 0;
            if (cnt > y) {
                s.erase(std::find(s.begin(), s.end(), y));
                s.erase(std::find(s.begin(), s.end(), -y));
                return {ColumnInsertion::Kind::remove, s, 0};
            }
        }
        return {ColumnInsertion::Kind::append, s, 0};
    }
    if (k < 2) throw DomainError("insert_column: invalid column");
    KNColumn w = c;
    w.push_back(b);
    for (int i = static_cast<int>(k) - 2; i >= 0; --i) {
        auto [p, q, r] = xi(w[i], w[i + 1], w[i + 2], n);
        w[i] = p;
        w[i + 1] = q;
        w[i + 2] = r;
    }
    return {ColumnInsertion::Kind::bump, KNColumn(w.begin() + 1, w.end()), w[0]};
}

KNTableau insert(Letter b, const KNTableau& t, int n) {
    if (t.empty()) return {{b}};
    ColumnInsertion r = insert_column(b, t[0], n);
    KNTableau rest(t.begin() + 1, t.end());
    switch (r.kind) {
        case ColumnInsertion::Kind::append: {
            KNTableau out = t;
            out[0] = r.column;
            return out;
        }
        case ColumnInsertion::Kind::remove:
            for (Letter x : r.column) rest = insert(x, rest, n);
            return rest;
        case ColumnInsertion::Kind::bump: {
            KNTableau out{r.column};
            KNTableau tail = insert(r.bumped, rest, n);
            out.insert(out.end(), tail.begin(), tail.end());
            return out;
        }
    }
    return t;
}

KNTableau insert_word(const Word& w, int n, KNTableau t) {
    for (Letter b : w) t = insert(b, t, n);
    return t;
}

namespace {

// All columns of height h whose entries increase (n, nbar adjacent allowed);
// candidates for the preimage of a bump.
const std::vector<KNColumn>& candidate_columns(std::size_t h, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, std::size_t>, std::vector<KNColumn>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, h);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<KNColumn> cur{{}};
    for (std::size_t j = 0; j < h; ++j) {
        std::vector<KNColumn> next;
        for (const auto& c : cur)
            for (Letter a : alphabet(n)) {
                if (!c.empty()) {
                    const Letter last = c.back();
                    if (!(lt(last, a, n) || (last == n && a == -n) || (last == -n && a == n))) continue;
                }
                auto d = c;
                d.push_back(a);
                next.push_back(std::move(d));
            }
        cur = std::move(next);
    }
    return cache.emplace(key, std::move(cur)).first->second;
}

// The unique (b, C) with insert_column(b, C) = bump(result, c).
std::pair<Letter, KNColumn> unbump(const KNColumn& result, Letter c, int n) {
    static std::mutex mu;
    static std::map<std::tuple<int, KNColumn, Letter>, std::pair<Letter, KNColumn>> cache;
    auto key = std::make_tuple(n, result, c);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const ColumnInsertion want{ColumnInsertion::Kind::bump, result, c};
    std::vector<std::pair<Letter, KNColumn>> found;
    for (const auto& col : candidate_columns(result.size(), n)) {
        for (Letter b : alphabet(n)) {
            try {
                if (insert_column(b, col, n) == want) found.emplace_back(b, col);
            } catch (const DomainError&) {
                // xi undefined on this candidate; not a preimage
            }
        }
    }
    if (found.size() != 1)
        throw ConsistencyError("remove_box: " + std::to_string(found.size()) + " preimages for a bump");
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, found.front());
    return found.front();
}

}  // namespace

Letter remove_box(KNTableau& t, std::size_t j, int n) {
    if (j >= t.size()) throw DomainError("remove_box: no such column");
    Letter c = t[j].back();
    t[j].pop_back();
    if (t[j].empty()) t.erase(t.begin() + static_cast<std::ptrdiff_t>(j));
    for (std::size_t jj = j; jj-- > 0;) {
        auto [b, col] = unbump(t[jj], c, n);
        t[jj] = col;
        c = b;
    }
    return c;
}

std::vector<int> shape(const KNTableau& t) {
    std::vector<int> s;
    for (const auto& c : t) s.push_back(static_cast<int>(c.size()));
    return s;
}

std::vector<int> row_lengths(const std::vector<int>& heights) {
    std::vector<int> rows;
    for (int h : heights) {
        for (int i = 0; i < h; ++i) {
            if (i >= static_cast<int>(rows.size())) rows.push_back(0);
            ++rows[i];
        }
    }
    return rows;
}

Word kn_reading(const KNTableau& t) {
    Word w;
    for (auto it = t.rbegin(); it != t.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

int height_n_flag(const KNTableau& t, int n) {
    int flag = 0;
    int tall = 0;
    for (const auto& c : t) {
        if (static_cast<int>(c.size()) != n) continue;
        ++tall;
        for (int k = 1; k <= n; ++k) {
            const Letter x = c[k - 1];
            int f = 0;
            if (x == n) f = (n - k) % 2 == 0 ? 1 : -1;
            else if (x == -n) f = (n - k) % 2 == 1 ? 1 : -1;
            else continue;
            if (flag != 0 && f != flag) throw ConsistencyError("height_n_flag: entries disagree");
            flag = f;
        }
    }
    if (flag != 0 && tall > 1) throw ConsistencyError("height_n_flag: more than one column of height n");
    return flag;
}

std::pair<KNTableau, OscTableau> word_to_pq(const Word& w, int n) {
    KNTableau p;
    OscTableau q{OscStep{{}, 0}};
    for (Letter b : w) {
        p = insert(b, p, n);
        q.push_back({shape(p), height_n_flag(p, n)});
    }
    return {p, q};
}

Word hw_word_from_q(const OscTableau& q, int n) {
    Word w;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
        auto r0 = row_lengths(q[k].shape);
        auto r1 = row_lengths(q[k + 1].shape);
        const std::size_t len = std::max(r0.size(), r1.size());
        r0.resize(len, 0);
        r1.resize(len, 0);
        int row = -1;
        int d = 0;
        for (std::size_t i = 0; i < len; ++i) {
            if (r0[i] != r1[i]) {
                if (row >= 0) throw DomainError("hw_word_from_q: shapes differ in more than one box");
                row = static_cast<int>(i) + 1;
                d = r1[i] - r0[i];
            }
        }
        if (row < 0 || (d != 1 && d != -1)) throw DomainError("hw_word_from_q: shapes differ by no single box");
        if (row < n) {
            w.push_back(d > 0 ? row : -row);
        } else if (d > 0) {
            w.push_back(q[k + 1].flag > 0 ? n : -n);
        } else {
            w.push_back(q[k].flag < 0 ? n : -n);
        }
    }
    return w;
}

Word pq_to_word(const KNTableau& p, const OscTableau& q, int n) {
    Word x = kn_reading(p);
    std::vector<int> path;
    for (;;) {
        bool moved = false;
        for (int i = 1; i <= n; ++i) {
            if (auto y = word_e(i, x, n)) {
                path.push_back(i);
                x = *y;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    Word w = hw_word_from_q(q, n);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        auto y = word_f(*it, w, n);
        if (!y) throw DomainError("pq_to_word: P and Q are not compatible");
        w = *y;
    }
    auto [p2, q2] = word_to_pq(w, n);
    if (p2 != p || q2 != q) throw DomainError("pq_to_word: P and Q are not compatible");
    return w;
}

std::string format_kn(const KNTableau& t) {
    std::ostringstream os;
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (j) os << ' ';
        os << '[';
        for (std::size_t k = 0; k < t[j].size(); ++k) os << (k ? "," : "") << letter_str(t[j][k]);
        os << ']';
    }
    return os.str();
}

ATableau a_row_insert(int v, ATableau t) {
    for (auto& row : t) {
        auto it = std::upper_bound(row.begin(), row.end(), v);
        if (it == row.end()) {
            row.push_back(v);
            return t;
        }
        std::swap(*it, v);
    }
    t.push_back({v});
    return t;
}

std::vector<int> a_western_word(const ATableau& t) {
    std::vector<int> w;
    for (auto it = t.rbegin(); it != t.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

ATableau row_insert_a(const ATableau& t, const ATableau& tp) {
    ATableau out = tp;
    for (int v : a_western_word(t)) out = a_row_insert(v, std::move(out));
    return out;
}

std::pair<ATableau, ATableau> r_hat(const ATableau& t, const ATableau& tp, int m) {
    const int r = static_cast<int>(t.size()), s = r ? static_cast<int>(t[0].size()) : 0;
    const int rp = static_cast<int>(tp.size()), sp = rp ? static_cast<int>(tp[0].size()) : 0;
    if (!a_valid(t, m) || !a_valid(tp, m)) throw DomainError("r_hat: invalid tableau");
    const ATableau target = row_insert_a(t, tp);
    auto content = [m](const ATableau& x) {
        std::vector<int> c(m, 0);
        for (const auto& row : x)
            for (int v : row) ++c[v - 1];
        return c;
    };
    std::vector<int> total = content(t);
    {
        auto c2 = content(tp);
        for (int i = 0; i < m; ++i) total[i] += c2[i];
    }
    std::vector<std::pair<ATableau, ATableau>> found;
    const auto firsts = a_rectangles(r, s, m);
    for (const auto& a : a_rectangles(rp, sp, m)) {
        auto ca = content(a);
        bool fits = true;
        for (int i = 0; i < m; ++i) fits = fits && ca[i] <= total[i];
        if (!fits) continue;
        for (const auto& b : firsts) {
            auto cb = content(b);
            bool match = true;
            for (int i = 0; i < m; ++i) match = match && ca[i] + cb[i] == total[i];
            if (match && row_insert_a(a, b) == target) found.emplace_back(a, b);
        }
    }
    if (found.size() != 1)
        throw ConsistencyError("r_hat: " + std::to_string(found.size()) + " solutions of the insertion identity");
    return found.front();
}

int h_hat(const ATableau& t, const ATableau& tp) {
    const int r = static_cast<int>(t.size()), s = r ? static_cast<int>(t[0].size()) : 0;
    const int rp = static_cast<int>(tp.size()), sp = rp ? static_cast<int>(tp[0].size()) : 0;
    const int wall = std::max(s, sp);
    int d = 0;
    for (const auto& row : row_insert_a(t, tp)) d += std::max(0, static_cast<int>(row.size()) - wall);
    return d - std::min(r, rp) * std::min(s, sp);
}

}  // namespace dkr
