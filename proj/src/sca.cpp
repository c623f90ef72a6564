#include "dkr/sca.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "dkr/error.hpp"
#include "dkr/insertion.hpp"
#include "dkr/one_row.hpp"
#include "dkr/zero_action.hpp"

namespace dkr {

namespace {

const Column kVac{1, 2};

bool is_vac(const Tableau& t) { return t.size() == 1 && t[0] == kVac; }

std::string cell_str(const Tableau& t) { return format_tableau(t); }

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool a1_valid(const std::vector<int>& x, int s) {
    return x.size() == 2 && x[0] >= 0 && x[1] >= 0 && sum(x) == s;
}

// n = 5: columns of a 2-row tableau over {1..4} and the letters they become.
const std::vector<std::pair<std::pair<int, int>, Letter>>& n5_table() {
    static const std::vector<std::pair<std::pair<int, int>, Letter>> t{
        {{1, 2}, 3}, {{1, 3}, 4}, {{2, 3}, 5}, {{1, 4}, -5}, {{2, 4}, -4}, {{3, 4}, -3}};
    return t;
}

Letter shift_up(Letter c) { return c > 0 ? c + 2 : c - 2; }
Letter shift_down(Letter c) { return c > 0 ? c - 2 : c + 2; }

std::vector<int> a1_row(const ATableau& t) { return a_coordinates(t, 2)[0]; }

}  // namespace

ScaState make_state(int n, std::vector<Tableau> cells) {
    if (n < 4) throw DomainError("rank must be at least 4");
    if (cells.empty()) throw DomainError("a state needs at least one cell");
    for (std::size_t k = 0; k < cells.size(); ++k)
        if (!validate_b2(cells[k], n, 1))
            throw DomainError("cell " + std::to_string(k) + " (" + cell_str(cells[k]) + ") is not in B^{2,1}");
    if (!is_vac(cells.back())) throw DomainError("the last cell of a state must be u_1");
    return ScaState{n, std::move(cells)};
}

ScaState vacuum(int n, std::size_t length) { return make_state(n, std::vector<Tableau>(length, u(1))); }

bool is_vacuum(const ScaState& p) { return std::all_of(p.cells.begin(), p.cells.end(), is_vac); }

ScaState pad(const ScaState& p, std::size_t extra) {
    ScaState q = p;
    q.cells.insert(q.cells.end(), extra, u(1));
    return q;
}

B2sB21R carrier_r(int n, int l) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, B2sB21R> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, l});
    if (it == cache.end()) it = cache.emplace(std::make_pair(n, l), B2sB21R(n, l)).first;
    return it->second;
}

Sweep evolve(const ScaState& p, int l) {
    if (l < 1) throw DomainError("carrier capacity must be positive");
    const B2sB21R r = carrier_r(p.n, l);
    Sweep out{ScaState{p.n, {}}, 0};
    out.next.cells.reserve(p.cells.size());
    Tableau c = u(l);
    for (const auto& b : p.cells) {
        const RImage& img = r(c, b);
        out.next.cells.push_back(img.first);
        c = img.second;
        out.energy -= img.energy;
    }
    if (c != u(l))
        throw BoundaryError("T_" + std::to_string(l) + ": carrier leaves the right edge as " + format_tableau(c) +
                            "; pad the state with more vacuum");
    return out;
}

int state_energy(const ScaState& p, int l) {
    if (l < 1) throw DomainError("carrier capacity must be positive");
    const B2sB21R r = carrier_r(p.n, l);
    const Tableau ul = u(l), u1 = u(1);
    Tableau c = ul;
    int e = 0;
    for (const auto& b : p.cells) {
        const RImage& img = r(c, b);
        c = img.second;
        e -= img.energy;
    }
    // a loaded carrier unloads at least one box per vacuum cell
    for (int extra = 0; c != ul; ++extra) {
        if (extra > 2 * l + 2) throw ConsistencyError("state_energy: carrier does not return to u_l");
        const RImage& img = r(c, u1);
        c = img.second;
        e -= img.energy;
    }
    return e;
}

NaturalSweep evolve_natural(const ScaState& p) {
    NaturalSweep out{ScaState{p.n, {}}, 1};
    out.next.cells.reserve(p.cells.size());
    for (const auto& b : p.cells) {
        auto [t, letter] = r_b11_b21(out.emitted, b, p.n);
        out.next.cells.push_back(t);
        out.emitted = letter;
    }
    return out;
}

std::optional<ScaState> state_e(int i, const ScaState& p) {
    auto c = tensor_e(KRCrystal(p.n, 1), i, p.cells);
    if (!c) return std::nullopt;
    return ScaState{p.n, std::move(*c)};
}

std::optional<ScaState> state_f(int i, const ScaState& p) {
    auto c = tensor_f(KRCrystal(p.n, 1), i, p.cells);
    if (!c) return std::nullopt;
    return ScaState{p.n, std::move(*c)};
}

int payload_length(const SolitonPayload& b) { return sum(b.top); }

bool payload_valid(const SolitonPayload& b, int n) {
    const int s = payload_length(b);
    if (s < 1 || !a1_valid(b.top, s)) return false;
    if (n == 4) return b.rest.size() == 2 && a1_valid(b.rest[0], s) && a1_valid(b.rest[1], s);
    if (n == 5) {
        if (b.rest.size() != 2 || b.rest[0].size() != 4 || b.rest[1].size() != 4) return false;
        for (const auto& row : b.rest)
            if (sum(row) != s || std::any_of(row.begin(), row.end(), [](int v) { return v < 0; })) return false;
        return a_valid(a_from_coordinates(b.rest), 4);
    }
    if (n > 5) return b.rest.size() == 1 && OneRowCrystal(n - 2, s).contains(b.rest[0]);
    return false;
}

std::string format_payload(const SolitonPayload& b) {
    auto vec = [](const std::vector<int>& v) {
        std::string s = "(";
        for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
        return s + ")";
    };
    std::string s = "(" + vec(b.top);
    if (b.rest.size() == 2 && b.rest[0].size() == 4) {
        s += ",(" + vec(b.rest[0]) + "," + vec(b.rest[1]) + ")";
    } else {
        for (const auto& v : b.rest) s += "," + vec(v);
    }
    return s + ")";
}

std::vector<Tableau> i_s(const SolitonPayload& b, int n) {
    if (!payload_valid(b, n)) throw DomainError("i_s: invalid payload " + format_payload(b));
    const int s = payload_length(b);
    Word bottom;  // left to right
    if (n == 4) {
        const int y1 = b.rest[0][0], x1 = b.rest[1][0];
        bottom.insert(bottom.end(), s - std::max(x1, y1), -3);
        bottom.insert(bottom.end(), std::max(x1 - y1, 0), -4);
        bottom.insert(bottom.end(), std::max(y1 - x1, 0), 4);
        bottom.insert(bottom.end(), std::min(x1, y1), 3);
    } else if (n == 5) {
        const ATableau t = a_from_coordinates(b.rest);
        for (int j = s - 1; j >= 0; --j) {
            const std::pair<int, int> col{t[0][j], t[1][j]};
            const auto& tab = n5_table();
            auto it = std::find_if(tab.begin(), tab.end(), [&](const auto& e) { return e.first == col; });
            bottom.push_back(it->second);
        }
    } else {
        Word w = one_row_letters(b.rest[0], n - 2);
        for (auto it = w.rbegin(); it != w.rend(); ++it) bottom.push_back(shift_up(*it));
    }
    std::vector<Tableau> cells;
    for (int k = 0; k < s; ++k) cells.push_back(Tableau{{k < b.top[1] ? 2 : 1, bottom[k]}});
    return cells;
}

bool is_soliton_pattern(const std::vector<Tableau>& cells, int n) {
    if (cells.empty()) return false;
    bool seen_one = false;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (cells[k].size() != 1) return false;
        const Column c = cells[k][0];
        if (c.top == 1) seen_one = true;
        else if (c.top != 2 || seen_one) return false;
        const Letter b = c.bottom;
        if (!is_letter(b, n) || b == 1 || b == 2 || b == -2 || b == -1) return false;
        if (k > 0 && !leq(b, cells[k - 1][0].bottom, n)) return false;
    }
    return true;
}

SolitonPayload i_s_inverse(const std::vector<Tableau>& cells, int n) {
    if (!is_soliton_pattern(cells, n)) throw DomainError("i_s_inverse: cells do not form a soliton");
    const int s = static_cast<int>(cells.size());
    SolitonPayload b;
    const int twos = static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const Tableau& t) { return t[0].top == 2; }));
    b.top = {s - twos, twos};
    Word bottom;
    for (const auto& t : cells) bottom.push_back(t[0].bottom);
    if (n == 4) {
        auto cnt = [&](Letter a) { return static_cast<int>(std::count(bottom.begin(), bottom.end(), a)); };
        const int x1 = cnt(3) + cnt(-4), y1 = cnt(3) + cnt(4);
        b.rest = {{y1, s - y1}, {x1, s - x1}};
    } else if (n == 5) {
        ATableau t(2);
        for (auto it = bottom.rbegin(); it != bottom.rend(); ++it) {
            const auto& tab = n5_table();
            auto jt = std::find_if(tab.begin(), tab.end(), [&](const auto& e) { return e.second == *it; });
            if (jt == tab.end()) throw DomainError("i_s_inverse: letter " + letter_str(*it) + " has no column");
            t[0].push_back(jt->first.first);
            t[1].push_back(jt->first.second);
        }
        if (!a_valid(t, 4)) throw DomainError("i_s_inverse: columns do not form a tableau");
        b.rest = a_coordinates(t, 4);
    } else {
        Word w;
        for (auto it = bottom.rbegin(); it != bottom.rend(); ++it) w.push_back(shift_down(*it));
        b.rest = {one_row_from_letters(w, n - 2)};
    }
    if (i_s(b, n) != cells) throw ConsistencyError("i_s_inverse: round trip failed");
    return b;
}

Detection detect_solitons(const ScaState& p) {
    Detection d;
    std::size_t k = 0;
    while (k < p.cells.size()) {
        if (is_vac(p.cells[k])) {
            ++k;
            continue;
        }
        std::size_t end = k;
        while (end < p.cells.size() && !is_vac(p.cells[end])) ++end;
        std::vector<Tableau> run(p.cells.begin() + static_cast<std::ptrdiff_t>(k),
                                 p.cells.begin() + static_cast<std::ptrdiff_t>(end));
        if (is_soliton_pattern(run, p.n)) {
            d.solitons.push_back(Soliton{static_cast<int>(k), i_s_inverse(run, p.n)});
        } else if (d.clean) {
            d.clean = false;
            std::string cells;
            for (const auto& t : run) cells += " " + cell_str(t);
            d.problem = "cells " + std::to_string(k) + ".." + std::to_string(end - 1) + " are not a soliton:" + cells;
        }
        k = end;
    }
    return d;
}

Label label_of(const Soliton& s, int r, int t) {
    return Label{std::min(r, s.length()) * t - s.position, s.payload};
}

std::string format_label(const Label& x) { return "z^" + std::to_string(x.mode) + format_payload(x.elem); }

PayloadImage r_payload(const SolitonPayload& b1, const SolitonPayload& b2, int n) {
    if (!payload_valid(b1, n) || !payload_valid(b2, n))
        throw DomainError("r_payload: invalid payload " + format_payload(b1) + " or " + format_payload(b2));
    PayloadImage img;
    auto a1 = [&](const std::vector<int>& x, const std::vector<int>& y, std::vector<int>& fx, std::vector<int>& fy) {
        const ATableau t = a_from_coordinates({x}), tp = a_from_coordinates({y});
        auto [a, b] = r_hat(t, tp, 2);
        fx = a1_row(a);
        fy = a1_row(b);
        img.energy += h_hat(t, tp);
    };
    a1(b1.top, b2.top, img.first.top, img.second.top);
    if (n == 4) {
        img.first.rest.resize(2);
        img.second.rest.resize(2);
        for (int k = 0; k < 2; ++k) a1(b1.rest[k], b2.rest[k], img.first.rest[k], img.second.rest[k]);
    } else if (n == 5) {
        const ATableau t = a_from_coordinates(b1.rest), tp = a_from_coordinates(b2.rest);
        auto [a, b] = r_hat(t, tp, 4);
        img.first.rest = a_coordinates(a, 4);
        img.second.rest = a_coordinates(b, 4);
        img.energy += h_hat(t, tp);
    } else {
        OneRowImage d = r_one_row(b1.rest[0], b2.rest[0], n - 2);
        img.first.rest = {d.first};
        img.second.rest = {d.second};
        img.energy += d.energy;
    }
    return img;
}

int shifted_energy(const SolitonPayload& b1, const SolitonPayload& b2, int n) {
    return 2 * payload_length(b2) + r_payload(b1, b2, n).energy;
}

std::pair<Label, Label> r_aff_labels(const Label& x, const Label& y, int n) {
    PayloadImage img = r_payload(x.elem, y.elem, n);
    return r_aff(x, y, img.first, img.second, 2 * payload_length(y.elem) + img.energy);
}

ScatterReport scatter_experiment(const ScaState& p, int r, int t_max) {
    ScatterReport rep;
    rep.n = p.n;
    rep.carrier = r;
    Detection d0 = detect_solitons(p);
    if (!d0.clean || d0.solitons.size() != 2) throw DomainError("scatter_experiment: not a two-soliton state");
    const Soliton& fast = d0.solitons[0];
    const Soliton& slow = d0.solitons[1];
    const int s1 = fast.length(), s2 = slow.length();
    if (s1 <= s2) throw DomainError("scatter_experiment: the longer soliton must be on the left");
    if (r <= s2) throw DomainError("scatter_experiment: carrier must exceed the shorter length");
    rep.initial = {label_of(fast, r, 0), label_of(slow, r, 0)};
    rep.predicted = r_aff_labels(rep.initial.first, rep.initial.second, p.n);
    rep.trace.push_back(p);

    // labels of a separated state in swapped order, if it is one
    auto swapped = [&](const ScaState& q, int t) -> std::optional<std::pair<Label, Label>> {
        Detection d = detect_solitons(q);
        if (!d.clean || d.solitons.size() != 2) return std::nullopt;
        if (d.solitons[0].length() != s2 || d.solitons[1].length() != s1) return std::nullopt;
        return std::make_pair(label_of(d.solitons[0], r, t), label_of(d.solitons[1], r, t));
    };
    std::optional<std::pair<Label, Label>> prev;
    for (int t = 1; t <= t_max; ++t) {
        rep.trace.push_back(evolve(rep.trace.back(), r).next);
        auto cur = swapped(rep.trace.back(), t);
        if (cur && prev && *cur == *prev) {
            rep.observed = *cur;
            rep.separated_at = t;
            rep.shift_slow = rep.observed.first.mode - rep.initial.second.mode;
            rep.shift_fast = rep.initial.first.mode - rep.observed.second.mode;
            return rep;
        }
        prev = cur;
    }
    throw DomainError("scatter_experiment: no separation within " + std::to_string(t_max) + " steps");
}

std::string format_state(const ScaState& p) {
    std::vector<std::string> top, bottom;
    for (const auto& t : p.cells) {
        if (t.empty()) {
            top.push_back("e");
            bottom.push_back("e");
        } else {
            top.push_back(letter_str(t[0].top));
            bottom.push_back(letter_str(t[0].bottom));
        }
    }
    std::ostringstream a, b;
    for (std::size_t k = 0; k < top.size(); ++k) {
        const std::size_t w = std::max(top[k].size(), bottom[k].size());
        if (k) {
            a << ' ';
            b << ' ';
        }
        a << std::string(w - top[k].size(), ' ') << top[k];
        b << std::string(w - bottom[k].size(), ' ') << bottom[k];
    }
    return a.str() + "\n" + b.str() + "\n";
}

ScaState parse_state(const std::string& text, int n, bool allow_empty) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string s; ls >> s;) tok.push_back(s);
        if (!tok.empty()) rows.push_back(tok);
    }
    if (rows.size() != 2) throw DomainError("a state is two lines of letters");
    if (rows[0].size() != rows[1].size()) throw DomainError("the two rows of a state differ in length");
    std::vector<Tableau> cells;
    for (std::size_t k = 0; k < rows[0].size(); ++k) {
        const bool e0 = rows[0][k] == "e", e1 = rows[1][k] == "e";
        if (e0 || e1) {
            if (!(e0 && e1)) throw DomainError("cell " + std::to_string(k) + ": 'e' must fill both rows");
            if (!allow_empty) throw DomainError("cell " + std::to_string(k) + ": empty cells are not allowed in states");
            cells.push_back(Tableau{});
        } else {
            cells.push_back(Tableau{{parse_letter(rows[0][k]), parse_letter(rows[1][k])}});
        }
    }
    return make_state(n, std::move(cells));
}

Trace run_trace(const ScaState& p, int l, int steps) {
    if (steps < 0) throw DomainError("number of steps must be nonnegative");
    Trace tr{p.n, l, {p}, {}};
    for (int t = 0; t < steps; ++t) {
        Sweep sw = evolve(tr.states.back(), l);
        tr.energies.push_back(sw.energy);
        tr.states.push_back(std::move(sw.next));
    }
    tr.energies.push_back(state_energy(tr.states.back(), l));
    return tr;
}

std::string trace_to_json(const Trace& tr) {
    nlohmann::json j;
    j["n"] = tr.n;
    j["L"] = tr.states.empty() ? 0 : tr.states.front().cells.size();
    j["carrier"] = tr.carrier;
    j["steps"] = nlohmann::json::array();
    for (std::size_t t = 0; t < tr.states.size(); ++t) {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& c : tr.states[t].cells)
            cells.push_back(c.empty() ? nlohmann::json::array() : nlohmann::json::array({c[0].top, c[0].bottom}));
        j["steps"].push_back({{"t", t}, {"cells", cells}, {"energy", tr.energies.at(t)}});
    }
    return j.dump();
}

Trace trace_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        Trace tr;
        tr.n = j.at("n").get<int>();
        tr.carrier = j.at("carrier").get<int>();
        const std::size_t len = j.at("L").get<std::size_t>();
        for (const auto& step : j.at("steps")) {
            std::vector<Tableau> cells;
            for (const auto& c : step.at("cells")) {
                if (c.empty()) cells.push_back(Tableau{});
                else cells.push_back(Tableau{{c.at(0).get<int>(), c.at(1).get<int>()}});
            }
            if (cells.size() != len) throw DomainError("trace step has " + std::to_string(cells.size()) + " cells, expected L");
            tr.states.push_back(make_state(tr.n, std::move(cells)));
            tr.energies.push_back(step.at("energy").get<int>());
        }
        return tr;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("bad trace JSON: ") + e.what());
    }
}

}  // namespace dkr
