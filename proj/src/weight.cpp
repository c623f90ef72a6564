#include "dkr/weight.hpp"

#include <cassert>
#include <sstream>

namespace dkr {

Weight& Weight::operator+=(const Weight& o) {
    assert(c.size() == o.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    assert(c.size() == o.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

Weight operator-(Weight a) {
    for (auto& x : a.c) x = -x;
    return a;
}

std::string Weight::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) os << (c[i] > 0 ? " + " : " - ");
        else if (c[i] < 0) os << "-";
        int a = c[i] < 0 ? -c[i] : c[i];
        if (a != 1) os << a;
        os << "L" << i;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

std::vector<std::vector<int>> cartan_d(int n) {
    // Dynkin diagram: 0-2, 1-2, 2-3, ..., (n-3)-(n-2), (n-2)-(n-1), (n-2)-n.
    std::vector<std::vector<int>> a(n + 1, std::vector<int>(n + 1, 0));
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    for (int i = 0; i <= n; ++i) a[i][i] = 2;
    link(0, 2);
    link(1, 2);
    for (int i = 2; i + 1 <= n - 2; ++i) link(i, i + 1);
    link(n - 2, n - 1);
    link(n - 2, n);
    return a;
}

std::vector<std::vector<int>> cartan_a(int m) {
    std::vector<std::vector<int>> a(m, std::vector<int>(m, 0));
    if (m == 2) return {{2, -2}, {-2, 2}};
    for (int i = 0; i < m; ++i) {
        a[i][i] = 2;
        a[i][(i + 1) % m] = -1;
        a[(i + 1) % m][i] = -1;
    }
    return a;
}

Weight simple_root(const std::vector<std::vector<int>>& cartan, int j) {
    Weight w(cartan.size());
    for (std::size_t i = 0; i < cartan.size(); ++i) w[i] = cartan[i][j];
    return w;
}

int level_d(const Weight& w) {
    const int n = static_cast<int>(w.size()) - 1;
    int lv = w[0] + w[1] + w[n - 1] + w[n];
    for (int i = 2; i <= n - 2; ++i) lv += 2 * w[i];
    return lv;
}

}  // namespace dkr
