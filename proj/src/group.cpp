#include "group.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace xprod {

namespace {

// Finds the two-sided identity, or -1.
int find_identity(const std::vector<std::vector<int>>& t) {
    const int n = static_cast<int>(t.size());
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g) ok = t[e][g] == g && t[g][e] == g;
        if (ok) return e;
    }
    return -1;
}

std::string table_violation(const std::vector<std::vector<int>>& t) {
    const int n = static_cast<int>(t.size());
    if (n == 0) return "latin: empty table";
    for (int g = 0; g < n; ++g)
        if (static_cast<int>(t[g].size()) != n) return "latin: table not square";
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (t[g][h] < 0 || t[g][h] >= n) {
                std::ostringstream os;
                os << "latin: entry (" << g << "," << h << ") out of range";
                return os.str();
            }
    for (int g = 0; g < n; ++g) {
        std::vector<bool> row(n, false), col(n, false);
        for (int h = 0; h < n; ++h) {
            if (row[t[g][h]]) return "latin: repeated value in row " + std::to_string(g);
            row[t[g][h]] = true;
            if (col[t[h][g]]) return "latin: repeated value in column " + std::to_string(g);
            col[t[h][g]] = true;
        }
    }
    const int e = find_identity(t);
    if (e < 0) return "identity: no two-sided identity element";
    for (int g = 0; g < n; ++g) {
        bool found = false;
        for (int h = 0; h < n; ++h)
            if (t[g][h] == e && t[h][g] == e) {
                found = true;
                break;
            }
        if (!found) return "inverse: element " + std::to_string(g) + " has no inverse";
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]]) {
                    std::ostringstream os;
                    os << "associativity: (" << a << "*" << b << ")*" << c << " != " << a << "*("
                       << b << "*" << c << ")";
                    return os.str();
                }
    return {};
}

GroupTable finalize(std::vector<std::vector<int>> t) {
    GroupTable g;
    g.n = static_cast<int>(t.size());
    g.table = std::move(t);
    g.inv.assign(g.n, 0);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (g.table[a][b] == 0 && g.table[b][a] == 0) g.inv[a] = b;
    return g;
}

} // namespace

bool GroupTable::is_cyclic_standard() const {
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (table[g][h] != (g + h) % n) return false;
    return true;
}

bool GroupTable::is_abelian() const {
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < g; ++h)
            if (table[g][h] != table[h][g]) return false;
    return true;
}

std::string group_axiom_violation(const GroupTable& g) {
    if (g.n != static_cast<int>(g.table.size())) return "latin: size field disagrees with table";
    std::string v = table_violation(g.table);
    if (!v.empty()) return v;
    if (find_identity(g.table) != 0) return "identity: identity is not index 0";
    if (static_cast<int>(g.inv.size()) != g.n) return "inverse: inverse array has wrong length";
    for (int a = 0; a < g.n; ++a)
        if (g.table[a][g.inv[a]] != 0 || g.table[g.inv[a]][a] != 0)
            return "inverse: inv[" + std::to_string(a) + "] is not an inverse";
    return {};
}

GroupTable make_cyclic(int n) {
    if (n < 1) fail(ErrorCode::invalid_input, "make_cyclic: n must be >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) t[g][h] = (g + h) % n;
    return finalize(std::move(t));
}

GroupTable make_from_table(const std::vector<std::vector<int>>& table) {
    std::string v = table_violation(table);
    if (!v.empty()) fail(ErrorCode::not_a_group, "not a group: " + v);
    const int n = static_cast<int>(table.size());
    const int e = find_identity(table);
    if (e == 0) return finalize(table);
    // Swap labels 0 and e so the identity lands at index 0.
    std::vector<int> relabel(n);
    for (int i = 0; i < n; ++i) relabel[i] = i;
    relabel[0] = e;
    relabel[e] = 0;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[relabel[a]][relabel[b]] = relabel[table[a][b]];
    return finalize(std::move(t));
}

GroupTable direct_product(const GroupTable& g1, const GroupTable& g2) {
    const int n1 = g1.n, n2 = g2.n;
    std::vector<std::vector<int>> t(n1 * n2, std::vector<int>(n1 * n2));
    for (int a1 = 0; a1 < n1; ++a1)
        for (int a2 = 0; a2 < n2; ++a2)
            for (int b1 = 0; b1 < n1; ++b1)
                for (int b2 = 0; b2 < n2; ++b2)
                    t[a1 * n2 + a2][b1 * n2 + b2] = g1.table[a1][b1] * n2 + g2.table[a2][b2];
    return finalize(std::move(t));
}

GroupTable symmetric_3() {
    // Permutations of {0,1,2} listed as e, (12), (13), (23), (123), (132);
    // perm[i] is the image of i, composition is (g*h)(i) = g(h(i)).
    const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, // e
        {1, 0, 2}, // (12)
        {2, 1, 0}, // (13)
        {0, 2, 1}, // (23)
        {1, 2, 0}, // (123): 0->1,1->2,2->0
        {2, 0, 1}, // (132)
    }};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i] == p) return i;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h) {
            std::array<int, 3> comp{};
            for (int i = 0; i < 3; ++i) comp[i] = perms[g][perms[h][i]];
            t[g][h] = index_of(comp);
        }
    return finalize(std::move(t));
}

int element_order(const GroupTable& g, int elem) {
    if (elem < 0 || elem >= g.n) fail(ErrorCode::invalid_input, "element_order: index out of range");
    int acc = elem;
    int k = 1;
    while (acc != 0) {
        acc = g.table[acc][elem];
        ++k;
    }
    return k;
}

} // namespace xprod
