#include <algorithm>

#include "pairlin/error.hpp"
#include "pairlin/instances.hpp"

namespace pairlin {

TablePair::TablePair(TableSpec t) : PairAlgebra(t.spec), t_(std::move(t)) {
    const std::size_t n = t_.names.size();
    bool ok = n >= 2 && t_.add.size() == n && t_.mul.size() == n && t_.tangible.size() == n &&
              t_.null.size() == n && t_.dagger.size() == n && (t_.negation.empty() || t_.negation.size() == n);
    for (std::size_t i = 0; ok && i < n; ++i) {
        ok = t_.add[i].size() == n && t_.mul[i].size() == n;
        for (std::size_t j = 0; ok && j < n; ++j)
            ok = t_.add[i][j] >= 0 && t_.add[i][j] < int(n) && t_.mul[i][j] >= 0 && t_.mul[i][j] < int(n);
    }
    if (!ok) throw Error(ErrorCode::BadSpecifier, "malformed table for " + t_.spec);
}

int TablePair::index(const Element& b) const {
    require(b);
    return b.atom();
}

Element TablePair::add(const Element& a, const Element& b) const { return atom(t_.add[index(a)][index(b)]); }

Element TablePair::mul(const Element& a, const Element& b) const { return atom(t_.mul[index(a)][index(b)]); }

bool TablePair::is_tangible(const Element& a) const { return t_.tangible[index(a)]; }

bool TablePair::is_null(const Element& a) const { return t_.null[index(a)]; }

std::optional<Element> TablePair::dagger(const Element& a) const {
    int i = index(a);
    if (!t_.tangible[i] || t_.dagger[i] < 0) return std::nullopt;
    return atom(t_.dagger[i]);
}

std::optional<Element> TablePair::negate(const Element& b) const {
    int i = index(b);
    if (t_.negation.empty()) return std::nullopt;
    return atom(t_.negation[i]);
}

std::optional<std::vector<Element>> TablePair::tangibles() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < t_.names.size(); ++i)
        if (t_.tangible[i]) out.push_back(atom(int(i)));
    return out;
}

std::optional<std::vector<Element>> TablePair::carrier() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < t_.names.size(); ++i) out.push_back(atom(int(i)));
    return out;
}

std::string TablePair::format(const Element& b) const { return t_.names[index(b)]; }

Element TablePair::parse(std::string_view literal) const {
    auto it = std::find(t_.names.begin(), t_.names.end(), literal);
    if (it == t_.names.end())
        throw Error(ErrorCode::BadLiteral, "'" + std::string(literal) + "' is not an element of " + spec());
    return atom(int(it - t_.names.begin()));
}

namespace {

TableSpec blank(std::string spec, std::vector<std::string> names) {
    const std::size_t n = names.size();
    TableSpec t;
    t.spec = std::move(spec);
    t.names = std::move(names);
    t.add.assign(n, std::vector<int>(n, 0));
    t.mul.assign(n, std::vector<int>(n, 0));
    t.tangible.assign(n, false);
    t.null.assign(n, false);
    t.dagger.assign(n, -1);
    return t;
}

// Single-tangible pairs built on a quotient of N: dagger(1) = 1 when 1 + 1 is null.
void finish_single_tangible(TableSpec& t) {
    if (t.null[t.add[1][1]]) {
        t.dagger[1] = 1;
        t.negation.resize(t.names.size());
        for (std::size_t i = 0; i < t.names.size(); ++i) t.negation[i] = int(i);
    }
}

}  // namespace

AlgebraPtr make_table_pair(TableSpec t) { return std::make_shared<TablePair>(std::move(t)); }

AlgebraPtr make_sign_pair() {
    // 0, 1, -1, inf
    auto t = blank("sign", {"0", "1", "-1", "inf"});
    t.add = {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
    t.mul = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 3, 3}};
    t.tangible = {false, true, true, false};
    t.null = {true, false, false, true};
    t.dagger = {-1, 2, 1, -1};
    t.negation = {0, 2, 1, 3};
    t.kind = Kind::Second;
    return make_table_pair(std::move(t));
}

AlgebraPtr make_boolean() {
    auto t = blank("boolean", {"0", "1"});
    t.add = {{0, 1}, {1, 1}};
    t.mul = {{0, 0}, {0, 1}};
    t.tangible = {false, true};
    t.null = {true, false};
    t.kind = Kind::Second;
    return make_table_pair(std::move(t));
}

AlgebraPtr make_superboolean() {
    auto t = blank("superboolean", {"0", "1", "e"});
    t.add = {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}};
    t.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
    t.tangible = {false, true, false};
    t.null = {true, false, true};
    t.dagger = {-1, 1, -1};
    t.negation = {0, 1, 2};
    t.kind = Kind::First;
    return make_table_pair(std::move(t));
}

AlgebraPtr make_counting(int q) {
    if (q < 2 || q > 1000) throw Error(ErrorCode::BadSpecifier, "counting:<q> needs 2 <= q <= 1000");
    std::vector<std::string> names;
    for (int i = 0; i <= q; ++i) names.push_back(std::to_string(i));
    auto t = blank("counting:" + std::to_string(q), std::move(names));
    for (int i = 0; i <= q; ++i)
        for (int j = 0; j <= q; ++j) {
            t.add[i][j] = std::min(i + j, q);
            t.mul[i][j] = std::min(i * j, q);
        }
    t.tangible[1] = true;
    t.null[0] = t.null[q] = true;
    finish_single_tangible(t);
    return make_table_pair(std::move(t));
}

AlgebraPtr make_npq(int p, int q) {
    if (p < 1 || q < 0 || p + q < 2 || p + q > 1000)
        throw Error(ErrorCode::BadSpecifier, "npq:<p>:<q> needs p >= 1, q >= 0, 2 <= p+q <= 1000");
    const int size = p + q;
    auto reduce = [&](long k) { return k < size ? int(k) : int(q + (k - q) % p); };
    std::vector<std::string> names;
    for (int i = 0; i < size; ++i) names.push_back(std::to_string(i));
    auto t = blank("npq:" + std::to_string(p) + ":" + std::to_string(q), std::move(names));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            t.add[i][j] = reduce(long(i) + j);
            t.mul[i][j] = reduce(long(i) * j);
        }
    t.tangible[1] = true;
    for (int i = 0; i < size; ++i) t.null[i] = i != 1;
    finish_single_tangible(t);
    return make_table_pair(std::move(t));
}

AlgebraPtr make_minimal(Kind kind, int n) {
    if (n < 1 || n > 60 || kind == Kind::Unknown)
        throw Error(ErrorCode::BadSpecifier, "minimal:<first|second>:<n> needs 1 <= n <= 60");
    // atoms: 0, g^0 .. g^(n-1), inf
    std::vector<std::string> names{"0"};
    for (int k = 0; k < n; ++k) names.push_back(k == 0 ? "1" : k == 1 ? "g" : "g^" + std::to_string(k));
    names.push_back("inf");
    const int inf = n + 1;
    auto t = blank("minimal:" + std::string(kind == Kind::First ? "first" : "second") + ":" + std::to_string(n),
                   std::move(names));
    for (int i = 0; i <= inf; ++i)
        for (int j = 0; j <= inf; ++j) {
            if (i == 0 || j == 0) {
                t.add[i][j] = i + j;
                t.mul[i][j] = 0;
            } else if (i == inf || j == inf) {
                t.add[i][j] = inf;
                t.mul[i][j] = inf;
            } else {
                t.add[i][j] = (i == j && kind == Kind::Second) ? i : inf;
                t.mul[i][j] = 1 + ((i - 1) + (j - 1)) % n;
            }
        }
    for (int i = 1; i <= n; ++i) t.tangible[i] = true;
    t.null[0] = t.null[inf] = true;
    auto shift = [&](int i, int s) { return 1 + ((i - 1) + s) % n; };
    if (kind == Kind::First) {
        for (int i = 1; i <= n; ++i) t.dagger[i] = i;
        t.negation.resize(inf + 1);
        for (int i = 0; i <= inf; ++i) t.negation[i] = i;
    } else if (n >= 2) {
        for (int i = 1; i <= n; ++i) t.dagger[i] = shift(i, 1);
        if (n % 2 == 0) {
            t.negation.resize(inf + 1);
            t.negation[0] = 0;
            t.negation[inf] = inf;
            for (int i = 1; i <= n; ++i) t.negation[i] = shift(i, n / 2);
        }
    }
    t.kind = kind;
    return make_table_pair(std::move(t));
}

}  // namespace pairlin
