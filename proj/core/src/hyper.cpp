#include <algorithm>
#include <bit>
#include <set>

#include "pairlin/error.hpp"
#include "pairlin/instances.hpp"

namespace pairlin {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

template <class F>
void for_each_bit(std::uint64_t mask, F&& f) {
    while (mask) {
        int i = std::countr_zero(mask);
        f(i);
        mask &= mask - 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// Parses "{a,b,...}" (atom names, or atom indices when a token is not a name)
// or a bare atom name into a bitmask.
std::uint64_t parse_set(std::string_view literal, const std::vector<std::string>& names, const std::string& spec) {
    auto bad = [&] { return Error(ErrorCode::BadLiteral, "'" + std::string(literal) + "' is not an element of " + spec); };
    auto lookup = [&](std::string_view tok, bool allow_index) -> int {
        tok = trim(tok);
        auto it = std::find(names.begin(), names.end(), tok);
        if (it != names.end()) return int(it - names.begin());
        if (allow_index && !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            int i = std::stoi(std::string(tok));
            if (i < int(names.size())) return i;
        }
        throw bad();
    };
    std::string_view s = trim(literal);
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
        s = trim(s.substr(1, s.size() - 2));
        std::uint64_t mask = 0;
        while (!s.empty()) {
            auto comma = s.find(',');
            mask |= bit(lookup(s.substr(0, comma), true));
            if (comma == std::string_view::npos) break;
            s = s.substr(comma + 1);
        }
        return mask;
    }
    return bit(lookup(s, false));
}

std::string format_set(std::uint64_t mask, const std::vector<std::string>& names) {
    if (std::popcount(mask) == 1) return names[std::countr_zero(mask)];
    std::string out = "{";
    bool first = true;
    for_each_bit(mask, [&](int i) {
        if (!first) out += ",";
        out += names[i];
        first = false;
    });
    return out + "}";
}

std::string cyclic_name(int k, const char* g) {
    if (k == 0) return "1";
    if (k == 1) return g;
    return std::string(g) + "^" + std::to_string(k);
}

HyperTable blank(std::string spec, std::vector<std::string> names) {
    const std::size_t n = names.size();
    HyperTable t;
    t.spec = std::move(spec);
    t.names = std::move(names);
    t.sum.assign(n, std::vector<std::uint64_t>(n, 0));
    t.mul.assign(n, std::vector<int>(n, 0));
    t.neg.assign(n, 0);
    return t;
}

}  // namespace

HyperPair::HyperPair(HyperTable t) : PairAlgebra(t.spec), t_(std::move(t)) {
    const std::size_t n = t_.names.size();
    if (n < 2 || n > 63) throw Error(ErrorCode::BadSpecifier, t_.spec + ": hypergroup needs 2..63 atoms");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (t_.sum[i][j] == 0) throw Error(ErrorCode::BadSpecifier, t_.spec + ": empty hypersum");
    // Subsets spanned by the singletons under both operations; skipped for
    // large hypergroups, which then have no finite carrier enumeration.
    if (n > 10) return;
    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        seen.insert(bit(int(i)));
        frontier.push_back(bit(int(i)));
    }
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        std::vector<std::uint64_t> all(seen.begin(), seen.end());
        for (auto a : frontier)
            for (auto b : all)
                for (auto c : {add(set(a), set(b)).mask(), mul(set(a), set(b)).mask()})
                    if (seen.insert(c).second) next.push_back(c);
        frontier = std::move(next);
    }
    std::vector<std::uint64_t> masks(seen.begin(), seen.end());
    std::stable_sort(masks.begin(), masks.end(),
                     [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
    for (auto m : masks) carrier_.push_back(set(m));
}

Element HyperPair::add(const Element& a, const Element& b) const {
    require(a);
    require(b);
    std::uint64_t out = 0;
    for_each_bit(a.mask(), [&](int i) { for_each_bit(b.mask(), [&](int j) { out |= t_.sum[i][j]; }); });
    return set(out);
}

Element HyperPair::mul(const Element& a, const Element& b) const {
    require(a);
    require(b);
    std::uint64_t out = 0;
    for_each_bit(a.mask(), [&](int i) { for_each_bit(b.mask(), [&](int j) { out |= bit(t_.mul[i][j]); }); });
    return set(out);
}

bool HyperPair::is_tangible(const Element& a) const {
    require(a);
    return std::popcount(a.mask()) == 1 && !(a.mask() & 1);
}

bool HyperPair::is_null(const Element& a) const {
    require(a);
    return a.mask() & 1;
}

std::optional<Element> HyperPair::dagger(const Element& a) const {
    if (!is_tangible(a)) return std::nullopt;
    return negate(a);
}

std::optional<Element> HyperPair::negate(const Element& b) const {
    require(b);
    std::uint64_t out = 0;
    for_each_bit(b.mask(), [&](int i) { out |= bit(t_.neg[i]); });
    return set(out);
}

std::optional<std::vector<Element>> HyperPair::tangibles() const {
    std::vector<Element> out;
    for (std::size_t i = 1; i < t_.names.size(); ++i) out.push_back(atom(int(i)));
    return out;
}

std::optional<bool> HyperPair::surpasses0_rule(const Element& b1, const Element& b2) const {
    require(b1);
    require(b2);
    return (b1.mask() & ~b2.mask()) == 0;
}

std::string HyperPair::format(const Element& b) const {
    require(b);
    return format_set(b.mask(), t_.names);
}

Element HyperPair::parse(std::string_view literal) const { return set(parse_set(literal, t_.names, spec())); }

KrasnerPair::KrasnerPair(HyperTable t, int p, std::vector<std::vector<int>> cosets)
    : HyperPair(std::move(t)), p_(p), cosets_(std::move(cosets)), atom_of_residue_(p, 0) {
    for (std::size_t a = 0; a < cosets_.size(); ++a)
        for (int r : cosets_[a]) atom_of_residue_[r] = int(a);
}

const std::vector<int>& KrasnerPair::coset(const Element& b) const {
    require(b);
    if (std::popcount(b.mask()) != 1)
        throw Error(ErrorCode::NonTangibleInput, "coset of a non-singleton element in " + spec());
    return cosets_[std::countr_zero(b.mask())];
}

Element KrasnerPair::coset_of(int residue) const { return atom(atom_of_residue_[((residue % p_) + p_) % p_]); }

AlgebraPtr make_krasner(int p, const std::vector<int>& generators) {
    bool prime = p >= 2 && p <= 61;
    for (int d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
    if (!prime) throw Error(ErrorCode::BadSpecifier, "krasner:<p>:<gens> needs a prime p <= 61");
    std::vector<int> group{1};
    for (int g : generators)
        if (((g % p) + p) % p == 0) throw Error(ErrorCode::NotASubgroup, "generator " + std::to_string(g) + " is 0 mod p");
    // Multiplicative closure of the generators.
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t i = 0; i < group.size(); ++i)
            for (int g : generators) {
                int x = int((long(group[i]) * (((g % p) + p) % p)) % p);
                if (std::find(group.begin(), group.end(), x) == group.end()) {
                    group.push_back(x);
                    grew = true;
                }
            }
    }
    std::sort(group.begin(), group.end());
    std::vector<std::vector<int>> cosets{{0}};
    std::vector<int> owner(p, -1);
    owner[0] = 0;
    for (int r = 1; r < p; ++r) {
        if (owner[r] >= 0) continue;
        std::vector<int> c;
        for (int g : group) c.push_back(int((long(r) * g) % p));
        std::sort(c.begin(), c.end());
        for (int x : c) owner[x] = int(cosets.size());
        cosets.push_back(c);
    }
    std::vector<std::string> names;
    for (const auto& c : cosets) names.push_back(std::to_string(c.front()));
    std::string gens;
    for (std::size_t i = 0; i < generators.size(); ++i) gens += (i ? "," : "") + std::to_string(generators[i]);
    auto t = blank("krasner:" + std::to_string(p) + ":" + gens, std::move(names));
    const int n = int(cosets.size());
    for (int i = 0; i < n; ++i) {
        t.neg[i] = owner[(p - cosets[i].front()) % p];
        for (int j = 0; j < n; ++j) {
            for (int x : cosets[i])
                for (int y : cosets[j]) t.sum[i][j] |= bit(owner[(x + y) % p]);
            t.mul[i][j] = owner[int((long(cosets[i].front()) * cosets[j].front()) % p)];
        }
    }
    return std::make_shared<KrasnerPair>(std::move(t), p, std::move(cosets));
}

namespace {

// Atoms 0 (hyperzero) then g^0..g^(n-1) at indices 1..n.
HyperTable cyclic_hyper(const std::string& spec, int n) {
    std::vector<std::string> names{"0"};
    for (int k = 0; k < n; ++k) names.push_back(cyclic_name(k, "g"));
    auto t = blank(spec, std::move(names));
    for (int i = 0; i <= n; ++i) {
        t.neg[i] = i;
        for (int j = 0; j <= n; ++j) t.mul[i][j] = (i == 0 || j == 0) ? 0 : 1 + ((i - 1) + (j - 1)) % n;
    }
    return t;
}

void check_order(int n, int lo, const char* what) {
    if (n < lo || n > 30)
        throw Error(ErrorCode::BadSpecifier, std::string(what) + " needs a group order in " + std::to_string(lo) + "..30");
}

}  // namespace

AlgebraPtr make_hex1(int n) {
    check_order(n, 1, "hyper:hex1");
    auto t = cyclic_hyper("hyper:hex1:" + std::to_string(n), n);
    const std::uint64_t all = bit(n + 1) - 1;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == 0 || j == 0) t.sum[i][j] = bit(i + j);
            else if (i == j) t.sum[i][j] = all & ~bit(i);
            else t.sum[i][j] = bit(i) | bit(j);
        }
    return std::make_shared<HyperPair>(std::move(t));
}

AlgebraPtr make_hex2(int n) {
    check_order(n, 3, "hyper:hex2");
    auto t = cyclic_hyper("hyper:hex2:" + std::to_string(n), n);
    const std::uint64_t all = bit(n + 1) - 1;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == 0 || j == 0) t.sum[i][j] = bit(i + j);
            else if (i == j) t.sum[i][j] = bit(0) | bit(i);
            else t.sum[i][j] = all & ~(bit(0) | bit(i) | bit(j));
        }
    return std::make_shared<HyperPair>(std::move(t));
}

AlgebraPtr make_weaksign(int n) {
    check_order(n, 1, "hyper:weaksign");
    // atom 1 + 2k + s is (g^k, (-1)^s)
    std::vector<std::string> names{"0"};
    for (int k = 0; k < n; ++k) {
        names.push_back("+" + cyclic_name(k, "g"));
        names.push_back("-" + cyclic_name(k, "g"));
    }
    const int size = 2 * n + 1;
    auto t = blank("hyper:weaksign:" + std::to_string(n), std::move(names));
    const std::uint64_t all = bit(size) - 1;
    auto grp = [](int i) { return (i - 1) / 2; };
    auto sgn = [](int i) { return (i - 1) % 2; };
    // x + y is every nonzero atom, and x + (-x) also contains 0; with n = 1 this is {0, 1, -1}
    for (int i = 0; i < size; ++i) t.neg[i] = i == 0 ? 0 : (sgn(i) ? i - 1 : i + 1);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            if (i == 0 || j == 0) {
                t.sum[i][j] = bit(i + j);
                t.mul[i][j] = 0;
                continue;
            }
            t.mul[i][j] = 1 + 2 * ((grp(i) + grp(j)) % n) + (sgn(i) ^ sgn(j));
            t.sum[i][j] = j == t.neg[i] ? all : all & ~bit(0);
        }
    }
    return std::make_shared<HyperPair>(std::move(t));
}

PowersetSymdiff::PowersetSymdiff(int order) : PairAlgebra("powerset-symdiff:" + std::to_string(order)), n_(order) {
    if (order < 1 || order > 20) throw Error(ErrorCode::BadSpecifier, "powerset-symdiff:<n> needs 1 <= n <= 20");
}

Element PowersetSymdiff::add(const Element& a, const Element& b) const {
    require(a);
    require(b);
    return set(a.mask() ^ b.mask());
}

Element PowersetSymdiff::mul(const Element& a, const Element& b) const {
    require(a);
    require(b);
    std::uint64_t out = 0;
    for_each_bit(a.mask(), [&](int i) { for_each_bit(b.mask(), [&](int j) { out ^= bit((i + j) % n_); }); });
    return set(out);
}

bool PowersetSymdiff::is_tangible(const Element& a) const {
    require(a);
    return std::popcount(a.mask()) == 1;
}

bool PowersetSymdiff::is_null(const Element& a) const {
    require(a);
    return a.mask() == 0;
}

std::optional<Element> PowersetSymdiff::dagger(const Element& a) const {
    if (!is_tangible(a)) return std::nullopt;
    return a;
}

std::optional<Element> PowersetSymdiff::negate(const Element& b) const {
    require(b);
    return b;
}

std::optional<std::vector<Element>> PowersetSymdiff::tangibles() const {
    std::vector<Element> out;
    for (int k = 0; k < n_; ++k) out.push_back(group_element(k));
    return out;
}

std::optional<std::vector<Element>> PowersetSymdiff::carrier() const {
    if (n_ > 10) return std::nullopt;
    std::vector<Element> out;
    for (std::uint64_t m = 0; m < bit(n_); ++m) out.push_back(set(m));
    return out;
}

std::string PowersetSymdiff::format(const Element& b) const {
    require(b);
    if (b.mask() == 0) return "0";
    std::vector<std::string> names;
    for (int k = 0; k < n_; ++k) names.push_back(cyclic_name(k, "x"));
    return format_set(b.mask(), names);
}

Element PowersetSymdiff::parse(std::string_view literal) const {
    std::string_view s = trim(literal);
    if (s == "0" || s == "{}") return zero();
    std::vector<std::string> names;
    for (int k = 0; k < n_; ++k) names.push_back(cyclic_name(k, "x"));
    return set(parse_set(s, names, spec()));
}

AlgebraPtr make_powerset_symdiff(int n) { return std::make_shared<PowersetSymdiff>(n); }

}  // namespace pairlin
