#include <charconv>
#include <map>
#include <mutex>

#include "pairlin/error.hpp"
#include "pairlin/instances.hpp"

namespace pairlin {

namespace {

int parse_int(std::string_view s, std::string_view spec) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(ErrorCode::BadSpecifier, "bad integer '" + std::string(s) + "' in '" + std::string(spec) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        auto i = s.find(sep);
        out.push_back(s.substr(0, i));
        if (i == std::string_view::npos) return out;
        s = s.substr(i + 1);
    }
}

AlgebraPtr build(std::string_view spec) {
    auto bad = [&] { return Error(ErrorCode::BadSpecifier, "unknown algebra specifier '" + std::string(spec) + "'"); };
    if (spec == "sign") return make_sign_pair();
    if (spec == "boolean") return make_boolean();
    if (spec == "superboolean") return make_superboolean();
    if (spec == "supertropical") return make_supertropical();
    if (spec.starts_with("doubled:")) return make_pair(spec.substr(8))->doubled();
    auto parts = split(spec, ':');
    const auto& head = parts[0];
    if (head == "counting" && parts.size() == 2) return make_counting(parse_int(parts[1], spec));
    if (head == "npq" && parts.size() == 3) return make_npq(parse_int(parts[1], spec), parse_int(parts[2], spec));
    if (head == "minimal" && parts.size() == 3) {
        Kind k = parts[1] == "first" ? Kind::First : parts[1] == "second" ? Kind::Second : Kind::Unknown;
        if (k == Kind::Unknown) throw bad();
        return make_minimal(k, parse_int(parts[2], spec));
    }
    if (head == "krasner" && parts.size() == 3) {
        std::vector<int> gens;
        for (auto g : split(parts[2], ',')) gens.push_back(parse_int(g, spec));
        return make_krasner(parse_int(parts[1], spec), gens);
    }
    if (head == "hyper" && parts.size() == 3) {
        int n = parse_int(parts[2], spec);
        if (parts[1] == "hex1") return make_hex1(n);
        if (parts[1] == "hex2") return make_hex2(n);
        if (parts[1] == "weaksign") return make_weaksign(n);
        throw bad();
    }
    if (head == "powerset-symdiff" && parts.size() == 2) return make_powerset_symdiff(parse_int(parts[1], spec));
    throw bad();
}

}  // namespace

AlgebraPtr make_pair(std::string_view spec) {
    static std::recursive_mutex mutex;
    static std::map<std::string, AlgebraPtr, std::less<>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(spec); it != cache.end()) return it->second;
    auto alg = build(spec);
    cache.emplace(std::string(spec), alg);
    return alg;
}

const std::vector<RegisteredPair>& registered_pairs() {
    static const std::vector<RegisteredPair> pairs{
        {"sign", "sign semiring {0,1,-1,inf}, null layer {0,inf}"},
        {"boolean", "Boolean semifield {0,1}, null layer {0}"},
        {"superboolean", "super-Boolean {0,1,e} with 1+1 = e"},
        {"supertropical", "max-plus supertropical pair over exact rationals"},
        {"counting:5", "truncated counting pair {0..5}, T = {1}"},
        {"npq:2:3", "N_{2,3} with T = {1}"},
        {"minimal:first:3", "minimal A0-bipotent pair of the first kind over C3"},
        {"minimal:second:2", "minimal A0-bipotent pair of the second kind over C2"},
        {"doubled:boolean", "doubled Boolean pair"},
        {"doubled:sign", "doubled sign pair"},
        {"krasner:5:4", "Krasner quotient F5/{1,4}"},
        {"krasner:7:2", "Krasner quotient F7/{1,2,4}"},
        {"hyper:hex1:2", "hyperfield a+a = H\\{a} over C2"},
        {"hyper:hex1:3", "hyperfield a+a = H\\{a} over C3"},
        {"hyper:hex2:5", "hyperfield a+a = {0,a} over C5"},
        {"hyper:weaksign:2", "weak-sign hyperfield over C2"},
        {"powerset-symdiff:2", "power set of C2 under symmetric difference"},
    };
    return pairs;
}

}  // namespace pairlin
