#include "pairlin/error.hpp"
#include "pairlin/instances.hpp"

namespace pairlin {

DoubledPair::DoubledPair(AlgebraPtr base) : PairAlgebra("doubled:" + base->spec()), base_(std::move(base)) {}

Element DoubledPair::pair(const Element& pos, const Element& neg) const {
    base_->require(pos);
    base_->require(neg);
    return make(std::make_shared<const PairParts>(PairParts{pos, neg}));
}

Element DoubledPair::zero() const { return pair(base_->zero(), base_->zero()); }

Element DoubledPair::one() const { return pair(base_->one(), base_->zero()); }

Element DoubledPair::swap(const Element& b) const {
    require(b);
    return pair(b.parts().neg, b.parts().pos);
}

Element DoubledPair::add(const Element& a, const Element& b) const {
    require(a);
    require(b);
    const auto& x = a.parts();
    const auto& y = b.parts();
    return pair(base_->add(x.pos, y.pos), base_->add(x.neg, y.neg));
}

Element DoubledPair::mul(const Element& a, const Element& b) const {
    require(a);
    require(b);
    const auto& x = a.parts();
    const auto& y = b.parts();
    const auto& B = *base_;
    return pair(B.add(B.mul(x.pos, y.pos), B.mul(x.neg, y.neg)), B.add(B.mul(x.pos, y.neg), B.mul(x.neg, y.pos)));
}

bool DoubledPair::is_tangible(const Element& a) const {
    require(a);
    const auto& x = a.parts();
    const Element z = base_->zero();
    return (base_->is_tangible(x.pos) && x.neg == z) || (x.pos == z && base_->is_tangible(x.neg));
}

bool DoubledPair::is_null(const Element& a) const {
    require(a);
    const auto& x = a.parts();
    // Diagonal elements (b, b) are null as well as those with b1 + b2 null.
    return x.pos == x.neg || base_->is_null(base_->add(x.pos, x.neg));
}

std::optional<Element> DoubledPair::dagger(const Element& a) const {
    if (!is_tangible(a)) return std::nullopt;
    return swap(a);
}

std::optional<Element> DoubledPair::negate(const Element& b) const { return swap(b); }

std::optional<std::vector<Element>> DoubledPair::tangibles() const {
    auto ts = base_->tangibles();
    if (!ts) return std::nullopt;
    std::vector<Element> out;
    for (const auto& a : *ts) out.push_back(pair(a, base_->zero()));
    for (const auto& a : *ts) out.push_back(pair(base_->zero(), a));
    return out;
}

std::optional<std::vector<Element>> DoubledPair::carrier() const {
    auto cs = base_->carrier();
    if (!cs) return std::nullopt;
    std::vector<Element> out;
    for (const auto& a : *cs)
        for (const auto& b : *cs) out.push_back(pair(a, b));
    return out;
}

std::vector<Element> DoubledPair::sample() const {
    if (auto c = carrier()) return *c;
    std::vector<Element> out;
    auto s = base_->sample();
    if (s.size() > 6) s.resize(6);
    for (const auto& a : s)
        for (const auto& b : s) out.push_back(pair(a, b));
    return out;
}

std::optional<Element> DoubledPair::inverse(const Element& a) const {
    if (!is_tangible(a)) return std::nullopt;
    const auto& x = a.parts();
    const Element z = base_->zero();
    if (x.neg == z) {
        auto inv = base_->inverse(x.pos);
        if (!inv) return std::nullopt;
        return pair(*inv, z);
    }
    auto inv = base_->inverse(x.neg);
    if (!inv) return std::nullopt;
    return pair(z, *inv);
}

Element DoubledPair::project(const Element& b) const {
    require(b);
    auto n = base_->negate(b.parts().neg);
    if (!n) throw Error(ErrorCode::NoNegation, base_->spec() + " has no negation map to project onto");
    return base_->add(b.parts().pos, *n);
}

namespace {

std::string wrap(const std::string& s) { return s.find('|') == std::string::npos ? s : "(" + s + ")"; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// Strips one pair of parentheses enclosing the whole literal.
std::string_view unwrap(std::string_view s) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
        if (depth == 0 && i + 1 < s.size()) return s;
    }
    return s.substr(1, s.size() - 2);
}

}  // namespace

std::string DoubledPair::format(const Element& b) const {
    require(b);
    return wrap(base_->format(b.parts().pos)) + "|" + wrap(base_->format(b.parts().neg));
}

Element DoubledPair::parse(std::string_view literal) const {
    std::string_view s = unwrap(literal);
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
        if (depth == 0 && s[i] == '|')
            return pair(base_->parse(unwrap(s.substr(0, i))), base_->parse(unwrap(s.substr(i + 1))));
    }
    throw Error(ErrorCode::BadLiteral, "doubled literal needs 'pos|neg': '" + std::string(literal) + "'");
}

AlgebraPtr make_doubled(AlgebraPtr base) { return base->doubled(); }

}  // namespace pairlin
