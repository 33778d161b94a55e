#include "pairlin/error.hpp"
#include "pairlin/instances.hpp"

namespace pairlin {

Supertropical::Supertropical() : PairAlgebra("supertropical") {}

Element Supertropical::value(Layer layer, const Rational& v) const {
    return make(TropValue{layer, layer == Layer::Zero ? Rational(0) : v});
}

Element Supertropical::add(const Element& a, const Element& b) const {
    require(a);
    require(b);
    const auto& x = a.trop();
    const auto& y = b.trop();
    if (x.layer == Layer::Zero) return b;
    if (y.layer == Layer::Zero) return a;
    if (x.value > y.value) return a;
    if (y.value > x.value) return b;
    return ghost(x.value);
}

Element Supertropical::mul(const Element& a, const Element& b) const {
    require(a);
    require(b);
    const auto& x = a.trop();
    const auto& y = b.trop();
    if (x.layer == Layer::Zero || y.layer == Layer::Zero) return zero();
    Layer layer = (x.layer == Layer::Ghost || y.layer == Layer::Ghost) ? Layer::Ghost : Layer::Tangible;
    return value(layer, x.value + y.value);
}

bool Supertropical::is_tangible(const Element& a) const {
    require(a);
    return a.trop().layer == Layer::Tangible;
}

bool Supertropical::is_null(const Element& a) const {
    require(a);
    return a.trop().layer != Layer::Tangible;
}

std::optional<Element> Supertropical::dagger(const Element& a) const {
    if (!is_tangible(a)) return std::nullopt;
    return a;
}

std::optional<Element> Supertropical::negate(const Element& b) const {
    require(b);
    return b;
}

std::vector<Element> Supertropical::sample() const {
    std::vector<Element> out{zero()};
    for (Rational v : {Rational(-1), Rational(0), Rational(1, 2), Rational(2)}) {
        out.push_back(tangible(v));
        out.push_back(ghost(v));
    }
    return out;
}

std::optional<ModulusValue> Supertropical::modulus(const Element& b) const {
    require(b);
    if (b.trop().layer == Layer::Zero) return ModulusValue{};
    return ModulusValue::of(b.trop().value);
}

std::optional<Element> Supertropical::inverse(const Element& a) const {
    if (!is_tangible(a)) return std::nullopt;
    return tangible(-a.trop().value);
}

std::optional<bool> Supertropical::surpasses0_rule(const Element& b1, const Element& b2) const {
    require(b1);
    require(b2);
    if (b1 == b2) return true;
    const auto& x = b1.trop();
    const auto& y = b2.trop();
    // b1 + c with c null only changes b1 into a ghost of value >= its own.
    if (y.layer != Layer::Ghost) return false;
    return x.layer == Layer::Zero || x.value <= y.value;
}

std::optional<Element> Supertropical::tangible_lift(const Element& b) const {
    require(b);
    if (b.trop().layer == Layer::Ghost) return tangible(b.trop().value);
    return b;
}

std::string Supertropical::format(const Element& b) const {
    require(b);
    const auto& x = b.trop();
    switch (x.layer) {
        case Layer::Zero: return "-inf";
        case Layer::Tangible: return format_rational(x.value);
        case Layer::Ghost: return format_rational(x.value) + "g";
    }
    return "?";
}

Element Supertropical::parse(std::string_view literal) const {
    if (literal == "-inf") return zero();
    if (!literal.empty() && literal.back() == 'g') return ghost(parse_rational(literal.substr(0, literal.size() - 1)));
    return tangible(parse_rational(literal));
}

AlgebraPtr make_supertropical() { return std::make_shared<Supertropical>(); }

}  // namespace pairlin
