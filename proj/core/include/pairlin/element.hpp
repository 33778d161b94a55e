#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include <boost/rational.hpp>

namespace pairlin {

using Rational = boost::rational<std::int64_t>;

std::string format_rational(const Rational& r);
// Accepts "3", "-7", "3/4". Throws Error(BadLiteral) on anything else.
Rational parse_rational(std::string_view text);

enum class Layer : std::uint8_t { Zero, Tangible, Ghost };

struct TropValue {
    Layer layer = Layer::Zero;
    Rational value{0};
};

struct PairParts;

// A value owned by one algebra. The payload is interpreted only by that algebra:
//   int32   - atom index into a finite table
//   Trop    - supertropical layer + exact rational
//   parts   - doubled element (pos, neg)
//   uint64  - subset bitmask (hyperpairs, power-set pairs)
struct Element {
    using Parts = std::shared_ptr<const PairParts>;
    using Payload = std::variant<std::int32_t, TropValue, Parts, std::uint64_t>;

    std::uint32_t algebra = 0;
    Payload payload{std::int32_t{0}};

    std::int32_t atom() const { return std::get<std::int32_t>(payload); }
    const TropValue& trop() const { return std::get<TropValue>(payload); }
    const PairParts& parts() const { return *std::get<Parts>(payload); }
    std::uint64_t mask() const { return std::get<std::uint64_t>(payload); }
};

struct PairParts {
    Element pos;
    Element neg;
};

std::strong_ordering compare(const Element& a, const Element& b);

inline bool operator==(const Element& a, const Element& b) { return compare(a, b) == 0; }
inline std::strong_ordering operator<=>(const Element& a, const Element& b) { return compare(a, b); }

}  // namespace pairlin
