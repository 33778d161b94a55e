#include "pairlin/algebra.hpp"

#include <atomic>

#include "pairlin/error.hpp"
#include "pairlin/instances.hpp"

namespace pairlin {

std::string_view to_string(Kind kind) {
    switch (kind) {
        case Kind::First: return "first";
        case Kind::Second: return "second";
        case Kind::Unknown: return "unknown";
    }
    return "unknown";
}

std::strong_ordering operator<=>(const ModulusValue& a, const ModulusValue& b) {
    if (a.bottom || b.bottom) return b.bottom <=> a.bottom;
    if (a.value < b.value) return std::strong_ordering::less;
    if (b.value < a.value) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool operator==(const ModulusValue& a, const ModulusValue& b) { return (a <=> b) == 0; }

ModulusValue operator*(const ModulusValue& a, const ModulusValue& b) {
    if (a.bottom || b.bottom) return {};
    return ModulusValue::of(a.value + b.value);
}

std::optional<ModulusValue> inverse(const ModulusValue& m) {
    if (m.bottom) return std::nullopt;
    return ModulusValue::of(-m.value);
}

std::string format_modulus(const ModulusValue& m) {
    return m.bottom ? std::string("-inf") : format_rational(m.value);
}

namespace {
std::atomic<std::uint32_t> next_algebra_id{1};
}

PairAlgebra::PairAlgebra(std::string spec) : id_(next_algebra_id++), spec_(std::move(spec)) {}

std::optional<Element> PairAlgebra::negate(const Element&) const { return std::nullopt; }

bool PairAlgebra::has_negation() const { return negate(one()).has_value(); }

std::optional<std::vector<Element>> PairAlgebra::tangibles() const { return std::nullopt; }

std::optional<std::vector<Element>> PairAlgebra::carrier() const { return std::nullopt; }

std::vector<Element> PairAlgebra::sample() const {
    if (auto c = carrier()) return *c;
    return {zero(), one()};
}

std::optional<ModulusValue> PairAlgebra::modulus(const Element&) const { return std::nullopt; }

Kind PairAlgebra::declared_kind() const { return Kind::Unknown; }

std::optional<Element> PairAlgebra::inverse(const Element& a) const {
    require(a);
    if (!is_tangible(a)) return std::nullopt;
    auto ts = tangibles();
    if (!ts) return std::nullopt;
    for (const auto& b : *ts)
        if (mul(a, b) == one() && mul(b, a) == one()) return b;
    return std::nullopt;
}

std::optional<bool> PairAlgebra::surpasses0_rule(const Element&, const Element&) const { return std::nullopt; }

std::optional<Element> PairAlgebra::tangible_lift(const Element&) const { return std::nullopt; }

void PairAlgebra::require(const Element& b) const {
    if (b.algebra != id_)
        throw Error(ErrorCode::AlgebraMismatch, "element does not belong to " + spec_);
}

Kind PairAlgebra::kind() const {
    std::call_once(kind_once_, [this] {
        if (is_null(add(one(), one()))) {
            kind_ = Kind::First;
            return;
        }
        std::vector<Element> ts;
        if (auto t = tangibles()) {
            ts = *t;
        } else {
            for (const auto& b : sample())
                if (is_tangible(b)) ts.push_back(b);
        }
        bool second = true;
        for (const auto& a : ts)
            if (is_null(add(a, a))) second = false;
        kind_ = second ? Kind::Second : declared_kind();
    });
    return kind_;
}

AlgebraPtr PairAlgebra::doubled() const {
    std::lock_guard lock(doubled_mutex_);
    // Strong reference: the doubled pair and its base keep each other alive, so
    // elements built through separate calls always share one algebra id.
    if (!doubled_) doubled_ = std::make_shared<DoubledPair>(self());
    return doubled_;
}

}  // namespace pairlin
