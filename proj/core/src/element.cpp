#include "pairlin/element.hpp"

#include <charconv>

#include "pairlin/error.hpp"

namespace pairlin {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonTangibleInput: return "NonTangibleInput";
        case ErrorCode::MissingDagger: return "MissingDagger";
        case ErrorCode::Undecidable: return "Undecidable";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::BadSpecifier: return "BadSpecifier";
        case ErrorCode::BadLiteral: return "BadLiteral";
        case ErrorCode::NotASubgroup: return "NotASubgroup";
        case ErrorCode::NotMetatangible: return "NotMetatangible";
        case ErrorCode::NoPresentation: return "NoPresentation";
        case ErrorCode::Unreachable: return "Unreachable";
        case ErrorCode::SingularInput: return "SingularInput";
        case ErrorCode::NonInvertibleDeterminant: return "NonInvertibleDeterminant";
        case ErrorCode::NoNegation: return "NoNegation";
        case ErrorCode::NotDominantDiagonal: return "NotDominantDiagonal";
        case ErrorCode::NonInvertibleDiagonal: return "NonInvertibleDiagonal";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::NoModulus: return "NoModulus";
        case ErrorCode::NoTangibleLift: return "NoTangibleLift";
        case ErrorCode::DomainEmpty: return "DomainEmpty";
        case ErrorCode::UnknownExample: return "UnknownExample";
        case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    }
    return "Error";
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(ErrorCode::BadLiteral, "not a rational: '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    std::int64_t num = parse_int(text.substr(0, slash), text);
    std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::BadLiteral, "zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

std::strong_ordering compare(const Element& a, const Element& b) {
    if (auto c = a.algebra <=> b.algebra; c != 0) return c;
    if (auto c = a.payload.index() <=> b.payload.index(); c != 0) return c;
    switch (a.payload.index()) {
        case 0: return a.atom() <=> b.atom();
        case 1: {
            const auto& x = a.trop();
            const auto& y = b.trop();
            if (auto c = x.layer <=> y.layer; c != 0) return c;
            if (x.layer == Layer::Zero) return std::strong_ordering::equal;
            if (x.value < y.value) return std::strong_ordering::less;
            if (y.value < x.value) return std::strong_ordering::greater;
            return std::strong_ordering::equal;
        }
        case 2: {
            const auto& x = a.parts();
            const auto& y = b.parts();
            if (auto c = compare(x.pos, y.pos); c != 0) return c;
            return compare(x.neg, y.neg);
        }
        default: return a.mask() <=> b.mask();
    }
}

}  // namespace pairlin
