#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairlin/element.hpp"

namespace pairlin {

enum class Kind { First, Second, Unknown };

std::string_view to_string(Kind kind);

// Value of the modulus in a totally ordered monoid written additively
// (max-plus); `bottom` is the image of the zero element.
struct ModulusValue {
    bool bottom = true;
    Rational value{0};

    static ModulusValue of(const Rational& v) { return {false, v}; }
};

std::strong_ordering operator<=>(const ModulusValue& a, const ModulusValue& b);
bool operator==(const ModulusValue& a, const ModulusValue& b);
ModulusValue operator*(const ModulusValue& a, const ModulusValue& b);
std::optional<ModulusValue> inverse(const ModulusValue& m);
std::string format_modulus(const ModulusValue& m);

class PairAlgebra;
using AlgebraPtr = std::shared_ptr<const PairAlgebra>;

// Descriptor of a pair (A, A0) over a tangible set T. Instances are immutable
// after construction and must be owned by a shared_ptr.
class PairAlgebra : public std::enable_shared_from_this<PairAlgebra> {
public:
    explicit PairAlgebra(std::string spec);
    virtual ~PairAlgebra() = default;

    PairAlgebra(const PairAlgebra&) = delete;
    PairAlgebra& operator=(const PairAlgebra&) = delete;

    std::uint32_t id() const { return id_; }
    const std::string& spec() const { return spec_; }

    virtual Element zero() const = 0;
    virtual Element one() const = 0;
    virtual Element add(const Element& a, const Element& b) const = 0;
    virtual Element mul(const Element& a, const Element& b) const = 0;
    virtual bool is_tangible(const Element& a) const = 0;
    virtual bool is_null(const Element& a) const = 0;

    // Canonical Property N witness for a tangible element; nullopt if none.
    virtual std::optional<Element> dagger(const Element& a) const = 0;
    // Negation map, if the instance registers one.
    virtual std::optional<Element> negate(const Element& b) const;
    bool has_negation() const;

    virtual std::optional<std::vector<Element>> tangibles() const;
    virtual std::optional<std::vector<Element>> carrier() const;
    // Finite sample used by audits when the carrier is infinite.
    virtual std::vector<Element> sample() const;

    virtual std::optional<ModulusValue> modulus(const Element& b) const;
    virtual Kind declared_kind() const;
    // Multiplicative inverse of a tangible element; default searches tangibles().
    virtual std::optional<Element> inverse(const Element& a) const;
    // Rule-backed decision of b1 + c = b2 for some null c; nullopt when no rule.
    virtual std::optional<bool> surpasses0_rule(const Element& b1, const Element& b2) const;
    // Canonical tangible element below a given element in the modulus fiber.
    virtual std::optional<Element> tangible_lift(const Element& b) const;

    virtual std::string format(const Element& b) const = 0;
    virtual Element parse(std::string_view literal) const = 0;

    bool owns(const Element& b) const { return b.algebra == id_; }
    void require(const Element& b) const;

    // Kind detection, computed once: 1 + 1 null => First; otherwise Second if
    // a + a is never null over the tangible enumeration (or sample).
    Kind kind() const;
    // The doubled pair over this algebra; always the same instance.
    AlgebraPtr doubled() const;
    AlgebraPtr self() const { return shared_from_this(); }

protected:
    Element make(Element::Payload payload) const { return Element{id_, std::move(payload)}; }

private:
    std::uint32_t id_;
    std::string spec_;
    mutable std::once_flag kind_once_;
    mutable Kind kind_ = Kind::Unknown;
    mutable std::mutex doubled_mutex_;
    mutable AlgebraPtr doubled_;
};

}  // namespace pairlin
