#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pairlin/algebra.hpp"

namespace pairlin {

struct CharacteristicProfile {
    bool finite = false;
    bool capped = false;  // iteration cap reached; reported as characteristic zero
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t m = 0;  // least multiple of p that is >= max(q, 1)
};

CharacteristicProfile characteristic(const PairAlgebra& alg, std::uint64_t cap = 1'000'000);

// Minimal number of tangible summands giving c (0 for zero). Breadth-first over
// sums; over an infinite T the search uses the sample tangibles and the lift of c.
std::size_t height(const PairAlgebra& alg, const Element& c);

enum class PresentationForm { Tangible, QuasiZero, Multiple };

std::string_view to_string(PresentationForm form);

struct UniformPresentation {
    Element base;
    std::size_t multiplicity = 1;
    PresentationForm form = PresentationForm::Tangible;
};

UniformPresentation uniform_presentation(const PairAlgebra& alg, const Element& c);
// Re-sums a presentation: m * base, or base + base† for quasi-zeros.
Element reconstruct(const PairAlgebra& alg, const UniformPresentation& p);

struct AuditFlag {
    std::string name;
    bool holds = true;
    std::string witness;  // counterexample when !holds
};

struct AuditReport {
    std::string spec;
    bool sample_only = false;
    Kind detected_kind = Kind::Unknown;
    Kind declared_kind = Kind::Unknown;
    bool kind_mismatch = false;
    std::size_t dagger_multiplicity = 0;  // tangible b with 1 + b null
    std::vector<AuditFlag> flags;

    const AuditFlag& flag(std::string_view name) const;
    bool holds(std::string_view name) const { return flag(name).holds; }
};

AuditReport axiom_audit(const PairAlgebra& alg);

}  // namespace pairlin
