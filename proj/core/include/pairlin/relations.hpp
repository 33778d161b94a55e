#pragma once

#include <cstddef>
#include <span>

#include "pairlin/algebra.hpp"

namespace pairlin {

// Left fold of add; zero for an empty range.
Element sum(const PairAlgebra& alg, std::span<const Element> terms);
// k-fold sum b + ... + b.
Element multiple(const PairAlgebra& alg, std::size_t k, const Element& b);

// a° = a + a† for tangible a.
Element circ(const PairAlgebra& alg, const Element& a);

struct EElements {
    Element e;
    Element e_prime;
};

// e = 1 + 1†, e' = e + 1.
EElements e_elements(const PairAlgebra& alg);

// b1 + a and b2 + a both null for some a in T0. Exhaustive over a finite T;
// over an infinite T uses b1 (-) b2 null when a negation map is registered.
bool tangibly_balances(const PairAlgebra& alg, const Element& b1, const Element& b2);

// b1 ∇ b2: the first-kind rule for pairs detected as first kind, tangible
// balancing otherwise.
bool balances(const PairAlgebra& alg, const Element& b1, const Element& b2);

// b1 ⪯0 b2: b1 + c = b2 for some null c.
bool surpasses0(const PairAlgebra& alg, const Element& b1, const Element& b2);

}  // namespace pairlin
