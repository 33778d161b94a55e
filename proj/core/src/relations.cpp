#include "pairlin/relations.hpp"

#include "pairlin/error.hpp"

namespace pairlin {

Element sum(const PairAlgebra& alg, std::span<const Element> terms) {
    Element acc = alg.zero();
    for (const auto& t : terms) acc = alg.add(acc, t);
    return acc;
}

Element multiple(const PairAlgebra& alg, std::size_t k, const Element& b) {
    Element acc = alg.zero();
    for (std::size_t i = 0; i < k; ++i) acc = alg.add(acc, b);
    return acc;
}

Element circ(const PairAlgebra& alg, const Element& a) {
    alg.require(a);
    if (!alg.is_tangible(a))
        throw Error(ErrorCode::NonTangibleInput, "circ of non-tangible " + alg.format(a) + " in " + alg.spec());
    auto d = alg.dagger(a);
    if (!d) throw Error(ErrorCode::MissingDagger, alg.spec() + " has no Property N witness for " + alg.format(a));
    return alg.add(a, *d);
}

EElements e_elements(const PairAlgebra& alg) {
    Element e = circ(alg, alg.one());
    return {e, alg.add(e, alg.one())};
}

bool tangibly_balances(const PairAlgebra& alg, const Element& b1, const Element& b2) {
    alg.require(b1);
    alg.require(b2);
    if (auto ts = alg.tangibles()) {
        if (alg.is_null(b1) && alg.is_null(b2)) return true;  // a = 0
        for (const auto& a : *ts)
            if (alg.is_null(alg.add(b1, a)) && alg.is_null(alg.add(b2, a))) return true;
        return false;
    }
    if (auto n = alg.negate(b2)) return alg.is_null(alg.add(b1, *n));
    throw Error(ErrorCode::Undecidable,
                "balancing over " + alg.spec() + " needs a finite tangible set or a negation map");
}

bool balances(const PairAlgebra& alg, const Element& b1, const Element& b2) {
    alg.require(b1);
    alg.require(b2);
    if (alg.kind() == Kind::First)
        return (alg.is_null(b1) && alg.is_null(b2)) || alg.is_null(alg.add(b1, b2));
    return tangibly_balances(alg, b1, b2);
}

bool surpasses0(const PairAlgebra& alg, const Element& b1, const Element& b2) {
    alg.require(b1);
    alg.require(b2);
    if (b1 == b2) return true;
    if (auto r = alg.surpasses0_rule(b1, b2)) return *r;
    if (auto elems = alg.carrier()) {
        for (const auto& c : *elems)
            if (alg.is_null(c) && alg.add(b1, c) == b2) return true;
        return false;
    }
    throw Error(ErrorCode::Undecidable, "surpassing over " + alg.spec() + " has no decision rule");
}

}  // namespace pairlin
