#include "pairlin/diagnostics.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pairlin/error.hpp"
#include "pairlin/relations.hpp"

namespace pairlin {

std::string_view to_string(PresentationForm form) {
    switch (form) {
        case PresentationForm::Tangible: return "tangible";
        case PresentationForm::QuasiZero: return "quasi-zero";
        case PresentationForm::Multiple: return "multiple";
    }
    return "?";
}

CharacteristicProfile characteristic(const PairAlgebra& alg, std::uint64_t cap) {
    std::map<Element, std::uint64_t> seen;
    Element s = alg.zero();
    seen.emplace(s, 0);
    for (std::uint64_t k = 1; k <= cap; ++k) {
        s = alg.add(s, alg.one());
        auto [it, fresh] = seen.emplace(s, k);
        if (!fresh) {
            CharacteristicProfile out;
            out.finite = true;
            out.q = it->second;
            out.p = k - out.q;
            std::uint64_t need = std::max<std::uint64_t>(out.q, 1);
            out.m = ((need + out.p - 1) / out.p) * out.p;
            return out;
        }
    }
    CharacteristicProfile out;
    out.capped = true;
    return out;
}

namespace {

std::vector<Element> tangible_candidates(const PairAlgebra& alg, const Element* c = nullptr) {
    if (auto ts = alg.tangibles()) return *ts;
    std::vector<Element> out;
    for (const auto& b : alg.sample())
        if (alg.is_tangible(b)) out.push_back(b);
    if (c) {
        if (auto lift = alg.tangible_lift(*c); lift && alg.is_tangible(*lift) &&
                                               std::find(out.begin(), out.end(), *lift) == out.end())
            out.push_back(*lift);
    }
    return out;
}

bool quick_metatangible(const PairAlgebra& alg, const std::vector<Element>& ts) {
    for (const auto& a : ts) {
        auto d = alg.dagger(a);
        if (!d || !alg.is_null(alg.add(a, *d))) return false;
        for (const auto& b : ts) {
            Element s = alg.add(a, b);
            if (!alg.is_tangible(s) && !alg.is_null(s)) return false;
            if (alg.is_null(s) && s != alg.add(a, *d)) return false;
        }
    }
    return true;
}

}  // namespace

std::size_t height(const PairAlgebra& alg, const Element& c) {
    alg.require(c);
    if (c == alg.zero()) return 0;
    const auto ts = tangible_candidates(alg, &c);
    std::set<Element> level{alg.zero()};
    std::set<std::set<Element>> levels{level};
    for (std::size_t t = 1; t <= 4096; ++t) {
        std::set<Element> next;
        for (const auto& x : level)
            for (const auto& a : ts) next.insert(alg.add(x, a));
        if (next.count(c)) return t;
        if (!levels.insert(next).second) break;
        level = std::move(next);
    }
    throw Error(ErrorCode::Unreachable, alg.format(c) + " is not a sum of tangibles in " + alg.spec());
}

UniformPresentation uniform_presentation(const PairAlgebra& alg, const Element& c) {
    alg.require(c);
    if (c == alg.zero()) throw Error(ErrorCode::NoPresentation, "zero has no uniform presentation");
    const auto ts = tangible_candidates(alg, &c);
    if (!quick_metatangible(alg, ts)) throw Error(ErrorCode::NotMetatangible, alg.spec() + " is not metatangible");
    if (alg.is_tangible(c)) return {c, 1, PresentationForm::Tangible};
    const Kind kind = alg.kind();
    if (kind != Kind::Second) {
        std::size_t m = height(alg, c);
        for (const auto& a : ts)
            if (multiple(alg, m, a) == c) return {a, m, PresentationForm::Multiple};
    }
    if (kind != Kind::First) {
        for (const auto& a : ts)
            if (circ(alg, a) == c) return {a, 2, PresentationForm::QuasiZero};
    }
    throw Error(ErrorCode::NoPresentation, "no uniform presentation for " + alg.format(c) + " in " + alg.spec());
}

Element reconstruct(const PairAlgebra& alg, const UniformPresentation& p) {
    switch (p.form) {
        case PresentationForm::Tangible: return p.base;
        case PresentationForm::QuasiZero: return circ(alg, p.base);
        case PresentationForm::Multiple: return multiple(alg, p.multiplicity, p.base);
    }
    return p.base;
}

const AuditFlag& AuditReport::flag(std::string_view name) const {
    for (const auto& f : flags)
        if (f.name == name) return f;
    throw Error(ErrorCode::UnknownExample, "no audit flag named " + std::string(name));
}

namespace {

class Auditor {
public:
    explicit Auditor(const PairAlgebra& alg) : alg_(alg) {
        if (auto c = alg.carrier()) {
            elems_ = *c;
        } else {
            elems_ = alg.sample();
            report_.sample_only = true;
        }
        ts_ = tangible_candidates(alg);
        report_.spec = alg.spec();
        report_.detected_kind = alg.kind();
        report_.declared_kind = alg.declared_kind();
        report_.kind_mismatch =
            report_.declared_kind != Kind::Unknown && report_.declared_kind != report_.detected_kind;
    }

    AuditReport run() {
        const auto& A = alg_;
        auto f = [&](const Element& b) { return A.format(b); };
        auto null = [&](const Element& b) { return A.is_null(b); };
        auto tang = [&](const Element& b) { return A.is_tangible(b); };
        const Element zero = A.zero();
        const Element one = A.one();

        for (const auto& b : ts_)
            if (null(A.add(one, b))) ++report_.dagger_multiplicity;

        // Semiring laws on the carrier (or sample).
        {
            std::string w;
            for (const auto& x : elems_) {
                if (A.add(x, zero) != x || A.mul(x, one) != x || A.mul(one, x) != x || A.mul(x, zero) != zero)
                    w = "unit/zero law at " + f(x);
                for (const auto& y : elems_) {
                    if (!w.empty()) break;
                    if (A.add(x, y) != A.add(y, x)) w = "add not commutative at " + f(x) + "," + f(y);
                    for (const auto& z : elems_) {
                        if (!w.empty()) break;
                        if (A.add(A.add(x, y), z) != A.add(x, A.add(y, z)))
                            w = "add not associative at " + f(x) + "," + f(y) + "," + f(z);
                        else if (A.mul(A.mul(x, y), z) != A.mul(x, A.mul(y, z)))
                            w = "mul not associative at " + f(x) + "," + f(y) + "," + f(z);
                    }
                }
                if (!w.empty()) break;
            }
            add("semiring-laws", w);
        }
        {
            std::string w;
            for (const auto& x : elems_)
                for (const auto& y : elems_)
                    for (const auto& z : elems_)
                        if (w.empty() && A.mul(x, A.add(y, z)) != A.add(A.mul(x, y), A.mul(x, z)))
                            w = "x=" + f(x) + " y=" + f(y) + " z=" + f(z);
            add("distributive", w);
        }
        {
            std::string w;
            if (!null(zero) || tang(zero)) w = "zero must be null and not tangible";
            for (const auto& b : elems_)
                if (w.empty() && tang(b) && null(b)) w = f(b) + " is tangible and null";
            for (const auto& a : ts_)
                for (const auto& b : elems_)
                    if (w.empty() && null(b) && (!null(A.mul(a, b)) || !null(A.mul(b, a))))
                        w = "a=" + f(a) + " b0=" + f(b);
            add("admissible", w);
        }
        {
            std::string w;
            for (const auto& b : elems_)
                if (w.empty() && tang(b) && std::find(ts_.begin(), ts_.end(), b) == ts_.end() && !report_.sample_only)
                    w = f(b) + " missing from tangible enumeration";
            add("tangible-enumeration", w);
        }
        {
            std::string w;
            for (const auto& a : ts_) {
                auto d = A.dagger(a);
                if (!d) w = "no dagger for " + f(a);
                else if (!tang(*d) || !null(A.add(a, *d))) w = "a=" + f(a) + " dagger=" + f(*d);
                if (!w.empty()) break;
            }
            for (const auto& a : ts_)
                for (const auto& b : ts_)
                    if (w.empty() && null(A.add(a, b)) && A.dagger(a) && A.add(a, b) != A.add(a, *A.dagger(a)))
                        w = "a=" + f(a) + " b=" + f(b) + " gives a second quasi-zero";
            add("property-n", w);
        }
        const bool prop_n = holds("property-n");
        {
            std::string w;
            for (const auto& a : ts_)
                for (const auto& b : ts_)
                    if (w.empty()) {
                        Element s = A.add(a, b);
                        if (!tang(s) && !null(s)) w = "a1=" + f(a) + " a2=" + f(b) + " sum=" + f(s);
                    }
            if (w.empty() && !prop_n) w = "Property N fails";
            add("metatangible", w);
        }
        {
            std::string w = holds("metatangible") ? "" : "not metatangible";
            for (const auto& a : ts_)
                for (const auto& b : ts_)
                    if (w.empty()) {
                        Element s = A.add(a, b);
                        if (s != a && s != b && !null(s)) w = "a1=" + f(a) + " a2=" + f(b) + " sum=" + f(s);
                    }
            add("a0-bipotent", w);
        }
        add("first-kind", null(A.add(one, one)) ? "" : "1+1=" + f(A.add(one, one)));
        {
            std::string w;
            for (const auto& a : ts_)
                if (w.empty() && null(A.add(a, a))) w = "a=" + f(a);
            add("second-kind", w);
        }
        {
            std::string w;
            for (const auto& a : ts_)
                for (const auto& b : ts_)
                    if (w.empty() && balances(A, a, b) && null(A.add(a, b))) w = "a=" + f(a) + " a'=" + f(b);
            add("strict-second-kind", w);
        }
        {
            std::string w = A.has_negation() ? "" : "no negation map";
            if (w.empty()) {
                for (const auto& b : elems_)
                    if (w.empty() && *A.negate(*A.negate(b)) != b) w = "not involutive at " + f(b);
                Element n1 = *A.negate(one);
                if (w.empty() && (!tang(n1) || !null(A.add(one, n1)))) w = "(-)1=" + f(n1);
                for (const auto& x : elems_)
                    for (const auto& y : elems_)
                        if (w.empty() && *A.negate(A.add(x, y)) != A.add(*A.negate(x), *A.negate(y)))
                            w = "not additive at " + f(x) + "," + f(y);
            }
            add("negation-map", w);
        }
        std::optional<EElements> es;
        if (A.dagger(one)) es = e_elements(A);
        add("e-idempotent", !es ? "no dagger for 1" : A.add(es->e, es->e) == es->e ? "" : "e+e=" + f(A.add(es->e, es->e)));
        add("two-final", !es ? "no dagger for 1" : es->e_prime == es->e ? "" : "e'=" + f(es->e_prime) + " e=" + f(es->e));
        {
            std::string w = prop_n ? "" : "Property N fails";
            for (const auto& a : ts_)
                for (const auto& b : ts_)
                    if (w.empty() && prop_n && circ(A, a) == circ(A, b) && a != b && A.add(a, b) != circ(A, a))
                        w = "a1=" + f(a) + " a2=" + f(b);
            add("circ-reversible", w);
        }
        {
            std::string w;
            for (auto n : {"a0-bipotent", "two-final", "circ-reversible"})
                if (w.empty() && !holds(n)) w = std::string(n) + " fails";
            add("tropical-type", w);
        }
        {
            std::string w = prop_n ? "" : "Property N fails";
            for (const auto& a1 : ts_)
                for (const auto& a2 : ts_)
                    for (const auto& a3 : ts_) {
                        if (!w.empty() || !prop_n) break;
                        Element tail = A.add(a2, a3);
                        if (null(A.add(a1, tail)) && null(A.add(*A.dagger(a1), tail)) && !null(tail))
                            w = "a1=" + f(a1) + " a2=" + f(a2) + " a3=" + f(a3);
                    }
            add("almost-regular", w);
        }
        {
            std::string w;
            for (const auto& a1 : ts_)
                for (const auto& a2 : ts_) {
                    if (!w.empty() || !null(A.add(a1, a2))) continue;
                    for (const auto& a3 : ts_) {
                        if (!null(A.add(a2, a3))) continue;
                        for (const auto& a4 : ts_)
                            if (w.empty() && null(A.add(a3, a4)) && !null(A.add(a1, a4)))
                                w = "a1=" + f(a1) + " a2=" + f(a2) + " a3=" + f(a3) + " a4=" + f(a4);
                    }
                }
            add("n-transitive", w);
        }
        {
            std::string w;
            for (const auto& a : ts_) {
                std::optional<Element> neg = A.has_negation() ? A.negate(a) : A.dagger(a);
                for (const auto& b : ts_)
                    if (w.empty() && null(A.add(a, b)) && (!neg || b != *neg)) w = "a=" + f(a) + " b=" + f(b);
            }
            add("uniquely-negated", w);
        }
        {
            std::string w;
            for (const auto& x : elems_)
                for (const auto& y : elems_)
                    if (w.empty() && tang(A.add(x, y)) && !tang(x) && !tang(y)) w = "b1=" + f(x) + " b2=" + f(y);
            add("tangible-summand", w);
        }
        {
            // Closure of finite sums of tangibles must avoid zero.
            std::string w;
            std::set<Element> sums(ts_.begin(), ts_.end());
            std::vector<Element> frontier(ts_.begin(), ts_.end());
            for (int round = 0; round < 8 && !frontier.empty() && w.empty(); ++round) {
                std::vector<Element> next;
                for (const auto& s : frontier)
                    for (const auto& a : ts_) {
                        Element t = A.add(s, a);
                        if (t == zero && w.empty()) w = "sum " + f(s) + " + " + f(a) + " = 0";
                        if (sums.insert(t).second) next.push_back(t);
                    }
                frontier = std::move(next);
            }
            add("lzs", w);
        }
        add("weak-balance-elimination", weak_balance_elimination());
        {
            std::string w;
            for (const auto& b : elems_)
                if (w.empty() && A.add(b, b) != b) w = "b=" + f(b);
            add("idempotent-addition", w);
        }
        {
            std::string w;
            for (const auto& b : elems_) {
                if (!w.empty()) break;
                bool covered = b == zero || null(b) || tang(b);
                for (const auto& a : ts_)
                    for (const auto& c : elems_)
                        if (!covered && null(c) && A.add(a, c) == b) covered = true;
                if (!covered) w = f(b) + " is not tangible plus null";
            }
            add("t-plus-a0-covers", w);
        }
        return report_;
    }

private:
    bool holds(std::string_view name) const { return report_.flag(name).holds; }

    void add(std::string name, std::string witness) {
        report_.flags.push_back({std::move(name), witness.empty(), std::move(witness)});
    }

    // One-term form over the carrier; two-term form on carriers of at most 16 elements.
    std::string weak_balance_elimination() {
        const auto& A = alg_;
        auto f = [&](const Element& b) { return A.format(b); };
        std::vector<std::pair<Element, Element>> bal;  // tangible pairs a ∇ c
        for (const auto& a : ts_)
            for (const auto& c : ts_)
                if (balances(A, a, c)) bal.emplace_back(a, c);
        for (const auto& b : elems_)
            for (const auto& d : elems_)
                for (const auto& [a, c] : bal)
                    if (balances(A, A.mul(b, a), d) && !balances(A, A.mul(b, c), d))
                        return "b=" + f(b) + " a=" + f(a) + " c=" + f(c) + " d=" + f(d);
        if (elems_.size() > 16) return "";
        for (const auto& b1 : elems_)
            for (const auto& b2 : elems_)
                for (const auto& [a1, c1] : bal)
                    for (const auto& [a2, c2] : bal) {
                        Element lhs = A.add(A.mul(b1, a1), A.mul(b2, a2));
                        Element rhs = A.add(A.mul(b1, c1), A.mul(b2, c2));
                        for (const auto& d : elems_)
                            if (balances(A, lhs, d) && !balances(A, rhs, d))
                                return "b=(" + f(b1) + "," + f(b2) + ") a=(" + f(a1) + "," + f(a2) + ") c=(" + f(c1) +
                                       "," + f(c2) + ") d=" + f(d);
                    }
        return "";
    }

    const PairAlgebra& alg_;
    std::vector<Element> elems_;
    std::vector<Element> ts_;
    AuditReport report_;
};

}  // namespace

AuditReport axiom_audit(const PairAlgebra& alg) { return Auditor(alg).run(); }

}  // namespace pairlin
