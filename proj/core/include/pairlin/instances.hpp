#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pairlin/algebra.hpp"

namespace pairlin {

// Finite pair given by tables over named atoms. Atom 0 is zero, atom 1 is one.
struct TableSpec {
    std::string spec;
    std::vector<std::string> names;
    std::vector<std::vector<int>> add;
    std::vector<std::vector<int>> mul;
    std::vector<bool> tangible;
    std::vector<bool> null;
    std::vector<int> dagger;    // -1 where no witness
    std::vector<int> negation;  // empty when no negation map
    Kind kind = Kind::Unknown;
};

class TablePair : public PairAlgebra {
public:
    explicit TablePair(TableSpec t);

    Element zero() const override { return atom(0); }
    Element one() const override { return atom(1); }
    Element add(const Element& a, const Element& b) const override;
    Element mul(const Element& a, const Element& b) const override;
    bool is_tangible(const Element& a) const override;
    bool is_null(const Element& a) const override;
    std::optional<Element> dagger(const Element& a) const override;
    std::optional<Element> negate(const Element& b) const override;
    std::optional<std::vector<Element>> tangibles() const override;
    std::optional<std::vector<Element>> carrier() const override;
    Kind declared_kind() const override { return t_.kind; }
    std::string format(const Element& b) const override;
    Element parse(std::string_view literal) const override;

    Element atom(int i) const { return make(std::int32_t{i}); }
    const TableSpec& table() const { return t_; }

private:
    int index(const Element& b) const;
    TableSpec t_;
};

// Max-plus supertropical pair over exact rationals with a ghost layer.
class Supertropical : public PairAlgebra {
public:
    Supertropical();

    Element zero() const override { return value(Layer::Zero, 0); }
    Element one() const override { return value(Layer::Tangible, 0); }
    Element add(const Element& a, const Element& b) const override;
    Element mul(const Element& a, const Element& b) const override;
    bool is_tangible(const Element& a) const override;
    bool is_null(const Element& a) const override;
    std::optional<Element> dagger(const Element& a) const override;
    std::optional<Element> negate(const Element& b) const override;
    std::vector<Element> sample() const override;
    std::optional<ModulusValue> modulus(const Element& b) const override;
    Kind declared_kind() const override { return Kind::First; }
    std::optional<Element> inverse(const Element& a) const override;
    std::optional<bool> surpasses0_rule(const Element& b1, const Element& b2) const override;
    std::optional<Element> tangible_lift(const Element& b) const override;
    std::string format(const Element& b) const override;
    Element parse(std::string_view literal) const override;

    Element value(Layer layer, const Rational& v) const;
    Element tangible(const Rational& v) const { return value(Layer::Tangible, v); }
    Element ghost(const Rational& v) const { return value(Layer::Ghost, v); }
    const Rational& value_of(const Element& b) const { return b.trop().value; }
    Layer layer_of(const Element& b) const { return b.trop().layer; }
};

// Symmetrization A x A with twist multiplication and the switch negation.
class DoubledPair : public PairAlgebra {
public:
    explicit DoubledPair(AlgebraPtr base);

    Element zero() const override;
    Element one() const override;
    Element add(const Element& a, const Element& b) const override;
    Element mul(const Element& a, const Element& b) const override;
    bool is_tangible(const Element& a) const override;
    bool is_null(const Element& a) const override;
    std::optional<Element> dagger(const Element& a) const override;
    std::optional<Element> negate(const Element& b) const override;
    std::optional<std::vector<Element>> tangibles() const override;
    std::optional<std::vector<Element>> carrier() const override;
    std::vector<Element> sample() const override;
    std::optional<Element> inverse(const Element& a) const override;
    std::string format(const Element& b) const override;
    Element parse(std::string_view literal) const override;

    const AlgebraPtr& base() const { return base_; }
    Element pair(const Element& pos, const Element& neg) const;
    Element embed(const Element& b) const { return pair(b, base_->zero()); }
    Element swap(const Element& b) const;
    // pos (-) neg in the base; requires a negation map on the base.
    Element project(const Element& b) const;

private:
    AlgebraPtr base_;
};

// Hypergroup tables over at most 63 atoms; atom 0 is the hyperzero, atom 1 the unit.
struct HyperTable {
    std::string spec;
    std::vector<std::string> names;
    std::vector<std::vector<std::uint64_t>> sum;
    std::vector<std::vector<int>> mul;
    std::vector<int> neg;
};

// Hyperpair on the T-spanned subsets: null iff the set contains the hyperzero.
class HyperPair : public PairAlgebra {
public:
    explicit HyperPair(HyperTable t);

    Element zero() const override { return set(1); }
    Element one() const override { return set(2); }
    Element add(const Element& a, const Element& b) const override;
    Element mul(const Element& a, const Element& b) const override;
    bool is_tangible(const Element& a) const override;
    bool is_null(const Element& a) const override;
    std::optional<Element> dagger(const Element& a) const override;
    std::optional<Element> negate(const Element& b) const override;
    std::optional<std::vector<Element>> tangibles() const override;
    std::optional<std::vector<Element>> carrier() const override {
        if (carrier_.empty()) return std::nullopt;
        return carrier_;
    }
    std::optional<bool> surpasses0_rule(const Element& b1, const Element& b2) const override;
    std::string format(const Element& b) const override;
    Element parse(std::string_view literal) const override;

    Element set(std::uint64_t mask) const { return make(mask); }
    Element atom(int i) const { return set(std::uint64_t{1} << i); }
    std::size_t atom_count() const { return t_.names.size(); }

private:
    HyperTable t_;
    std::vector<Element> carrier_;
};

// Quotient F_p / G of multiplicative cosets.
class KrasnerPair : public HyperPair {
public:
    KrasnerPair(HyperTable t, int p, std::vector<std::vector<int>> cosets);

    int field_order() const { return p_; }
    // Residues of the coset named by a tangible-or-zero element.
    const std::vector<int>& coset(const Element& b) const;
    Element coset_of(int residue) const;

private:
    int p_;
    std::vector<std::vector<int>> cosets_;
    std::vector<int> atom_of_residue_;
};

// Subsets of the cyclic group C_n under symmetric difference and F2 convolution.
class PowersetSymdiff : public PairAlgebra {
public:
    explicit PowersetSymdiff(int order);

    Element zero() const override { return set(0); }
    Element one() const override { return set(1); }
    Element add(const Element& a, const Element& b) const override;
    Element mul(const Element& a, const Element& b) const override;
    bool is_tangible(const Element& a) const override;
    bool is_null(const Element& a) const override;
    std::optional<Element> dagger(const Element& a) const override;
    std::optional<Element> negate(const Element& b) const override;
    std::optional<std::vector<Element>> tangibles() const override;
    std::optional<std::vector<Element>> carrier() const override;
    Kind declared_kind() const override { return Kind::First; }
    std::string format(const Element& b) const override;
    Element parse(std::string_view literal) const override;

    Element set(std::uint64_t mask) const { return make(mask); }
    Element group_element(int k) const { return set(std::uint64_t{1} << k); }
    int order() const { return n_; }

private:
    int n_;
};

AlgebraPtr make_sign_pair();
AlgebraPtr make_boolean();
AlgebraPtr make_superboolean();
AlgebraPtr make_supertropical();
AlgebraPtr make_counting(int q);
AlgebraPtr make_npq(int p, int q);
AlgebraPtr make_minimal(Kind kind, int n);
AlgebraPtr make_doubled(AlgebraPtr base);
AlgebraPtr make_krasner(int p, const std::vector<int>& generators);
AlgebraPtr make_hex1(int n);
AlgebraPtr make_hex2(int n);
AlgebraPtr make_weaksign(int n);
AlgebraPtr make_powerset_symdiff(int n);
AlgebraPtr make_table_pair(TableSpec t);

// Parses an algebra specifier; equal specifiers return the same instance.
AlgebraPtr make_pair(std::string_view spec);

struct RegisteredPair {
    std::string spec;
    std::string description;
};

const std::vector<RegisteredPair>& registered_pairs();

}  // namespace pairlin
