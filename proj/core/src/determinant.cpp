#include "pairlin/determinant.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "pairlin/error.hpp"
#include "pairlin/instances.hpp"
#include "pairlin/relations.hpp"

namespace pairlin {

namespace {

void require_square(const Matrix& a, const char* op) {
    if (!a.square())
        throw Error(ErrorCode::DimensionMismatch, std::string(op) + " needs a square matrix, got " +
                                                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

void require_cap(std::size_t n, std::size_t cap, const char* op) {
    if (n > cap)
        throw Error(ErrorCode::CapExceeded,
                    std::string(op) + ": n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

const DoubledPair* as_doubled(const PairAlgebra& alg) { return dynamic_cast<const DoubledPair*>(&alg); }

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(s.begin(), s.end(), i) == s.end()) out.push_back(i);
    return out;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Caps current_caps() {
    Caps caps;
    if (const char* env = std::getenv("PAIRLIN_CAP_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) caps.det = std::size_t(v);
    }
    return caps;
}

void for_each_permutation(std::size_t n, const std::function<void(const std::vector<std::size_t>&, bool)>& f) {
    std::vector<std::size_t> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += pi[i] > pi[j];
        f(pi, inversions % 2 == 1);
    } while (std::next_permutation(pi.begin(), pi.end()));
}

Element track(const Matrix& a, const std::vector<std::size_t>& pi) {
    const auto& A = a.alg();
    Element acc = A.one();
    for (std::size_t j = 0; j < pi.size(); ++j) acc = A.mul(acc, a(pi[j], j));
    return acc;
}

DoubledDet det_doubled(const Matrix& a) {
    require_square(a, "det");
    require_cap(a.rows(), current_caps().det, "det");
    const auto& A = a.alg();
    DoubledDet d{A.zero(), A.zero()};
    const Element zero = A.zero();
    for_each_permutation(a.rows(), [&](const std::vector<std::size_t>& pi, bool odd) {
        for (std::size_t j = 0; j < pi.size(); ++j)
            if (a(pi[j], j) == zero) return;
        Element& slot = odd ? d.minus : d.plus;
        slot = A.add(slot, track(a, pi));
    });
    return d;
}

Element permanent(const Matrix& a) {
    auto d = det_doubled(a);
    return a.alg().add(d.plus, d.minus);
}

bool is_singular(const Matrix& a) {
    auto d = det_doubled(a);
    return balances(a.alg(), d.plus, d.minus);
}

AlgebraPtr det_context(const PairAlgebra& alg) {
    if (as_doubled(alg)) return alg.self();
    return alg.doubled();
}

Element to_context(const PairAlgebra& alg, const Element& b) {
    if (as_doubled(alg)) return b;
    return static_cast<const DoubledPair&>(*alg.doubled()).embed(b);
}

Element switch_sign(const PairAlgebra& ctx, const Element& b) {
    return static_cast<const DoubledPair&>(ctx).swap(b);
}

Element det_element(const Matrix& a) {
    auto d = det_doubled(a);
    const auto& A = a.alg();
    if (auto* dp = as_doubled(A)) return dp->add(d.plus, dp->swap(d.minus));
    return static_cast<const DoubledPair&>(*A.doubled()).pair(d.plus, d.minus);
}

Element signed_det(const Matrix& a) {
    auto d = det_doubled(a);
    const auto& A = a.alg();
    auto n = A.negate(d.minus);
    if (!n) throw Error(ErrorCode::NoNegation, A.spec() + " has no negation map");
    return A.add(d.plus, *n);
}

Matrix to_context(const Matrix& a) {
    if (as_doubled(a.alg())) return a;
    return embed_doubled(a);
}

Matrix adjoint(const Matrix& a) {
    require_square(a, "adjoint");
    require_cap(a.rows(), current_caps().det, "adjoint");
    auto ctx = det_context(a.alg());
    const std::size_t n = a.rows();
    Matrix out(ctx, n, n);
    if (n == 1) {
        out.set(0, 0, ctx->one());
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element d = det_element(a.minor(j, i));
            out.set(i, j, (i + j) % 2 ? switch_sign(*ctx, d) : d);
        }
    return out;
}

Element project(const PairAlgebra& base, const Element& b) {
    if (auto* dp = as_doubled(base)) {
        dp->require(b);
        return b;
    }
    return static_cast<const DoubledPair&>(*base.doubled()).project(b);
}

Matrix project(const PairAlgebra& base, const Matrix& m) {
    Matrix out(base.self(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, project(base, m(i, j)));
    return out;
}

Element laplace_expand(const Matrix& a, const std::vector<std::size_t>& rows) {
    require_square(a, "laplace");
    require_cap(a.rows(), current_caps().det, "laplace");
    const std::size_t n = a.rows();
    std::vector<std::size_t> I = rows;
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    if (I.empty() || I.size() >= n || I.back() >= n)
        throw Error(ErrorCode::DimensionMismatch, "laplace row set must be a nonempty proper subset of rows");
    auto ctx = det_context(a.alg());
    const auto Ic = complement(n, I);
    const std::size_t sum_i = std::accumulate(I.begin(), I.end(), std::size_t{0});
    Element acc = ctx->zero();
    for_each_subset(n, I.size(), [&](const std::vector<std::size_t>& J) {
        const auto Jc = complement(n, J);
        Element term = ctx->mul(det_element(a.submatrix(I, J)), det_element(a.submatrix(Ic, Jc)));
        const std::size_t sum_j = std::accumulate(J.begin(), J.end(), std::size_t{0});
        if ((sum_i + sum_j) % 2) term = switch_sign(*ctx, term);
        acc = ctx->add(acc, term);
    });
    return acc;
}

std::vector<Element> characteristic_coefficients(const Matrix& a) {
    require_square(a, "cayley-hamilton");
    const std::size_t n = a.rows();
    require_cap(n, current_caps().cayley_hamilton, "cayley-hamilton");
    auto ctx = det_context(a.alg());
    std::vector<Element> c(n + 1, ctx->zero());
    c[n] = ctx->one();
    for (std::size_t k = 1; k <= n; ++k) {
        Element s = ctx->zero();
        for_each_subset(n, k, [&](const std::vector<std::size_t>& J) { s = ctx->add(s, det_element(a.submatrix(J, J))); });
        c[n - k] = k % 2 ? switch_sign(*ctx, s) : s;
    }
    return c;
}

bool cayley_hamilton_check(const Matrix& a) {
    const auto c = characteristic_coefficients(a);
    const std::size_t n = a.rows();
    const Matrix hat = to_context(a);
    auto ctx = hat.algebra();
    Matrix power = Matrix::identity(ctx, n);
    Matrix f = scale(c[0], power);
    for (std::size_t k = 1; k <= n; ++k) {
        power = multiply(power, hat);
        f = add(f, scale(c[k], power));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!ctx->is_null(f(i, j))) return false;
    return true;
}

bool quasi_identity_check(const Matrix& m) {
    if (!m.square()) return false;
    const auto& A = m.alg();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i == j && m(i, j) != A.one()) return false;
            if (i != j && !A.is_null(m(i, j))) return false;
        }
    return multiply(m, m) == m;
}

QuasiInverse quasi_inverse(const Matrix& a) {
    require_square(a, "quasi-inverse");
    const auto& A = a.alg();
    Element det = A.has_negation() ? signed_det(a) : permanent(a);
    if (!A.is_tangible(det)) {
        throw Error(is_singular(a) ? ErrorCode::SingularInput : ErrorCode::NonInvertibleDeterminant,
                    "|A| = " + A.format(det) + " is not tangible");
    }
    auto inv = A.inverse(det);
    if (!inv) throw Error(ErrorCode::NonInvertibleDeterminant, "|A| = " + A.format(det) + " has no inverse");
    if (!A.has_negation()) throw Error(ErrorCode::NoNegation, A.spec() + " has no negation map to project the adjoint");
    Matrix prime = scale(*inv, project(A, adjoint(a)));
    Matrix left = multiply(a, prime);
    Matrix right = multiply(prime, a);
    bool l = quasi_identity_check(left);
    bool r = quasi_identity_check(right);
    Matrix tilde = multiply(right, prime);
    return QuasiInverse{det, prime, left, right, l, r, tilde};
}

bool krasner_det_contains_zero(const Matrix& a) {
    require_square(a, "krasner det");
    require_cap(a.rows(), current_caps().krasner, "krasner det");
    const auto* K = dynamic_cast<const KrasnerPair*>(&a.alg());
    if (!K) throw Error(ErrorCode::AlgebraMismatch, a.alg().spec() + " is not a Krasner quotient");
    const int p = K->field_order();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!K->is_tangible(a(i, j)) && a(i, j) != K->zero())
                throw Error(ErrorCode::NonTangibleInput, "entry " + K->format(a(i, j)) + " is not a coset");
    std::set<int> reach{0};
    for_each_permutation(a.rows(), [&](const std::vector<std::size_t>& pi, bool odd) {
        // product of cosets is a coset; its residues are all products of representatives
        std::set<int> prod{1};
        for (std::size_t j = 0; j < pi.size(); ++j) {
            const Element& e = a(pi[j], j);
            if (e == K->zero()) return;
            std::set<int> next;
            for (int x : prod)
                for (int r : K->coset(e)) next.insert(int((long(x) * r) % p));
            prod = std::move(next);
        }
        std::set<int> next;
        for (int r : reach)
            for (int g : prod) next.insert(((r + (odd ? p - g : g)) % p + p) % p);
        reach = std::move(next);
    });
    return reach.count(0) > 0;
}

}  // namespace pairlin
