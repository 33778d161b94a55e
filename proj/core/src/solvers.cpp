#include "pairlin/solvers.hpp"

#include <functional>

#include "pairlin/error.hpp"
#include "pairlin/relations.hpp"

namespace pairlin {

namespace {

bool balances_componentwise(const PairAlgebra& alg, const Vector& a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!balances(alg, a[i], b[i])) return false;
    return true;
}

void check_system(const Matrix& a, const Vector& v) {
    if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "system matrix must be square");
    if (v.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from n");
    for (const auto& b : v) a.alg().require(b);
}

std::optional<bool> unique_tangible_solution(const Matrix& a, const Vector& v, const Vector& x) {
    const auto& A = a.alg();
    auto ts = A.tangibles();
    if (a.rows() > 2 || !ts || !A.has_negation()) return std::nullopt;
    std::vector<Element> choices{A.zero()};
    choices.insert(choices.end(), ts->begin(), ts->end());
    std::size_t count = 0;
    bool others = false;
    Vector y(a.rows(), A.zero());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == y.size()) {
            if (balances_componentwise(A, pairlin::apply(a, y), v)) {
                ++count;
                others |= y != x;
            }
            return;
        }
        for (const auto& c : choices) {
            y[k] = c;
            rec(k + 1);
        }
    };
    rec(0);
    return count == 1 && !others;
}

}  // namespace

CramerResult cramer_solve(const Matrix& a, const Vector& v) {
    check_system(a, v);
    const auto& A = a.alg();
    auto ctx = det_context(A);
    CramerResult r;
    r.det = det_element(a);
    Vector v_hat;
    for (const auto& b : v) v_hat.push_back(to_context(A, b));
    r.w = pairlin::apply(adjoint(a), v_hat);
    const Vector lhs = scale(*ctx, r.det, v_hat);
    const Vector rhs = pairlin::apply(to_context(a), r.w);
    r.balance_verified = balances_componentwise(*ctx, lhs, rhs);

    if (!A.has_negation()) {
        r.note = A.spec() + " has no negation map";
        return r;
    }
    const Element det = signed_det(a);
    auto inv = A.is_tangible(det) ? A.inverse(det) : std::nullopt;
    if (!inv) {
        r.note = "|A| = " + A.format(det) + " is not an invertible tangible";
        return r;
    }
    Vector x;
    for (const auto& wi : r.w) {
        Element xi = A.mul(*inv, project(A, wi));
        if (!A.is_tangible(xi) && xi != A.zero()) {
            r.note = "w does not project to tangible entries";
            return r;
        }
        x.push_back(xi);
    }
    r.x_balances = balances_componentwise(A, pairlin::apply(a, x), v);
    r.unique = unique_tangible_solution(a, v, x);
    r.x = std::move(x);
    return r;
}

DominantStructure dominant_structure(const Matrix& a) {
    if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "dominant tracks need a square matrix");
    const auto& A = a.alg();
    if (!A.modulus(A.one())) throw Error(ErrorCode::NoModulus, A.spec() + " has no modulus");
    if (a.rows() > current_caps().det)
        throw Error(ErrorCode::CapExceeded, "n = " + std::to_string(a.rows()) + " exceeds the determinant cap");
    DominantStructure s;
    std::vector<DominantTrack> all;
    for_each_permutation(a.rows(), [&](const std::vector<std::size_t>& pi, bool odd) {
        Element t = track(a, pi);
        ModulusValue m = *A.modulus(t);
        if (all.empty() || m > s.max) {
            s.max = m;
            all.clear();
        }
        if (m == s.max) all.push_back({pi, odd, t});
    });
    s.dominant = std::move(all);
    s.unique = s.dominant.size() == 1;
    for (const auto& t : s.dominant) {
        bool identity = true;
        for (std::size_t j = 0; j < t.permutation.size(); ++j) identity &= t.permutation[j] == j;
        s.diagonal_dominant |= identity;
    }
    bool one_parity = true;
    Element total = A.zero();
    for (std::size_t i = 0; i < s.dominant.size(); ++i) {
        total = A.add(total, s.dominant[i].value);
        one_parity &= s.dominant[i].odd == s.dominant.front().odd;
        for (std::size_t j = i + 1; j < s.dominant.size(); ++j)
            if (s.dominant[i].odd == s.dominant[j].odd && A.is_null(A.add(s.dominant[i].value, s.dominant[j].value)))
                s.same_parity_null_pair = true;
    }
    s.strictly_nonsingular = !s.max.bottom && (s.unique || (one_parity && A.is_tangible(total)));
    return s;
}

JacobiState jacobi_solve(const Matrix& a, const Vector& v, std::size_t max_iter) {
    check_system(a, v);
    const auto& A = a.alg();
    const std::size_t n = a.rows();
    if (max_iter == 0) max_iter = 2 * n + 4;
    auto dom = dominant_structure(a);
    if (!dom.diagonal_dominant) throw Error(ErrorCode::NotDominantDiagonal, "the diagonal track is not dominant");
    if (!dom.strictly_nonsingular) throw Error(ErrorCode::SingularInput, "matrix is not strictly nonsingular");

    Matrix d(a.algebra(), n, n), off(a.algebra(), n, n);
    std::vector<Element> d_inv;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                off.set(i, j, a(i, j));
                continue;
            }
            d.set(i, i, a(i, i));
            auto inv = A.is_tangible(a(i, i)) ? A.inverse(a(i, i)) : std::nullopt;
            if (!inv)
                throw Error(ErrorCode::NonInvertibleDiagonal, "diagonal entry " + A.format(a(i, i)) + " is not invertible");
            d_inv.push_back(*inv);
        }

    JacobiState st{d, off, {}, std::nullopt, false, false};
    Vector x(n, A.zero());
    for (std::size_t k = 0; k < max_iter; ++k) {
        Vector rhs = pairlin::apply(off, x);
        Vector next;
        for (std::size_t i = 0; i < n; ++i) {
            Element y = A.mul(d_inv[i], A.add(rhs[i], v[i]));
            if (y == A.zero()) {
                next.push_back(y);
                continue;
            }
            auto lift = A.tangible_lift(y);
            if (!lift) throw Error(ErrorCode::NoTangibleLift, A.spec() + " has no tangible lift for " + A.format(y));
            next.push_back(*lift);
        }
        st.iterates.push_back(next);
        if (k > 0 && next == x) {
            st.stabilized_at = k;
            break;
        }
        x = std::move(next);
    }
    if (!st.stabilized_at)
        throw Error(ErrorCode::NoConvergence, "no stabilization within " + std::to_string(max_iter) + " iterations");

    st.balance_verified = balances_componentwise(A, pairlin::apply(a, x), v);
    const auto mu_det = inverse(*A.modulus(permanent(a)));
    Vector v_hat;
    for (const auto& b : v) v_hat.push_back(to_context(A, b));
    const Vector w = pairlin::apply(adjoint(a), v_hat);
    st.modulus_verified = mu_det.has_value();
    for (std::size_t i = 0; i < n && st.modulus_verified; ++i) {
        const auto& parts = w[i].parts();
        auto expected = *mu_det * *A.modulus(A.add(parts.pos, parts.neg));
        st.modulus_verified = *A.modulus(x[i]) == expected;
    }
    return st;
}

}  // namespace pairlin
