#include "pairlin_cli/fixtures.hpp"

#include <algorithm>

#include "pairlin/determinant.hpp"
#include "pairlin/solvers.hpp"

namespace pairlin::cli {

Matrix sign_a2_fixture() {
    return parse_matrix(R"(pair sign
rows 3
cols 4
1 1 -1 1
1 -1 1 1
-1 1 1 1
)");
}

Matrix doubled_boolean_fixture() {
    return parse_matrix(R"(pair doubled:boolean
rows 4
cols 4
1|0 0|0 0|0 1|0
0|0 1|0 1|0 0|0
1|0 0|0 1|0 0|0
0|0 0|1 0|0 1|0
)");
}

Matrix truncated_fixture() {
    return parse_matrix(R"(pair counting:5
rows 4
cols 4
1 1 1 1
1 1 0 1
0 1 1 1
1 0 1 1
)");
}

Matrix powerset_fixture() {
    return parse_matrix(R"(pair powerset-symdiff:2
rows 3
cols 2
1 1
1 x
0 1
)");
}

Element random_half(const Supertropical& st, Rng& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(2 * lo, 2 * hi);
    return st.tangible(Rational(d(rng), 2));
}

Matrix random_supertropical(const AlgebraPtr& alg, std::size_t rows, std::size_t cols, Rng& rng, int lo, int hi) {
    const auto& st = static_cast<const Supertropical&>(*alg);
    Matrix m(alg, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_half(st, rng, lo, hi));
    return m;
}

Matrix forced_singular_supertropical(const AlgebraPtr& alg, std::size_t n, Rng& rng) {
    const auto& st = static_cast<const Supertropical&>(*alg);
    while (true) {
        Matrix m = random_supertropical(alg, n, n, rng, -4, 0);
        std::vector<std::size_t> sigma(n);
        for (std::size_t j = 0; j < n; ++j) sigma[j] = j;
        while (std::all_of(sigma.begin(), sigma.end(), [&](std::size_t j) { return sigma[j] == j; }))
            std::shuffle(sigma.begin(), sigma.end(), rng);
        Rational diag_total(0);
        for (std::size_t j = 0; j < n; ++j) {
            m.set(j, j, random_half(st, rng, 2, 5));
            diag_total += st.value_of(m(j, j));
        }
        // all but the last moved entry of sigma are random, the last one closes the tie
        std::vector<std::size_t> moved;
        Rational fixed_total(0);
        for (std::size_t j = 0; j < n; ++j) {
            if (sigma[j] == j) {
                fixed_total += st.value_of(m(j, j));
                continue;
            }
            moved.push_back(j);
        }
        Rational partial(0);
        for (std::size_t k = 0; k + 1 < moved.size(); ++k) {
            m.set(sigma[moved[k]], moved[k], random_half(st, rng, 2, 5));
            partial += st.value_of(m(sigma[moved[k]], moved[k]));
        }
        const std::size_t last = moved.back();
        m.set(sigma[last], last, st.tangible(diag_total - fixed_total - partial));
        if (is_singular(m)) return m;
    }
}

Matrix random_jacobi_matrix(const AlgebraPtr& alg, std::size_t n, Rng& rng) {
    const auto& st = static_cast<const Supertropical&>(*alg);
    while (true) {
        Matrix m(alg, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.set(i, j, i == j ? random_half(st, rng, 3, 6) : random_half(st, rng, -6, 2));
        auto dom = dominant_structure(m);
        if (dom.unique && dom.diagonal_dominant) return m;
    }
}

std::optional<Matrix> dependent_construction(const AlgebraPtr& alg, std::size_t n, Rng& rng) {
    const auto& A = *alg;
    const auto* st = dynamic_cast<const Supertropical*>(&A);
    std::vector<Element> t0{A.zero()}, ts;
    if (auto t = A.tangibles()) ts = *t;
    auto random_tangible = [&]() -> Element {
        if (st) return random_half(*st, rng, -3, 3);
        return ts[std::uniform_int_distribution<std::size_t>(0, ts.size() - 1)(rng)];
    };
    auto random_entry = [&]() -> Element {
        if (std::uniform_int_distribution<int>(0, 5)(rng) == 0) return A.zero();
        return random_tangible();
    };
    Matrix m(alg, n, n);
    std::vector<Element> coeff;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        coeff.push_back(random_tangible());
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, random_entry());
    }
    for (std::size_t j = 0; j < n; ++j) {
        Element r = A.zero();
        for (std::size_t i = 0; i + 1 < n; ++i) r = A.add(r, A.mul(coeff[i], m(i, j)));
        std::vector<Element> options;
        if (st) {
            std::vector<Element> pool{A.zero()};
            if (r != A.zero()) {
                Rational v = st->value_of(r);
                for (int k = 0; k <= 4; ++k) pool.push_back(st->tangible(v - Rational(k, 2)));
            }
            for (const auto& c : pool)
                if (A.is_null(A.add(r, c))) options.push_back(c);
        } else {
            std::vector<Element> pool{A.zero()};
            pool.insert(pool.end(), ts.begin(), ts.end());
            for (const auto& c : pool)
                if (A.is_null(A.add(r, c))) options.push_back(c);
        }
        if (options.empty()) return std::nullopt;
        m.set(n - 1, j, options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
    }
    return m;
}

}  // namespace pairlin::cli
