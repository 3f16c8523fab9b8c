#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rmt/errors.hpp"
#include "rmt/parallel.hpp"
#include "rmt/tridiag.hpp"

using namespace rmt;

namespace {

TridiagonalSymmetric random_tridiag(std::mt19937_64& gen, std::size_t n) {
    std::normal_distribution<double> g;
    std::vector<double> d(n), e(n - 1);
    for (auto& x : d) x = g(gen);
    for (auto& x : e) x = g(gen);
    return {d, e};
}

TridiagonalSymmetric path_graph(std::size_t n) {
    return {std::vector<double>(n, 0.0), std::vector<double>(n - 1, 1.0)};
}

}  // namespace

TEST_CASE("construction checks sizes") {
    CHECK_THROWS_AS(TridiagonalSymmetric({}, {}), ContractViolation);
    CHECK_THROWS_AS(TridiagonalSymmetric({1.0, 2.0}, {}), ContractViolation);
    CHECK_NOTHROW(TridiagonalSymmetric({1.0}, {}));
}

TEST_CASE("sturm count small cases") {
    CHECK(sturm_count(TridiagonalSymmetric({5.0}, {}), 6.0) == 1);
    CHECK(sturm_count(TridiagonalSymmetric({5.0}, {}), 4.0) == 0);
    CHECK(sturm_count(TridiagonalSymmetric({0.0, 0.0}, {1.0}), 0.0) == 1);
    CHECK(sturm_count(TridiagonalSymmetric({0.0, 0.0}, {1.0}), 1.5) == 2);
    CHECK(sturm_count(TridiagonalSymmetric({0.0, 0.0}, {1.0}), -1.5) == 0);
    // x on an eigenvalue hits a zero pivot; the perturbed pivot moves the
    // count by at most one and never breaks monotonicity
    const std::size_t at = sturm_count(TridiagonalSymmetric({0.0, 0.0}, {1.0}), -1.0);
    CHECK(at <= 1);
}

TEST_CASE("sturm count agrees with characteristic polynomial roots") {
    std::mt19937_64 gen(11);
    for (int rep = 0; rep < 20; ++rep) {
        const auto t = random_tridiag(gen, 10);
        const auto roots = oracle::charpoly_eigenvalues(t.diag(), t.offdiag());
        std::uniform_real_distribution<double> u(-6.0, 6.0);
        for (int k = 0; k < 25; ++k) {
            const double x = u(gen);
            const auto expected = static_cast<std::size_t>(std::count_if(roots.begin(), roots.end(),
                                                                         [x](double r) { return r < x; }));
            CHECK(sturm_count(t, x) == expected);
        }
    }
}

TEST_CASE("sturm count monotone with full range") {
    std::mt19937_64 gen(5);
    const auto t = random_tridiag(gen, 40);
    const auto b = gershgorin_bounds(t);
    CHECK(sturm_count(t, b.lower - 1.0) == 0);
    CHECK(sturm_count(t, b.upper + 1.0) == 40);
    std::size_t prev = 0;
    for (double x = b.lower - 1.0; x <= b.upper + 1.0; x += 0.01) {
        const std::size_t c = sturm_count(t, x);
        CHECK(c >= prev);
        prev = c;
    }
}

TEST_CASE("max eigenvalue") {
    CHECK(max_eigenvalue(TridiagonalSymmetric({3.25}, {})) == doctest::Approx(3.25).epsilon(1e-12));
    CHECK(max_eigenvalue(TridiagonalSymmetric({0.0, 0.0}, {1.0})) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(max_eigenvalue(TridiagonalSymmetric({1.0}, {}), 0.0), ContractViolation);

    std::mt19937_64 gen(17);
    for (int rep = 0; rep < 30; ++rep) {
        const auto t = random_tridiag(gen, 25);
        const double tol = kDefaultEigenTol;
        const double lmax = max_eigenvalue(t, tol);
        const double eps = 10.0 * tol * gershgorin_bounds(t).scale;
        CHECK(sturm_count(t, lmax + eps) == t.size());
        CHECK(sturm_count(t, lmax - eps) == t.size() - 1);
    }
}

TEST_CASE("kth eigenvalue bounds check") {
    const TridiagonalSymmetric t({1.0, 2.0}, {0.0});
    CHECK(kth_eigenvalue(t, 0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(kth_eigenvalue(t, 2), ContractViolation);
}

TEST_CASE("all eigenvalues trivial spectra") {
    const auto diag = all_eigenvalues(TridiagonalSymmetric({3.0, 1.0, 2.0}, {0.0, 0.0}));
    REQUIRE(diag.size() == 3);
    CHECK(diag[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(diag[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(diag[2] == doctest::Approx(3.0).epsilon(1e-12));

    const auto pm = all_eigenvalues(TridiagonalSymmetric({0.0, 0.0}, {1.0}));
    CHECK(pm[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(pm[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("all eigenvalues match characteristic polynomial oracle") {
    std::mt19937_64 gen(2024);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const auto t = random_tridiag(gen, size(gen));
        const auto got = all_eigenvalues(t);
        const auto ref = oracle::charpoly_eigenvalues(t.diag(), t.offdiag());
        REQUIRE(got.size() == ref.size());
        for (std::size_t i = 0; i < got.size(); ++i) worst = std::max(worst, std::fabs(got[i] - ref[i]));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("path graph spectrum 2cos(k pi/(n+1))") {
    for (std::size_t n : {1u, 2u, 7u, 100u, 1000u}) {
        const auto got = all_eigenvalues(path_graph(n));
        double worst = 0.0;
        for (std::size_t k = 1; k <= n; ++k) {
            const double exact = 2.0 * std::cos(static_cast<double>(n + 1 - k) * std::numbers::pi / (n + 1));
            worst = std::max(worst, std::fabs(got[k - 1] - exact));
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("parallel and serial eigenvalues are bit-identical") {
    std::mt19937_64 gen(3);
    const auto t = random_tridiag(gen, 777);
    const auto serial = all_eigenvalues(t, kDefaultEigenTol, Execution::serial);
    for (int threads : {1, 2, 3, 8}) {
        set_thread_count(threads);
        CHECK(all_eigenvalues(t, kDefaultEigenTol, Execution::parallel) == serial);
    }
    set_thread_count(0);
}

TEST_CASE("dense eigenvalues") {
    DenseSymmetric id(3);
    for (std::size_t i = 0; i < 3; ++i) id.set(i, i, 1.0);
    for (double v : dense_symmetric_eigenvalues(id)) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    DenseSymmetric swap(2);
    swap.set(0, 1, 1.0);
    const auto s = dense_symmetric_eigenvalues(swap);
    CHECK(s[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(s[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dense eigenvalues match Jacobi and preserve trace and Frobenius norm") {
    std::mt19937_64 gen(99);
    std::normal_distribution<double> g;
    for (std::size_t n : {4u, 9u, 30u}) {
        DenseSymmetric a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) a.set(i, j, g(gen));
        const auto got = dense_symmetric_eigenvalues(a);
        const auto ref = oracle::jacobi_eigen({a.data().begin(), a.data().end()}, n).values;
        double trace = 0.0, frob = 0.0, sum = 0.0, sumsq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            trace += a(i, i);
            for (std::size_t j = 0; j < n; ++j) frob += a(i, j) * a(i, j);
            sum += got[i];
            sumsq += got[i] * got[i];
            CHECK(std::fabs(got[i] - ref[i]) <= 1e-10);
        }
        CHECK(std::fabs(sum - trace) <= 1e-10 * std::max(1.0, std::fabs(trace)));
        CHECK(std::fabs(sumsq - frob) <= 1e-10 * frob);
    }
}

TEST_CASE("householder keeps the spectrum of an already tridiagonal matrix") {
    const auto t = path_graph(6);
    DenseSymmetric a(6);
    for (std::size_t i = 0; i + 1 < 6; ++i) a.set(i, i + 1, 1.0);
    const auto h = householder_tridiagonalize(a);
    const auto x = all_eigenvalues(h);
    const auto y = all_eigenvalues(t);
    for (std::size_t i = 0; i < 6; ++i) CHECK(x[i] == doctest::Approx(y[i]).epsilon(1e-12));
}
