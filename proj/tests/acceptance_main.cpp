// Acceptance suite: the eight exact criteria, one pass/fail line each.
// Returns nonzero if any criterion fails. Time limits are part of the
// criteria and enforced.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "grm/grm.hpp"

namespace {

int g_failures = 0;

struct Criterion {
    const char* label;
    double limit_seconds; // 0 = no limit
};

template <typename Body>
void run(const Criterion& c, Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
        ok = false;
        detail += " [over time limit]";
    }
    std::printf("[%s] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.label, secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

bool reports_pass(const std::vector<grm::CheckReport>& reports, std::string& detail) {
    for (const auto& r : reports)
        if (!r.pass) {
            detail = "failed: " + r.check_id + " " + r.evidence.dump();
            return false;
        }
    return true;
}

} // namespace

int main() {
    using grm::CheckReport;

    run({"criterion 1: Berman-Charpin equality on the prime grid", 10.0}, [](std::string& detail) {
        std::size_t checks = 0;
        for (auto [p, m] : {std::pair<unsigned, unsigned>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3},
                            {5, 2}, {7, 1}}) {
            const auto reports = grm::check_bch(p, m);
            checks += reports.size();
            if (!reports_pass(reports, detail)) return false;
        }
        detail = std::to_string(checks) + " equalities";
        return true;
    });

    run({"criterion 2: non-prime theorem on the extension grid", 30.0}, [](std::string& detail) {
        std::size_t checks = 0;
        for (auto [q, m] : {std::pair<std::uint32_t, unsigned>{4, 1}, {4, 2}, {4, 3}, {8, 1},
                            {8, 2}, {9, 1}, {9, 2}, {16, 1}}) {
            const auto reports = grm::check_nonprime(q, m);
            checks += reports.size();
            if (!reports_pass(reports, detail)) return false;
        }
        detail = std::to_string(checks) + " checks (3 equalities each, inequalities with equal dims)";
        return true;
    });

    run({"criterion 3: length-512 worked example (q=8, m=3)", 60.0}, [](std::string& detail) {
        const auto reports = grm::run_section6();
        if (!reports_pass(reports, detail)) return false;
        // insist on the exact degree list and the full inequality range
        const std::vector<std::pair<std::string, int>> degrees = {
            {"section6/degree/677", 6},
            {"section6/degree/667", 12},
            {"section6/degree/666", 18},
            {"section6/degree/021", 19},
            {"section6/degree/002", 20}};
        for (const auto& [id, expect] : degrees) {
            bool found = false;
            for (const auto& r : reports)
                if (r.check_id == id && r.pass && r.evidence["expected"] == expect) found = true;
            if (!found) {
                detail = "missing degree claim " + id;
                return false;
            }
        }
        std::size_t inequalities = 0, equalities = 0;
        for (const auto& r : reports) {
            inequalities += r.check_id.find("unequal") != std::string::npos;
            equalities += r.check_id.find("/equal/") != std::string::npos;
        }
        if (inequalities != 19 || equalities != 1) {
            detail = "wrong claim counts";
            return false;
        }
        detail = "25 claims reproduced";
        return true;
    });

    run({"criterion 4: interpolation identity suite", 0.0}, [](std::string& detail) {
        std::size_t checks = 0;
        for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
            const auto reports = grm::check_interp_suite(q);
            checks += reports.size();
            if (!reports_pass(reports, detail)) return false;
        }
        detail = std::to_string(checks) + " identity groups";
        return true;
    });

    run({"criterion 5: alternating binomials for all prime powers <= 128", 0.0},
        [](std::string& detail) {
            std::size_t checks = 0;
            for (unsigned p = 2; p <= 128; ++p) {
                if (!grm::is_prime(p)) continue;
                for (std::uint64_t q = p; q <= 128; q *= p) {
                    for (std::uint64_t d = 0; d < q; ++d) {
                        const unsigned expect = d % 2 == 0 ? 1u : (p - 1) % p;
                        if (grm::binom_mod_p(q - 1, d, p) != expect) {
                            detail = "failed at p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                     " d=" + std::to_string(d);
                            return false;
                        }
                        ++checks;
                    }
                    if (q > 128 / p) break;
                }
            }
            detail = std::to_string(checks) + " binomials";
            return true;
        });

    run({"criterion 6: dimension duality, DP against enumeration", 0.0}, [](std::string& detail) {
        for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
            for (unsigned m = 1; m <= 3; ++m) {
                const CheckReport rep = grm::check_duality(q, m);
                if (!rep.pass) {
                    detail = "failed: " + rep.check_id + " " + rep.evidence.dump();
                    return false;
                }
                if (grm::pow_points(q, m, grm::kDefaultMaxPoints) <= 4096 &&
                    rep.evidence["enumeration_cross_checked"] != true) {
                    detail = "enumeration cross-check skipped at q=" + std::to_string(q);
                    return false;
                }
            }
        }
        detail = "q <= 9, m <= 3, all d";
        return true;
    });

    run({"criterion 7: phi bijectivity and the basis correspondence", 0.0},
        [](std::string& detail) {
            for (auto [q, m] : {std::pair<std::uint32_t, unsigned>{4, 2}, {8, 2}}) {
                auto f = grm::make_field_q(q);
                std::mt19937 gen(20260811u + q);
                for (int trial = 0; trial < 100; ++trial) {
                    grm::AlgebraElement a(f, m);
                    for (std::uint64_t k = 0; k < a.size(); ++k)
                        a.set_coeff(k, static_cast<grm::Elem>(gen() % q));
                    if (grm::phi(grm::phi_inv(a)) != a) {
                        detail = "round trip failed at q=" + std::to_string(q);
                        return false;
                    }
                }
            }
            for (auto [q, m] : {std::pair<std::uint32_t, unsigned>{4, 2}, {8, 1}, {3, 2}}) {
                auto f = grm::make_field_q(q);
                const std::uint64_t n = grm::pow_points(q, m, grm::kDefaultMaxPoints);
                for (std::uint64_t rank = 0; rank < n; ++rank) {
                    const grm::MultiIndex idx = grm::monomial_unrank(q, m, rank);
                    if (grm::phi(grm::h_multi(f, idx)) != grm::b_poly(f, idx)) {
                        detail = "phi(H_i) != B_i at q=" + std::to_string(q);
                        return false;
                    }
                }
            }
            detail = "200 round trips + every basis index at three (q,m)";
            return true;
        });

    run({"criterion 8: linear algebra against exhaustive span enumeration", 0.0},
        [](std::string& detail) {
            std::size_t matrices = 0;
            for (std::uint32_t q : {2u, 3u}) {
                auto f = grm::make_field_q(q);
                std::mt19937 gen(4242u + q);
                for (int trial = 0; trial < 100; ++trial) {
                    const std::size_t rows = 1 + gen() % 4, cols = 1 + gen() % 5;
                    grm::MatrixGF m(f, rows, cols);
                    for (std::size_t r = 0; r < rows; ++r)
                        for (std::size_t c = 0; c < cols; ++c)
                            m.at(r, c) = static_cast<grm::Elem>(gen() % q);
                    // exhaustive span
                    std::set<std::vector<grm::Elem>> span;
                    std::vector<grm::Elem> combo(rows, 0);
                    while (true) {
                        std::vector<grm::Elem> v(cols, 0);
                        for (std::size_t r = 0; r < rows; ++r)
                            for (std::size_t c = 0; c < cols; ++c)
                                v[c] = f->add(v[c], f->mul(combo[r], m.at(r, c)));
                        span.insert(std::move(v));
                        std::size_t r = 0;
                        while (r < rows) {
                            combo[r] = static_cast<grm::Elem>((combo[r] + 1) % q);
                            if (combo[r] != 0) break;
                            ++r;
                        }
                        if (r == rows) break;
                    }
                    std::uint64_t expect_size = 1;
                    const auto rr = grm::rref(m);
                    for (std::size_t k = 0; k < rr.rank; ++k) expect_size *= q;
                    if (expect_size != span.size()) {
                        detail = "rank mismatch vs enumeration";
                        return false;
                    }
                    for (int probe = 0; probe < 20; ++probe) {
                        std::vector<grm::Elem> v(cols);
                        for (auto& x : v) x = static_cast<grm::Elem>(gen() % q);
                        if (grm::in_rowspace(rr, v) != (span.count(v) > 0)) {
                            detail = "membership mismatch vs enumeration";
                            return false;
                        }
                    }
                    ++matrices;
                }
            }
            detail = std::to_string(matrices) + " matrices";
            return true;
        });

    if (g_failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
