#include <catch2/catch_amalgamated.hpp>

#include "grm/verify.hpp"
#include "oracles.hpp"

using grm::CheckReport;
using grm::Field;
using grm::Json;
using grm::MultiIndex;

namespace {

Json strip_elapsed(const std::vector<CheckReport>& reports) {
    Json out = Json::array();
    for (const auto& r : reports) {
        Json j = r.to_json();
        j.erase("elapsed_ms");
        out.push_back(std::move(j));
    }
    return out;
}

} // namespace

TEST_CASE("Berman-Charpin checks pass on small prime grids") {
    const auto r23 = grm::check_bch(2, 3);
    CHECK(r23.size() == 4);
    CHECK(grm::all_pass(r23));

    const auto r32 = grm::check_bch(3, 2);
    CHECK(r32.size() == 5);
    CHECK(grm::all_pass(r32));

    // the final report compares two full spaces
    CHECK(r32.back().evidence["dim_code_rank"] == 9);
    CHECK(r32.back().evidence["containment_degrees_ok"] == true);
}

TEST_CASE("non-prime checks: q=4, m=1 pattern") {
    const auto reports = grm::check_nonprime(4, 1);
    REQUIRE(reports.size() == 4); // three equalities + one inequality
    CHECK(grm::all_pass(reports));
    CHECK(reports[0].check_id == "nonprime/q4m1/equal/M3=C0");
    CHECK(reports[1].check_id == "nonprime/q4m1/equal/M1=C2");
    CHECK(reports[2].check_id == "nonprime/q4m1/equal/M0=C3");
    CHECK(reports[3].check_id == "nonprime/q4m1/unequal/M2!=C1");
    CHECK(reports[3].evidence["dim_radical_counted"] == reports[3].evidence["dim_code_counted"]);
    CHECK(reports[3].evidence["witness"]["in_code"] == false);
    CHECK(reports[3].evidence["witness"]["in_radical"] == true);
}

TEST_CASE("non-prime checks reject prime and non-prime-power orders") {
    CHECK_THROWS_AS(grm::check_nonprime(5, 1), grm::NotNonPrimeError);
    CHECK_THROWS_AS(grm::check_nonprime(6, 1), grm::Error);
}

TEST_CASE("separating vectors: frozen first hits and the named witnesses") {
    auto f8 = Field::make(2, 3);
    const auto w20 = grm::find_separating_vector(f8, 3, 20);
    CHECK(w20.index == MultiIndex{6, 7, 7});
    CHECK(w20.interp_degree == 6);
    CHECK(w20.nu == 1);

    const auto w2 = grm::find_separating_vector(f8, 3, 2);
    CHECK(w2.index == MultiIndex{0, 0, 2});
    CHECK(w2.interp_degree == 20);
    CHECK(w2.nu == 19);

    // the generic scan returns (0,0,3) for i=3; the named witness for that
    // step is (0,2,1) of interpolant degree 19 > 18, validated separately
    const auto w3 = grm::find_separating_vector(f8, 3, 3);
    CHECK(w3.index == MultiIndex{0, 0, 3});
    CHECK(w3.interp_degree == 20);
    const auto named = grm::detail::named_witness(8, 3, 18);
    REQUIRE(named.has_value());
    CHECK(*named == MultiIndex{0, 2, 1});
    CHECK(grm::phi_inv(grm::b_poly(f8, *named)).total_degree() == 19);

    CHECK_THROWS_AS(grm::find_separating_vector(f8, 3, 1), grm::IndexOutOfRangeError);
    CHECK_THROWS_AS(grm::find_separating_vector(Field::make(5, 1), 1, 2), grm::NotNonPrimeError);
}

TEST_CASE("a separator exists at every admissible power") {
    for (auto [q, m] : {std::pair<std::uint32_t, unsigned>{4, 2}, {9, 1}, {16, 1}}) {
        auto f = grm::make_field_q(q);
        const std::uint32_t top = m * (q - 1);
        for (std::uint32_t i = 2; i + 1 <= top; ++i) {
            const auto w = grm::find_separating_vector(f, m, i);
            CHECK(grm::weight(w.index) >= i);
            CHECK(w.interp_degree > static_cast<int>(top - i));
        }
    }
}

TEST_CASE("the named witness schedule covers every step and validates") {
    for (auto [q, m] : {std::pair<std::uint32_t, unsigned>{4, 2}, {8, 2}, {9, 1}, {4, 3}}) {
        auto f = grm::make_field_q(q);
        const std::uint32_t top = m * (q - 1);
        for (std::uint32_t nu = 1; nu + 2 <= top; ++nu) {
            const auto named = grm::detail::named_witness(q, m, nu);
            REQUIRE(named.has_value());
            CHECK(grm::weight(*named) >= top - nu);
            CHECK(grm::phi_inv(grm::b_poly(f, *named)).total_degree() > static_cast<int>(nu));
        }
        CHECK_FALSE(grm::detail::named_witness(q, m, 0).has_value());
        CHECK_FALSE(grm::detail::named_witness(q, m, top - 1).has_value());
    }
}

TEST_CASE("interp suite passes for a representative set") {
    for (std::uint32_t q : {2u, 4u, 5u, 8u}) {
        const auto reports = grm::check_interp_suite(q);
        INFO("q = " << q);
        CHECK(grm::all_pass(reports));
    }
    // spot frozen degrees inside the evidence
    const auto r8 = grm::check_interp_suite(8);
    bool saw_degree = false;
    for (const auto& rep : r8)
        if (rep.check_id == "interp/q8/degrees") {
            CHECK(rep.evidence["law"] == "deg H_{q-2} = q-2");
            saw_degree = true;
        }
    CHECK(saw_degree);
}

TEST_CASE("duality check passes and cross-checks by enumeration") {
    for (auto [q, m] : {std::pair<std::uint32_t, unsigned>{8, 3}, {4, 2}, {9, 3}}) {
        const auto rep = grm::check_duality(q, m);
        CHECK(rep.pass);
        CHECK(rep.evidence["enumeration_cross_checked"] == true);
    }
}

TEST_CASE("section 6 degree claims and the tiny equality") {
    auto f8 = Field::make(2, 3);
    const std::vector<std::pair<MultiIndex, int>> claims = {
        {{6, 7, 7}, 6}, {{6, 6, 7}, 12}, {{6, 6, 6}, 18}, {{0, 2, 1}, 19}, {{0, 0, 2}, 20}};
    for (const auto& [idx, expected] : claims) {
        CHECK(grm::h_multi_degree(f8, idx) == expected);
        CHECK(grm::h_multi(f8, idx).total_degree() == expected);
    }
    // M^21 = C_0(3,8), both of dimension 1
    const auto radical = grm::radical_matrix(f8, 3, 21);
    const auto code = grm::grm_generator(grm::CodeSpec(f8, 3, 0)).mat;
    CHECK(radical.rows() == 1);
    CHECK(grm::same_rowspace(radical, code));
}

TEST_CASE("reports are deterministic up to elapsed time") {
    const auto a = grm::check_bch(2, 2);
    const auto b = grm::check_bch(2, 2);
    CHECK(strip_elapsed(a) == strip_elapsed(b));

    const auto c = grm::check_nonprime(4, 2);
    const auto d = grm::check_nonprime(4, 2);
    CHECK(strip_elapsed(c) == strip_elapsed(d));
}

TEST_CASE("failure reports carry a concrete counterexample") {
    // compare two spaces that are genuinely different
    auto f = Field::make(2, 2);
    const auto radical = grm::radical_matrix(f, 1, 2);     // M^2, dim 2
    const auto code = grm::grm_generator(grm::CodeSpec(f, 1, 1)).mat; // C_1, dim 2
    const auto rep = grm::detail::space_equality_report("test/forced_fail", Json::object(), f,
                                                        radical, code, 2);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.evidence.contains("counterexample"));
    CHECK(rep.evidence["counterexample"].contains("vector"));
}

TEST_CASE("report JSON round-trips and has the contract fields") {
    const auto reports = grm::check_bch(2, 2);
    for (const auto& rep : reports) {
        const std::string dumped = rep.to_json().dump();
        const Json parsed = Json::parse(dumped);
        CHECK(parsed["check_id"] == rep.check_id);
        CHECK((parsed["verdict"] == "pass" || parsed["verdict"] == "fail"));
        CHECK(parsed.contains("params"));
        CHECK(parsed.contains("evidence"));
        CHECK(parsed.contains("elapsed_ms"));
    }
}
