// grm: construct generalized Reed-Muller codes and radical-power bases of
// F_q[X_1..X_m]/(X_1^q-1,...,X_m^q-1), and verify the equalities (prime q)
// and inequalities (non-prime q) between the two families.
//
// Exit codes: 0 all output produced / all checks passed, 1 at least one
// check failed, 2 usage or validation error.

#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grm/grm.hpp"

namespace {

struct Options {
    unsigned p = 0;
    unsigned r = 1;
    std::uint64_t q = 0;
    unsigned m = 1;
    long long nu = -1;
    long long d = -1;
    long long i = -1;
    std::string format = "text";
    std::string out;
    std::uint64_t max_size = grm::kDefaultMaxPoints;
};

std::ostream& output_stream(const Options& opt, std::ofstream& file) {
    if (opt.out.empty()) return std::cout;
    file.open(opt.out);
    if (!file) throw grm::Error("cannot open output file: " + opt.out);
    return file;
}

grm::FieldPtr field_from(const Options& opt) {
    const std::uint32_t cap =
        static_cast<std::uint32_t>(std::min<std::uint64_t>(opt.max_size, grm::kMaxFieldOrder));
    if (opt.q != 0) {
        if (opt.p != 0) throw grm::Error("give either --q or --p/--r, not both");
        return grm::make_field_q(opt.q, cap);
    }
    if (opt.p == 0) throw grm::Error("a field is required: give --q or --p (with optional --r)");
    return grm::Field::make(opt.p, opt.r, cap);
}

int emit_reports(const Options& opt, const std::vector<grm::CheckReport>& reports) {
    std::ofstream file;
    std::ostream& os = output_stream(opt, file);
    std::size_t failed = 0;
    for (const auto& rep : reports) {
        if (!rep.pass) ++failed;
        if (opt.format == "json") {
            os << rep.to_json().dump() << "\n";
        } else {
            os << (rep.pass ? "pass" : "FAIL") << "  " << rep.check_id;
            if (!rep.pass) os << "  counterexample: " << rep.evidence.dump();
            os << "\n";
        }
    }
    if (opt.format != "json")
        os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
           << " (" << reports.size() << " total)\n";
    return failed == 0 ? 0 : 1;
}

int cmd_field(const Options& opt) {
    const auto f = field_from(opt);
    std::ofstream file;
    std::ostream& os = output_stream(opt, file);
    if (opt.format == "json")
        os << grm::field_to_json(*f).dump() << "\n";
    else
        os << grm::field_to_text(*f) << "\n";
    return 0;
}

int cmd_hpoly(const Options& opt) {
    const auto f = field_from(opt);
    if (opt.i < 0 || opt.i >= static_cast<long long>(f->q()))
        throw grm::Error("--i must lie in [0, q-1]");
    const auto i = static_cast<std::uint32_t>(opt.i);
    std::ofstream file;
    std::ostream& os = output_stream(opt, file);

    const grm::UniPoly h = grm::h_poly(f, i);
    grm::Json forms;
    forms["definition"] = grm::unipoly_to_json(h);
    forms["closed"] = grm::unipoly_to_json(grm::h_closed(f, i));
    if (!f->prime_field()) {
        forms["closed_primitive"] = grm::unipoly_to_json(grm::h_closed_primitive(f, i));
    } else {
        const grm::HPrimeForms pf = grm::h_prime_forms(f, i);
        forms["coeff_form"] = grm::unipoly_to_json(pf.coeff_form);
        forms["product_form"] = grm::unipoly_to_json(pf.product_form);
        forms["recurrence_form"] = grm::unipoly_to_json(pf.recurrence_form);
        forms["primitive_enumeration"] = grm::unipoly_to_json(grm::h_poly_primitive(f, i));
    }
    if (opt.format == "json") {
        grm::Json out{{"field", grm::field_to_json(*f)}, {"i", i}, {"forms", forms},
                      {"degree", h.degree()}};
        os << out.dump() << "\n";
    } else {
        os << "H_" << i << " over F_" << f->q() << " (degree " << h.degree() << ")\n";
        os << "  definition: " << grm::unipoly_to_text(h) << "\n";
        os << "  closed:     " << grm::unipoly_to_text(grm::h_closed(f, i)) << "\n";
        if (f->prime_field()) {
            const grm::HPrimeForms pf = grm::h_prime_forms(f, i);
            os << "  product:    " << grm::unipoly_to_text(pf.product_form) << "\n";
            os << "  recurrence: " << grm::unipoly_to_text(pf.recurrence_form) << "\n";
        }
    }
    return 0;
}

int cmd_basis(const Options& opt) {
    const auto f = field_from(opt);
    if (opt.d < 0) throw grm::Error("--d (radical power) is required");
    const auto d = static_cast<std::uint32_t>(opt.d);
    const grm::MatrixGF mat = grm::radical_matrix(f, opt.m, d, opt.max_size);
    std::ofstream file;
    std::ostream& os = output_stream(opt, file);
    if (opt.format == "json") {
        grm::Json out = grm::matrix_to_json(mat);
        out["field"] = grm::field_to_json(*f);
        out["m"] = opt.m;
        out["d"] = d;
        os << out.dump() << "\n";
    } else if (opt.format == "csv") {
        grm::matrix_to_csv(os, mat, grm::matrix_csv_header(*f, opt.m, d, "d"));
    } else {
        os << "basis of M^" << d << " over F_" << f->q() << ", m=" << opt.m << ": " << mat.rows()
           << " x " << mat.cols() << "\n";
        for (const auto& idx : grm::radical_indices(f->q(), opt.m, d, opt.max_size)) {
            os << "  (";
            for (std::size_t l = 0; l < idx.size(); ++l) os << (l ? "," : "") << idx[l];
            os << ")\n";
        }
    }
    return 0;
}

int cmd_code_gen(const Options& opt) {
    const auto f = field_from(opt);
    if (opt.nu < 0) throw grm::Error("--nu (code order) is required");
    const grm::GeneratorMatrix g =
        grm::grm_generator(grm::CodeSpec(f, opt.m, static_cast<std::uint32_t>(opt.nu)), opt.max_size);
    std::ofstream file;
    std::ostream& os = output_stream(opt, file);
    if (opt.format == "json")
        os << grm::generator_to_json(g).dump() << "\n";
    else
        grm::matrix_to_csv(os, g.mat, grm::matrix_csv_header(*f, opt.m, g.spec.nu));
    return 0;
}

int cmd_dim(const Options& opt) {
    const auto f = field_from(opt);
    const std::uint32_t q = f->q();
    const std::uint32_t top = opt.m * (q - 1);
    std::ofstream file;
    std::ostream& os = output_stream(opt, file);
    if (opt.d >= 0 || opt.nu >= 0) {
        grm::Json out;
        if (opt.d >= 0) out["radical_dim"] = grm::radical_dim(q, opt.m, static_cast<std::uint32_t>(opt.d));
        if (opt.nu >= 0) out["code_dim"] = grm::code_dim_count(q, opt.m, static_cast<std::uint32_t>(opt.nu));
        if (opt.format == "json")
            os << out.dump() << "\n";
        else
            for (const auto& [k, v] : out.items()) os << k << " = " << v << "\n";
        return 0;
    }
    grm::Json table = grm::Json::array();
    for (std::uint32_t d = 0; d <= top; ++d)
        table.push_back(grm::Json{{"d", d},
                                  {"radical_dim", grm::radical_dim(q, opt.m, d)},
                                  {"dual_nu", top - d},
                                  {"code_dim", grm::code_dim_count(q, opt.m, top - d)}});
    if (opt.format == "json") {
        os << grm::Json{{"field", grm::field_to_json(*f)}, {"m", opt.m}, {"table", table}}.dump()
           << "\n";
    } else {
        os << "d, dim M^d, nu=m(q-1)-d, dim C_nu   (q=" << q << ", m=" << opt.m << ")\n";
        for (const auto& row : table)
            os << row["d"] << ", " << row["radical_dim"] << ", " << row["dual_nu"] << ", "
               << row["code_dim"] << "\n";
    }
    return 0;
}

int cmd_verify(const Options& opt, const std::string& what) {
    std::vector<grm::CheckReport> reports;
    if (what == "bch") {
        if (opt.p == 0) throw grm::Error("verify bch needs --p (prime)");
        if (opt.r != 1) throw grm::Error("verify bch runs over prime fields (r = 1)");
        if (!grm::is_prime(opt.p)) throw grm::Error("verify bch: p must be prime");
        reports = grm::check_bch(opt.p, opt.m, opt.max_size);
    } else if (what == "nonprime") {
        if (opt.q == 0) throw grm::Error("verify nonprime needs --q (non-prime prime power)");
        reports = grm::check_nonprime(static_cast<std::uint32_t>(opt.q), opt.m, opt.max_size);
    } else if (what == "interp") {
        if (opt.q == 0) throw grm::Error("verify interp needs --q (prime power)");
        reports = grm::check_interp_suite(static_cast<std::uint32_t>(opt.q));
    } else if (what == "duality") {
        if (opt.q == 0) throw grm::Error("verify duality needs --q (prime power)");
        reports.push_back(grm::check_duality(static_cast<std::uint32_t>(opt.q), opt.m, opt.max_size));
    } else if (what == "section6") {
        reports = grm::run_section6(opt.max_size);
    } else if (what == "all") {
        for (auto [p, m] : {std::pair<unsigned, unsigned>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3},
                            {5, 2}, {7, 1}})
            for (auto& rep : grm::check_bch(p, m, opt.max_size)) reports.push_back(std::move(rep));
        for (auto [q, m] : {std::pair<std::uint32_t, unsigned>{4, 1}, {4, 2}, {4, 3}, {8, 1},
                            {8, 2}, {9, 1}, {9, 2}, {16, 1}})
            for (auto& rep : grm::check_nonprime(q, m, opt.max_size)) reports.push_back(std::move(rep));
        for (std::uint32_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27})
            for (auto& rep : grm::check_interp_suite(q)) reports.push_back(std::move(rep));
        for (std::uint32_t q : {2, 3, 4, 5, 7, 8, 9})
            for (unsigned m = 1; m <= 3; ++m) reports.push_back(grm::check_duality(q, m, opt.max_size));
        for (auto& rep : grm::run_section6(opt.max_size)) reports.push_back(std::move(rep));
    } else {
        throw grm::Error("unknown verify target: " + what);
    }
    return emit_reports(opt, reports);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Reed-Muller codes and radical powers of modular algebras over F_q"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--max-size", opt.max_size, "ceiling on q^m (and on q)")->capture_default_str();

    auto add_common = [&](CLI::App* sub, bool with_field) {
        if (with_field) {
            sub->add_option("--p", opt.p, "field characteristic (prime)");
            sub->add_option("--r", opt.r, "extension degree (default 1)");
            sub->add_option("--q", opt.q, "field order p^r");
        }
        sub->add_option("--m", opt.m, "number of variables");
        sub->add_option("--format", opt.format, "text|json|csv")
            ->capture_default_str()
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", opt.out, "write output to a file instead of stdout");
        sub->add_option("--max-size", opt.max_size, "ceiling on q^m (and on q)");
    };

    auto* field_cmd = app.add_subcommand("field", "print the deterministic field description");
    add_common(field_cmd, true);

    auto* hpoly_cmd = app.add_subcommand("hpoly", "print an interpolation polynomial in all forms");
    add_common(hpoly_cmd, true);
    hpoly_cmd->add_option("--i", opt.i, "interpolation order in [0, q-1]");

    auto* basis_cmd = app.add_subcommand("basis", "emit the basis of a radical power M^d");
    add_common(basis_cmd, true);
    basis_cmd->add_option("--d", opt.d, "radical power in [0, m(q-1)+1]");

    auto* code_cmd = app.add_subcommand("code", "Reed-Muller code operations");
    auto* code_gen = code_cmd->add_subcommand("gen", "emit a generator matrix");
    add_common(code_gen, true);
    code_gen->add_option("--nu", opt.nu, "code order in [0, m(q-1)]");

    auto* dim_cmd = app.add_subcommand("dim", "dimension duality table (or single values)");
    add_common(dim_cmd, true);
    dim_cmd->add_option("--d", opt.d, "radical power");
    dim_cmd->add_option("--nu", opt.nu, "code order");

    auto* verify_cmd = app.add_subcommand("verify", "run theorem-level checks");
    verify_cmd->require_subcommand(1);
    std::vector<std::string> targets{"bch", "nonprime", "interp", "duality", "section6", "all"};
    for (const auto& t : targets) {
        auto* sub = verify_cmd->add_subcommand(t);
        add_common(sub, true);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*field_cmd) return cmd_field(opt);
        if (*hpoly_cmd) return cmd_hpoly(opt);
        if (*basis_cmd) return cmd_basis(opt);
        if (*code_cmd) {
            if (*code_gen) return cmd_code_gen(opt);
            throw grm::Error("code: missing subcommand (gen)");
        }
        if (*dim_cmd) return cmd_dim(opt);
        if (*verify_cmd)
            for (const auto& t : targets)
                if (verify_cmd->got_subcommand(t)) return cmd_verify(opt, t);
        throw grm::Error("no subcommand given");
    } catch (const grm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
