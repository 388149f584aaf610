#pragma once

// Text, JSON and CSV forms of the library's values. Field elements appear as
// their integer encodings everywhere; matrix and algebra-element coordinates
// are in monomial rank order, which is the interchange format shared by the
// code, algebra and verification layers. CSV matrix dumps carry one metadata
// header line prefixed '#'.

#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "grm/algebra.hpp"
#include "grm/codes.hpp"
#include "grm/gf.hpp"
#include "grm/linalg.hpp"
#include "grm/poly.hpp"

namespace grm {

using Json = nlohmann::json;

inline Json field_to_json(const Field& f) {
    return Json{{"p", f.p()}, {"r", f.r()}, {"q", f.q()}, {"modulus", f.modulus()}, {"alpha", f.alpha()}};
}

inline std::string field_to_text(const Field& f) {
    std::ostringstream os;
    os << "F_" << f.q() << " = F_" << f.p() << "[Y]/(";
    bool first = true;
    for (std::size_t d = f.modulus().size(); d-- > 0;) {
        const unsigned c = f.modulus()[d];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (d == 0 || c != 1) os << c;
        if (d >= 1) {
            os << "Y";
            if (d > 1) os << "^" << d;
        }
    }
    os << "), alpha = " << f.alpha();
    return os.str();
}

inline std::string unipoly_to_text(const UniPoly& p, const std::string& var = "Y") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = p.coeffs().size(); d-- > 0;) {
        const Elem c = p.coeff(d);
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (d == 0 || c != 1) os << unsigned(c);
        if (d >= 1) {
            if (c != 1) os << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

inline Json unipoly_to_json(const UniPoly& p) {
    return Json{{"coeffs", p.coeffs()}, {"degree", p.is_zero() ? Json(nullptr) : Json(p.degree())}};
}

inline std::string reducedpoly_to_text(const ReducedPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << unsigned(c);
        for (std::size_t l = 0; l < idx.size(); ++l) {
            if (idx[l] == 0) continue;
            os << " * Y" << (l + 1);
            if (idx[l] > 1) os << "^" << idx[l];
        }
    }
    return os.str();
}

inline Json reducedpoly_to_json(const ReducedPoly& p) {
    Json terms = Json::array();
    for (const auto& [idx, c] : p.terms()) {
        Json exp = Json::array();
        for (auto e : idx) exp.push_back(unsigned(e));
        terms.push_back(Json{{"exp", exp}, {"coeff", c}});
    }
    return Json{{"m", p.arity()},
                {"terms", terms},
                {"total_degree", p.is_zero() ? Json(nullptr) : Json(p.total_degree())}};
}

inline Json algebra_to_json(const AlgebraElement& a) { return Json(a.coeffs()); }

inline std::string algebra_to_csv(const AlgebraElement& a) {
    std::ostringstream os;
    for (std::uint64_t k = 0; k < a.size(); ++k) {
        if (k) os << ",";
        os << a.coeff(k);
    }
    return os.str();
}

inline std::string matrix_csv_header(const Field& f, unsigned m, std::uint32_t order,
                                     const std::string& order_label = "nu") {
    std::ostringstream os;
    os << "# p=" << f.p() << " r=" << f.r() << " q=" << f.q() << " modulus=";
    for (std::size_t i = 0; i < f.modulus().size(); ++i) {
        if (i) os << ",";
        os << f.modulus()[i];
    }
    os << " alpha=" << f.alpha() << " m=" << m << " " << order_label << "=" << order;
    return os.str();
}

inline void matrix_to_csv(std::ostream& os, const MatrixGF& mat, const std::string& header) {
    os << header << "\n";
    for (std::size_t r = 0; r < mat.rows(); ++r) {
        for (std::size_t c = 0; c < mat.cols(); ++c) {
            if (c) os << ",";
            os << mat.at(r, c);
        }
        os << "\n";
    }
}

inline Json matrix_to_json(const MatrixGF& mat) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < mat.rows(); ++r)
        rows.push_back(std::vector<unsigned>(mat.row(r).begin(), mat.row(r).end()));
    return Json{{"rows", mat.rows()}, {"cols", mat.cols()}, {"entries", rows}};
}

inline Json generator_to_json(const GeneratorMatrix& g) {
    Json mono = Json::array();
    for (const auto& idx : g.monomials) {
        Json e = Json::array();
        for (auto c : idx) e.push_back(unsigned(c));
        mono.push_back(e);
    }
    Json out = matrix_to_json(g.mat);
    out["field"] = field_to_json(*g.spec.field);
    out["m"] = g.spec.m;
    out["nu"] = g.spec.nu;
    out["monomials"] = mono;
    return out;
}

} // namespace grm
