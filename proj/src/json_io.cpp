#include "gradstar/json_io.hpp"

#include <stdexcept>

namespace gradstar {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

void expect(bool cond, const char* what) {
    if (!cond) bad(what);
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    return Json{{"re", rational_str(s.re())}, {"im", rational_str(s.im())}};
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
    expect(j.is_object() && j.contains("re"), "scalar record needs a \"re\" field");
    Rational re = parse_rational(j.at("re").get<std::string>());
    Rational im =
        j.contains("im") ? parse_rational(j.at("im").get<std::string>()) : Rational(0);
    return Scalar(std::move(re), std::move(im));
}

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json exp = Json::array();
        for (int k : e) exp.push_back(k);
        terms.push_back(Json{{"coeff", scalar_to_json(c)}, {"exp", exp}});
    }
    Json vars = Json::array();
    for (const auto& v : p.vars()) vars.push_back(v);
    return Json{{"vars", vars}, {"terms", terms}};
}

Poly poly_from_json(const Json& j) {
    expect(j.is_object() && j.contains("vars") && j.contains("terms"),
           "polynomial needs \"vars\" and \"terms\"");
    bool complex = false;
    for (const auto& t : j.at("terms"))
        if (!scalar_from_json(t.at("coeff")).is_real()) complex = true;
    return poly_from_json(j, complex ? Field::Complex : Field::Real);
}

Poly poly_from_json(const Json& j, Field field) {
    expect(j.is_object() && j.contains("vars") && j.contains("terms"),
           "polynomial needs \"vars\" and \"terms\"");
    std::vector<std::string> vars;
    for (const auto& v : j.at("vars")) vars.push_back(v.get<std::string>());
    Poly p(vars, field);
    for (const auto& t : j.at("terms")) {
        expect(t.contains("coeff") && t.contains("exp"), "term needs \"coeff\" and \"exp\"");
        Poly::Exponents e;
        for (const auto& k : t.at("exp")) e.push_back(k.get<int>());
        p.add_term(e, scalar_from_json(t.at("coeff")));
    }
    return p;
}

Json mupoly_to_json(const MuPoly& v) {
    Json coeffs = Json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(poly_to_json(c));
    return Json{{"m", v.length()}, {"coeffs", coeffs}};
}

MuPoly mupoly_from_json(const Json& j) {
    expect(j.is_object() && j.contains("coeffs"), "mu-vector needs \"coeffs\"");
    bool complex = false;
    for (const auto& c : j.at("coeffs"))
        for (const auto& t : c.at("terms"))
            if (!scalar_from_json(t.at("coeff")).is_real()) complex = true;
    return mupoly_from_json(j, complex ? Field::Complex : Field::Real);
}

MuPoly mupoly_from_json(const Json& j, Field field) {
    expect(j.is_object() && j.contains("coeffs"), "mu-vector needs \"coeffs\"");
    std::vector<Poly> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(poly_from_json(c, field));
    if (j.contains("m") && j.at("m").get<size_t>() != coeffs.size())
        bad("mu-vector \"m\" does not match the coefficient count");
    return MuPoly(std::move(coeffs));
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    expect(j.is_array() && !j.empty(), "matrix must be a non-empty array of rows");
    size_t rows = j.size(), cols = j.at(0).size();
    Matrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        expect(j.at(i).is_array() && j.at(i).size() == cols, "ragged matrix rows");
        for (size_t c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(j.at(i).at(c));
    }
    return m;
}

Json system_to_json(const StarSystem& sys) {
    Json z = Json::array();
    for (const auto& c : sys.modulus.coeffs()) {
        if (c.is_real())
            z.push_back(rational_str(c.re()));
        else
            z.push_back(scalar_to_json(c));
    }
    Json vars = Json::array();
    for (const auto& v : sys.vars) vars.push_back(v);
    return Json{{"X", matrix_to_json(sys.pencil_base)}, {"Z", z}, {"vars", vars}};
}

StarSystem system_from_json(const Json& j) {
    expect(j.is_object() && j.contains("X") && j.contains("Z") && j.contains("vars"),
           "system needs \"X\", \"Z\" and \"vars\"");
    Matrix x = matrix_from_json(j.at("X"));
    std::vector<Scalar> z;
    for (const auto& c : j.at("Z")) z.push_back(scalar_from_json(c));
    std::vector<std::string> vars;
    for (const auto& v : j.at("vars")) vars.push_back(v.get<std::string>());
    bool complex = !x.is_real();
    for (const auto& c : z) complex = complex || !c.is_real();
    return StarSystem(std::move(x), Modulus(std::move(z)), std::move(vars),
                      complex ? Field::Complex : Field::Real);
}

Json oneform_to_json(const OneForm& w) {
    Json comps = Json::array();
    for (const auto& c : w.components) comps.push_back(poly_to_json(c));
    return Json{{"components", comps}};
}

bool spec_is_real(const Json& j) {
    expect(j.is_object() && j.contains("field"), "spec needs a \"field\" tag");
    std::string f = j.at("field").get<std::string>();
    if (f == "real") return j.contains("alpha");
    if (f != "complex") bad("spec field must be \"real\" or \"complex\"");
    return false;
}

JordanSpecC spec_c_from_json(const Json& j) {
    expect(j.is_object() && j.contains("eigenvalues"), "spec needs \"eigenvalues\"");
    JordanSpecC spec;
    spec.field = j.at("field").get<std::string>() == "real" ? Field::Real : Field::Complex;
    for (const auto& e : j.at("eigenvalues")) {
        EigenBlocks blocks;
        blocks.lambda = scalar_from_json(e.at("lambda"));
        for (const auto& b : e.at("blocks")) blocks.block_sizes.push_back(b.get<size_t>());
        spec.eigenvalues.push_back(std::move(blocks));
    }
    spec.validate();
    return spec;
}

Json spec_c_to_json(const JordanSpecC& spec) {
    Json eigenvalues = Json::array();
    for (const auto& e : spec.eigenvalues) {
        Json blocks = Json::array();
        for (size_t s : e.block_sizes) blocks.push_back(s);
        eigenvalues.push_back(Json{{"lambda", scalar_to_json(e.lambda)}, {"blocks", blocks}});
    }
    return Json{{"field", field_name(spec.field)}, {"eigenvalues", eigenvalues}};
}

JordanSpecR spec_r_from_json(const Json& j) {
    expect(j.is_object() && j.contains("alpha") && j.contains("beta") && j.contains("blocks"),
           "real spec needs \"alpha\", \"beta\" and \"blocks\"");
    JordanSpecR spec;
    spec.alpha = parse_rational(j.at("alpha").get<std::string>());
    spec.beta = parse_rational(j.at("beta").get<std::string>());
    for (const auto& b : j.at("blocks")) spec.half_sizes.push_back(b.get<size_t>());
    spec.validate();
    return spec;
}

Json spec_r_to_json(const JordanSpecR& spec) {
    Json blocks = Json::array();
    for (size_t h : spec.half_sizes) blocks.push_back(h);
    return Json{{"field", "real"},
                {"alpha", rational_str(spec.alpha)},
                {"beta", rational_str(spec.beta)},
                {"blocks", blocks}};
}

std::map<std::pair<size_t, size_t>, Scalar> coeff_table_from_json(const Json& j) {
    expect(j.is_object(), "coefficient table must be an object");
    std::map<std::pair<size_t, size_t>, Scalar> table;
    for (const auto& [key, value] : j.items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) bad("coefficient key must look like \"k,j\"");
        size_t k = std::stoul(key.substr(0, comma));
        size_t deg = std::stoul(key.substr(comma + 1));
        table[{k, deg}] = scalar_from_json(value);
    }
    return table;
}

Json solution_pair_to_json(const SolutionPair& p) {
    return Json{{"f", poly_to_json(p.f)}, {"g", poly_to_json(p.g)}};
}

}  // namespace gradstar
