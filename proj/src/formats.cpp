#include <prelie/formats.hpp>

#include <prelie/coeffparse.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace prelie {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FileError(std::string("invalid JSON: ") + e.what());
    }
}

int require_dim(const json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw FileError("missing or non-integer \"dim\"");
    const int dim = j["dim"].get<int>();
    if (dim < 1 || dim > 16) throw FileError("\"dim\" out of range");
    return dim;
}

int require_index(const json& p, const char* key, int dim, std::size_t entry) {
    if (!p.contains(key) || !p[key].is_number_integer())
        throw FileError("products[" + std::to_string(entry) + "]: missing integer \"" + key + "\"");
    const int v = p[key].get<int>();
    if (v < 1 || v > dim)
        throw FileError("products[" + std::to_string(entry) + "]: \"" + std::string(key) + "\" out of range 1.." +
                        std::to_string(dim));
    return v;
}

std::string coefficient_string(const json& p, std::size_t entry) {
    if (!p.contains("c")) throw FileError("products[" + std::to_string(entry) + "]: missing \"c\"");
    if (p["c"].is_number_integer()) return std::to_string(p["c"].get<long long>());
    if (!p["c"].is_string()) throw FileError("products[" + std::to_string(entry) + "]: \"c\" must be a string");
    return p["c"].get<std::string>();
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& json_text) {
    const json j = parse_json(json_text);
    if (!j.is_object()) throw FileError("algebra file must be a JSON object");

    AlgebraFile out;
    out.dim = require_dim(j);
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw FileError("\"label\" must be a string");
        out.label = j["label"].get<std::string>();
    }
    if (j.contains("parameter")) {
        if (!j["parameter"].is_string()) throw FileError("\"parameter\" must be a string");
        out.parameter = j["parameter"].get<std::string>();
    }
    if (!j.contains("products") || !j["products"].is_array()) throw FileError("missing \"products\" array");

    if (out.parametric()) {
        Algebra<UniPoly> a(out.dim, out.label);
        std::size_t entry = 0;
        for (const auto& p : j["products"]) {
            const int i = require_index(p, "i", out.dim, entry);
            const int jj = require_index(p, "j", out.dim, entry);
            const int k = require_index(p, "k", out.dim, entry);
            try {
                a.at(i - 1, jj - 1, k - 1) = parse_parameter_poly(coefficient_string(p, entry), *out.parameter);
            } catch (const ParseError& e) {
                throw FileError("products[" + std::to_string(entry) + "].c: " + e.what());
            }
            ++entry;
        }
        out.algebra = std::move(a);
    } else {
        Algebra<Rational> a(out.dim, out.label);
        std::size_t entry = 0;
        for (const auto& p : j["products"]) {
            const int i = require_index(p, "i", out.dim, entry);
            const int jj = require_index(p, "j", out.dim, entry);
            const int k = require_index(p, "k", out.dim, entry);
            try {
                a.at(i - 1, jj - 1, k - 1) = parse_rational(coefficient_string(p, entry));
            } catch (const ParseError& e) {
                throw FileError("products[" + std::to_string(entry) + "].c: " + e.what());
            } catch (const std::domain_error&) {
                throw FileError("products[" + std::to_string(entry) + "].c: not a rational constant");
            }
            ++entry;
        }
        out.algebra = std::move(a);
    }
    return out;
}

Algebra<Rational> AlgebraFile::instantiated(const std::optional<Rational>& param) const {
    if (!parametric()) {
        if (param) throw FileError("algebra file declares no parameter");
        return concrete();
    }
    if (!param) throw FileError("algebra file is parametric; a parameter value is required");
    Algebra<Rational> a = instantiate(symbolic(), *param);
    return a;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

AlgebraFile read_algebra_file(const std::string& path) {
    try {
        return parse_algebra_file(read_text_file(path));
    } catch (const FileError& e) {
        throw FileError(path + ": " + e.what());
    }
}

namespace {

template <class R>
json products_json(const Algebra<R>& a, std::string (*coeff_to_string)(const R&)) {
    json products = json::array();
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                const R& c = a.at(i, j, k);
                if (detail::ring_zero(c)) continue;
                json p;
                p["i"] = i + 1;
                p["j"] = j + 1;
                p["k"] = k + 1;
                p["c"] = coeff_to_string(c);
                products.push_back(p);
            }
    return products;
}

std::string rational_coeff(const Rational& c) { return to_string(c); }
std::string poly_coeff(const UniPoly& c) { return c.to_string("a"); }

}  // namespace

std::string write_algebra_file(const Algebra<Rational>& a, const std::string& label) {
    json j;
    j["dim"] = a.dim;
    if (!label.empty()) j["label"] = label;
    j["products"] = products_json(a, &rational_coeff);
    return j.dump(2) + "\n";
}

std::string write_algebra_file(const Algebra<UniPoly>& a, const std::string& label, const std::string& parameter) {
    json j;
    j["dim"] = a.dim;
    if (!label.empty()) j["label"] = label;
    j["parameter"] = parameter;
    j["products"] = products_json(a, &poly_coeff);
    return j.dump(2) + "\n";
}

Witness parse_witness_file(const std::string& json_text) {
    const json j = parse_json(json_text);
    if (!j.is_object()) throw FileError("witness file must be a JSON object");
    const int dim = require_dim(j);

    ParseEnv env;
    env.emplace("t", RatFunc::variable());
    if (j.contains("parameters")) {
        if (!j["parameters"].is_object()) throw FileError("\"parameters\" must be an object");
        for (const auto& [name, value] : j["parameters"].items()) {
            const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
            try {
                env.emplace(name, RatFunc(parse_rational(text)));
            } catch (const std::exception&) {
                throw FileError("parameters." + name + ": not a rational constant");
            }
        }
    }

    Witness w;
    w.inverse_given = true;
    if (j.contains("inverse_given")) {
        if (!j["inverse_given"].is_boolean()) throw FileError("\"inverse_given\" must be a boolean");
        w.inverse_given = j["inverse_given"].get<bool>();
    }

    if (!j.contains("entries") || !j["entries"].is_array() || static_cast<int>(j["entries"].size()) != dim)
        throw FileError("\"entries\" must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " array");
    w.mat = Matrix<RatFunc>(dim, dim, RatFunc(0));
    for (int i = 0; i < dim; ++i) {
        const auto& row = j["entries"][i];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw FileError("entries[" + std::to_string(i) + "] must have " + std::to_string(dim) + " columns");
        for (int col = 0; col < dim; ++col) {
            const auto& cell = row[col];
            const std::string text = cell.is_string() ? cell.get<std::string>() : cell.dump();
            try {
                w.mat(i, col) = parse_expression(text, env);
            } catch (const ParseError& e) {
                throw FileError("entries[" + std::to_string(i) + "][" + std::to_string(col) + "]: " + e.what());
            }
        }
    }
    if (determinant(w.mat, RatFunc(1), RatFunc(0)).is_zero()) throw FileError("witness matrix is singular");
    return w;
}

Witness read_witness_file(const std::string& path) {
    try {
        return parse_witness_file(read_text_file(path));
    } catch (const FileError& e) {
        throw FileError(path + ": " + e.what());
    }
}

}  // namespace prelie
